#include "acb3/classes.hpp"

#include "acb3/errors.hpp"

namespace acb3 {

std::string class_name(ClassId id) {
    switch (id) {
        case ClassId::F0: return "F0";
        case ClassId::F1: return "F1";
        case ClassId::F4: return "F4";
        case ClassId::F5: return "F5";
        case ClassId::F8: return "F8";
        case ClassId::F9: return "F9";
        case ClassId::F10: return "F10";
        case ClassId::F11: return "F11";
    }
    return "?";
}

ClassParams extract_params(const FTensor& f, const Tolerance& tol) {
    const Rational scale = max_abs(f);
    FSymmetryDefects defects = check_F_symmetries(f);
    if (tol.is_present(defects.pair_symmetry, scale))
        throw MalformedF("F(x,y,z) != F(x,z,y)");
    if (tol.is_present(defects.phi_compatibility, scale))
        throw MalformedF("F violates the phi-compatibility identity");

    ClassParams p{};
    p.theta1 = f[1][1][1];
    p.theta2 = -f[2][1][1];
    p.theta0 = f[1][1][0] - f[2][2][0];
    p.lam = (f[1][1][0] + f[2][2][0]) / 2;
    p.tstar0 = f[1][2][0] + f[2][1][0];
    p.mu = (f[1][2][0] - f[2][1][0]) / 2;
    p.nu = f[0][1][1];
    p.omega1 = f[0][0][1];
    p.omega2 = f[0][0][2];
    return p;
}

FTensor component_tensor(ClassId id, const ClassParams& p) {
    FTensor t{};
    switch (id) {
        case ClassId::F0:
            break;
        case ClassId::F1:
            t[1][1][1] = t[1][2][2] = p.theta1;
            t[2][1][1] = t[2][2][2] = -p.theta2;
            break;
        case ClassId::F4:
            t[1][0][1] = t[1][1][0] = p.theta0 / 2;
            t[2][0][2] = t[2][2][0] = -p.theta0 / 2;
            break;
        case ClassId::F5:
            t[1][0][2] = t[1][2][0] = p.tstar0 / 2;
            t[2][0][1] = t[2][1][0] = p.tstar0 / 2;
            break;
        case ClassId::F8:
            t[1][0][1] = t[1][1][0] = p.lam;
            t[2][0][2] = t[2][2][0] = p.lam;
            break;
        case ClassId::F9:
            t[1][0][2] = t[1][2][0] = p.mu;
            t[2][0][1] = t[2][1][0] = -p.mu;
            break;
        case ClassId::F10:
            t[0][1][1] = t[0][2][2] = p.nu;
            break;
        case ClassId::F11:
            t[0][0][1] = t[0][1][0] = p.omega1;
            t[0][0][2] = t[0][2][0] = p.omega2;
            break;
    }
    return t;
}

ClassDecomposition decompose(const FTensor& f, const Tolerance& tol) {
    ClassDecomposition d{};
    d.params = extract_params(f, tol);
    const Rational scale = max_abs(f);
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        FTensor comp = component_tensor(id, d.params);
        bool present = false;
        for (const auto& m : comp)
            for (const auto& row : m)
                for (const auto& v : row)
                    if (tol.is_present(v, scale)) present = true;
        if (present) d.membership.insert(id);
        d.components.emplace(id, std::move(comp));
    }
    if (d.membership.empty()) d.membership.insert(ClassId::F0);
    return d;
}

ClassDecomposition classify(const StructureConstants& c, const Tolerance& tol) {
    return decompose(compute_F_closed_form(c), tol);
}

}  // namespace acb3
