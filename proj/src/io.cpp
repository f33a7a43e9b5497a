#include "acb3/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "acb3/errors.hpp"
#include "acb3/verify.hpp"

namespace acb3 {

namespace {

using nlohmann::json;

Rational coefficient_value(const json& v, Mode mode) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.get<std::int64_t>()));
    if (v.is_number_float()) {
        if (mode == Mode::Exact)
            throw ParseError(
                "non-integer number literal in exact mode; write it as a string "
                "\"p/q\"");
        return rational_from_double(v.get<double>());
    }
    throw ParseError("coefficient must be a string or a number");
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    for (const auto& item : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
                return item.key() == k;
            }) == allowed.end())
            throw ParseError("unknown key '" + item.key() + "' in " + where);
    }
}

json rational_grid(const Mat3& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(format_rational(v));
        rows.push_back(r);
    }
    return rows;
}

json vec_json(const Vec3& v) {
    return json::array({format_rational(v[0]), format_rational(v[1]),
                        format_rational(v[2])});
}

std::string index_digits(std::initializer_list<int> idx) {
    std::string s;
    for (int i : idx) s += static_cast<char>('0' + i);
    return s;
}

json nonzero_ten3(const Ten3& t) {
    json obj = json::object();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (t[i][j][k] != 0)
                    obj[index_digits({i, j, k})] = format_rational(t[i][j][k]);
    return obj;
}

json nonzero_ten4(const Ten4& t) {
    json obj = json::object();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (t[i][j][k][l] != 0)
                        obj[index_digits({i, j, k, l})] =
                            format_rational(t[i][j][k][l]);
    return obj;
}

json route_json(const RouteFlags& r) {
    return json{{"direct", r.direct}, {"by_class", r.by_class}};
}

bool is_flat(const Ten4& r) { return max_abs(r) == 0; }

}  // namespace

InputDocument parse_input_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    require_keys(j, {"mode", "tolerance", "structure_constants"}, "document");

    InputDocument doc{};
    if (j.contains("mode")) {
        const std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        if (m == "exact")
            doc.mode = Mode::Exact;
        else if (m == "float")
            doc.mode = Mode::Float;
        else
            throw ParseError("mode must be \"exact\" or \"float\"");
    }
    if (j.contains("tolerance")) {
        if (doc.mode == Mode::Exact)
            throw ParseError("tolerance is only meaningful in float mode");
        const json& t = j["tolerance"];
        if (t.is_string())
            doc.tolerance = parse_rational(t.get<std::string>());
        else if (t.is_number())
            doc.tolerance = rational_from_double(t.get<double>());
        else
            throw ParseError("tolerance must be a number or a string");
        if (doc.tolerance < 0) throw ParseError("tolerance must be >= 0");
    }
    if (!j.contains("structure_constants") || !j["structure_constants"].is_array())
        throw ParseError("structure_constants array is required");

    std::set<std::pair<int, int>> seen;
    for (const json& entry : j["structure_constants"]) {
        if (!entry.is_object())
            throw ParseError("each structure_constants entry must be an object");
        require_keys(entry, {"i", "j", "coefficients"}, "structure_constants entry");
        if (!entry.contains("i") || !entry.contains("j") ||
            !entry["i"].is_number_integer() || !entry["j"].is_number_integer())
            throw ParseError("entry requires integer fields i and j");
        ConstantEntry ce{};
        ce.i = entry["i"].get<int>();
        ce.j = entry["j"].get<int>();
        if (ce.i < 0 || ce.i > 2 || ce.j < 0 || ce.j > 2)
            throw ParseError("basis indices must lie in {0,1,2}");
        if (ce.i >= ce.j)
            throw ParseError("entries must have i < j (one per unordered pair)");
        if (!seen.insert({ce.i, ce.j}).second)
            throw ParseError("duplicate entry for pair (" + std::to_string(ce.i) +
                             "," + std::to_string(ce.j) + ")");
        if (entry.contains("coefficients")) {
            if (!entry["coefficients"].is_object())
                throw ParseError("coefficients must be an object");
            for (const auto& item : entry["coefficients"].items()) {
                if (item.key() != "0" && item.key() != "1" && item.key() != "2")
                    throw ParseError("coefficient key must be \"0\", \"1\" or \"2\"");
                ce.coefficients[item.key()[0] - '0'] =
                    coefficient_value(item.value(), doc.mode);
            }
        }
        doc.entries.push_back(std::move(ce));
    }
    return doc;
}

std::string emit_input_document(const InputDocument& doc) {
    json j;
    j["mode"] = doc.mode == Mode::Exact ? "exact" : "float";
    if (doc.mode == Mode::Float && doc.tolerance != 0)
        j["tolerance"] = format_rational(doc.tolerance);
    json entries = json::array();
    for (const ConstantEntry& ce : doc.entries) {
        json coeffs = json::object();
        for (const auto& [k, v] : ce.coefficients)
            coeffs[std::to_string(k)] = format_rational(v);
        entries.push_back(json{{"i", ce.i}, {"j", ce.j}, {"coefficients", coeffs}});
    }
    j["structure_constants"] = std::move(entries);
    return j.dump(2) + "\n";
}

StructureConstants to_structure_constants(const InputDocument& doc) {
    StructureConstants c;
    for (const ConstantEntry& ce : doc.entries)
        for (const auto& [k, v] : ce.coefficients) c.set(k, ce.i, ce.j, v);
    return c;
}

InputDocument document_from_constants(const StructureConstants& c, Mode mode,
                                      const Rational& tolerance) {
    InputDocument doc{};
    doc.mode = mode;
    doc.tolerance = tolerance;
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& [i, j] : pairs) {
        ConstantEntry ce{};
        ce.i = i;
        ce.j = j;
        for (int k = 0; k < 3; ++k)
            if (c.get(k, i, j) != 0) ce.coefficients[k] = c.get(k, i, j);
        if (!ce.coefficients.empty()) doc.entries.push_back(std::move(ce));
    }
    return doc;
}

Tolerance tolerance_of(const InputDocument& doc) {
    if (doc.mode == Mode::Exact) return exact_tolerance();
    return float_tolerance(doc.tolerance == 0 ? Rational(1, 1000000000)
                                              : doc.tolerance);
}

AnalysisReport analyze(const StructureConstants& c, const Tolerance& tol) {
    AnalysisReport rep{};
    rep.constants = c;
    rep.jacobi = jacobi_defect(c);
    rep.lie_algebra = is_lie_algebra(c);
    if (!rep.lie_algebra) return rep;

    rep.f = compute_F_closed_form(c);
    rep.connection = levi_civita(c);
    rep.decomposition = decompose(rep.f, tol);
    rep.lee = lee_forms(rep.f);
    rep.special = special_structures(c, tol);
    rep.curvature = curvature_report(c, tol);
    if (rep.decomposition.membership.size() == 1) {
        rep.template_check = curvature_template_check(rep.decomposition, rep.curvature);
        rep.has_template_check = true;
    }
    return rep;
}

std::string render_json(const AnalysisReport& rep, bool include_curvature) {
    json j;
    {
        json input = json::array();
        constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& [i, j2] : pairs) {
            json coeffs = json::object();
            for (int k = 0; k < 3; ++k)
                if (rep.constants.get(k, i, j2) != 0)
                    coeffs[std::to_string(k)] = format_rational(rep.constants.get(k, i, j2));
            if (!coeffs.empty())
                input.push_back(json{{"i", i}, {"j", j2}, {"coefficients", coeffs}});
        }
        j["structure_constants"] = std::move(input);
    }
    j["lie_algebra"] = rep.lie_algebra;
    if (!rep.lie_algebra) {
        json defect = json::array();
        for (const Vec3& row : rep.jacobi) defect.push_back(vec_json(row));
        j["jacobi_defect"] = std::move(defect);
        return j.dump(2) + "\n";
    }

    j["f"] = nonzero_ten3(rep.f);
    j["connection"] = nonzero_ten3(rep.connection.gamma);

    json membership = json::array();
    for (ClassId id : rep.decomposition.membership) membership.push_back(class_name(id));
    const ClassParams& p = rep.decomposition.params;
    j["classification"] = {
        {"membership", std::move(membership)},
        {"parameters",
         {{"theta1", format_rational(p.theta1)},
          {"theta2", format_rational(p.theta2)},
          {"theta0", format_rational(p.theta0)},
          {"lambda", format_rational(p.lam)},
          {"theta_star0", format_rational(p.tstar0)},
          {"mu", format_rational(p.mu)},
          {"nu", format_rational(p.nu)},
          {"omega1", format_rational(p.omega1)},
          {"omega2", format_rational(p.omega2)}}},
        {"lee_forms",
         {{"theta", vec_json(rep.lee.theta)},
          {"theta_star", vec_json(rep.lee.theta_star)},
          {"omega", vec_json(rep.lee.omega)}}},
    };

    j["special_structures"] = {
        {"g_killing", route_json(rep.special.g_killing)},
        {"gtilde_killing", route_json(rep.special.gtilde_killing)},
        {"phi_bi_invariant", route_json(rep.special.phi_bi_invariant)},
        {"phi_abelian", route_json(rep.special.phi_abelian)},
        {"xi_killing", route_json(rep.special.xi_killing)},
    };

    if (!include_curvature) return j.dump(2) + "\n";

    const CurvatureReport& c = rep.curvature;
    json einstein;
    einstein["solvable"] = c.einstein.solvable;
    if (c.einstein.solvable) {
        einstein["lambda"] = format_rational(c.einstein.lambda_e);
        einstein["mu"] = format_rational(c.einstein.mu_e);
        einstein["nu"] = format_rational(c.einstein.nu_e);
    }
    json labels = json::array();
    for (EinsteinLabel label : c.einstein.labels)
        labels.push_back(einstein_label_name(label));
    einstein["labels"] = std::move(labels);

    j["curvature"] = {
        {"r", nonzero_ten4(c.r)},
        {"rho", rational_grid(c.rho)},
        {"rho_star", rational_grid(c.rho_star)},
        {"tau", format_rational(c.tau)},
        {"tau_star", format_rational(c.tau_star)},
        {"k01", format_rational(c.k01)},
        {"k02", format_rational(c.k02)},
        {"k12", format_rational(c.k12)},
        {"kaehler_defect", format_rational(c.kaehler)},
        {"r3_defect", format_rational(c.r3_defect)},
        {"flat", is_flat(c.r)},
        {"einstein", std::move(einstein)},
    };

    if (rep.has_template_check) {
        j["template_check"] = {
            {"class", class_name(rep.template_check.class_id)},
            {"r_defect", format_rational(rep.template_check.r_defect)},
            {"rho_defect", format_rational(rep.template_check.rho_defect)},
        };
    } else {
        j["template_check"] = nullptr;
    }

    json notes = json::array();
    for (const Discrepancy& d : documented_discrepancies())
        notes.push_back(
            json{{"id", d.id}, {"claim", d.claim}, {"finding", d.finding}});
    j["documented_discrepancies"] = std::move(notes);
    return j.dump(2) + "\n";
}

std::string render_pretty(const AnalysisReport& rep, bool include_curvature) {
    std::ostringstream out;
    out << "structure constants (C^k_ij):\n";
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    bool any = false;
    for (const auto& [i, j] : pairs)
        for (int k = 0; k < 3; ++k)
            if (rep.constants.get(k, i, j) != 0) {
                out << "  C^" << k << "_" << i << j << " = "
                    << format_rational(rep.constants.get(k, i, j)) << "\n";
                any = true;
            }
    if (!any) out << "  (all zero)\n";

    out << "lie algebra: " << (rep.lie_algebra ? "yes" : "no") << "\n";
    if (!rep.lie_algebra) {
        out << "jacobi defect:\n";
        for (const Vec3& row : rep.jacobi)
            out << "  (" << format_rational(row[0]) << ", " << format_rational(row[1])
                << ", " << format_rational(row[2]) << ")\n";
        return out.str();
    }

    auto print_ten3 = [&out](const char* name, const Ten3& t) {
        out << name << " (nonzero entries):\n";
        bool found = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (t[i][j][k] != 0) {
                        out << "  " << name << "_" << i << j << k << " = "
                            << format_rational(t[i][j][k]) << "\n";
                        found = true;
                    }
        if (!found) out << "  (all zero)\n";
    };
    print_ten3("F", rep.f);

    out << "membership:";
    for (ClassId id : rep.decomposition.membership) out << " " << class_name(id);
    out << "\n";

    const ClassParams& p = rep.decomposition.params;
    out << "parameters:"
        << " theta1 = " << format_rational(p.theta1)
        << ", theta2 = " << format_rational(p.theta2)
        << ", theta0 = " << format_rational(p.theta0)
        << ", lambda = " << format_rational(p.lam)
        << ", theta_star0 = " << format_rational(p.tstar0)
        << ", mu = " << format_rational(p.mu) << ", nu = " << format_rational(p.nu)
        << ", omega1 = " << format_rational(p.omega1)
        << ", omega2 = " << format_rational(p.omega2) << "\n";
    out << "lee forms: theta = (" << format_rational(rep.lee.theta[0]) << ", "
        << format_rational(rep.lee.theta[1]) << ", "
        << format_rational(rep.lee.theta[2]) << "), theta* = ("
        << format_rational(rep.lee.theta_star[0]) << ", "
        << format_rational(rep.lee.theta_star[1]) << ", "
        << format_rational(rep.lee.theta_star[2]) << "), omega = ("
        << format_rational(rep.lee.omega[0]) << ", "
        << format_rational(rep.lee.omega[1]) << ", "
        << format_rational(rep.lee.omega[2]) << ")\n";

    auto flag = [](const RouteFlags& r) {
        std::string s = r.direct ? "yes" : "no";
        s += r.agree() ? "" : " [routes disagree]";
        return s;
    };
    out << "special structures: g-Killing = " << flag(rep.special.g_killing)
        << ", g~-Killing = " << flag(rep.special.gtilde_killing)
        << ", phi bi-invariant = " << flag(rep.special.phi_bi_invariant)
        << ", phi abelian = " << flag(rep.special.phi_abelian)
        << ", xi-Killing = " << flag(rep.special.xi_killing) << "\n";

    if (!include_curvature) return out.str();

    out << "connection (nonzero Gamma^k_ij as [i][j][k]):\n";
    bool found = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (rep.connection.gamma[i][j][k] != 0) {
                    out << "  nabla_" << i << " E" << j << " includes "
                        << format_rational(rep.connection.gamma[i][j][k]) << " E" << k
                        << "\n";
                    found = true;
                }
    if (!found) out << "  (all zero)\n";

    const CurvatureReport& c = rep.curvature;
    out << "curvature R (nonzero entries):\n";
    found = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (c.r[i][j][k][l] != 0) {
                        out << "  R_" << i << j << k << l << " = "
                            << format_rational(c.r[i][j][k][l]) << "\n";
                        found = true;
                    }
    if (!found) out << "  (all zero)\n";
    out << "flat: " << (is_flat(c.r) ? "true" : "false") << "\n";

    auto print_mat = [&out](const char* name, const Mat3& m) {
        out << name << " (nonzero entries):\n";
        bool nz = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m[i][j] != 0) {
                    out << "  " << name << "_" << i << j << " = "
                        << format_rational(m[i][j]) << "\n";
                    nz = true;
                }
        if (!nz) out << "  (all zero)\n";
    };
    print_mat("rho", c.rho);
    print_mat("rho*", c.rho_star);
    out << "tau = " << format_rational(c.tau)
        << ", tau* = " << format_rational(c.tau_star) << "\n";
    out << "k01 = " << format_rational(c.k01) << ", k02 = " << format_rational(c.k02)
        << ", k12 = " << format_rational(c.k12) << "\n";
    out << "kaehler defect = " << format_rational(c.kaehler)
        << ", dimension-3 curvature identity defect = "
        << format_rational(c.r3_defect) << "\n";

    out << "einstein: ";
    if (c.einstein.solvable) {
        out << "solvable with lambda = " << format_rational(c.einstein.lambda_e)
            << ", mu = " << format_rational(c.einstein.mu_e)
            << ", nu = " << format_rational(c.einstein.nu_e) << "; labels:";
        for (EinsteinLabel label : c.einstein.labels)
            out << " " << einstein_label_name(label);
        out << "\n";
    } else {
        out << "rho does not fit lambda g + mu g~ + nu eta(x)eta (labels: none)\n";
    }

    if (rep.has_template_check) {
        out << "template check (" << class_name(rep.template_check.class_id)
            << "): R defect = " << format_rational(rep.template_check.r_defect)
            << ", rho defect = " << format_rational(rep.template_check.rho_defect)
            << "\n";
    } else {
        out << "template check: skipped (mixed class membership)\n";
    }

    out << "documented discrepancies (recomputed values differ from the reference "
           "tables):\n";
    for (const Discrepancy& d : documented_discrepancies())
        out << "  [" << d.id << "] " << d.finding << "\n";
    return out.str();
}

}  // namespace acb3
