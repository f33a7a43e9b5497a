#pragma once

#include <map>
#include <string>
#include <vector>

#include "acb3/classes.hpp"
#include "acb3/connection.hpp"
#include "acb3/curvature.hpp"
#include "acb3/special.hpp"
#include "acb3/structure_constants.hpp"

namespace acb3 {

// One bracket relation [E_i, E_j] = sum_k coefficients[k] E_k with i < j.
struct ConstantEntry {
    int i = 0;
    int j = 0;
    std::map<int, Rational> coefficients{};

    friend bool operator==(const ConstantEntry&, const ConstantEntry&) = default;
};

// JSON document describing a Lie algebra and how to interpret it:
// {
//   "mode": "exact" | "float",
//   "tolerance": 1e-9,                     // float mode only, optional
//   "structure_constants": [
//     {"i": 0, "j": 1, "coefficients": {"1": "-1", "2": "2/3"}}, ...
//   ]
// }
// Exact mode accepts integers and "p/q" strings; bare non-integer number
// literals are rejected (their decimal form is ambiguous).  Float mode also
// accepts number literals, embedded exactly via their binary representation.
struct InputDocument {
    Mode mode = Mode::Exact;
    Rational tolerance{};  // 0 means "default"
    std::vector<ConstantEntry> entries{};

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Parses the JSON text.  Throws ParseError on malformed documents, including
// entries with i >= j, out-of-range indices, or duplicate (i, j) pairs.
InputDocument parse_input_document(const std::string& text);

// Canonical JSON serialization; parse_input_document(emit_input_document(d))
// reproduces d exactly.
std::string emit_input_document(const InputDocument& doc);

StructureConstants to_structure_constants(const InputDocument& doc);
InputDocument document_from_constants(const StructureConstants& c, Mode mode,
                                      const Rational& tolerance);

// Tolerance implied by the document: exact mode ignores the field; float mode
// uses the given value, defaulting to 1e-9.
Tolerance tolerance_of(const InputDocument& doc);

// Full analysis of one Lie algebra, as produced by the command-line driver.
// When lie_algebra is false only constants and jacobi are meaningful.
struct AnalysisReport {
    StructureConstants constants{};
    bool lie_algebra = false;
    JacobiDefect jacobi{};
    FTensor f{};
    Connection connection{};
    ClassDecomposition decomposition{};
    LeeForms lee{};
    SpecialStructureFlags special{};
    CurvatureReport curvature{};
    TemplateCheck template_check{};
    bool has_template_check = false;  // false when membership is mixed
};

AnalysisReport analyze(const StructureConstants& c, const Tolerance& tol);

// include_curvature = false renders the classification subset only (input echo,
// fundamental tensor, membership, parameters, Lee forms, special structures).
std::string render_json(const AnalysisReport& report, bool include_curvature = true);
std::string render_pretty(const AnalysisReport& report, bool include_curvature = true);

}  // namespace acb3
