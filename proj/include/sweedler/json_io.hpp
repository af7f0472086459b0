#pragma once

#include <json.hpp>

#include "sweedler/descent.hpp"
#include "sweedler/ybe.hpp"

namespace sweedler {

using nlohmann::json;

// Scalars serialize as strings ("p/q" over Q, "r mod p" over a prime field);
// matrices as nested arrays of such strings; fields as "Q" or {"Fp": p}.

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

/// {"field": ..., "dim": n, "unit": [scalar strings], "sc": [[[...]]]}
json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const json& j);

/// Accepts a builtin name ("kn:2", "mat:3", "upper:2"), a path to a JSON
/// file, or inline JSON text (detected by a leading '{').
AlgebraPtr load_algebra(const std::string& spec, const Field& field);

/// {"algebra": <name or inline>, "dim": m, "rho": matrix,
///  "left": [matrices] (optional; induced when absent), "right": [matrices]}
json comodule_to_json(const Coaction& c, bool inline_algebra);
Coaction comodule_from_json(const AlgebraPtr& fallback, const json& j);

/// Builtin comodules: "regular", "zero", "free:<n>", "rmatrix" (the matrix-
/// unit R-matrix coaction on V = A; the algebra must be some mat:<n>).
/// Otherwise a path or inline JSON.
Coaction load_comodule(const AlgebraPtr& algebra, const std::string& spec);

/// Same layout with "g" in place of "rho".
json descent_to_json(const DescentDatum& d, bool inline_algebra);
DescentDatum descent_from_json(const AlgebraPtr& fallback, const json& j);

/// Builtin descent data: "regular" (from the regular comodule), "free:<n>".
DescentDatum load_descent(const AlgebraPtr& algebra, const std::string& spec);

/// Grouplike elements: "trivial" (1 (x) 1), or a flat JSON array of dim(A)^2
/// scalar strings over the basis e_i (x) e_j, inline or in a file.
Grouplike load_grouplike(const AlgebraPtr& algebra, const std::string& spec);

/// {"dim": m, "omega": matrix, "provenance": string, "qybe": bool, "cube": bool}
json operator_to_json(const YangBaxterOperator& op, bool qybe, bool cube);
struct LoadedOperator {
    YangBaxterOperator op;
    bool qybe = false;
    bool cube = false;
};
/// The scalar strings determine the field ("r mod p" entries mean F_p).
LoadedOperator operator_from_json(const json& j);

json report_to_json(const Report& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content hash, as 16 hex digits.
std::string fnv1a64_hex(const std::string& content);

}  // namespace sweedler
