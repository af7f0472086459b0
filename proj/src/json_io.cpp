#include "sweedler/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sweedler {

namespace {

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error("malformed JSON in " + what + ": " + e.what());
    }
}

const json& require_key(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(what + " is missing the \"" + key + "\" key");
    return j.at(key);
}

std::size_t require_size(const json& j, const char* key, const std::string& what) {
    const json& v = require_key(j, key, what);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
        throw parse_error(what + " needs a positive integer \"" + std::string(key) + "\"");
    return v.get<std::size_t>();
}

std::vector<Matrix> matrices_from_json(const Field& f, const json& j, const std::string& what) {
    if (!j.is_array()) throw parse_error(what + " must be an array of matrices");
    std::vector<Matrix> out;
    for (const json& m : j) out.push_back(matrix_from_json(f, m));
    return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const Matrix& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

}  // namespace

json field_to_json(const Field& f) {
    if (f.is_rationals()) return json("Q");
    return json{{"Fp", f.modulus()}};
}

Field field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw parse_error("unknown field \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("Fp")) {
        const json& p = j.at("Fp");
        if (!p.is_number_unsigned()) throw parse_error("\"Fp\" must carry the prime as a number");
        return Field::prime(p.get<std::uint64_t>());
    }
    throw parse_error("field must be \"Q\" or {\"Fp\": p}");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const json& j) {
    if (!j.is_array() || j.empty() || !j.at(0).is_array())
        throw parse_error("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = row.at(c);
            if (!cell.is_string()) throw parse_error("matrix entries must be scalar strings");
            m(i, c) = Scalar::parse(f, cell.get<std::string>());
        }
    }
    return m;
}

json algebra_to_json(const Algebra& a) {
    const std::size_t n = a.dim();
    json sc = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json row = json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(a.sc(i, j, k).str());
            plane.push_back(std::move(row));
        }
        sc.push_back(std::move(plane));
    }
    json unit = json::array();
    for (const Scalar& u : a.unit()) unit.push_back(u.str());
    return json{{"field", field_to_json(a.field())}, {"dim", n}, {"unit", std::move(unit)}, {"sc", std::move(sc)}};
}

AlgebraPtr algebra_from_json(const json& j) {
    const Field f = field_from_json(require_key(j, "field", "algebra"));
    const std::size_t n = require_size(j, "dim", "algebra");
    const json& unit_j = require_key(j, "unit", "algebra");
    const json& sc_j = require_key(j, "sc", "algebra");
    if (!unit_j.is_array() || unit_j.size() != n) throw parse_error("algebra unit must list dim scalars");
    if (!sc_j.is_array() || sc_j.size() != n) throw parse_error("algebra sc must be dim x dim x dim");
    std::vector<Scalar> unit, sc;
    for (const json& u : unit_j) {
        if (!u.is_string()) throw parse_error("algebra unit entries must be scalar strings");
        unit.push_back(Scalar::parse(f, u.get<std::string>()));
    }
    sc.reserve(n * n * n);
    for (const json& plane : sc_j) {
        if (!plane.is_array() || plane.size() != n) throw parse_error("algebra sc must be dim x dim x dim");
        for (const json& row : plane) {
            if (!row.is_array() || row.size() != n) throw parse_error("algebra sc must be dim x dim x dim");
            for (const json& cell : row) {
                if (!cell.is_string()) throw parse_error("algebra sc entries must be scalar strings");
                sc.push_back(Scalar::parse(f, cell.get<std::string>()));
            }
        }
    }
    return Algebra::make(f, n, std::move(sc), std::move(unit));
}

AlgebraPtr load_algebra(const std::string& spec, const Field& field) {
    if (is_builtin_algebra_name(spec)) return builtin_algebra(spec, field);
    if (!spec.empty() && spec.front() == '{') return algebra_from_json(parse_json_text(spec, "algebra"));
    return algebra_from_json(parse_json_text(read_text_file(spec), "algebra file " + spec));
}

json comodule_to_json(const Coaction& c, bool inline_algebra) {
    json out{{"dim", c.dim()},
             {"rho", matrix_to_json(c.rho())},
             {"left", matrices_to_json(c.module().left_all())},
             {"right", matrices_to_json(c.module().right_all())}};
    if (inline_algebra) out["algebra"] = algebra_to_json(*c.algebra());
    return out;
}

namespace {

AlgebraPtr resolve_algebra(const AlgebraPtr& fallback, const json& j, const std::string& what) {
    if (j.is_object() && j.contains("algebra")) {
        const json& a = j.at("algebra");
        if (a.is_object()) return algebra_from_json(a);
        if (a.is_string()) {
            const Field f = fallback ? fallback->field() : Field::rationals();
            return builtin_algebra(a.get<std::string>(), f);
        }
        throw parse_error(what + ": \"algebra\" must be a builtin name or an inline object");
    }
    if (!fallback) throw parse_error(what + " carries no algebra and none was supplied");
    return fallback;
}

}  // namespace

Coaction comodule_from_json(const AlgebraPtr& fallback, const json& j) {
    const AlgebraPtr alg = resolve_algebra(fallback, j, "comodule");
    const Field& f = alg->field();
    const std::size_t m = require_size(j, "dim", "comodule");
    Matrix rho = matrix_from_json(f, require_key(j, "rho", "comodule"));
    std::vector<Matrix> right = matrices_from_json(f, require_key(j, "right", "comodule"), "comodule right");
    if (right.size() != alg->dim() || rho.rows() != m * alg->dim() || rho.cols() != m)
        throw parse_error("comodule shapes do not match dim and the algebra");
    for (const Matrix& r : right)
        if (r.rows() != m || r.cols() != m) throw parse_error("comodule action matrices must be dim x dim");
    std::vector<Matrix> left;
    if (j.contains("left")) {
        left = matrices_from_json(f, j.at("left"), "comodule left");
        if (left.size() != alg->dim()) throw parse_error("comodule left must list one matrix per basis element");
        for (const Matrix& l : left)
            if (l.rows() != m || l.cols() != m) throw parse_error("comodule action matrices must be dim x dim");
    } else {
        left = induced_left_action(alg, right, rho);
    }
    // Carrier construction is total; verification is the caller's move.
    return Coaction(Bimodule(alg, m, std::move(left), std::move(right), false), std::move(rho));
}

Coaction load_comodule(const AlgebraPtr& algebra, const std::string& spec) {
    if (spec == "regular") return Coaction::regular(algebra);
    if (spec == "zero") return Coaction::zero(algebra);
    if (spec.rfind("free:", 0) == 0) {
        const std::string digits = spec.substr(5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad free comodule spec '" + spec + "'");
        const std::size_t rank = std::stoul(digits);
        if (rank < 1 || rank > 64) throw parse_error("free comodule rank out of range in '" + spec + "'");
        return Coaction::free(algebra, rank);
    }
    if (spec == "rmatrix") {
        // The algebra must be presented as some mat:n.
        std::size_t n = 0;
        while (n * n < algebra->dim()) ++n;
        if (n * n != algebra->dim() ||
            !algebra->same_presentation(*Algebra::matrix_algebra(n, algebra->field())))
            throw parse_error("the rmatrix comodule needs a mat:<n> algebra");
        return comodule_from_rmatrix(Bimodule::regular(algebra), RMatrix::matrix_units(n, algebra->field()));
    }
    if (!spec.empty() && spec.front() == '{')
        return comodule_from_json(algebra, parse_json_text(spec, "comodule"));
    return comodule_from_json(algebra, parse_json_text(read_text_file(spec), "comodule file " + spec));
}

json descent_to_json(const DescentDatum& d, bool inline_algebra) {
    json out{{"dim", d.dim()},
             {"g", matrix_to_json(d.g())},
             {"left", matrices_to_json(d.module().left_all())},
             {"right", matrices_to_json(d.module().right_all())}};
    if (inline_algebra) out["algebra"] = algebra_to_json(*d.algebra());
    return out;
}

DescentDatum descent_from_json(const AlgebraPtr& fallback, const json& j) {
    const AlgebraPtr alg = resolve_algebra(fallback, j, "descent datum");
    const Field& f = alg->field();
    const std::size_t m = require_size(j, "dim", "descent datum");
    Matrix g = matrix_from_json(f, require_key(j, "g", "descent datum"));
    std::vector<Matrix> left = matrices_from_json(f, require_key(j, "left", "descent datum"), "descent left");
    std::vector<Matrix> right =
        matrices_from_json(f, require_key(j, "right", "descent datum"), "descent right");
    if (left.size() != alg->dim() || right.size() != alg->dim())
        throw parse_error("descent datum needs one action matrix per basis element on each side");
    for (std::size_t i = 0; i < left.size(); ++i)
        if (left[i].rows() != m || left[i].cols() != m || right[i].rows() != m || right[i].cols() != m)
            throw parse_error("descent action matrices must be dim x dim");
    if (g.rows() != m * alg->dim() || g.cols() != alg->dim() * m)
        throw parse_error("descent map must be (dim V * dim A) x (dim A * dim V)");
    return DescentDatum(Bimodule(alg, m, std::move(left), std::move(right), false), std::move(g));
}

DescentDatum load_descent(const AlgebraPtr& algebra, const std::string& spec) {
    if (spec == "regular") return descent_from_yd(Coaction::regular(algebra));
    if (spec.rfind("free:", 0) == 0) {
        const std::string digits = spec.substr(5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad free descent spec '" + spec + "'");
        const std::size_t rank = std::stoul(digits);
        if (rank < 1 || rank > 64) throw parse_error("free datum rank out of range in '" + spec + "'");
        return DescentDatum::free(algebra, rank);
    }
    if (!spec.empty() && spec.front() == '{')
        return descent_from_json(algebra, parse_json_text(spec, "descent datum"));
    return descent_from_json(algebra, parse_json_text(read_text_file(spec), "descent file " + spec));
}

Grouplike load_grouplike(const AlgebraPtr& algebra, const std::string& spec) {
    if (spec == "trivial") return Grouplike::trivial(algebra);
    const json j = (!spec.empty() && spec.front() == '[')
                       ? parse_json_text(spec, "grouplike")
                       : parse_json_text(read_text_file(spec), "grouplike file " + spec);
    const std::size_t n = algebra->dim();
    if (!j.is_array() || j.size() != n * n)
        throw parse_error("grouplike coefficients must list dim(A)^2 scalars");
    Matrix coeffs(n * n, 1, algebra->field());
    for (std::size_t t = 0; t < n * n; ++t) {
        if (!j.at(t).is_string()) throw parse_error("grouplike coefficients must be scalar strings");
        coeffs(t, 0) = Scalar::parse(algebra->field(), j.at(t).get<std::string>());
    }
    return Grouplike(algebra, std::move(coeffs));
}

json operator_to_json(const YangBaxterOperator& op, bool qybe, bool cube) {
    return json{{"dim", op.space_dim},
                {"omega", matrix_to_json(op.omega)},
                {"provenance", omega_source_name(op.provenance)},
                {"qybe", qybe},
                {"cube", cube}};
}

LoadedOperator operator_from_json(const json& j) {
    const std::size_t m = require_size(j, "dim", "operator");
    const json& omega_j = require_key(j, "omega", "operator");
    // Prime-field entries self-describe as "r mod p"; otherwise rationals.
    const Field f = [&] {
        if (omega_j.is_array())
            for (const json& row : omega_j) {
                if (!row.is_array()) continue;
                for (const json& cell : row)
                    if (cell.is_string()) {
                        const std::string s = cell.get<std::string>();
                        const std::size_t at = s.find(" mod ");
                        if (at != std::string::npos) {
                            try {
                                return Field::prime(std::stoull(s.substr(at + 5)));
                            } catch (const std::logic_error&) {
                                throw parse_error("bad prime-field entry '" + s + "' in operator matrix");
                            }
                        }
                    }
            }
        return Field::rationals();
    }();
    LoadedOperator out;
    out.op.space_dim = m;
    out.op.omega = matrix_from_json(f, omega_j);
    if (out.op.omega.rows() != m * m || out.op.omega.cols() != m * m)
        throw parse_error("operator matrix must be dim^2 x dim^2");
    out.op.provenance = omega_source_from_name(
        require_key(j, "provenance", "operator").get<std::string>());
    out.qybe = j.value("qybe", false);
    out.cube = j.value("cube", false);
    return out;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass && !c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    return json{{"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file '" + path + "'");
    out << content;
    if (!out) throw error("short write to '" + path + "'");
}

std::string fnv1a64_hex(const std::string& content) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace sweedler
