#include "sweedler/algebra.hpp"

#include <sstream>

namespace sweedler {

namespace {

std::string column_str(const Matrix& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.rows(); ++i) out += (i ? ", " : "") + c(i, 0).str();
    return out + ")";
}

}  // namespace

Report Algebra::validate(const Field& f, std::size_t dim, const std::vector<Scalar>& sc,
                         const std::vector<Scalar>& unit) {
    Report rep;
    if (dim == 0) {
        rep.add("shape", false, "algebra dimension must be >= 1");
        return rep;
    }
    if (sc.size() != dim * dim * dim || unit.size() != dim) {
        rep.add("shape", false, "structure constants or unit vector have the wrong length");
        return rep;
    }
    rep.add("shape", true);

    auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
        return sc[(i * dim + j) * dim + k];
    };
    auto bprod = [&](std::size_t i, std::size_t j) {
        Matrix v(dim, 1, f);
        for (std::size_t k = 0; k < dim; ++k) v(k, 0) = c(i, j, k);
        return v;
    };
    auto vprod = [&](const Matrix& a, const Matrix& b) {
        Matrix v(dim, 1, f);
        for (std::size_t i = 0; i < dim; ++i) {
            if (a(i, 0).is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b(j, 0).is_zero()) continue;
                const Scalar w = a(i, 0) * b(j, 0);
                for (std::size_t k = 0; k < dim; ++k)
                    if (!c(i, j, k).is_zero()) v(k, 0) += w * c(i, j, k);
            }
        }
        return v;
    };

    bool assoc = true;
    std::string assoc_witness;
    for (std::size_t i = 0; i < dim && assoc; ++i)
        for (std::size_t j = 0; j < dim && assoc; ++j)
            for (std::size_t l = 0; l < dim && assoc; ++l) {
                const Matrix lhs = vprod(bprod(i, j), Matrix::unit_column(dim, l, f));
                const Matrix rhs = vprod(Matrix::unit_column(dim, i, f), bprod(j, l));
                if (!(lhs == rhs)) {
                    assoc = false;
                    assoc_witness = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(l) +
                                    " = " + column_str(lhs) + " but e" + std::to_string(i) + " (e" +
                                    std::to_string(j) + " e" + std::to_string(l) + ") = " + column_str(rhs);
                }
            }
    rep.add("associativity", assoc, assoc_witness);

    Matrix u(dim, 1, f);
    for (std::size_t i = 0; i < dim; ++i) u(i, 0) = unit[i];
    bool unital = true;
    std::string unit_witness;
    for (std::size_t j = 0; j < dim && unital; ++j) {
        const Matrix ej = Matrix::unit_column(dim, j, f);
        const Matrix lu = vprod(u, ej);
        const Matrix ru = vprod(ej, u);
        if (!(lu == ej) || !(ru == ej)) {
            unital = false;
            unit_witness = "1*e" + std::to_string(j) + " = " + column_str(lu) + ", e" + std::to_string(j) +
                           "*1 = " + column_str(ru);
        }
    }
    rep.add("unit", unital, unit_witness);
    return rep;
}

AlgebraPtr Algebra::make(const Field& f, std::size_t dim, std::vector<Scalar> sc, std::vector<Scalar> unit,
                         bool validate_input) {
    if (validate_input) {
        const Report rep = validate(f, dim, sc, unit);
        if (!rep.all_pass()) throw validation_error("invalid algebra:\n" + rep.str());
    }
    return AlgebraPtr(new Algebra(f, dim, std::move(sc), std::move(unit)));
}

Algebra::Algebra(const Field& f, std::size_t dim, std::vector<Scalar> sc, std::vector<Scalar> unit)
    : field_(f), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)) {
    lmul_.reserve(dim_);
    rmul_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix l(dim_, dim_, field_), r(dim_, dim_, field_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                l(k, j) = sc_[(i * dim_ + j) * dim_ + k];  // e_i * e_j
                r(k, j) = sc_[(j * dim_ + i) * dim_ + k];  // e_j * e_i
            }
        lmul_.push_back(std::move(l));
        rmul_.push_back(std::move(r));
    }
}

AlgebraPtr Algebra::diagonal(std::size_t n, const Field& f) {
    if (n < 1) throw error("diagonal algebra needs n >= 1");
    std::vector<Scalar> sc(n * n * n, Scalar::zero(f));
    std::vector<Scalar> unit(n, Scalar::one(f));
    for (std::size_t i = 0; i < n; ++i) sc[(i * n + i) * n + i] = Scalar::one(f);
    return make(f, n, std::move(sc), std::move(unit));
}

AlgebraPtr Algebra::matrix_algebra(std::size_t n, const Field& f) {
    if (n < 1) throw error("matrix algebra needs n >= 1");
    const std::size_t d = n * n;  // basis e_ij at flat index i*n+j
    std::vector<Scalar> sc(d * d * d, Scalar::zero(f));
    std::vector<Scalar> unit(d, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m)
                    if (j == l) {
                        const std::size_t a = i * n + j, b = l * n + m, k = i * n + m;
                        sc[(a * d + b) * d + k] = Scalar::one(f);
                    }
    return make(f, d, std::move(sc), std::move(unit));
}

AlgebraPtr Algebra::upper_triangular(std::size_t n, const Field& f) {
    if (n < 1) throw error("upper-triangular algebra needs n >= 1");
    // basis: e_ij with i <= j, ordered (0,0),(0,1),...,(1,1),(1,2),...
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
    const std::size_t d = basis.size();
    auto index_of = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < d; ++t)
            if (basis[t].first == i && basis[t].second == j) return t;
        throw error("upper_triangular internal index");
    };
    std::vector<Scalar> sc(d * d * d, Scalar::zero(f));
    std::vector<Scalar> unit(d, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) unit[index_of(i, i)] = Scalar::one(f);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto [i, j] = basis[a];
            const auto [l, m] = basis[b];
            if (j == l) sc[(a * d + b) * d + index_of(i, m)] = Scalar::one(f);
        }
    return make(f, d, std::move(sc), std::move(unit));
}

AlgebraPtr Algebra::opposite(const AlgebraPtr& a) {
    const std::size_t n = a->dim_;
    std::vector<Scalar> sc(n * n * n, Scalar::zero(a->field_));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = a->sc(j, i, k);
    return make(a->field_, n, std::move(sc), a->unit_, false);
}

AlgebraPtr Algebra::tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!(a->field_ == b->field_)) throw field_mismatch("tensor algebra across fields");
    const std::size_t na = a->dim_, nb = b->dim_, d = na * nb;
    std::vector<Scalar> sc(d * d * d, Scalar::zero(a->field_));
    std::vector<Scalar> unit(d, Scalar::zero(a->field_));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a->unit_[i] * b->unit_[j];
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2)
                    for (std::size_t i3 = 0; i3 < na; ++i3) {
                        const Scalar& ca = a->sc(i1, i2, i3);
                        if (ca.is_zero()) continue;
                        for (std::size_t j3 = 0; j3 < nb; ++j3) {
                            const Scalar& cb = b->sc(j1, j2, j3);
                            if (cb.is_zero()) continue;
                            sc[((i1 * nb + j1) * d + (i2 * nb + j2)) * d + (i3 * nb + j3)] = ca * cb;
                        }
                    }
    return make(a->field_, d, std::move(sc), std::move(unit), false);
}

AlgebraPtr Algebra::enveloping(const AlgebraPtr& a) { return tensor(a, opposite(a)); }

Matrix Algebra::unit_column() const {
    Matrix u(dim_, 1, field_);
    for (std::size_t i = 0; i < dim_; ++i) u(i, 0) = unit_[i];
    return u;
}

Matrix Algebra::basis_product(std::size_t i, std::size_t j) const {
    Matrix v(dim_, 1, field_);
    for (std::size_t k = 0; k < dim_; ++k) v(k, 0) = sc(i, j, k);
    return v;
}

Matrix Algebra::product(const Matrix& a, const Matrix& b) const {
    Matrix v(dim_, 1, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a(i, 0).is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b(j, 0).is_zero()) continue;
            const Scalar w = a(i, 0) * b(j, 0);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!sc(i, j, k).is_zero()) v(k, 0) += w * sc(i, j, k);
        }
    }
    return v;
}

Matrix Algebra::left_mult_by(const Matrix& a) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!a(i, 0).is_zero()) m = m + a(i, 0) * lmul_[i];
    return m;
}

Matrix Algebra::right_mult_by(const Matrix& a) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!a(i, 0).is_zero()) m = m + a(i, 0) * rmul_[i];
    return m;
}

Matrix Algebra::mult_map() const {
    Matrix m(dim_, dim_ * dim_, field_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t k = 0; k < dim_; ++k) m(k, a * dim_ + b) = sc(a, b, k);
    return m;
}

bool Algebra::same_presentation(const Algebra& other) const {
    if (!(field_ == other.field_) || dim_ != other.dim_) return false;
    for (std::size_t t = 0; t < sc_.size(); ++t)
        if (sc_[t] != other.sc_[t]) return false;
    for (std::size_t t = 0; t < dim_; ++t)
        if (unit_[t] != other.unit_[t]) return false;
    return true;
}

std::string Algebra::str() const {
    std::ostringstream os;
    os << "algebra over " << field_.str() << ", dim " << dim_;
    return os.str();
}

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    const Report rep = validate(*source_, *target_, map_);
    if (!rep.all_pass()) throw validation_error("invalid algebra morphism:\n" + rep.str());
}

Report AlgebraMorphism::validate(const Algebra& source, const Algebra& target, const Matrix& map) {
    Report rep;
    if (map.rows() != target.dim() || map.cols() != source.dim() || !(map.field() == source.field()) ||
        !(source.field() == target.field())) {
        rep.add("shape", false, "morphism matrix must be dim(target) x dim(source) over a common field");
        return rep;
    }
    rep.add("shape", true);
    rep.add("unital", map * source.unit_column() == target.unit_column());
    bool mult = true;
    std::string witness;
    for (std::size_t i = 0; i < source.dim() && mult; ++i)
        for (std::size_t j = 0; j < source.dim() && mult; ++j) {
            const Matrix lhs = map * source.basis_product(i, j);
            const Matrix rhs = target.product(map.col(i), map.col(j));
            if (!(lhs == rhs)) {
                mult = false;
                witness = "on (e" + std::to_string(i) + ", e" + std::to_string(j) + "): " + column_str(lhs) +
                          " vs " + column_str(rhs);
            }
        }
    rep.add("multiplicative", mult, witness);
    return rep;
}

DualBasis::DualBasis(AlgebraPtr a) : alg_(std::move(a)) {
    const std::size_t n = alg_->dim();
    const Field& f = alg_->field();
    for (std::size_t i = 0; i < n; ++i) {
        // f_i = phi(e_i^* (x) 1): column i holds the coordinates of 1.
        Matrix fi(n, n, f);
        for (std::size_t r = 0; r < n; ++r) fi(r, i) = alg_->unit()[r];
        f_.push_back(std::move(fi));
    }
}

Matrix DualBasis::phi(const Matrix& functional_row, const Matrix& element_col) const {
    if (functional_row.rows() != 1 || element_col.cols() != 1) throw error("phi expects a row and a column");
    return element_col * functional_row;
}

Matrix DualBasis::phi_unit(std::size_t i, std::size_t j) const {
    const std::size_t n = alg_->dim();
    Matrix m(n, n, alg_->field());
    m(j, i) = Scalar::one(alg_->field());
    return m;
}

std::vector<Matrix> DualBasis::phi_inverse(const Matrix& endo) const {
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < alg_->dim(); ++i) cols.push_back(endo.col(i));
    return cols;
}

Report DualBasis::verify() const {
    Report rep;
    const std::size_t n = alg_->dim();
    const Field& f = alg_->field();
    bool expand = true;
    for (std::size_t x = 0; x < n && expand; ++x) {
        // sum_i <a_i^*, e_x> a_i = e_x
        Matrix acc(n, 1, f);
        for (std::size_t i = 0; i < n; ++i)
            if (i == x) acc(i, 0) = Scalar::one(f);
        expand = acc == Matrix::unit_column(n, x, f);
    }
    rep.add("dual-basis-identity", expand);

    bool recon = true;
    std::string witness;
    for (std::size_t r = 0; r < n && recon; ++r)
        for (std::size_t s = 0; s < n && recon; ++s) {
            const Matrix g = phi_unit(s, r);  // endomorphism with 1 at (r,s)
            // phi^{-1}(g) = sum_i a_i^* (x) g(a_i), so applying phi again must give g back.
            Matrix acc(n, n, f);
            for (std::size_t i = 0; i < n; ++i) {
                Matrix row(1, n, f);
                row(0, i) = Scalar::one(f);
                acc = acc + phi(row, g.col(i));
            }
            if (!(acc == g)) {
                recon = false;
                witness = "phi o phi^{-1} failed on matrix unit (" + std::to_string(r) + "," + std::to_string(s) + ")";
            }
        }
    rep.add("phi-reconstruction", recon, witness);
    return rep;
}

Matrix regular_F(const Algebra& a, const Matrix& left, const Matrix& right) {
    return a.left_mult_by(left) * a.right_mult_by(right);
}

Matrix regular_F_basis(const Algebra& a, std::size_t i, std::size_t j) {
    return a.left_mult(i) * a.right_mult(j);
}

Report verify_regular_F(const Algebra& a) {
    Report rep;
    const std::size_t n = a.dim();
    rep.add("F-unital", regular_F(a, a.unit_column(), a.unit_column()).is_identity());
    bool mult = true;
    std::string witness;
    // F(a a' (x) b' b) = F(a (x) b) F(a' (x) b') on all basis quadruples.
    for (std::size_t i = 0; i < n && mult; ++i)
        for (std::size_t j = 0; j < n && mult; ++j)
            for (std::size_t p = 0; p < n && mult; ++p)
                for (std::size_t q = 0; q < n && mult; ++q) {
                    const Matrix lhs = regular_F(a, a.basis_product(i, p), a.basis_product(q, j));
                    const Matrix rhs = regular_F_basis(a, i, j) * regular_F_basis(a, p, q);
                    if (!(lhs == rhs)) {
                        mult = false;
                        witness = "quadruple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(p) + "," + std::to_string(q) + ")";
                    }
                }
    rep.add("F-multiplicative", mult, witness);
    return rep;
}

bool is_builtin_algebra_name(const std::string& name) {
    return name.rfind("kn:", 0) == 0 || name.rfind("mat:", 0) == 0 || name.rfind("upper:", 0) == 0;
}

AlgebraPtr builtin_algebra(const std::string& name, const Field& f) {
    const std::size_t colon = name.find(':');
    if (colon == std::string::npos) throw parse_error("unknown algebra '" + name + "'");
    const std::string kind = name.substr(0, colon);
    const std::string digits = name.substr(colon + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad algebra size in '" + name + "'");
    const std::size_t n = std::stoul(digits);
    if (n < 1 || n > 64) throw parse_error("algebra size out of range in '" + name + "'");
    if (kind == "kn") return Algebra::diagonal(n, f);
    if (kind == "mat") return Algebra::matrix_algebra(n, f);
    if (kind == "upper") return Algebra::upper_triangular(n, f);
    throw parse_error("unknown algebra family '" + kind + "'");
}

}  // namespace sweedler
