#include "sweedler/bimodule.hpp"

namespace sweedler {

Report Bimodule::validate_actions(const Algebra& a, std::size_t dim, const std::vector<Matrix>& left,
                                  const std::vector<Matrix>& right) {
    Report rep;
    const std::size_t n = a.dim();
    const Field& f = a.field();
    if (left.size() != n || right.size() != n) {
        rep.add("shape", false, "need one action matrix per algebra basis element on each side");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim || right[i].cols() != dim ||
            !(left[i].field() == f) || !(right[i].field() == f)) {
            rep.add("shape", false, "action matrices must be dim x dim over the algebra's field");
            return rep;
        }
    rep.add("shape", true);

    auto of = [&](const std::vector<Matrix>& side, const Matrix& coeffs) {
        Matrix m(dim, dim, f);
        for (std::size_t i = 0; i < n; ++i)
            if (!coeffs(i, 0).is_zero()) m = m + coeffs(i, 0) * side[i];
        return m;
    };

    rep.add("left-unit", of(left, a.unit_column()).is_identity());
    rep.add("right-unit", of(right, a.unit_column()).is_identity());

    bool lmul = true, rmul = true, comm = true;
    std::string lw, rw, cw;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix prod = of(left, a.basis_product(i, j));
            if (lmul && !(prod == left[i] * left[j])) {
                lmul = false;
                lw = "L(e" + std::to_string(i) + " e" + std::to_string(j) + ") != L(e" + std::to_string(i) +
                     ")L(e" + std::to_string(j) + ")";
            }
            const Matrix rprod = of(right, a.basis_product(i, j));
            if (rmul && !(rprod == right[j] * right[i])) {
                rmul = false;
                rw = "R(e" + std::to_string(i) + " e" + std::to_string(j) + ") != R(e" + std::to_string(j) +
                     ")R(e" + std::to_string(i) + ")";
            }
            if (comm && !(left[i] * right[j] == right[j] * left[i])) {
                comm = false;
                cw = "left e" + std::to_string(i) + " and right e" + std::to_string(j) + " do not commute";
            }
        }
    rep.add("left-multiplicative", lmul, lw);
    rep.add("right-multiplicative", rmul, rw);
    rep.add("actions-commute", comm, cw);
    return rep;
}

Bimodule::Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right,
                   bool validate)
    : alg_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
    if (validate) {
        const Report rep = validate_actions(*alg_, dim_, left_, right_);
        if (!rep.all_pass()) throw validation_error("invalid bimodule:\n" + rep.str());
    }
}

Bimodule Bimodule::regular(AlgebraPtr a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(a->left_mult(i));
        r.push_back(a->right_mult(i));
    }
    const std::size_t d = a->dim();
    return Bimodule(std::move(a), d, std::move(l), std::move(r), false);
}

Bimodule Bimodule::free(AlgebraPtr a, std::size_t n_dim) {
    const std::size_t n = a->dim();
    const Matrix id = Matrix::identity(n_dim, a->field());
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < n; ++i) {
        l.push_back(Matrix::kron(id, a->left_mult(i)));
        r.push_back(Matrix::kron(id, a->right_mult(i)));
    }
    return Bimodule(std::move(a), n_dim * n, std::move(l), std::move(r), false);
}

Bimodule Bimodule::free_two_sided(AlgebraPtr a) {
    const std::size_t n = a->dim();
    const Matrix id = Matrix::identity(n, a->field());
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < n; ++i) {
        l.push_back(Matrix::kron(a->left_mult(i), id));
        r.push_back(Matrix::kron(id, a->right_mult(i)));
    }
    return Bimodule(std::move(a), n * n, std::move(l), std::move(r), false);
}

Matrix Bimodule::left_action_of(const Matrix& a) const {
    Matrix m(dim_, dim_, alg_->field());
    for (std::size_t i = 0; i < alg_->dim(); ++i)
        if (!a(i, 0).is_zero()) m = m + a(i, 0) * left_[i];
    return m;
}

Matrix Bimodule::right_action_of(const Matrix& a) const {
    Matrix m(dim_, dim_, alg_->field());
    for (std::size_t i = 0; i < alg_->dim(); ++i)
        if (!a(i, 0).is_zero()) m = m + a(i, 0) * right_[i];
    return m;
}

Matrix Bimodule::apply_right_map() const {
    const std::size_t n = alg_->dim();
    Matrix m(dim_, dim_ * n, alg_->field());
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t i = 0; i < dim_; ++i) {
                const Scalar& s = right_[b](i, j);
                if (!s.is_zero()) m(i, j * n + b) = s;
            }
    return m;
}

Matrix Bimodule::apply_left_map() const {
    const std::size_t n = alg_->dim();
    Matrix m(dim_, n * dim_, alg_->field());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t i = 0; i < dim_; ++i) {
                const Scalar& s = left_[a](i, j);
                if (!s.is_zero()) m(i, a * dim_ + j) = s;
            }
    return m;
}

Matrix Bimodule::insert_unit_left() const {
    const std::size_t n = alg_->dim();
    Matrix m(n * dim_, dim_, alg_->field());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!alg_->unit()[a].is_zero()) m(a * dim_ + j, j) = alg_->unit()[a];
    return m;
}

Matrix Bimodule::insert_unit_right() const {
    const std::size_t n = alg_->dim();
    Matrix m(dim_ * n, dim_, alg_->field());
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t a = 0; a < n; ++a)
            if (!alg_->unit()[a].is_zero()) m(j * n + a, j) = alg_->unit()[a];
    return m;
}

bool Bimodule::data_equals(const Bimodule& other) const {
    if (!alg_->same_presentation(*other.alg_) || dim_ != other.dim_) return false;
    for (std::size_t i = 0; i < left_.size(); ++i)
        if (left_[i] != other.left_[i] || right_[i] != other.right_[i]) return false;
    return true;
}

RightModule::RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> right)
    : alg_(std::move(algebra)), dim_(dim), right_(std::move(right)) {
    const std::size_t n = alg_->dim();
    if (right_.size() != n) throw validation_error("right module needs one matrix per algebra basis element");
    Report rep;
    Matrix unit_action(dim_, dim_, alg_->field());
    for (std::size_t i = 0; i < n; ++i) {
        if (right_[i].rows() != dim_ || right_[i].cols() != dim_)
            throw validation_error("right module action matrices must be dim x dim");
        if (!alg_->unit()[i].is_zero()) unit_action = unit_action + alg_->unit()[i] * right_[i];
    }
    rep.add("right-unit", unit_action.is_identity());
    bool mult = true;
    for (std::size_t i = 0; i < n && mult; ++i)
        for (std::size_t j = 0; j < n && mult; ++j) {
            Matrix prod(dim_, dim_, alg_->field());
            const Matrix coeffs = alg_->basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!coeffs(k, 0).is_zero()) prod = prod + coeffs(k, 0) * right_[k];
            mult = prod == right_[j] * right_[i];
        }
    rep.add("right-multiplicative", mult);
    if (!rep.all_pass()) throw validation_error("invalid right module:\n" + rep.str());
}

RightModule RightModule::scalars(AlgebraPtr ground, std::size_t dim) {
    if (ground->dim() != 1) throw error("RightModule::scalars expects the one-dimensional algebra");
    std::vector<Matrix> r{Matrix::identity(dim, ground->field())};
    // unit of k is u * e_0 for some unit coordinate u; the action of e_0 must
    // be u^{-1} * id so that 1_B acts as the identity.
    const Scalar u = ground->unit()[0];
    r[0] = u.inverse() * r[0];
    return RightModule(std::move(ground), dim, std::move(r));
}

}  // namespace sweedler
