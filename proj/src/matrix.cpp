#include "sweedler/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sweedler {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::unit_column(std::size_t dim, std::size_t i, const Field& f) {
    Matrix m(dim, 1, f);
    m(i, 0) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw error("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::integer(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix v(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::hstack(const Matrix& right) const {
    require_same_field(*this, right);
    if (rows_ != right.rows_) throw error("hstack with mismatched row counts");
    Matrix m(rows_, cols_ + right.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& s = (*this)(i, j);
            if (i == j ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<bool> col_hit(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t ones = 0, at = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& s = (*this)(i, j);
            if (s.is_zero()) continue;
            if (!s.is_one()) return false;
            ++ones;
            at = j;
        }
        if (ones != 1 || col_hit[at]) return false;
        col_hit[at] = true;
    }
    return true;
}

void Matrix::require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_))
        throw field_mismatch("matrix arithmetic across fields " + a.field_.str() + " and " + b.field_.str());
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix::require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix::require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix::require_same_field(a, b);
    if (a.cols_ != b.rows_)
        throw error("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;  // inputs here are typically very sparse
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    if (!(c.field() == m.field_)) throw field_mismatch("scalar-matrix product across fields");
    Matrix out = m;
    for (Scalar& s : out.e_) s *= c;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        if (a.e_[k] != b.e_[k]) return false;
    return true;
}

Echelon Matrix::rref() const {
    Echelon out{*this, {}};
    Matrix& m = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if (!m(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(pivot, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

std::vector<Matrix> Matrix::kernel_basis() const {
    const Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Matrix> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Matrix v(cols_, 1, field_);
        v(f, 0) = Scalar::one(field_);
        for (std::size_t t = 0; t < e.pivots.size(); ++t) v(e.pivots[t], 0) = -e.reduced(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw singular_error("inverse of a non-square matrix");
    const Echelon e = hstack(identity(rows_, field_)).rref();
    if (e.pivots.size() != rows_ || (rows_ > 0 && e.pivots.back() >= rows_))
        throw singular_error("matrix is singular, rank " + std::to_string(rank()) + " of " + std::to_string(rows_));
    Matrix inv(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = e.reduced(i, cols_ + j);
    return inv;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    require_same_field(*this, rhs);
    if (rhs.rows_ != rows_) throw error("solve with mismatched right-hand side");
    const Echelon e = hstack(rhs).rref();
    Matrix x(cols_, rhs.cols_, field_);
    std::size_t row = 0;
    for (std::size_t p : e.pivots) {
        if (p >= cols_) return std::nullopt;  // pivot in the augmented block: inconsistent
        for (std::size_t j = 0; j < rhs.cols_; ++j) x(p, j) = e.reduced(row, cols_ + j);
        ++row;
    }
    return x;
}

bool Matrix::in_column_space(const Matrix& v) const { return solve(v).has_value(); }

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    const Scalar& bkl = b(k, l);
                    if (!bkl.is_zero()) c(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                }
        }
    return c;
}

Matrix Matrix::tensor_permutation(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& out_of, const Field& f) {
    if (dims.size() != out_of.size()) throw error("tensor_permutation arity mismatch");
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    Matrix p(total, total, f);
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t flat_in = 0; flat_in < total; ++flat_in) {
        // decode flat_in against dims (left-associated, row-major)
        std::size_t rem = flat_in;
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        std::size_t flat_out = 0;
        for (std::size_t k = 0; k < out_of.size(); ++k) flat_out = flat_out * dims[out_of[k]] + idx[out_of[k]];
        p(flat_out, flat_in) = Scalar::one(f);
    }
    return p;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

bool RowSpace::insert(const std::vector<Scalar>& v) {
    std::vector<Scalar> r = reduce(v);
    std::size_t lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (!r[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == dim_) return false;
    const Scalar inv = r[lead].inverse();
    for (std::size_t j = lead; j < dim_; ++j) r[j] *= inv;
    // Back-eliminate the new pivot from existing rows to stay fully reduced.
    for (std::vector<Scalar>& row : rows_) {
        const Scalar c = row[lead];
        if (c.is_zero()) continue;
        for (std::size_t j = lead; j < dim_; ++j) row[j] -= c * r[j];
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    const std::size_t pos = static_cast<std::size_t>(at - pivots_.begin());
    pivots_.insert(at, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    return true;
}

bool RowSpace::insert_column(const Matrix& column) {
    if (column.rows() != dim_ || column.cols() != 1) throw error("RowSpace insert shape mismatch");
    std::vector<Scalar> v(dim_, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i) v[i] = column(i, 0);
    return insert(v);
}

std::vector<Scalar> RowSpace::reduce(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw error("RowSpace reduce shape mismatch");
    std::vector<Scalar> r = v;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Scalar c = r[pivots_[t]];
        if (c.is_zero()) continue;
        const std::vector<Scalar>& row = rows_[t];
        for (std::size_t j = pivots_[t]; j < dim_; ++j) {
            if (!row[j].is_zero()) r[j] -= c * row[j];
        }
    }
    return r;
}

bool RowSpace::contains_column(const Matrix& column) const {
    if (column.rows() != dim_ || column.cols() != 1) throw error("RowSpace membership shape mismatch");
    std::vector<Scalar> v(dim_, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i) v[i] = column(i, 0);
    v = reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix RowSpace::basis_matrix() const {
    Matrix b(rows_.size(), dim_, field_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) b(i, j) = rows_[i][j];
    return b;
}

}  // namespace sweedler
