#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sweedler/scalar.hpp"

namespace sweedler {

class Matrix;

/// Result of row reduction: the reduced matrix and its pivot columns.
struct Echelon;

/// Dense row-major matrix over one exact field.
///
/// Tensor convention used throughout the project: the basis vector v_i (x) w_j
/// of V (x) W sits at flat index i*dim(W) + j, and triple tensors flatten
/// left-associated, (i,j,l) -> i*dimW*dimU + j*dimU + l. kron() follows the
/// same convention, so kron(A,B) acts as A (x) B on flattened tensors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f);

    static Matrix identity(std::size_t n, const Field& f);
    static Matrix unit_column(std::size_t dim, std::size_t i, const Field& f);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix col(std::size_t j) const;
    Matrix transpose() const;
    Matrix hstack(const Matrix& right) const;

    bool is_zero() const;
    bool is_identity() const;
    /// True when every entry is 0 or 1 with exactly one 1 per row and column.
    bool is_permutation() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Reduced row echelon form. Pivot search scans rows top to bottom within
    /// each column, columns left to right, which fixes the output uniquely.
    Echelon rref() const;

    std::size_t rank() const;

    /// Basis of the null space. One vector per free column of the rref, in
    /// increasing column order, with a 1 at the free coordinate.
    std::vector<Matrix> kernel_basis() const;

    Matrix inverse() const;  // throws singular_error

    /// One solution x of this*x = rhs (free variables set to 0), or nullopt.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    bool in_column_space(const Matrix& v) const;

    /// (i,j),(k,l) entry a(i,j)*b(k,l) at row i*b.rows()+k, col j*b.cols()+l.
    static Matrix kron(const Matrix& a, const Matrix& b);

    /// Permutation matrix reordering tensor factors. dims lists the factor
    /// dimensions of the source; out_of[k] names the source factor placed at
    /// output position k. Row index is the output flat index.
    static Matrix tensor_permutation(const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& out_of, const Field& f);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;

    static void require_same_field(const Matrix& a, const Matrix& b);
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Incremental reduced-row-echelon span of a set of vectors in k^dim.
///
/// Inserting vectors in any order yields the same canonical basis, because a
/// subspace has a unique rref basis. Used for quotient constructions and
/// membership tests.
class RowSpace {
public:
    RowSpace(std::size_t dim, const Field& f) : dim_(dim), field_(f) {}

    /// Adds the span of v. Returns true when the rank grew.
    bool insert(const std::vector<Scalar>& v);
    bool insert_column(const Matrix& column);

    /// Residue of v after reduction against the current basis.
    std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;

    bool contains_column(const Matrix& column) const;

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// The canonical basis as a rank x dim matrix.
    Matrix basis_matrix() const;

private:
    std::size_t dim_;
    Field field_;
    std::vector<std::vector<Scalar>> rows_;  // rref rows, pivots strictly increasing
    std::vector<std::size_t> pivots_;
};

}  // namespace sweedler
