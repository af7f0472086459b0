#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sweedler/matrix.hpp"
#include "sweedler/report.hpp"

namespace sweedler {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i * e_j = sum_k c[i][j][k] e_k, with the unit expressed as a
/// coordinate vector in the same basis.
///
/// Construction validates associativity over all basis triples and both unit
/// laws, so an Algebra value is trustworthy downstream. Elements are column
/// vectors of coordinates.
class Algebra {
public:
    /// Validating constructor; throws validation_error with a witness.
    /// validate = false skips the checks for bulk construction of algebras
    /// already known to be valid (opposites, tensor products).
    static AlgebraPtr make(const Field& f, std::size_t dim, std::vector<Scalar> sc, std::vector<Scalar> unit,
                           bool validate = true);

    /// Same, but returns the full report instead of throwing.
    static Report validate(const Field& f, std::size_t dim, const std::vector<Scalar>& sc,
                           const std::vector<Scalar>& unit);

    // Builtin families.
    static AlgebraPtr diagonal(std::size_t n, const Field& f);            // k^n, e_i e_j = delta_ij e_i
    static AlgebraPtr matrix_algebra(std::size_t n, const Field& f);      // M_n(k), basis e_ij at i*n+j
    static AlgebraPtr upper_triangular(std::size_t n, const Field& f);    // upper-triangular n x n matrices

    static AlgebraPtr opposite(const AlgebraPtr& a);
    static AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
    static AlgebraPtr enveloping(const AlgebraPtr& a);  // A (x) A^op

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    /// c[i][j][k]
    const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Scalar>& unit() const { return unit_; }
    Matrix unit_column() const;

    /// Coordinates of e_i * e_j as a column vector.
    Matrix basis_product(std::size_t i, std::size_t j) const;
    /// Product of two coordinate columns.
    Matrix product(const Matrix& a, const Matrix& b) const;

    /// Matrix of x -> e_i * x.
    const Matrix& left_mult(std::size_t i) const { return lmul_[i]; }
    /// Matrix of x -> x * e_i.
    const Matrix& right_mult(std::size_t i) const { return rmul_[i]; }
    /// Matrices of x -> a*x and x -> x*a for a coordinate column a.
    Matrix left_mult_by(const Matrix& a) const;
    Matrix right_mult_by(const Matrix& a) const;

    /// Multiplication as a map A (x) A -> A: column a*n+b holds e_a * e_b.
    Matrix mult_map() const;

    bool same_presentation(const Algebra& other) const;

    std::string str() const;

private:
    Algebra(const Field& f, std::size_t dim, std::vector<Scalar> sc, std::vector<Scalar> unit);

    Field field_;
    std::size_t dim_;
    std::vector<Scalar> sc_;  // flat [i][j][k]
    std::vector<Scalar> unit_;
    std::vector<Matrix> lmul_, rmul_;
};

/// Unital multiplicative map between algebras, stored as a dim(target) x
/// dim(source) matrix on coordinates. Validated at construction.
class AlgebraMorphism {
public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, Matrix map);

    static Report validate(const Algebra& source, const Algebra& target, const Matrix& map);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const Matrix& map() const { return map_; }

private:
    AlgebraPtr source_, target_;
    Matrix map_;
};

/// The coordinate dual basis of A: functionals a_i^* (rows), elements
/// a_i = e_i (columns), and the rank-one endomorphisms f_i sending x to
/// <e_i^*, x> * 1.
///
/// phi : A^* (x) A -> End(A) sends a^* (x) b to the endomorphism
/// x -> <a^*, x> b; it is invertible here since A is free of finite rank.
class DualBasis {
public:
    explicit DualBasis(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t size() const { return alg_->dim(); }

    /// phi(a^* (x) b) for coordinate row a^* and column b.
    Matrix phi(const Matrix& functional_row, const Matrix& element_col) const;
    /// phi(e_i^* (x) e_j): the matrix unit with 1 in row j, column i.
    Matrix phi_unit(std::size_t i, std::size_t j) const;
    /// f_i = phi(a_i^* (x) 1).
    const Matrix& f_elem(std::size_t i) const { return f_[i]; }

    /// Coefficient decomposition of an endomorphism: phi^{-1}(g) =
    /// sum_i a_i^* (x) g(a_i); returned as the columns g(a_i).
    std::vector<Matrix> phi_inverse(const Matrix& endo) const;

    /// Dual-basis identity sum_i <a_i^*, x> a_i = x on all basis x, plus the
    /// reconstruction identity for phi on matrix units.
    Report verify() const;

private:
    AlgebraPtr alg_;
    std::vector<Matrix> f_;
};

/// The regular representation map F : A (x) A^op -> End(A),
/// F(a (x) b)(x) = a x b, evaluated on coordinate columns.
Matrix regular_F(const Algebra& a, const Matrix& left, const Matrix& right);

/// F on basis pairs: F(e_i (x) e_j).
Matrix regular_F_basis(const Algebra& a, std::size_t i, std::size_t j);

/// Multiplicativity of F on all basis quadruples:
/// F(a a' (x) b' b) = F(a (x) b) F(a' (x) b').
Report verify_regular_F(const Algebra& a);

/// Builtin algebra names: "kn:<n>", "mat:<n>", "upper:<n>".
AlgebraPtr builtin_algebra(const std::string& name, const Field& f);
bool is_builtin_algebra_name(const std::string& name);

}  // namespace sweedler
