#pragma once

#include "sweedler/algebra.hpp"

namespace sweedler {

/// Finite-dimensional A-bimodule: one m x m matrix per algebra basis element
/// for each side. left[i] is the action of e_i on the left, right[i] the
/// action on the right, both on coordinate columns.
///
/// Operator order: (v*a)*b = v*(ab) means right_action_of(ab) =
/// right_action_of(b) * right_action_of(a) as matrices.
class Bimodule {
public:
    Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right,
             bool validate = true);

    static Report validate_actions(const Algebra& a, std::size_t dim, const std::vector<Matrix>& left,
                                   const std::vector<Matrix>& right);

    /// V = A with left and right multiplication.
    static Bimodule regular(AlgebraPtr a);
    /// V = N (x) A for a free k-module N of dimension n_dim, both actions on
    /// the A factor. Basis (t, a) at flat index t*dim(A) + a.
    static Bimodule free(AlgebraPtr a, std::size_t n_dim);
    /// V = A (x) A with a acting on the first leg from the left and on the
    /// second leg from the right (the free bimodule on one generator).
    static Bimodule free_two_sided(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    const std::vector<Matrix>& left_all() const { return left_; }
    const std::vector<Matrix>& right_all() const { return right_; }

    Matrix left_action_of(const Matrix& a) const;
    Matrix right_action_of(const Matrix& a) const;

    /// V (x) A -> V, v (x) a -> v*a.
    Matrix apply_right_map() const;
    /// A (x) V -> V, a (x) v -> a*v.
    Matrix apply_left_map() const;
    /// V -> A (x) V, v -> 1 (x) v.
    Matrix insert_unit_left() const;
    /// V -> V (x) A, v -> v (x) 1.
    Matrix insert_unit_right() const;

    bool data_equals(const Bimodule& other) const;

private:
    AlgebraPtr alg_;
    std::size_t dim_;
    std::vector<Matrix> left_, right_;
};

/// Right module over an arbitrary algebra B (used for induction along
/// morphisms B -> A). Same operator-order convention as Bimodule.
class RightModule {
public:
    RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> right);

    /// k^dim over B = k (the one-dimensional algebra), unit acting as the
    /// identity.
    static RightModule scalars(AlgebraPtr ground, std::size_t dim);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    Matrix right_action_of(const Matrix& b) const;

private:
    AlgebraPtr alg_;
    std::size_t dim_;
    std::vector<Matrix> right_;
};

}  // namespace sweedler
