#pragma once

#include "sweedler/bimodule.hpp"

namespace sweedler {

/// Right comodule over the Sweedler coring A (x) A: a module V with a
/// structure map rho : V -> V (x) A, stored as an (m*n) x m matrix under the
/// flat index i*dim(A) + a for v_i (x) e_a.
///
/// The carrier always holds a full bimodule. When a coaction is built from
/// right-module data alone, the left action slot is filled with the induced
/// action a*v = v_(0) a v_(1); a flag records how much has been verified.
///
/// Verification runs eagerly at construction and is cached; it never throws.
/// Operations that require a valid comodule (or the Yetter-Drinfeld
/// compatibilities on top) consult the cached report and throw
/// validation_error when their precondition fails.
class Coaction {
public:
    Coaction(Bimodule module, Matrix rho);

    /// V = A with rho(a) = 1 (x) a and the regular actions.
    static Coaction regular(AlgebraPtr a);
    /// The free comodule on N = k^n_dim: V = N (x) A, rho(t (x) a) = t (x) 1 (x) a.
    static Coaction free(AlgebraPtr a, std::size_t n_dim);
    /// rho = 0 on the regular bimodule; fails the counit axiom by design of
    /// the examples it serves.
    static Coaction zero(AlgebraPtr a);

    const Bimodule& module() const { return module_; }
    const Matrix& rho() const { return rho_; }
    const AlgebraPtr& algebra() const { return module_.algebra(); }
    std::size_t dim() const { return module_.dim(); }

    const Report& axiom_report() const { return report_; }
    bool comodule_ok() const { return comodule_ok_; }
    bool yd_ok() const { return yd_ok_; }

    void require_comodule(const std::string& op) const;
    void require_yd(const std::string& op) const;

    bool data_equals(const Coaction& other) const;

private:
    Bimodule module_;
    Matrix rho_;
    Report report_;
    bool comodule_ok_ = false;
    bool yd_ok_ = false;
};

/// The five comodule / Yetter-Drinfeld axioms as named checks:
///   counit             v_(0) v_(1) = v
///   coassociativity    (rho (x) A) rho = (V (x) unit-insertion) rho
///   right-colinearity  rho(v a) = v_(0) (x) v_(1) a
///   left-colinearity   rho(a v) = v_(0) (x) a v_(1)
///   balance            a v_(0) (x) v_(1) = v_(0) a (x) v_(1)
/// With yd = false only the first three run. Throws error on shape mismatch.
Report verify_comodule(const Bimodule& module, const Matrix& rho, bool yd);
Report verify_comodule(const Coaction& c, bool yd);

/// Matrices of the induced left action a*v = v_(0) a v_(1), one per algebra
/// basis element. Only the right actions enter the formula.
std::vector<Matrix> induced_left_action(const Bimodule& module, const Matrix& rho);
std::vector<Matrix> induced_left_action(const AlgebraPtr& alg, const std::vector<Matrix>& right,
                                        const Matrix& rho);

/// Replaces the left action by the induced one. Requires the comodule axioms;
/// the result satisfies all five.
Coaction yd_from_comodule(const Coaction& c);

/// Forgets the Yetter-Drinfeld structure; the identity on the carrier data.
Coaction comodule_from_yd(const Coaction& c);

/// Consequences that hold for every Yetter-Drinfeld structure: applying the
/// coaction and then multiplying back in swapped order, v_(1) v_(0) = v.
Report verify_yd_consequences(const Coaction& c);

}  // namespace sweedler
