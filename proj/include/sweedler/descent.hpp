#pragma once

#include "sweedler/comodule.hpp"

namespace sweedler {

/// Noncommutative descent datum: an A-bimodule V with a map
/// g : A (x) V -> V (x) A that is A(2)-bimodule linear, satisfies the cocycle
/// identity g2 = g3 o g1 on triple tensors, and returns v when composed with
/// the right action at 1 (x) v.
///
/// g is stored as an (m*n) x (n*m) matrix; A (x) V flattens as a*m + j and
/// V (x) A as i*n + b. Verification runs eagerly and is cached.
class DescentDatum {
public:
    DescentDatum(Bimodule module, Matrix g);

    /// The free datum on N = k^n_dim: g(a (x) t (x) b) = t (x) a (x) b.
    static DescentDatum free(AlgebraPtr a, std::size_t n_dim);

    const Bimodule& module() const { return module_; }
    const Matrix& g() const { return g_; }
    const AlgebraPtr& algebra() const { return module_.algebra(); }
    std::size_t dim() const { return module_.dim(); }

    const Report& axiom_report() const { return report_; }
    bool ok() const { return ok_; }
    void require_valid(const std::string& op) const;

    bool data_equals(const DescentDatum& other) const;

private:
    Bimodule module_;
    Matrix g_;
    Report report_;
    bool ok_ = false;
};

/// Named checks: bimodule-linearity-left, bimodule-linearity-right, cocycle,
/// counit. Throws error on shape mismatch.
Report verify_descent(const Bimodule& module, const Matrix& g);

/// The three induced maps on triple tensors. Writing g(a (x) v) = sum v_i (x) a_i:
///   g1 : A (x) A (x) V -> A (x) V (x) A,  b (x) a (x) v -> b (x) v_i (x) a_i
///   g2 : A (x) A (x) V -> V (x) A (x) A,  a (x) b (x) v -> v_i (x) b (x) a_i
///   g3 : A (x) V (x) A -> V (x) A (x) A,  a (x) v (x) b -> v_i (x) a_i (x) b
struct LiftedG {
    Matrix g1, g2, g3;
};
LiftedG lift_g(const Bimodule& module, const Matrix& g);

/// g(a (x) v) = a v_(0) (x) v_(1). Requires the Yetter-Drinfeld structure.
DescentDatum descent_from_yd(const Coaction& c);

/// rho(v) = g(1 (x) v), with the datum's own left action; the inverse of
/// descent_from_yd on the nose.
Coaction yd_from_descent(const DescentDatum& d);

/// The two-sided inverse tau o g o tau of g, which exists exactly when the
/// induced coaction absorbs to the identity. Throws singular_error with a
/// kernel witness otherwise.
Matrix g_inverse(const DescentDatum& d);

/// Basis (as columns) of the coinvariants G(V) = { v : rho(v) = v (x) 1 }.
Matrix descent_coinvariants(const Coaction& c);

/// Coordinates of eta_N : N -> G(F(N)), n -> n (x) 1, in the computed
/// coinvariant basis of the free comodule on k^n_dim. Throws
/// validation_error when the image misses the coinvariants.
Matrix unit_eta(AlgebraPtr a, std::size_t n_dim);

/// eps : G(V) (x) A -> V, v (x) a -> v a, over the computed coinvariant basis.
Matrix counit_eps(const Coaction& c);

}  // namespace sweedler
