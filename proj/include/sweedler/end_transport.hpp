#pragma once

#include "sweedler/braiding.hpp"

namespace sweedler {

/// A left End_k(A)-module presented by the action of every matrix-unit
/// endomorphism: action[r*n + s] is the action of the endomorphism sending
/// e_s to e_r and the other basis elements to 0.
struct EndModule {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;

    /// Action of an arbitrary endomorphism (an n x n matrix over the field).
    Matrix action_of(const Matrix& endo) const;
};

/// Module laws for an EndModule: the identity endomorphism acts as the
/// identity and matrix units compose correctly.
Report verify_end_module(const EndModule& em);

/// The action f.v = v_(0) f(v_(1)) of an endomorphism on a comodule.
Matrix end_action(const DualBasis& db, const Coaction& c, const Matrix& endo);

/// Transports a comodule to a left End_k(A)-module via end_action on all
/// matrix units.
EndModule end_module_from_comodule(const DualBasis& db, const Coaction& c);

/// The inverse transport: rho(v) = sum_i f_i . v (x) a_i, with the bimodule
/// structure recovered through a |-> (x -> a x) and a |-> (x -> x a).
Coaction comodule_from_end_module(const DualBasis& db, const EndModule& em);

/// The End_k(A)-action on V (x)_A W in its two equivalent forms
///   f . (v (x) w) = sum_i f_i . v (x) f(a_i -) . w
///                 = sum_j f(- a_j) . v (x) f_j . w
/// evaluated on the quotient basis of the tensor.
Matrix end_action_on_tensor(const DualBasis& db, const Coaction& v, const Coaction& w, const TensorOverA& t,
                            const Matrix& endo);
Matrix end_action_on_tensor_alt(const DualBasis& db, const Coaction& v, const Coaction& w,
                                const TensorOverA& t, const Matrix& endo);

/// The braiding in dual-basis form, c(v (x) w) = sum_i f_i . w (x) v a_i,
/// between the given tensor quotients.
Matrix end_braiding(const DualBasis& db, const Coaction& v, const Coaction& w, const TensorOverA& vw,
                    const TensorOverA& wv);

}  // namespace sweedler
