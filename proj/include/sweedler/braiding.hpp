#pragma once

#include "sweedler/tensor.hpp"

namespace sweedler {

/// The half-braiding of a comodule V against an arbitrary bimodule M:
///   c_{M,V}(m (x)_A v)      = v_(0) (x)_A m v_(1)
///   c_{M,V}^{-1}(v (x)_A m) = v_(1) m (x)_A v_(0)
/// Both matrices act between the canonical quotient bases of M (x)_A V and
/// V (x)_A M.
struct HalfBraiding {
    BimoduleTensor mv;  // M (x)_A V
    BimoduleTensor vm;  // V (x)_A M
    Matrix forward;     // mv -> vm
    Matrix backward;    // vm -> mv
};
HalfBraiding braid_against(const Bimodule& m, const Coaction& v);

/// The braiding between two comodules, with both tensor quotients.
struct Braiding {
    TensorOverA vw;  // V (x)_A W
    TensorOverA wv;  // W (x)_A V
    Matrix forward;  // c_{V,W} : vw -> wv, v (x) w -> w_(0) (x) v w_(1)
    Matrix backward; // two-sided inverse
};
Braiding braiding(const Coaction& v, const Coaction& w);

/// Ambient versions (before passing to the quotient).
Matrix ambient_half_braid(const Bimodule& m, const Coaction& v);      // M (x) V -> V (x) M
Matrix ambient_half_braid_inv(const Coaction& v, const Bimodule& m);  // V (x) M -> M (x) V

/// Both hexagon identities for one ordered triple of comodules, evaluated on
/// the common triple-tensor quotient. Every instance of "braid (x) id" is the
/// descended ambient map, so well-definedness is checked as part of the
/// lifts.
Report hexagon_check(const Coaction& u, const Coaction& v, const Coaction& w);

/// Hexagons for all ordered triples from a family, sharing quotient
/// computations across triples. Check names carry the triple indices.
Report hexagon_suite(const std::vector<Coaction>& objects);

/// Naturality of the half-braiding in the bimodule argument: for a bimodule
/// map f : M -> N, c_{N,V} o (f (x)_A V) = (V (x)_A f) o c_{M,V}.
Report naturality_check(const Bimodule& m, const Bimodule& n, const Matrix& f, const Coaction& v);

/// Naturality over the canonical probe family: the evaluation maps
/// A (x) A -> A, a (x) b -> a c b for each basis c, and scalar multiples of
/// the identity on A.
Report naturality_suite(const Coaction& v);

/// Unit constraints: A (x)_A V and V (x)_A A are isomorphic to V via the
/// action maps, the isomorphisms are colinear, and c_{A,V} agrees with the
/// canonical identification.
Report unit_constraint_check(const Coaction& v);

}  // namespace sweedler
