#pragma once

#include "sweedler/comodule.hpp"

namespace sweedler {

/// A quotient of k^ambient_dim by a subspace, with a deterministic choice of
/// complement: the non-pivot coordinates of the subspace's reduced row
/// echelon basis. proj sends an ambient vector to its class, sect picks the
/// canonical representative supported on the kept coordinates, and
/// proj * sect = id.
struct Quotient {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> kept;  // complement coordinates, increasing
    Matrix proj;                    // dim x ambient
    Matrix sect;                    // ambient x dim
    Matrix relation_basis;          // rank x ambient, canonical rref rows

    bool kills(const Matrix& column) const;          // column lies in the subspace
    Matrix lift_map(const Matrix& ambient_map, const Quotient& target) const;
};

/// Quotient by the span already accumulated in rows.
Quotient make_quotient(const RowSpace& rows);

/// V (x)_A W for plain bimodules: ambient V (x) W modulo all
/// v a (x) w - v (x) a w, with the induced bimodule structure (A acting on the
/// left through V and on the right through W).
struct BimoduleTensor {
    Quotient q;
    Bimodule module;
};
BimoduleTensor tensor_bimodules(const Bimodule& v, const Bimodule& w);

/// V (x)_A W for comodules: additionally carries the induced coaction
/// rho(v (x) w) = v_(0) (x) w_(0) (x) v_(1) w_(1) on the quotient.
struct TensorOverA {
    Quotient q;
    Coaction result;
};

/// Both factors must satisfy the Yetter-Drinfeld axioms (their left actions
/// are the induced ones). Throws validation_error when the ambient coaction
/// fails to preserve the relation subspace.
TensorOverA tensor_over_A(const Coaction& v, const Coaction& w);

/// U (x)_A V (x)_A W as a single quotient of the triple ambient space.
/// The canonical maps from either iterated two-step quotient are induced by
/// the identity on representatives, so checks happen directly here.
Quotient tensor_triple(const Bimodule& u, const Bimodule& v, const Bimodule& w);

/// The ambient coaction map V (x) W -> V (x) W (x) A.
Matrix ambient_coaction(const Coaction& v, const Coaction& w);

}  // namespace sweedler
