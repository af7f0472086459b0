#pragma once

#include "sweedler/tensor.hpp"

namespace sweedler {

/// Which recipe produced an operator. The cube identity is a theorem only
/// for the comodule recipe, so checks consult this.
enum class OmegaSource { comodule, yd, grouplike, rmatrix, external };

std::string omega_source_name(OmegaSource s);
OmegaSource omega_source_from_name(const std::string& name);

/// An endomorphism of V (x) V as an m^2 x m^2 matrix. Nothing is presumed at
/// construction: the quantum Yang-Baxter equation and the cube identity are
/// verified properties, reported by the checks below.
struct YangBaxterOperator {
    std::size_t space_dim = 0;
    Matrix omega;
    OmegaSource provenance = OmegaSource::external;
};

/// Omega(v (x) w) = w_(0) (x) v_(0) w_(1) v_(1). Requires the comodule axioms.
YangBaxterOperator omega_from_comodule(const Coaction& c);

/// Omega(v (x) w) = w_(0) (x) w_(1) v using the stored left action. Requires
/// the Yetter-Drinfeld axioms; agrees with omega_from_comodule when the left
/// action is the induced one.
YangBaxterOperator omega_from_yd(const Coaction& c);

/// Omega^12 Omega^13 Omega^23 = Omega^23 Omega^13 Omega^12 on V (x) V (x) V,
/// by explicit m^3 x m^3 products. Capped at space_dim <= 9; beyond that the
/// triple products no longer fit the desk-scale budget this tool targets.
Report qybe_check(const YangBaxterOperator& op);

/// Omega^3 = Omega, plus the closed form of the square,
/// Omega^2(v (x) w) = v_(0) (x) w v_(1). Stated for the comodule recipe only.
Report omega_cubed_check(const YangBaxterOperator& op, const Coaction& source);

/// The expected matrix of Omega^2 for a comodule-built operator.
Matrix omega_squared_expected(const Coaction& c);

/// Grouplike element x = x^1 (x) x^2 of A (x) A: x^1 x^2 = 1 and
/// X^1 (x) X^2 x^1 (x) x^2 = X^1 (x) 1 (x) X^2 (capital letters a second
/// copy). Coefficients are a dim(A)^2 column. Construction verifies both
/// conditions and throws validation_error on failure.
class Grouplike {
public:
    Grouplike(AlgebraPtr a, Matrix coeffs);
    static Grouplike trivial(AlgebraPtr a);  // 1 (x) 1

    const AlgebraPtr& algebra() const { return alg_; }
    const Matrix& coeffs() const { return coeffs_; }

    /// The coaction rho(a) = x^1 (x) x^2 a on V = A.
    Coaction coaction_on_algebra() const;

private:
    AlgebraPtr alg_;
    Matrix coeffs_;
};

Report verify_grouplike(const Algebra& a, const Matrix& coeffs);

/// The operator of the grouplike coaction rho(a) = x^1 (x) x^2 a on V = A,
/// tagged with the grouplike provenance.
YangBaxterOperator omega_from_grouplike(const Grouplike& x);

/// Basis (columns) of the coinvariants { m : rho(m) = m x^1 (x) x^2 }.
Matrix coinvariants(const Coaction& c, const Grouplike& x);

/// For M = A with the grouplike coaction, the coinvariants form a
/// subalgebra: closed under products and containing 1.
Report coinvariants_algebra_check(const Grouplike& x);

/// The comodule N (x)_B A with rho(n (x) a) = n (x) x^1 (x) x^2 a, for an
/// algebra map i : B -> A landing in the coinvariants and a right B-module N.
struct InducedComodule {
    Quotient q;       // of the ambient N (x) A
    Coaction result;  // Yetter-Drinfeld structure on the quotient
};
InducedComodule induced_comodule(const Grouplike& x, const AlgebraMorphism& i, const RightModule& n);

/// R-matrix for A (x) A^op: R = R^1 (x) R^2 (x) R^3 in A^(3) with
///   centrality     R^1 (x) a R^2 (x) R^3 = R^1 (x) R^2 (x) R^3 a
///   normalization  R^1 R^2 (x) R^3 = R^2 (x) R^3 R^1 = 1 (x) 1.
/// Coefficients are a dim(A)^3 column. Construction verifies both axioms.
class RMatrix {
public:
    RMatrix(AlgebraPtr a, Matrix coeffs);

    /// sum_{i,j,l} e_ij (x) e_li (x) e_jl over M_n(k); verified, not trusted.
    static RMatrix matrix_units(std::size_t n, const Field& f);

    const AlgebraPtr& algebra() const { return alg_; }
    const Matrix& coeffs() const { return coeffs_; }

private:
    AlgebraPtr alg_;
    Matrix coeffs_;
};

/// The two defining axioms; with include_derived also the doubling identity
/// R^1 (x) R^2 (x) 1 (x) R^3 = r^1 R^1 (x) r^2 (x) r^3 R^2 (x) R^3 and
/// invariance under cyclic rotation of the tensor legs.
Report verify_rmatrix(const Algebra& a, const Matrix& coeffs, bool include_derived);

/// rho(v) = R^1 v R^2 (x) R^3 on an arbitrary bimodule. The result is
/// Yetter-Drinfeld and its induced left action equals the original one; both
/// facts are enforced.
Coaction comodule_from_rmatrix(const Bimodule& v, const RMatrix& r);

/// Omega(v (x) w) = R^1 w R^2 (x) R^3 v, tagged with the rmatrix provenance.
YangBaxterOperator omega_from_rmatrix(const Bimodule& v, const RMatrix& r);

}  // namespace sweedler
