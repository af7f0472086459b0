#include "sweedler/ybe.hpp"

namespace sweedler {

std::string omega_source_name(OmegaSource s) {
    switch (s) {
        case OmegaSource::comodule: return "comodule";
        case OmegaSource::yd: return "yd";
        case OmegaSource::grouplike: return "grouplike";
        case OmegaSource::rmatrix: return "rmatrix";
        case OmegaSource::external: return "external";
    }
    return "external";
}

OmegaSource omega_source_from_name(const std::string& name) {
    if (name == "comodule") return OmegaSource::comodule;
    if (name == "yd") return OmegaSource::yd;
    if (name == "grouplike") return OmegaSource::grouplike;
    if (name == "rmatrix") return OmegaSource::rmatrix;
    if (name == "external") return OmegaSource::external;
    throw parse_error("unknown operator provenance '" + name + "'");
}

YangBaxterOperator omega_from_comodule(const Coaction& c) {
    c.require_comodule("omega_from_comodule");
    const Algebra& alg = *c.algebra();
    const std::size_t m = c.dim(), n = alg.dim();
    const Matrix& rho = c.rho();

    // Right action by each basis product e_b e_a, preassembled.
    std::vector<Matrix> right_prod(n * n, Matrix());
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            right_prod[b * n + a] = c.module().right_action_of(alg.basis_product(b, a));

    Matrix omega(m * m, m * m, alg.field());
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t j2 = 0; j2 < m; ++j2)
                for (std::size_t a = 0; a < n; ++a) {
                    const Scalar& pv = rho(j2 * n + a, j);
                    if (pv.is_zero()) continue;
                    for (std::size_t l2 = 0; l2 < m; ++l2)
                        for (std::size_t b = 0; b < n; ++b) {
                            const Scalar& pw = rho(l2 * n + b, l);
                            if (pw.is_zero()) continue;
                            const Scalar coeff = pv * pw;
                            const Matrix& act = right_prod[b * n + a];
                            for (std::size_t i = 0; i < m; ++i)
                                if (!act(i, j2).is_zero()) omega(l2 * m + i, j * m + l) += coeff * act(i, j2);
                        }
                }
    return YangBaxterOperator{m, std::move(omega), OmegaSource::comodule};
}

YangBaxterOperator omega_from_yd(const Coaction& c) {
    c.require_yd("omega_from_yd");
    const std::size_t m = c.dim(), n = c.algebra()->dim();
    const Matrix& rho = c.rho();
    Matrix omega(m * m, m * m, c.algebra()->field());
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t l2 = 0; l2 < m; ++l2)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& pw = rho(l2 * n + b, l);
                    if (pw.is_zero()) continue;
                    const Matrix& lb = c.module().left(b);
                    for (std::size_t i = 0; i < m; ++i)
                        if (!lb(i, j).is_zero()) omega(l2 * m + i, j * m + l) += pw * lb(i, j);
                }
    return YangBaxterOperator{m, std::move(omega), OmegaSource::yd};
}

namespace {

Matrix embed_13(const Matrix& omega, std::size_t m) {
    Matrix out(m * m * m, m * m * m, omega.field());
    for (std::size_t r = 0; r < m * m; ++r)
        for (std::size_t c = 0; c < m * m; ++c) {
            const Scalar& s = omega(r, c);
            if (s.is_zero()) continue;
            const std::size_t i = r / m, k = r % m;
            const std::size_t i2 = c / m, k2 = c % m;
            for (std::size_t j = 0; j < m; ++j) out((i * m + j) * m + k, (i2 * m + j) * m + k2) = s;
        }
    return out;
}

std::string first_difference(const Matrix& a, const Matrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + a(i, j).str() +
                       " vs " + b(i, j).str();
    return "";
}

}  // namespace

Report qybe_check(const YangBaxterOperator& op) {
    Report rep;
    const std::size_t m = op.space_dim;
    if (op.omega.rows() != m * m || op.omega.cols() != m * m) {
        rep.add("shape", false, "operator matrix must be m^2 x m^2");
        return rep;
    }
    if (m > 9) {
        rep.add("qybe", false,
                "space dimension " + std::to_string(m) + " exceeds the m <= 9 cap for m^3 x m^3 products");
        return rep;
    }
    const Field& f = op.omega.field();
    const Matrix id = Matrix::identity(m, f);
    const Matrix e12 = Matrix::kron(op.omega, id);
    const Matrix e23 = Matrix::kron(id, op.omega);
    const Matrix e13 = embed_13(op.omega, m);
    Matrix lhs, rhs;
    {
        Matrix t = e12 * e13;
        lhs = t * e23;
    }
    {
        Matrix t = e23 * e13;
        rhs = t * e12;
    }
    const bool pass = lhs == rhs;
    rep.add("qybe", pass, pass ? "" : first_difference(lhs, rhs));
    return rep;
}

Matrix omega_squared_expected(const Coaction& c) {
    const std::size_t m = c.dim(), n = c.algebra()->dim();
    Matrix s(m * m, m * m, c.algebra()->field());
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t a = 0; a < n; ++a) {
                    const Scalar& pv = c.rho()(i * n + a, j);
                    if (pv.is_zero()) continue;
                    const Matrix& ra = c.module().right(a);
                    for (std::size_t i2 = 0; i2 < m; ++i2)
                        if (!ra(i2, l).is_zero()) s(i * m + i2, j * m + l) += pv * ra(i2, l);
                }
    return s;
}

Report omega_cubed_check(const YangBaxterOperator& op, const Coaction& source) {
    Report rep;
    const Matrix square = op.omega * op.omega;
    const Matrix cube = op.omega * square;
    if (op.provenance != OmegaSource::comodule) {
        // The identity is a theorem only for the comodule recipe; for other
        // recipes the outcome is recorded without being asserted.
        rep.add(std::string("cube-informational(") + omega_source_name(op.provenance) +
                    (cube == op.omega ? "): holds" : "): does-not-hold"),
                true);
        return rep;
    }
    const Matrix expected = omega_squared_expected(source);
    bool pass = square == expected;
    rep.add("square-closed-form", pass, pass ? "" : first_difference(square, expected));
    pass = cube == op.omega;
    rep.add("cube", pass, pass ? "" : first_difference(cube, op.omega));
    return rep;
}

Report verify_grouplike(const Algebra& a, const Matrix& coeffs) {
    Report rep;
    const std::size_t n = a.dim();
    if (coeffs.rows() != n * n || coeffs.cols() != 1) {
        rep.add("shape", false, "grouplike coefficients must be a dim(A)^2 column");
        return rep;
    }
    rep.add("shape", true);

    rep.add("normalized", a.mult_map() * coeffs == a.unit_column(), "x^1 x^2 != 1");

    // X^1 (x) X^2 x^1 (x) x^2 vs X^1 (x) 1 (x) X^2, as vectors in A^(3).
    const Field& f = a.field();
    Matrix lhs(n * n * n, 1, f), rhs(n * n * n, 1, f);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& xo = coeffs(p * n + q, 0);
            if (xo.is_zero()) continue;
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    const Scalar& xi = coeffs(s * n + t, 0);
                    if (xi.is_zero()) continue;
                    const Scalar coeff = xo * xi;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!a.sc(q, s, k).is_zero()) lhs((p * n + k) * n + t, 0) += coeff * a.sc(q, s, k);
                }
            for (std::size_t c = 0; c < n; ++c)
                if (!a.unit()[c].is_zero()) rhs((p * n + c) * n + q, 0) += xo * a.unit()[c];
        }
    rep.add("comultiplicative", lhs == rhs, "X^1 (x) X^2 x^1 (x) x^2 != X^1 (x) 1 (x) X^2");
    return rep;
}

Grouplike::Grouplike(AlgebraPtr a, Matrix coeffs) : alg_(std::move(a)), coeffs_(std::move(coeffs)) {
    const Report rep = verify_grouplike(*alg_, coeffs_);
    if (!rep.all_pass()) throw validation_error("not a grouplike element:\n" + rep.str());
}

Grouplike Grouplike::trivial(AlgebraPtr a) {
    const std::size_t n = a->dim();
    Matrix x(n * n, 1, a->field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i * n + j, 0) = a->unit()[i] * a->unit()[j];
    return Grouplike(std::move(a), std::move(x));
}

Coaction Grouplike::coaction_on_algebra() const {
    const Algebra& a = *alg_;
    const std::size_t n = a.dim();
    Matrix rho(n * n, n, a.field());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& x = coeffs_(i * n + b, 0);
                if (x.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.sc(b, c, k).is_zero()) rho(i * n + k, c) += x * a.sc(b, c, k);
            }
    return Coaction(Bimodule::regular(alg_), std::move(rho));
}

YangBaxterOperator omega_from_grouplike(const Grouplike& x) {
    YangBaxterOperator op = omega_from_comodule(x.coaction_on_algebra());
    op.provenance = OmegaSource::grouplike;
    return op;
}

Matrix coinvariants(const Coaction& c, const Grouplike& x) {
    const Algebra& a = *c.algebra();
    const std::size_t m = c.dim(), n = a.dim();
    // v -> v x^1 (x) x^2 as a map V -> V (x) A.
    Matrix tx(m * n, m, a.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& xc = x.coeffs()(p * n + b, 0);
            if (xc.is_zero()) continue;
            const Matrix& rp = c.module().right(p);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t i = 0; i < m; ++i)
                    if (!rp(i, j).is_zero()) tx(i * n + b, j) += xc * rp(i, j);
        }
    const std::vector<Matrix> ker = (c.rho() - tx).kernel_basis();
    Matrix basis(m, ker.size(), a.field());
    for (std::size_t t = 0; t < ker.size(); ++t)
        for (std::size_t i = 0; i < m; ++i) basis(i, t) = ker[t](i, 0);
    return basis;
}

Report coinvariants_algebra_check(const Grouplike& x) {
    Report rep;
    const AlgebraPtr a = x.algebra();
    const Coaction c = x.coaction_on_algebra();
    const Matrix basis = coinvariants(c, x);
    RowSpace span(a->dim(), a->field());
    for (std::size_t t = 0; t < basis.cols(); ++t) span.insert_column(basis.col(t));
    rep.add("contains-unit", span.contains_column(a->unit_column()));
    bool closed = true;
    std::string witness;
    for (std::size_t s = 0; s < basis.cols() && closed; ++s)
        for (std::size_t t = 0; t < basis.cols() && closed; ++t) {
            const Matrix prod = a->product(basis.col(s), basis.col(t));
            if (!span.contains_column(prod)) {
                closed = false;
                witness = "product of coinvariant basis " + std::to_string(s) + " and " + std::to_string(t) +
                          " leaves the span";
            }
        }
    rep.add("closed-under-product", closed, witness);
    return rep;
}

InducedComodule induced_comodule(const Grouplike& x, const AlgebraMorphism& i, const RightModule& n_mod) {
    const AlgebraPtr a = x.algebra();
    if (!i.target()->same_presentation(*a))
        throw error("induced_comodule: morphism target must be the grouplike's algebra");
    if (!i.source()->same_presentation(*n_mod.algebra()))
        throw error("induced_comodule: module must live over the morphism source");
    const std::size_t n = a->dim();
    const std::size_t nb = i.source()->dim();
    const std::size_t d = n_mod.dim();
    const Field& f = a->field();

    // Image of i must consist of coinvariants of the grouplike coaction on A.
    const Matrix coinv = coinvariants(x.coaction_on_algebra(), x);
    RowSpace span(n, f);
    for (std::size_t t = 0; t < coinv.cols(); ++t) span.insert_column(coinv.col(t));
    for (std::size_t b = 0; b < nb; ++b)
        if (!span.contains_column(i.map().col(b)))
            throw validation_error("induced_comodule: i(e" + std::to_string(b) +
                                   ") is not a coinvariant of x");

    // Relations n e_b (x) a - n (x) i(e_b) a in N (x) A.
    RowSpace rows(d * n, f);
    std::vector<Scalar> rel(d * n, Scalar::zero(f));
    for (std::size_t b = 0; b < nb; ++b) {
        const Matrix lmul_ib = a->left_mult_by(i.map().col(b));
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t aa = 0; aa < n; ++aa) {
                std::fill(rel.begin(), rel.end(), Scalar::zero(f));
                bool nonzero = false;
                for (std::size_t t = 0; t < d; ++t)
                    if (!n_mod.right(b)(t, s).is_zero()) {
                        rel[t * n + aa] += n_mod.right(b)(t, s);
                        nonzero = true;
                    }
                for (std::size_t k = 0; k < n; ++k)
                    if (!lmul_ib(k, aa).is_zero()) {
                        rel[s * n + k] -= lmul_ib(k, aa);
                        nonzero = true;
                    }
                if (nonzero) rows.insert(rel);
            }
    }
    Quotient q = make_quotient(rows);

    const Matrix id_d = Matrix::identity(d, f);
    std::vector<Matrix> right_q;
    for (std::size_t aa = 0; aa < n; ++aa)
        right_q.push_back(q.lift_map(Matrix::kron(id_d, a->right_mult(aa)), q));

    // rho(n (x) a) = n (x) x^1 (x) x^2 a on the ambient, then descend.
    Matrix rho_amb(d * n * n, d * n, f);
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t aa = 0; aa < n; ++aa)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t dd = 0; dd < n; ++dd) {
                    const Scalar& xc = x.coeffs()(c * n + dd, 0);
                    if (xc.is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!a->sc(dd, aa, k).is_zero())
                            rho_amb((s * n + c) * n + k, s * n + aa) += xc * a->sc(dd, aa, k);
                }
    const Matrix projected = Matrix::kron(q.proj, Matrix::identity(n, f)) * rho_amb;
    if (!(projected * q.relation_basis.transpose()).is_zero())
        throw validation_error("induced coaction does not preserve the induction relations");
    Matrix rho_q = projected * q.sect;

    std::vector<Matrix> left_q = induced_left_action(a, right_q, rho_q);
    Coaction result(Bimodule(a, q.dim, std::move(left_q), std::move(right_q)), std::move(rho_q));
    if (!result.yd_ok())
        throw validation_error("induced comodule failed the axioms:\n" + result.axiom_report().str());
    return InducedComodule{std::move(q), std::move(result)};
}

Report verify_rmatrix(const Algebra& a, const Matrix& coeffs, bool include_derived) {
    Report rep;
    const std::size_t n = a.dim();
    if (coeffs.rows() != n * n * n || coeffs.cols() != 1) {
        rep.add("shape", false, "R-matrix coefficients must be a dim(A)^3 column");
        return rep;
    }
    rep.add("shape", true);
    const Field& f = a.field();

    struct Term {
        std::size_t p, q, r;
        Scalar v;
    };
    std::vector<Term> terms;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar& v = coeffs((p * n + q) * n + r, 0);
                if (!v.is_zero()) terms.push_back({p, q, r, v});
            }

    bool central = true;
    std::string cw;
    for (std::size_t t = 0; t < n && central; ++t) {
        Matrix lhs(n * n * n, 1, f), rhs(n * n * n, 1, f);
        for (const Term& term : terms) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!a.sc(t, term.q, k).is_zero())
                    lhs((term.p * n + k) * n + term.r, 0) += term.v * a.sc(t, term.q, k);
                if (!a.sc(term.r, t, k).is_zero())
                    rhs((term.p * n + term.q) * n + k, 0) += term.v * a.sc(term.r, t, k);
            }
        }
        if (!(lhs == rhs)) {
            central = false;
            cw = "R^1 (x) e" + std::to_string(t) + " R^2 (x) R^3 != R^1 (x) R^2 (x) R^3 e" + std::to_string(t);
        }
    }
    rep.add("centrality", central, cw);

    Matrix contracted12(n * n, 1, f), contracted31(n * n, 1, f), unit2(n * n, 1, f);
    for (const Term& term : terms)
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.sc(term.p, term.q, k).is_zero())
                contracted12(k * n + term.r, 0) += term.v * a.sc(term.p, term.q, k);
            if (!a.sc(term.r, term.p, k).is_zero())
                contracted31(term.q * n + k, 0) += term.v * a.sc(term.r, term.p, k);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) unit2(i * n + j, 0) = a.unit()[i] * a.unit()[j];
    rep.add("normalization-left", contracted12 == unit2, "R^1 R^2 (x) R^3 != 1 (x) 1");
    rep.add("normalization-right", contracted31 == unit2, "R^2 (x) R^3 R^1 != 1 (x) 1");

    if (!include_derived) return rep;

    // R^1 (x) R^2 (x) 1 (x) R^3 = r^1 R^1 (x) r^2 (x) r^3 R^2 (x) R^3.
    const std::size_t n4 = n * n * n * n;
    Matrix lhs4(n4, 1, f), rhs4(n4, 1, f);
    for (const Term& term : terms)
        for (std::size_t c = 0; c < n; ++c)
            if (!a.unit()[c].is_zero())
                lhs4(((term.p * n + term.q) * n + c) * n + term.r, 0) += term.v * a.unit()[c];
    for (const Term& outer : terms)  // r = (s,t,u)
        for (const Term& inner : terms) {
            const Scalar coeff = outer.v * inner.v;
            for (std::size_t k1 = 0; k1 < n; ++k1) {
                if (a.sc(outer.p, inner.p, k1).is_zero()) continue;
                const Scalar c1 = coeff * a.sc(outer.p, inner.p, k1);
                for (std::size_t k2 = 0; k2 < n; ++k2)
                    if (!a.sc(outer.r, inner.q, k2).is_zero())
                        rhs4(((k1 * n + outer.q) * n + k2) * n + inner.r, 0) +=
                            c1 * a.sc(outer.r, inner.q, k2);
            }
        }
    rep.add("doubling", lhs4 == rhs4, "two-copy expansion mismatch");

    bool cyclic = true;
    for (std::size_t p = 0; p < n && cyclic; ++p)
        for (std::size_t q = 0; q < n && cyclic; ++q)
            for (std::size_t r = 0; r < n && cyclic; ++r)
                cyclic = coeffs((p * n + q) * n + r, 0) == coeffs((r * n + p) * n + q, 0);
    rep.add("cyclic-invariance", cyclic, "coefficients change under rotation of the legs");
    return rep;
}

RMatrix::RMatrix(AlgebraPtr a, Matrix coeffs) : alg_(std::move(a)), coeffs_(std::move(coeffs)) {
    const Report rep = verify_rmatrix(*alg_, coeffs_, false);
    if (!rep.all_pass()) throw validation_error("not an R-matrix:\n" + rep.str());
}

RMatrix RMatrix::matrix_units(std::size_t n, const Field& f) {
    AlgebraPtr a = Algebra::matrix_algebra(n, f);
    const std::size_t d = n * n;
    Matrix coeffs(d * d * d, 1, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t p = i * n + j, q = l * n + i, r = j * n + l;
                coeffs((p * d + q) * d + r, 0) = Scalar::one(f);
            }
    return RMatrix(std::move(a), std::move(coeffs));
}

Coaction comodule_from_rmatrix(const Bimodule& v, const RMatrix& r) {
    if (!v.algebra()->same_presentation(*r.algebra()))
        throw error("comodule_from_rmatrix: bimodule and R-matrix live over different algebras");
    const Algebra& a = *v.algebra();
    const std::size_t m = v.dim(), n = a.dim();
    Matrix rho(m * n, m, a.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            bool used = false;
            Matrix sandwich;
            for (std::size_t rr = 0; rr < n; ++rr) {
                const Scalar& cf = r.coeffs()((p * n + q) * n + rr, 0);
                if (cf.is_zero()) continue;
                if (!used) {
                    sandwich = v.left(p) * v.right(q);
                    used = true;
                }
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t i = 0; i < m; ++i)
                        if (!sandwich(i, j).is_zero()) rho(i * n + rr, j) += cf * sandwich(i, j);
            }
        }
    Coaction out(v, std::move(rho));
    if (!out.yd_ok())
        throw validation_error("R-matrix coaction failed the axioms:\n" + out.axiom_report().str());
    const std::vector<Matrix> induced = induced_left_action(out.module(), out.rho());
    for (std::size_t i = 0; i < n; ++i)
        if (!(induced[i] == v.left(i)))
            throw validation_error("R-matrix coaction does not reproduce the original left action");
    return out;
}

YangBaxterOperator omega_from_rmatrix(const Bimodule& v, const RMatrix& r) {
    const Coaction c = comodule_from_rmatrix(v, r);
    YangBaxterOperator op = omega_from_yd(c);
    op.provenance = OmegaSource::rmatrix;
    return op;
}

}  // namespace sweedler
