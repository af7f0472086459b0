#include "sweedler/tensor.hpp"

namespace sweedler {

bool Quotient::kills(const Matrix& column) const { return (proj * column).is_zero(); }

Matrix Quotient::lift_map(const Matrix& ambient_map, const Quotient& target) const {
    if (ambient_map.cols() != ambient_dim || ambient_map.rows() != target.ambient_dim)
        throw error("lift_map shape mismatch");
    const Matrix projected = target.proj * ambient_map;
    // Well-definedness: the map must send this quotient's relations into the
    // target's relation subspace.
    if (!(projected * relation_basis.transpose()).is_zero())
        throw validation_error("ambient map does not descend to the quotient");
    return projected * sect;
}

Quotient make_quotient(const RowSpace& rows) {
    Quotient q;
    q.ambient_dim = rows.dim();
    const Field f = rows.field();
    const std::vector<std::size_t>& pivots = rows.pivots();
    std::vector<bool> is_pivot(q.ambient_dim, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t d = 0; d < q.ambient_dim; ++d)
        if (!is_pivot[d]) q.kept.push_back(d);
    q.dim = q.kept.size();
    q.relation_basis = rows.basis_matrix();

    q.proj = Matrix(q.dim, q.ambient_dim, f);
    q.sect = Matrix(q.ambient_dim, q.dim, f);
    for (std::size_t t = 0; t < q.dim; ++t) {
        q.proj(t, q.kept[t]) = Scalar::one(f);
        q.sect(q.kept[t], t) = Scalar::one(f);
    }
    // Reducing a pivot coordinate against the rref basis moves it onto the
    // kept coordinates with the negated row entries.
    for (std::size_t s = 0; s < pivots.size(); ++s)
        for (std::size_t t = 0; t < q.dim; ++t) {
            const Scalar& entry = q.relation_basis(s, q.kept[t]);
            if (!entry.is_zero()) q.proj(t, pivots[s]) = -entry;
        }
    return q;
}

namespace {

// Relations v e_a (x) w - v (x) e_a w for all basis triples, fed sparsely.
RowSpace middle_relations(const Bimodule& v, const Bimodule& w) {
    const std::size_t mv = v.dim(), mw = w.dim();
    const Algebra& alg = *v.algebra();
    RowSpace rows(mv * mw, alg.field());
    std::vector<Scalar> rel(mv * mw, Scalar::zero(alg.field()));
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        const Matrix& ra = v.right(a);
        const Matrix& la = w.left(a);
        for (std::size_t j = 0; j < mv; ++j)
            for (std::size_t l = 0; l < mw; ++l) {
                std::fill(rel.begin(), rel.end(), Scalar::zero(alg.field()));
                bool nonzero = false;
                for (std::size_t i = 0; i < mv; ++i)
                    if (!ra(i, j).is_zero()) {
                        rel[i * mw + l] += ra(i, j);
                        nonzero = true;
                    }
                for (std::size_t i = 0; i < mw; ++i)
                    if (!la(i, l).is_zero()) {
                        rel[j * mw + i] -= la(i, l);
                        nonzero = true;
                    }
                if (nonzero) rows.insert(rel);
            }
    }
    return rows;
}

}  // namespace

BimoduleTensor tensor_bimodules(const Bimodule& v, const Bimodule& w) {
    if (!v.algebra()->same_presentation(*w.algebra()))
        throw error("tensor over A requires both factors over the same algebra");
    const Algebra& alg = *v.algebra();
    Quotient q = make_quotient(middle_relations(v, w));

    const Matrix id_v = Matrix::identity(v.dim(), alg.field());
    const Matrix id_w = Matrix::identity(w.dim(), alg.field());
    std::vector<Matrix> left, right;
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        left.push_back(q.lift_map(Matrix::kron(v.left(a), id_w), q));
        right.push_back(q.lift_map(Matrix::kron(id_v, w.right(a)), q));
    }
    Bimodule module(v.algebra(), q.dim, std::move(left), std::move(right));
    return BimoduleTensor{std::move(q), std::move(module)};
}

Matrix ambient_coaction(const Coaction& v, const Coaction& w) {
    const Algebra& alg = *v.algebra();
    const std::size_t n = alg.dim();
    const std::size_t mv = v.dim(), mw = w.dim();
    Matrix amb(mv * mw * n, mv * mw, alg.field());
    for (std::size_t j = 0; j < mv; ++j)
        for (std::size_t l = 0; l < mw; ++l)
            for (std::size_t i = 0; i < mv; ++i)
                for (std::size_t a = 0; a < n; ++a) {
                    const Scalar& pv = v.rho()(i * n + a, j);
                    if (pv.is_zero()) continue;
                    for (std::size_t i2 = 0; i2 < mw; ++i2)
                        for (std::size_t b = 0; b < n; ++b) {
                            const Scalar& pw = w.rho()(i2 * n + b, l);
                            if (pw.is_zero()) continue;
                            const Scalar coeff = pv * pw;
                            for (std::size_t k = 0; k < n; ++k) {
                                const Scalar& c = alg.sc(a, b, k);
                                if (!c.is_zero()) amb((i * mw + i2) * n + k, j * mw + l) += coeff * c;
                            }
                        }
                }
    return amb;
}

TensorOverA tensor_over_A(const Coaction& v, const Coaction& w) {
    v.require_yd("tensor_over_A (left factor)");
    w.require_yd("tensor_over_A (right factor)");
    BimoduleTensor bt = tensor_bimodules(v.module(), w.module());
    const Algebra& alg = *v.algebra();
    const std::size_t n = alg.dim();

    const Matrix amb = ambient_coaction(v, w);
    // rho descends iff the ambient coaction maps relations into
    // relations (x) A.
    const Matrix projected = Matrix::kron(bt.q.proj, Matrix::identity(n, alg.field())) * amb;
    if (!(projected * bt.q.relation_basis.transpose()).is_zero())
        throw validation_error("induced coaction does not preserve the tensor relations");
    Matrix rho_q = projected * bt.q.sect;
    Coaction result(std::move(bt.module), std::move(rho_q));
    return TensorOverA{std::move(bt.q), std::move(result)};
}

Quotient tensor_triple(const Bimodule& u, const Bimodule& v, const Bimodule& w) {
    const Algebra& alg = *u.algebra();
    const std::size_t mu = u.dim(), mv = v.dim(), mw = w.dim();
    RowSpace rows(mu * mv * mw, alg.field());
    std::vector<Scalar> rel(mu * mv * mw, Scalar::zero(alg.field()));
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        const Matrix& ru = u.right(a);
        const Matrix& lv = v.left(a);
        const Matrix& rv = v.right(a);
        const Matrix& lw = w.left(a);
        for (std::size_t j = 0; j < mu; ++j)
            for (std::size_t l = 0; l < mv; ++l)
                for (std::size_t s = 0; s < mw; ++s) {
                    // u a (x) v (x) w - u (x) a v (x) w
                    std::fill(rel.begin(), rel.end(), Scalar::zero(alg.field()));
                    bool nonzero = false;
                    for (std::size_t i = 0; i < mu; ++i)
                        if (!ru(i, j).is_zero()) {
                            rel[(i * mv + l) * mw + s] += ru(i, j);
                            nonzero = true;
                        }
                    for (std::size_t i = 0; i < mv; ++i)
                        if (!lv(i, l).is_zero()) {
                            rel[(j * mv + i) * mw + s] -= lv(i, l);
                            nonzero = true;
                        }
                    if (nonzero) rows.insert(rel);
                    // u (x) v a (x) w - u (x) v (x) a w
                    std::fill(rel.begin(), rel.end(), Scalar::zero(alg.field()));
                    nonzero = false;
                    for (std::size_t i = 0; i < mv; ++i)
                        if (!rv(i, l).is_zero()) {
                            rel[(j * mv + i) * mw + s] += rv(i, l);
                            nonzero = true;
                        }
                    for (std::size_t i = 0; i < mw; ++i)
                        if (!lw(i, s).is_zero()) {
                            rel[(j * mv + l) * mw + i] -= lw(i, s);
                            nonzero = true;
                        }
                    if (nonzero) rows.insert(rel);
                }
    }
    return make_quotient(rows);
}

}  // namespace sweedler
