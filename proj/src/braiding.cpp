#include "sweedler/braiding.hpp"

#include <array>
#include <map>

namespace sweedler {

namespace {

// M (x) V -> V (x) M, m (x) v -> v_(0) (x) m v_(1), for any carrier of the
// coaction data (the comodule axioms are not consulted here).
Matrix half_braid_matrix(const Bimodule& m, const Bimodule& vmod, const Matrix& vrho) {
    const std::size_t mm = m.dim(), mv = vmod.dim(), n = m.algebra()->dim();
    Matrix amb(mv * mm, mm * mv, m.algebra()->field());
    for (std::size_t l = 0; l < mv; ++l)
        for (std::size_t i = 0; i < mv; ++i)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& p = vrho(i * n + b, l);
                if (p.is_zero()) continue;
                const Matrix& rb = m.right(b);
                for (std::size_t j = 0; j < mm; ++j)
                    for (std::size_t j2 = 0; j2 < mm; ++j2) {
                        const Scalar& r = rb(j2, j);
                        if (!r.is_zero()) amb(i * mm + j2, j * mv + l) += p * r;
                    }
            }
    return amb;
}

// V (x) M -> M (x) V, v (x) m -> v_(1) m (x) v_(0).
Matrix half_braid_inv_matrix(const Bimodule& vmod, const Matrix& vrho, const Bimodule& m) {
    const std::size_t mm = m.dim(), mv = vmod.dim(), n = m.algebra()->dim();
    Matrix amb(mm * mv, mv * mm, m.algebra()->field());
    for (std::size_t l = 0; l < mv; ++l)
        for (std::size_t i = 0; i < mv; ++i)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& p = vrho(i * n + b, l);
                if (p.is_zero()) continue;
                const Matrix& lb = m.left(b);
                for (std::size_t j = 0; j < mm; ++j)
                    for (std::size_t j2 = 0; j2 < mm; ++j2) {
                        const Scalar& s = lb(j2, j);
                        if (!s.is_zero()) amb(j2 * mv + i, l * mm + j) += p * s;
                    }
            }
    return amb;
}

// The ambient U (x) V with A acting through the outer legs only.
Bimodule ambient_pair_bimodule(const Bimodule& u, const Bimodule& v) {
    const Algebra& alg = *u.algebra();
    const Matrix id_u = Matrix::identity(u.dim(), alg.field());
    const Matrix id_v = Matrix::identity(v.dim(), alg.field());
    std::vector<Matrix> l, r;
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        l.push_back(Matrix::kron(u.left(a), id_v));
        r.push_back(Matrix::kron(id_u, v.right(a)));
    }
    return Bimodule(u.algebra(), u.dim() * v.dim(), std::move(l), std::move(r), false);
}

}  // namespace

Matrix ambient_half_braid(const Bimodule& m, const Coaction& v) {
    return half_braid_matrix(m, v.module(), v.rho());
}

Matrix ambient_half_braid_inv(const Coaction& v, const Bimodule& m) {
    return half_braid_inv_matrix(v.module(), v.rho(), m);
}

HalfBraiding braid_against(const Bimodule& m, const Coaction& v) {
    v.require_yd("braid_against");
    HalfBraiding hb{tensor_bimodules(m, v.module()), tensor_bimodules(v.module(), m), Matrix(), Matrix()};
    hb.forward = hb.mv.q.lift_map(ambient_half_braid(m, v), hb.vm.q);
    hb.backward = hb.vm.q.lift_map(ambient_half_braid_inv(v, m), hb.mv.q);
    if (!((hb.backward * hb.forward).is_identity() && (hb.forward * hb.backward).is_identity()))
        throw validation_error("half-braiding is not invertible; the coaction is not a valid center object");
    return hb;
}

Braiding braiding(const Coaction& v, const Coaction& w) {
    v.require_yd("braiding (left factor)");
    w.require_yd("braiding (right factor)");
    Braiding b{tensor_over_A(v, w), tensor_over_A(w, v), Matrix(), Matrix()};
    b.forward = b.vw.q.lift_map(ambient_half_braid(v.module(), w), b.wv.q);
    b.backward = b.wv.q.lift_map(ambient_half_braid_inv(w, v.module()), b.vw.q);
    if (!((b.backward * b.forward).is_identity() && (b.forward * b.backward).is_identity()))
        throw validation_error("braiding is not two-sided invertible");
    return b;
}

namespace {

struct TripleCache {
    const std::vector<Coaction>& objs;
    std::map<std::array<std::size_t, 3>, Quotient> triples;

    const Quotient& triple(std::size_t a, std::size_t b, std::size_t c) {
        const std::array<std::size_t, 3> key{a, b, c};
        auto it = triples.find(key);
        if (it == triples.end())
            it = triples.emplace(key, tensor_triple(objs[a].module(), objs[b].module(), objs[c].module())).first;
        return it->second;
    }
};

void hexagons_for_triple(TripleCache& cache, std::size_t ui, std::size_t vi, std::size_t wi, Report& rep,
                         const std::string& label) {
    const Coaction& u = cache.objs[ui];
    const Coaction& v = cache.objs[vi];
    const Coaction& w = cache.objs[wi];
    const Algebra& alg = *u.algebra();
    const Field& f = alg.field();
    const std::size_t mu = u.dim(), mv = v.dim(), mw = w.dim();

    const Quotient& t_uvw = cache.triple(ui, vi, wi);
    const Quotient& t_vuw = cache.triple(vi, ui, wi);
    const Quotient& t_vwu = cache.triple(vi, wi, ui);
    const Quotient& t_uwv = cache.triple(ui, wi, vi);
    const Quotient& t_wuv = cache.triple(wi, ui, vi);

    const Matrix id_u = Matrix::identity(mu, f);
    const Matrix id_v = Matrix::identity(mv, f);
    const Matrix id_w = Matrix::identity(mw, f);

    try {
        // c_{U,V(x)W} = (V (x) c_{U,W}) o (c_{U,V} (x) W)
        const Matrix step1 = t_uvw.lift_map(Matrix::kron(ambient_half_braid(u.module(), v), id_w), t_vuw);
        const Matrix step2 = t_vuw.lift_map(Matrix::kron(id_v, ambient_half_braid(u.module(), w)), t_vwu);
        const Bimodule vw_amb = ambient_pair_bimodule(v.module(), w.module());
        const Matrix whole =
            t_uvw.lift_map(half_braid_matrix(u.module(), vw_amb, ambient_coaction(v, w)), t_vwu);
        rep.add("hexagon-right" + label, whole == step2 * step1,
                "braiding against V (x) W is not the two-step composite");
    } catch (const validation_error& e) {
        rep.add("hexagon-right" + label, false, e.what());
    }

    try {
        // c_{U(x)V,W} = (c_{U,W} (x) V) o (U (x) c_{V,W})
        const Matrix step1 = t_uvw.lift_map(Matrix::kron(id_u, ambient_half_braid(v.module(), w)), t_uwv);
        const Matrix step2 = t_uwv.lift_map(Matrix::kron(ambient_half_braid(u.module(), w), id_v), t_wuv);
        const Bimodule uv_amb = ambient_pair_bimodule(u.module(), v.module());
        const Matrix whole = t_uvw.lift_map(half_braid_matrix(uv_amb, w.module(), w.rho()), t_wuv);
        rep.add("hexagon-left" + label, whole == step2 * step1,
                "braiding of U (x) V against W is not the two-step composite");
    } catch (const validation_error& e) {
        rep.add("hexagon-left" + label, false, e.what());
    }
}

}  // namespace

Report hexagon_check(const Coaction& u, const Coaction& v, const Coaction& w) {
    std::vector<Coaction> objs{u, v, w};
    TripleCache cache{objs, {}};
    Report rep;
    hexagons_for_triple(cache, 0, 1, 2, rep, "");
    return rep;
}

Report hexagon_suite(const std::vector<Coaction>& objects) {
    TripleCache cache{objects, {}};
    Report rep;
    for (std::size_t a = 0; a < objects.size(); ++a)
        for (std::size_t b = 0; b < objects.size(); ++b)
            for (std::size_t c = 0; c < objects.size(); ++c)
                hexagons_for_triple(cache, a, b, c, rep,
                                    "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
    return rep;
}

Report naturality_check(const Bimodule& m, const Bimodule& n, const Matrix& f, const Coaction& v) {
    Report rep;
    try {
        const BimoduleTensor mv = tensor_bimodules(m, v.module());
        const BimoduleTensor nv = tensor_bimodules(n, v.module());
        const BimoduleTensor vm = tensor_bimodules(v.module(), m);
        const BimoduleTensor vn = tensor_bimodules(v.module(), n);
        const Matrix id_v = Matrix::identity(v.dim(), v.algebra()->field());
        const Matrix f_tensor_v = mv.q.lift_map(Matrix::kron(f, id_v), nv.q);
        const Matrix v_tensor_f = vm.q.lift_map(Matrix::kron(id_v, f), vn.q);
        const Matrix c_m = mv.q.lift_map(ambient_half_braid(m, v), vm.q);
        const Matrix c_n = nv.q.lift_map(ambient_half_braid(n, v), vn.q);
        rep.add("naturality", c_n * f_tensor_v == v_tensor_f * c_m,
                "square c o (f (x) V) = (V (x) f) o c does not commute");
    } catch (const validation_error& e) {
        rep.add("naturality", false, e.what());
    }
    return rep;
}

Report naturality_suite(const Coaction& v) {
    const AlgebraPtr alg = v.algebra();
    const std::size_t n = alg->dim();
    const Field& f = alg->field();
    const Bimodule free2 = Bimodule::free_two_sided(alg);
    const Bimodule reg = Bimodule::regular(alg);
    Report rep;
    for (std::size_t c = 0; c < n; ++c) {
        // evaluation map A (x) A -> A, a (x) b -> a e_c b
        Matrix eval(n, n * n, f);
        for (std::size_t a = 0; a < n; ++a) {
            const Matrix ac = alg->basis_product(a, c);
            for (std::size_t b = 0; b < n; ++b) {
                const Matrix img = alg->product(ac, Matrix::unit_column(n, b, f));
                for (std::size_t k = 0; k < n; ++k) eval(k, a * n + b) = img(k, 0);
            }
        }
        rep.merge(naturality_check(free2, reg, eval, v), "eval-e" + std::to_string(c));
    }
    const Matrix doubled = Scalar::integer(f, 2) * Matrix::identity(n, f);
    rep.merge(naturality_check(reg, reg, doubled, v), "scalar-multiple");
    return rep;
}

Report unit_constraint_check(const Coaction& v) {
    Report rep;
    const AlgebraPtr alg = v.algebra();
    const Field& f = alg->field();
    const std::size_t n = alg->dim();
    const std::size_t mv = v.dim();
    const Coaction a_reg = Coaction::regular(alg);

    const TensorOverA av = tensor_over_A(a_reg, v);
    const TensorOverA va = tensor_over_A(v, a_reg);

    rep.add("left-unitor-dim", av.q.dim == mv,
            "dim A (x)_A V = " + std::to_string(av.q.dim) + ", expected " + std::to_string(mv));
    rep.add("right-unitor-dim", va.q.dim == mv,
            "dim V (x)_A A = " + std::to_string(va.q.dim) + ", expected " + std::to_string(mv));
    if (!rep.all_pass()) return rep;

    // The unitors a (x) v -> a v and v (x) a -> v a on the quotient bases.
    const Matrix left_unitor = v.module().apply_left_map() * av.q.sect;
    const Matrix right_unitor = v.module().apply_right_map() * va.q.sect;
    bool l_ok = (v.module().apply_left_map() * av.q.relation_basis.transpose()).is_zero();
    bool r_ok = (v.module().apply_right_map() * va.q.relation_basis.transpose()).is_zero();
    rep.add("left-unitor-welldefined", l_ok);
    rep.add("right-unitor-welldefined", r_ok);

    Matrix left_inv, right_inv;
    try {
        left_inv = left_unitor.inverse();
        rep.add("left-unitor-bijective", true);
    } catch (const singular_error& e) {
        rep.add("left-unitor-bijective", false, e.what());
        return rep;
    }
    try {
        right_inv = right_unitor.inverse();
        rep.add("right-unitor-bijective", true);
    } catch (const singular_error& e) {
        rep.add("right-unitor-bijective", false, e.what());
        return rep;
    }

    const Matrix id_n = Matrix::identity(n, f);
    rep.add("left-unitor-colinear",
            v.rho() * left_unitor == Matrix::kron(left_unitor, id_n) * av.result.rho());
    rep.add("right-unitor-colinear",
            v.rho() * right_unitor == Matrix::kron(right_unitor, id_n) * va.result.rho());

    // c_{A,V} must be the canonical identification A (x)_A V = V = V (x)_A A.
    const HalfBraiding hb = braid_against(Bimodule::regular(alg), v);
    rep.add("braid-matches-canonical", hb.forward == right_inv * left_unitor,
            "c_{A,V} differs from the canonical isomorphism");
    return rep;
}

}  // namespace sweedler
