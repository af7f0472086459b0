#include "sweedler/end_transport.hpp"

namespace sweedler {

Matrix EndModule::action_of(const Matrix& endo) const {
    const std::size_t n = algebra->dim();
    if (endo.rows() != n || endo.cols() != n) throw error("endomorphism must be dim(A) x dim(A)");
    Matrix out(dim, dim, algebra->field());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const Scalar& c = endo(r, s);
            if (!c.is_zero()) out = out + c * action[r * n + s];
        }
    return out;
}

Report verify_end_module(const EndModule& em) {
    Report rep;
    const std::size_t n = em.algebra->dim();
    const Field& f = em.algebra->field();
    rep.add("identity-acts-trivially", em.action_of(Matrix::identity(n, f)).is_identity());
    bool comp = true;
    std::string witness;
    for (std::size_t r = 0; r < n && comp; ++r)
        for (std::size_t s = 0; s < n && comp; ++s)
            for (std::size_t t = 0; t < n && comp; ++t)
                for (std::size_t u = 0; u < n && comp; ++u) {
                    const Matrix prod = em.action[r * n + s] * em.action[t * n + u];
                    const Matrix expect =
                        s == t ? em.action[r * n + u] : Matrix(em.dim, em.dim, f);
                    if (!(prod == expect)) {
                        comp = false;
                        witness = "units (" + std::to_string(r) + std::to_string(s) + ")(" + std::to_string(t) +
                                  std::to_string(u) + ")";
                    }
                }
    rep.add("matrix-unit-composition", comp, witness);
    return rep;
}

Matrix end_action(const DualBasis& db, const Coaction& c, const Matrix& endo) {
    const Algebra& alg = *db.algebra();
    const std::size_t m = c.dim();
    // v -> v_(0) f(v_(1)): coact, apply f to the A leg, then act on the right.
    return c.module().apply_right_map() * Matrix::kron(Matrix::identity(m, alg.field()), endo) * c.rho();
}

EndModule end_module_from_comodule(const DualBasis& db, const Coaction& c) {
    c.require_comodule("end_module_from_comodule");
    const std::size_t n = db.algebra()->dim();
    EndModule em{db.algebra(), c.dim(), {}};
    em.action.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) em.action.push_back(end_action(db, c, db.phi_unit(s, r)));
    return em;
}

Coaction comodule_from_end_module(const DualBasis& db, const EndModule& em) {
    const Algebra& alg = *db.algebra();
    const std::size_t n = alg.dim();
    const std::size_t m = em.dim;
    std::vector<Matrix> left, right;
    for (std::size_t a = 0; a < n; ++a) {
        left.push_back(em.action_of(alg.left_mult(a)));
        right.push_back(em.action_of(alg.right_mult(a)));
    }
    // rho(v) = sum_i f_i . v (x) a_i with f_i = phi(a_i^* (x) 1).
    Matrix rho(m * n, m, alg.field());
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix fi_action = em.action_of(db.f_elem(i));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < m; ++r)
                if (!fi_action(r, j).is_zero()) rho(r * n + i, j) = fi_action(r, j);
    }
    return Coaction(Bimodule(db.algebra(), m, std::move(left), std::move(right)), std::move(rho));
}

namespace {

Matrix tensor_action_ambient(const DualBasis& db, const Coaction& v, const Coaction& w, const Matrix& endo,
                             bool primary_form) {
    const Algebra& alg = *db.algebra();
    const std::size_t n = alg.dim();
    const Field& f = alg.field();
    Matrix amb(v.dim() * w.dim(), v.dim() * w.dim(), f);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix on_v, on_w;
        if (primary_form) {
            // f_i . v (x) f(a_i -) . w
            on_v = end_action(db, v, db.f_elem(i));
            on_w = end_action(db, w, endo * alg.left_mult(i));
        } else {
            // f(- a_j) . v (x) f_j . w
            on_v = end_action(db, v, endo * alg.right_mult(i));
            on_w = end_action(db, w, db.f_elem(i));
        }
        amb = amb + Matrix::kron(on_v, on_w);
    }
    return amb;
}

}  // namespace

Matrix end_action_on_tensor(const DualBasis& db, const Coaction& v, const Coaction& w, const TensorOverA& t,
                            const Matrix& endo) {
    return t.q.lift_map(tensor_action_ambient(db, v, w, endo, true), t.q);
}

Matrix end_action_on_tensor_alt(const DualBasis& db, const Coaction& v, const Coaction& w,
                                const TensorOverA& t, const Matrix& endo) {
    return t.q.lift_map(tensor_action_ambient(db, v, w, endo, false), t.q);
}

Matrix end_braiding(const DualBasis& db, const Coaction& v, const Coaction& w, const TensorOverA& vw,
                    const TensorOverA& wv) {
    const Algebra& alg = *db.algebra();
    const std::size_t n = alg.dim();
    // c(v (x) w) = sum_i f_i . w (x) v a_i: braid the factors, acting by f_i
    // on W and by right multiplication with e_i on V.
    Matrix amb(w.dim() * v.dim(), v.dim() * w.dim(), alg.field());
    const Matrix flip = Matrix::tensor_permutation({v.dim(), w.dim()}, {1, 0}, alg.field());
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix fi_on_w = end_action(db, w, db.f_elem(i));
        amb = amb + Matrix::kron(fi_on_w, v.module().right(i)) * flip;
    }
    return vw.q.lift_map(amb, wv.q);
}

}  // namespace sweedler
