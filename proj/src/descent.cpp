#include "sweedler/descent.hpp"

namespace sweedler {

Report verify_descent(const Bimodule& module, const Matrix& g) {
    const Algebra& alg = *module.algebra();
    const std::size_t m = module.dim();
    const std::size_t n = alg.dim();
    if (g.rows() != m * n || g.cols() != n * m || !(g.field() == alg.field()))
        throw error("descent map must be (dim V * dim A) x (dim A * dim V) over the algebra's field");

    Report rep;

    // A(2) acts on A (x) V by (b (x) c).(x (x) v) = bx (x) cv and on V (x) A by
    // bv (x) cx; symmetrically with right multiplications on the right.
    bool left = true, right = true;
    std::string lw, rw;
    for (std::size_t b = 0; b < n && (left || right); ++b)
        for (std::size_t c = 0; c < n && (left || right); ++c) {
            if (left && !(g * Matrix::kron(alg.left_mult(b), module.left(c)) ==
                          Matrix::kron(module.left(b), alg.left_mult(c)) * g)) {
                left = false;
                lw = "left action of (e" + std::to_string(b) + " (x) e" + std::to_string(c) + ")";
            }
            if (right && !(g * Matrix::kron(alg.right_mult(b), module.right(c)) ==
                           Matrix::kron(module.right(b), alg.right_mult(c)) * g)) {
                right = false;
                rw = "right action of (e" + std::to_string(b) + " (x) e" + std::to_string(c) + ")";
            }
        }
    rep.add("bimodule-linearity-left", left, lw);
    rep.add("bimodule-linearity-right", right, rw);

    const LiftedG lifted = lift_g(module, g);
    bool cocycle = lifted.g3 * lifted.g1 == lifted.g2;
    std::string cw;
    if (!cocycle) {
        const Matrix diff = lifted.g3 * lifted.g1 - lifted.g2;
        for (std::size_t j = 0; j < diff.cols() && cw.empty(); ++j)
            for (std::size_t i = 0; i < diff.rows() && cw.empty(); ++i)
                if (!diff(i, j).is_zero())
                    cw = "g3 o g1 and g2 differ at row " + std::to_string(i) + ", column " + std::to_string(j) +
                         " by " + diff(i, j).str();
    }
    rep.add("cocycle", cocycle, cw);

    const Matrix back = module.apply_right_map() * g * module.insert_unit_left();
    bool counit = back == Matrix::identity(m, alg.field());
    std::string ccw;
    if (!counit)
        for (std::size_t j = 0; j < m && ccw.empty(); ++j)
            for (std::size_t i = 0; i < m && ccw.empty(); ++i) {
                const Scalar expect =
                    i == j ? Scalar::one(alg.field()) : Scalar::zero(alg.field());
                if (back(i, j) != expect)
                    ccw = "psi(g(1 (x) v" + std::to_string(j) + ")) has coordinate " + back(i, j).str() +
                          " at position " + std::to_string(i);
            }
    rep.add("counit", counit, ccw);
    return rep;
}

DescentDatum::DescentDatum(Bimodule module, Matrix g) : module_(std::move(module)), g_(std::move(g)) {
    report_ = verify_descent(module_, g_);
    ok_ = report_.all_pass();
}

void DescentDatum::require_valid(const std::string& op) const {
    if (!ok_) throw validation_error(op + " requires a valid descent datum; report:\n" + report_.str());
}

bool DescentDatum::data_equals(const DescentDatum& other) const {
    return module_.data_equals(other.module_) && g_ == other.g_;
}

DescentDatum DescentDatum::free(AlgebraPtr a, std::size_t n_dim) {
    const std::size_t n = a->dim();
    Bimodule m = Bimodule::free(a, n_dim);
    const std::size_t mv = n_dim * n;
    Matrix g(mv * n, n * mv, a->field());
    for (std::size_t aa = 0; aa < n; ++aa)
        for (std::size_t t = 0; t < n_dim; ++t)
            for (std::size_t b = 0; b < n; ++b)
                g((t * n + aa) * n + b, aa * mv + (t * n + b)) = Scalar::one(a->field());
    return DescentDatum(std::move(m), std::move(g));
}

LiftedG lift_g(const Bimodule& module, const Matrix& g) {
    const std::size_t m = module.dim();
    const std::size_t n = module.algebra()->dim();
    const Field& f = module.algebra()->field();
    const Matrix id_n = Matrix::identity(n, f);
    LiftedG out{Matrix::kron(id_n, g), Matrix(m * n * n, n * n * m, f), Matrix::kron(g, id_n)};
    // g2(a (x) b (x) v) = v_i (x) b (x) a_i: the b leg rides along unchanged.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t c = 0; c < n; ++c) {
                    const Scalar& s = g(i * n + c, a * m + j);
                    if (s.is_zero()) continue;
                    for (std::size_t b = 0; b < n; ++b)
                        out.g2((i * n + b) * n + c, (a * n + b) * m + j) = s;
                }
    return out;
}

DescentDatum descent_from_yd(const Coaction& c) {
    c.require_yd("descent_from_yd");
    const std::size_t n = c.algebra()->dim();
    const Matrix id_n = Matrix::identity(n, c.algebra()->field());
    // A (x) V -> A (x) V (x) A -> V (x) A: coact on v, then push a into the
    // left action.
    const Matrix g =
        Matrix::kron(c.module().apply_left_map(), id_n) * Matrix::kron(id_n, c.rho());
    return DescentDatum(c.module(), g);
}

Coaction yd_from_descent(const DescentDatum& d) {
    d.require_valid("yd_from_descent");
    return Coaction(d.module(), d.g() * d.module().insert_unit_left());
}

Matrix g_inverse(const DescentDatum& d) {
    const Bimodule& module = d.module();
    const std::size_t m = module.dim();
    const std::size_t n = module.algebra()->dim();
    const Field& f = module.algebra()->field();

    // The induced coaction must absorb to the identity, otherwise g is singular.
    const Matrix rho = d.g() * module.insert_unit_left();
    if (!(module.apply_right_map() * rho == Matrix::identity(m, f))) {
        std::string witness = "counit fails for the induced coaction";
        const std::vector<Matrix> ker = d.g().kernel_basis();
        if (!ker.empty()) witness += "; g kernel vector " + ker.front().transpose().str();
        throw singular_error("g has no inverse: " + witness);
    }

    const Matrix tau = Matrix::tensor_permutation({m, n}, {1, 0}, f);  // V (x) A -> A (x) V
    const Matrix candidate = tau * d.g() * tau;
    if (!((candidate * d.g()).is_identity() && (d.g() * candidate).is_identity()))
        throw singular_error("tau o g o tau is not a two-sided inverse of g");
    return candidate;
}

Matrix descent_coinvariants(const Coaction& c) {
    const Matrix defect = c.rho() - c.module().insert_unit_right();
    const std::vector<Matrix> ker = defect.kernel_basis();
    Matrix basis(c.dim(), ker.size(), c.algebra()->field());
    for (std::size_t t = 0; t < ker.size(); ++t)
        for (std::size_t i = 0; i < c.dim(); ++i) basis(i, t) = ker[t](i, 0);
    return basis;
}

Matrix unit_eta(AlgebraPtr a, std::size_t n_dim) {
    const Coaction fn = Coaction::free(a, n_dim);
    const Matrix basis = descent_coinvariants(fn);
    const std::size_t n = a->dim();
    // eta(n_t) = n_t (x) 1 as an ambient column of N (x) A.
    Matrix eta_ambient(fn.dim(), n_dim, a->field());
    for (std::size_t t = 0; t < n_dim; ++t)
        for (std::size_t c = 0; c < n; ++c)
            if (!a->unit()[c].is_zero()) eta_ambient(t * n + c, t) = a->unit()[c];
    const std::optional<Matrix> coords = basis.solve(eta_ambient);
    if (!coords) throw validation_error("unit_eta: image is not contained in the coinvariants");
    return *coords;
}

Matrix counit_eps(const Coaction& c) {
    const Matrix basis = descent_coinvariants(c);
    const std::size_t n = c.algebra()->dim();
    const std::size_t k = basis.cols();
    Matrix eps(c.dim(), k * n, c.algebra()->field());
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t aa = 0; aa < n; ++aa) {
            const Matrix img = c.module().right(aa) * basis.col(t);
            for (std::size_t i = 0; i < c.dim(); ++i) eps(i, t * n + aa) = img(i, 0);
        }
    return eps;
}

}  // namespace sweedler
