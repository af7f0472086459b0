#include "sweedler/comodule.hpp"

namespace sweedler {

namespace {

std::string column_str(const Matrix& m, std::size_t j) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.rows(); ++i) out += (i ? ", " : "") + m(i, j).str();
    return out + ")";
}

// First column where a and b differ, rendered with both sides.
bool matrices_agree(const Matrix& a, const Matrix& b, std::string& witness, const std::string& label) {
    if (a == b) return true;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool diff = false;
        for (std::size_t i = 0; i < a.rows() && !diff; ++i) diff = a(i, j) != b(i, j);
        if (diff) {
            witness = label + " basis " + std::to_string(j) + ": lhs = " + column_str(a, j) +
                      ", rhs = " + column_str(b, j);
            return false;
        }
    }
    witness = label + ": shape mismatch";
    return false;
}

// A -> A (x) A, e_a -> 1 (x) e_a.
Matrix unit_insertion(const Algebra& alg) {
    const std::size_t n = alg.dim();
    Matrix ins(n * n, n, alg.field());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!alg.unit()[b].is_zero()) ins(b * n + a, a) = alg.unit()[b];
    return ins;
}

}  // namespace

Report verify_comodule(const Bimodule& module, const Matrix& rho, bool yd) {
    const Algebra& alg = *module.algebra();
    const std::size_t m = module.dim();
    const std::size_t n = alg.dim();
    if (rho.rows() != m * n || rho.cols() != m || !(rho.field() == alg.field()))
        throw error("coaction matrix must be (dim V * dim A) x dim V over the algebra's field");

    Report rep;
    std::string w;

    const Matrix counit_side = module.apply_right_map() * rho;
    const bool counit_ok = matrices_agree(counit_side, Matrix::identity(m, alg.field()), w, "counit");
    rep.add("counit", counit_ok, w);

    const Matrix id_n = Matrix::identity(n, alg.field());
    const Matrix id_m = Matrix::identity(m, alg.field());
    const Matrix lhs_coassoc = Matrix::kron(rho, id_n) * rho;
    const Matrix rhs_coassoc = Matrix::kron(id_m, unit_insertion(alg)) * rho;
    const bool coassoc_ok = matrices_agree(lhs_coassoc, rhs_coassoc, w, "coassociativity");
    rep.add("coassociativity", coassoc_ok, w);

    bool pass = true;
    std::string witness;
    for (std::size_t a = 0; a < n && pass; ++a) {
        const Matrix lhs = rho * module.right(a);
        const Matrix rhs = Matrix::kron(id_m, alg.right_mult(a)) * rho;
        pass = matrices_agree(lhs, rhs, witness, "right-colinearity at e" + std::to_string(a));
    }
    rep.add("right-colinearity", pass, witness);

    if (!yd) return rep;

    pass = true;
    witness.clear();
    for (std::size_t a = 0; a < n && pass; ++a) {
        const Matrix lhs = rho * module.left(a);
        const Matrix rhs = Matrix::kron(id_m, alg.left_mult(a)) * rho;
        pass = matrices_agree(lhs, rhs, witness, "left-colinearity at e" + std::to_string(a));
    }
    rep.add("left-colinearity", pass, witness);

    pass = true;
    witness.clear();
    for (std::size_t a = 0; a < n && pass; ++a) {
        const Matrix lhs = Matrix::kron(module.left(a), id_n) * rho;
        const Matrix rhs = Matrix::kron(module.right(a), id_n) * rho;
        pass = matrices_agree(lhs, rhs, witness, "balance at e" + std::to_string(a));
    }
    rep.add("balance", pass, witness);
    return rep;
}

Report verify_comodule(const Coaction& c, bool yd) { return verify_comodule(c.module(), c.rho(), yd); }

Coaction::Coaction(Bimodule module, Matrix rho) : module_(std::move(module)), rho_(std::move(rho)) {
    report_ = verify_comodule(module_, rho_, true);
    bool com = true;
    for (const char* name : {"counit", "coassociativity", "right-colinearity"}) {
        const CheckResult* r = report_.find(name);
        com = com && r && r->pass;
    }
    comodule_ok_ = com;
    yd_ok_ = com && report_.all_pass();
}

void Coaction::require_comodule(const std::string& op) const {
    if (!comodule_ok_)
        throw validation_error(op + " requires a valid comodule; axiom report:\n" + report_.str());
}

void Coaction::require_yd(const std::string& op) const {
    if (!yd_ok_)
        throw validation_error(op + " requires the Yetter-Drinfeld compatibilities; axiom report:\n" +
                               report_.str());
}

bool Coaction::data_equals(const Coaction& other) const {
    return module_.data_equals(other.module_) && rho_ == other.rho_;
}

Coaction Coaction::regular(AlgebraPtr a) {
    Bimodule m = Bimodule::regular(a);
    const std::size_t n = a->dim();
    Matrix rho(n * n, n, a->field());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            if (!a->unit()[i].is_zero()) rho(i * n + c, c) = a->unit()[i];
    return Coaction(std::move(m), std::move(rho));
}

Coaction Coaction::free(AlgebraPtr a, std::size_t n_dim) {
    const std::size_t n = a->dim();
    Bimodule m = Bimodule::free(a, n_dim);
    const std::size_t mv = n_dim * n;
    Matrix rho(mv * n, mv, a->field());
    for (std::size_t t = 0; t < n_dim; ++t)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!a->unit()[c].is_zero()) rho((t * n + c) * n + b, t * n + b) = a->unit()[c];
    return Coaction(std::move(m), std::move(rho));
}

Coaction Coaction::zero(AlgebraPtr a) {
    Bimodule m = Bimodule::regular(a);
    const std::size_t n = a->dim();
    return Coaction(std::move(m), Matrix(n * n, n, a->field()));
}

std::vector<Matrix> induced_left_action(const AlgebraPtr& alg, const std::vector<Matrix>& right,
                                        const Matrix& rho) {
    const std::size_t n = alg->dim();
    const std::size_t m = right.empty() ? 0 : right[0].rows();
    // v (x) a -> v * a, assembled from the given right actions.
    Matrix act_r(m, m * n, alg->field());
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (!right[b](i, j).is_zero()) act_r(i, j * n + b) = right[b](i, j);
    const Matrix id_m = Matrix::identity(m, alg->field());
    std::vector<Matrix> left;
    for (std::size_t a = 0; a < n; ++a)
        left.push_back(act_r * Matrix::kron(id_m, alg->left_mult(a)) * rho);
    return left;
}

std::vector<Matrix> induced_left_action(const Bimodule& module, const Matrix& rho) {
    return induced_left_action(module.algebra(), module.right_all(), rho);
}

Coaction yd_from_comodule(const Coaction& c) {
    c.require_comodule("yd_from_comodule");
    Bimodule with_induced(c.algebra(), c.dim(), induced_left_action(c.module(), c.rho()),
                          c.module().right_all());
    return Coaction(std::move(with_induced), c.rho());
}

Coaction comodule_from_yd(const Coaction& c) {
    c.require_yd("comodule_from_yd");
    return c;  // same carrier; only the point of view changes
}

Report verify_yd_consequences(const Coaction& c) {
    Report rep;
    const std::size_t m = c.dim();
    const std::size_t n = c.algebra()->dim();
    const Field& f = c.algebra()->field();
    // v -> v_(1) v_(0): swap the coaction legs and act on the left.
    const Matrix swap = Matrix::tensor_permutation({m, n}, {1, 0}, f);
    const Matrix absorb = c.module().apply_left_map() * swap * c.rho();
    std::string w;
    bool pass = absorb == Matrix::identity(m, f);
    if (!pass) w = "v_(1) v_(0) != v on some basis vector";
    rep.add("swap-absorb", pass, w);
    return rep;
}

}  // namespace sweedler
