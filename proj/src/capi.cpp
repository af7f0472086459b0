#include "sweedler.h"

#include <cstdlib>
#include <cstring>

#include "sweedler/braiding.hpp"
#include "sweedler/descent.hpp"
#include "sweedler/json_io.hpp"
#include "sweedler/suite.hpp"
#include "sweedler/ybe.hpp"

using namespace sweedler;

struct swd_algebra {
    AlgebraPtr alg;
};
struct swd_comodule {
    Coaction c;
};
struct swd_descent {
    DescentDatum d;
};
struct swd_operator {
    YangBaxterOperator op;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating exceptions into status codes and last-error.
template <typename Fn>
swd_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return SWD_INVALID_INPUT;
    } catch (const field_mismatch& e) {
        g_last_error = e.what();
        return SWD_INVALID_INPUT;
    } catch (const validation_error& e) {
        g_last_error = e.what();
        return SWD_VERIFY_FAILED;
    } catch (const singular_error& e) {
        g_last_error = e.what();
        return SWD_VERIFY_FAILED;
    } catch (const error& e) {
        g_last_error = e.what();
        return SWD_INVALID_INPUT;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return SWD_INVALID_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SWD_INTERNAL;
    }
}

swd_status emit_report(const Report& rep, char** report_json) {
    if (report_json) *report_json = dup_string(report_to_json(rep).dump(2));
    return rep.all_pass() ? SWD_OK : SWD_VERIFY_FAILED;
}

}  // namespace

extern "C" {

const char* swd_version(void) { return "0.1.0"; }

const char* swd_last_error(void) { return g_last_error.c_str(); }

void swd_string_free(char* s) { std::free(s); }

swd_status swd_algebra_create(const char* spec, const char* field, swd_algebra** out) {
    if (!spec || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        const Field f = Field::parse(field ? field : "Q");
        *out = new swd_algebra{load_algebra(spec, f)};
        return SWD_OK;
    });
}

void swd_algebra_destroy(swd_algebra* a) { delete a; }

swd_status swd_algebra_to_json(const swd_algebra* a, char** json_out) {
    if (!a || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *json_out = dup_string(algebra_to_json(*a->alg).dump(2));
        return SWD_OK;
    });
}

swd_status swd_algebra_check(const swd_algebra* a, char** report_json) {
    if (!a) return SWD_INVALID_INPUT;
    return guarded([&] {
        std::vector<Scalar> sc;
        const std::size_t n = a->alg->dim();
        sc.reserve(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) sc.push_back(a->alg->sc(i, j, k));
        return emit_report(Algebra::validate(a->alg->field(), n, sc, a->alg->unit()), report_json);
    });
}

swd_status swd_comodule_create(const swd_algebra* a, const char* spec, swd_comodule** out) {
    if (!a || !spec || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *out = new swd_comodule{load_comodule(a->alg, spec)};
        return SWD_OK;
    });
}

void swd_comodule_destroy(swd_comodule* c) { delete c; }

swd_status swd_comodule_to_json(const swd_comodule* c, char** json_out) {
    if (!c || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *json_out = dup_string(comodule_to_json(c->c, true).dump(2));
        return SWD_OK;
    });
}

swd_status swd_comodule_verify(const swd_comodule* c, int check_yd, char** report_json) {
    if (!c) return SWD_INVALID_INPUT;
    return guarded([&] {
        Report rep = Bimodule::validate_actions(*c->c.algebra(), c->c.dim(), c->c.module().left_all(),
                                                c->c.module().right_all());
        rep.merge(verify_comodule(c->c, check_yd != 0));
        return emit_report(rep, report_json);
    });
}

swd_status swd_descent_create(const swd_algebra* a, const char* spec, swd_descent** out) {
    if (!a || !spec || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *out = new swd_descent{load_descent(a->alg, spec)};
        return SWD_OK;
    });
}

void swd_descent_destroy(swd_descent* d) { delete d; }

swd_status swd_descent_to_json(const swd_descent* d, char** json_out) {
    if (!d || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *json_out = dup_string(descent_to_json(d->d, true).dump(2));
        return SWD_OK;
    });
}

swd_status swd_descent_verify(const swd_descent* d, char** report_json) {
    if (!d) return SWD_INVALID_INPUT;
    return guarded([&] {
        Report rep = Bimodule::validate_actions(*d->d.algebra(), d->d.dim(), d->d.module().left_all(),
                                                d->d.module().right_all());
        rep.merge(d->d.axiom_report());
        return emit_report(rep, report_json);
    });
}

swd_status swd_tensor(const swd_comodule* v, const swd_comodule* w, char** json_out) {
    if (!v || !w || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        const TensorOverA t = tensor_over_A(v->c, w->c);
        json kept = json::array();
        for (std::size_t k : t.q.kept) kept.push_back(k);
        const json out{{"dim", t.q.dim},
                       {"kept", std::move(kept)},
                       {"proj", matrix_to_json(t.q.proj)},
                       {"sect", matrix_to_json(t.q.sect)},
                       {"rho", matrix_to_json(t.result.rho())}};
        *json_out = dup_string(out.dump(2));
        return SWD_OK;
    });
}

swd_status swd_braiding(const swd_comodule* v, const swd_comodule* w, char** json_out) {
    if (!v || !w || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        const Braiding b = braiding(v->c, w->c);
        const json out{{"forward", matrix_to_json(b.forward)},
                       {"backward", matrix_to_json(b.backward)},
                       {"dim_vw", b.vw.q.dim},
                       {"dim_wv", b.wv.q.dim}};
        *json_out = dup_string(out.dump(2));
        return SWD_OK;
    });
}

swd_status swd_braided_check(const swd_comodule* v, const swd_comodule* w, const char* what,
                             char** report_json) {
    if (!v || !what) return SWD_INVALID_INPUT;
    return guarded([&] {
        const std::string kind = what;
        if (kind == "hexagon") {
            if (!w) throw error("hexagon check needs two comodules");
            std::vector<Coaction> objs{Coaction::regular(v->c.algebra()), v->c, w->c};
            return emit_report(hexagon_suite(objs), report_json);
        }
        if (kind == "naturality") return emit_report(naturality_suite(v->c), report_json);
        if (kind == "unit") return emit_report(unit_constraint_check(v->c), report_json);
        throw parse_error("unknown braided check '" + kind + "'");
    });
}

swd_status swd_operator_build(const swd_comodule* c, const char* from, swd_operator** out) {
    if (!c || !from || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        const std::string kind = from;
        if (kind == "comodule") {
            *out = new swd_operator{omega_from_comodule(c->c)};
            return SWD_OK;
        }
        if (kind == "yd") {
            *out = new swd_operator{omega_from_yd(c->c)};
            return SWD_OK;
        }
        if (kind == "rmatrix") {
            const AlgebraPtr a = c->c.algebra();
            std::size_t n = 0;
            while (n * n < a->dim()) ++n;
            if (n * n != a->dim() || !a->same_presentation(*Algebra::matrix_algebra(n, a->field())))
                throw parse_error("rmatrix operators need a mat:<n> algebra");
            *out = new swd_operator{omega_from_rmatrix(c->c.module(), RMatrix::matrix_units(n, a->field()))};
            return SWD_OK;
        }
        throw parse_error("unknown operator recipe '" + kind + "'");
    });
}

swd_status swd_operator_build_grouplike(const swd_algebra* a, const char* x_spec, swd_operator** out) {
    if (!a || !x_spec || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *out = new swd_operator{omega_from_grouplike(load_grouplike(a->alg, x_spec))};
        return SWD_OK;
    });
}

swd_status swd_operator_from_json(const char* json_text, swd_operator** out) {
    if (!json_text || !out) return SWD_INVALID_INPUT;
    return guarded([&] {
        *out = new swd_operator{operator_from_json(json::parse(std::string(json_text), nullptr, true)).op};
        return SWD_OK;
    });
}

void swd_operator_destroy(swd_operator* op) { delete op; }

swd_status swd_operator_check(const swd_operator* op, const swd_comodule* source, int check_qybe,
                              int check_cube, char** report_json) {
    if (!op) return SWD_INVALID_INPUT;
    return guarded([&] {
        Report rep;
        if (check_qybe) rep.merge(qybe_check(op->op));
        if (check_cube) {
            if (!source) throw error("cube check needs the source comodule");
            rep.merge(omega_cubed_check(op->op, source->c));
        }
        return emit_report(rep, report_json);
    });
}

swd_status swd_operator_to_json(const swd_operator* op, const swd_comodule* source, char** json_out) {
    if (!op || !json_out) return SWD_INVALID_INPUT;
    return guarded([&] {
        const bool qybe = qybe_check(op->op).all_pass();
        const bool cube = op->op.provenance == OmegaSource::comodule && source
                              ? omega_cubed_check(op->op, source->c).all_pass()
                              : false;
        *json_out = dup_string(operator_to_json(op->op, qybe, cube).dump(2));
        return SWD_OK;
    });
}

swd_status swd_suite_run(const char* profile, char** report_json) {
    return guarded([&] {
        const std::string prof = profile ? profile : "quick";
        if (prof != "quick" && prof != "full") throw parse_error("profile must be quick or full");
        const std::vector<suite::CriterionResult> results = suite::run({prof == "full"});
        bool all = true;
        json criteria = json::array();
        for (const suite::CriterionResult& cr : results) {
            all = all && cr.pass();
            json entry{{"id", cr.id}, {"title", cr.title}, {"pass", cr.pass()}};
            entry["checks"] = report_to_json(cr.details)["checks"];
            criteria.push_back(std::move(entry));
        }
        if (report_json) *report_json = dup_string(json{{"pass", all}, {"criteria", criteria}}.dump(2));
        return all ? SWD_OK : SWD_VERIFY_FAILED;
    });
}

}  // extern "C"
