#include "spinorlab/spinorlab.h"

#include "json_util.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/index.hpp"
#include "spinorlab/solutions.hpp"
#include "spinorlab/spectra.hpp"
#include "spinorlab/verify.hpp"

#include <memory>
#include <new>
#include <sstream>
#include <string>

struct spl_text {
    std::string value;
};

struct spl_descriptor {
    spinorlab::ManifoldDescriptor value;
};

struct spl_solution {
    int m = 0;
    int k = 0;
    spinorlab::SolutionKind kind = spinorlab::SolutionKind::Monogenic;
    spinorlab::SolverLimits limits;
    spinorlab::SolutionSpace space;
    std::unique_ptr<spinorlab::RSDecomposer> decomposer;
};

namespace {

using namespace spinorlab;
using detail::json;

thread_local std::string last_error;

template <class F>
spl_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const UsageError& e) {
        last_error = e.what();
        return SPL_USAGE;
    } catch (const InputError& e) {
        last_error = e.what();
        return SPL_INPUT;
    } catch (const PreconditionError& e) {
        last_error = e.what();
        return SPL_PRECONDITION;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SPL_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SPL_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SPL_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw UsageError(std::string(what) + " must not be null");
}

spl_status emit(std::string s, spl_text** out) {
    *out = new spl_text{std::move(s)};
    return SPL_OK;
}

enum class Format { Json, Csv, Text };

Format parse_format(const char* f) {
    const std::string s = f ? f : "json";
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

std::string solution_report(spl_solution& sol, bool decompose, bool dump_basis, Format fmt) {
    const bool rs = sol.kind == SolutionKind::RaritaSchwinger;
    if (decompose && !rs) throw UsageError("--decompose applies to kind rs only");
    std::optional<DirectSumReport> ds;
    if (decompose) {
        if (!sol.decomposer) sol.decomposer = std::make_unique<RSDecomposer>(sol.m, sol.k, sol.limits);
        ds = verify_direct_sum(*sol.decomposer);
    }
    const std::size_t dim = sol.space.dim();

    if (fmt == Format::Csv) {
        std::ostringstream os;
        os << "m,k,kind,dim,formula_dim";
        if (ds) os << ",M1,M2,M3,direct_sum";
        os << '\n' << sol.m << ',' << sol.k << ',' << to_string(sol.kind) << ',' << dim << ',';
        if (!rs) os << monogenic_dimension_formula(sol.m, sol.k).get_str();
        if (ds) os << ',' << ds->dim_M1 << ',' << ds->dim_M2 << ',' << ds->dim_M3 << ',' << (ds->passed() ? "true" : "false");
        os << '\n';
        return os.str();
    }
    if (fmt == Format::Text) {
        std::ostringstream os;
        os << "m=" << sol.m << " k=" << sol.k << " kind=" << to_string(sol.kind) << " dim=" << dim << '\n';
        if (!rs) os << "closed form dim=" << monogenic_dimension_formula(sol.m, sol.k).get_str() << '\n';
        if (ds) {
            os << "M1=" << ds->dim_M1 << " M2=" << ds->dim_M2 << " M3=" << ds->dim_M3
               << " P_{k+1}(0)=" << ds->dim_P0_up << " P_{k-1}(0)=" << ds->dim_P0_down << '\n';
            os << "direct sum: " << (ds->passed() ? "verified" : "FAILED") << '\n';
            os << "D_T psi = iota(phi) with D phi = 0 on all solutions: " << (ds->phi_monogenic ? "yes" : "no") << '\n';
        }
        if (dump_basis) {
            std::size_t i = 0;
            if (rs)
                for (const auto& f : sol.space.rs_solutions) os << "basis " << i++ << ":\n" << f.to_string() << '\n';
            else
                for (const auto& f : sol.space.monogenics) os << "basis " << i++ << ": " << f.to_string() << '\n';
        }
        return os.str();
    }

    json doc = json::object();
    doc["m"] = sol.m;
    doc["k"] = sol.k;
    doc["kind"] = to_string(sol.kind);
    doc["dim"] = dim;
    if (!rs) doc["formula_dim"] = detail::bigint_to_json(monogenic_dimension_formula(sol.m, sol.k));
    if (ds) {
        json d = json::object();
        d["dim_P1"] = ds->dim_P1;
        d["dim_M1"] = ds->dim_M1;
        d["dim_M2"] = ds->dim_M2;
        d["dim_M3"] = ds->dim_M3;
        d["dim_P0_up"] = ds->dim_P0_up;
        d["dim_P0_down"] = ds->dim_P0_down;
        d["concatenated_rank"] = ds->concatenated_rank;
        d["dims_add_up"] = ds->dims_add_up;
        d["intersections_trivial"] = ds->intersections_trivial;
        d["m2_m3_in_P1"] = ds->m2_m3_in_P1;
        d["twistor_injective"] = ds->twistor_injective;
        d["xi_injective"] = ds->xi_injective;
        d["m1_L_zero"] = ds->m1_L_zero;
        d["m2_L_injective"] = ds->m2_L_injective;
        d["m2_DL_zero"] = ds->m2_DL_zero;
        d["m3_DL_injective"] = ds->m3_DL_injective;
        d["m3_DT_injective"] = ds->m3_DT_injective;
        d["m1_m2_full_twisted"] = ds->m1_m2_full_twisted;
        d["d3_L_vanishes"] = ds->d3_L_vanishes;
        d["phi_monogenic"] = ds->phi_monogenic;
        const auto w = rs_kernel_weight(sol.m, sol.k);
        d["kernel_weight"] = w ? w->to_string() : "none";
        d["weyl_dim"] = detail::bigint_to_json(w ? weyl_dim_pm(sol.m, *w) : BigInt(0));
        d["direct_sum"] = ds->passed();
        doc["decomposition"] = std::move(d);
    }
    if (dump_basis) {
        json basis = json::array();
        if (rs)
            for (const auto& f : sol.space.rs_solutions) basis.push_back(f.to_string());
        else
            for (const auto& f : sol.space.monogenics) basis.push_back(f.to_string());
        doc["basis"] = std::move(basis);
    }
    return doc.dump(2) + "\n";
}

std::vector<std::string> split_csv(const char* s) {
    std::vector<std::string> out;
    if (s == nullptr) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

extern "C" {

const char* spl_version(void) { return "1.0.0"; }

const char* spl_last_error(void) { return last_error.c_str(); }

const char* spl_text_data(const spl_text* text) { return text ? text->value.c_str() : ""; }
size_t spl_text_size(const spl_text* text) { return text ? text->value.size() : 0; }
void spl_text_free(spl_text* text) { delete text; }

spl_status spl_spectra(int n, int j, int lmax, const char* format, spl_text** out) {
    return guarded([&] {
        require(out, "out");
        const Format fmt = parse_format(format);
        const auto rows = j == 0 ? dirac_spectrum(n, lmax) : hsd_spectrum(n, j, lmax);
        switch (fmt) {
            case Format::Csv: return emit(spectrum_to_csv(rows), out);
            case Format::Text: return emit(spectrum_to_text(rows), out);
            case Format::Json: break;
        }
        return emit(spectrum_to_json(rows), out);
    });
}

spl_status spl_spectra_convert(const char* table, const char* input_format, const char* format, spl_text** out) {
    return guarded([&] {
        require(table, "table");
        require(out, "out");
        const Format in = parse_format(input_format);
        if (in == Format::Text) throw UsageError("text tables cannot be parsed");
        const auto rows = in == Format::Csv ? parse_spectrum_csv(table) : parse_spectrum_json(table);
        switch (parse_format(format)) {
            case Format::Csv: return emit(spectrum_to_csv(rows), out);
            case Format::Text: return emit(spectrum_to_text(rows), out);
            case Format::Json: break;
        }
        return emit(spectrum_to_json(rows), out);
    });
}

spl_status spl_solution_create(int m, int k, const char* kind, spl_solution** out) {
    return guarded([&] {
        require(kind, "kind");
        require(out, "out");
        auto sol = std::make_unique<spl_solution>();
        sol->m = m;
        sol->k = k;
        sol->limits = SolverLimits::from_env();
        const std::string kd = kind;
        if (kd == "monogenic") {
            sol->kind = SolutionKind::Monogenic;
            sol->space = monogenic_basis(m, k, sol->limits);
        } else if (kd == "rs") {
            sol->kind = SolutionKind::RaritaSchwinger;
            sol->space = rs_solution_basis(m, k, sol->limits);
        } else {
            throw UsageError("unknown kind '" + kd + "' (expected monogenic or rs)");
        }
        *out = sol.release();
        return SPL_OK;
    });
}

spl_status spl_solution_dim(const spl_solution* sol, size_t* out) {
    return guarded([&] {
        require(sol, "solution");
        require(out, "out");
        *out = sol->space.dim();
        return SPL_OK;
    });
}

spl_status spl_solution_report(spl_solution* sol, int decompose, int dump_basis, const char* format, spl_text** out) {
    return guarded([&] {
        require(sol, "solution");
        require(out, "out");
        return emit(solution_report(*sol, decompose != 0, dump_basis != 0, parse_format(format)), out);
    });
}

void spl_solution_free(spl_solution* sol) { delete sol; }

spl_status spl_descriptor_parse(const char* text, spl_descriptor** out) {
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        *out = new spl_descriptor{ManifoldDescriptor::from_json(text)};
        return SPL_OK;
    });
}

spl_status spl_descriptor_dim(const spl_descriptor* desc, int* out) {
    return guarded([&] {
        require(desc, "descriptor");
        require(out, "out");
        *out = desc->value.dim;
        return SPL_OK;
    });
}

void spl_descriptor_free(spl_descriptor* desc) { delete desc; }

spl_status spl_index(const spl_descriptor* desc, const char* op, int j, spl_text** out) {
    return guarded([&] {
        require(desc, "descriptor");
        require(op, "operator");
        require(out, "out");
        return emit(compute_index(desc->value, parse_operator_tag(op), j).to_json(), out);
    });
}

spl_status spl_index_value(const spl_descriptor* desc, const char* op, int j, spl_text** out) {
    return guarded([&] {
        require(desc, "descriptor");
        require(op, "operator");
        require(out, "out");
        return emit(rational_text(compute_index(desc->value, parse_operator_tag(op), j).index), out);
    });
}

spl_status spl_symbolic_class(int dim, const char* op, int j, spl_text** out) {
    return guarded([&] {
        require(op, "operator");
        require(out, "out");
        return emit(symbolic_index_class(dim, parse_operator_tag(op), j).to_string(), out);
    });
}

spl_status spl_dim8_audit(spl_text** out) {
    return guarded([&] {
        require(out, "out");
        return emit(dim8_audit().to_json(), out);
    });
}

spl_status spl_verify(const char* only, int quick, const char* format, spl_text** out) {
    return guarded([&] {
        require(out, "out");
        VerifyOptions opts;
        opts.scale = quick ? VerifyScale::Quick : VerifyScale::Default;
        opts.only = split_csv(only);
        const Format fmt = parse_format(format);
        if (fmt == Format::Csv) throw UsageError("verify supports json or text output");
        const VerifyReport report = run_verify(opts);
        emit(fmt == Format::Json ? report.to_json() : report.to_text(), out);
        return report.passed() ? SPL_OK : SPL_VERIFY_FAILED;
    });
}

spl_status spl_verify_checks(spl_text** out) {
    return guarded([&] {
        require(out, "out");
        std::string s;
        for (const auto& n : check_names()) s += (s.empty() ? "" : ",") + n;
        return emit(s, out);
    });
}

}  // extern "C"
