#include "spinorlab/spinorlab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

int exit_code(spl_status s) {
    switch (s) {
        case SPL_OK: return kExitOk;
        case SPL_VERIFY_FAILED: return kExitVerify;
        case SPL_USAGE:
        case SPL_PRECONDITION: return kExitUsage;
        case SPL_INPUT: return kExitInput;
        case SPL_INTERNAL: break;
    }
    return kExitVerify;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class Output {
public:
    explicit Output(std::string path) : path_(std::move(path)) {}

    int write(const std::string& text) const {
        if (path_.empty() || path_ == "-") {
            std::cout << text;
            std::cout.flush();
            return kExitOk;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << path_ << '\n';
            return kExitInput;
        }
        f << text;
        return f ? kExitOk : kExitInput;
    }

private:
    std::string path_;
};

/// Runs a C API call that fills an spl_text; writes it on success.
template <class F>
int run(const Output& out, F&& call) {
    spl_text* text = nullptr;
    const spl_status s = call(&text);
    int code = exit_code(s);
    if (text != nullptr) {
        const int w = out.write(spl_text_data(text));
        spl_text_free(text);
        if (w != kExitOk) return w;
    }
    if (s != SPL_OK && s != SPL_VERIFY_FAILED) std::cerr << "error: " << spl_last_error() << '\n';
    return code;
}

int index_text(const Output& out, const spl_descriptor* desc, const std::string& op, int j) {
    int dim = 0;
    spl_text* value = nullptr;
    spl_text* cls = nullptr;
    spl_status s = spl_descriptor_dim(desc, &dim);
    if (s == SPL_OK) s = spl_index_value(desc, op.c_str(), j, &value);
    if (s == SPL_OK) s = spl_symbolic_class(dim, op.c_str(), j, &cls);
    int code = exit_code(s);
    if (s == SPL_OK) {
        code = out.write(op + " index = " + spl_text_data(value) + "\nclass = " + spl_text_data(cls) + "\n");
    } else {
        std::cerr << "error: " << spl_last_error() << '\n';
    }
    spl_text_free(value);
    spl_text_free(cls);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clifford analysis, higher spin spectra and index computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(spl_version()));

    std::string format = "json";
    std::string out_path;

    int n = 0, j = 0, lmax = 3;
    auto* spectra = app.add_subcommand("spectra", "eigenvalue and multiplicity table on the round sphere");
    spectra->add_option("--n", n, "sphere dimension")->required();
    spectra->add_option("--j", j, "0 for the Dirac operator, otherwise 0 < j < n/2")->capture_default_str();
    spectra->add_option("--lmax", lmax, "highest level")->capture_default_str();
    spectra->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    spectra->add_option("--out", out_path, "output file (default stdout)");

    int m = 0, k = 0;
    std::string kind = "monogenic";
    bool decompose = false, dump_basis = false;
    auto* solve = app.add_subcommand("solve", "homogeneous polynomial solution spaces on R^m");
    solve->add_option("--m", m, "ambient dimension")->required();
    solve->add_option("--k", k, "homogeneity degree")->required();
    solve->add_option("--kind", kind, "monogenic or rs")->check(CLI::IsMember({"monogenic", "rs"}))->capture_default_str();
    solve->add_flag("--decompose", decompose, "split rs solutions into M1 + M2 + M3");
    solve->add_flag("--dump-basis", dump_basis, "print every basis element");
    solve->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    solve->add_option("--out", out_path, "output file (default stdout)");

    std::string descriptor_path, op = "D_1/2";
    int index_j = 1;
    auto* index = app.add_subcommand("index", "index of a Dirac type operator from Pontrjagin numbers");
    index->add_option("--descriptor", descriptor_path, "manifold descriptor JSON file")->required();
    index->add_option("--operator", op, "D_1/2, D_T, D_3/2 or D_j")->capture_default_str();
    index->add_option("--j", index_j, "j for D_j")->capture_default_str();
    index->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    index->add_option("--out", out_path, "output file (default stdout)");

    std::vector<std::string> only;
    bool quick = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--only", only, "restrict to these checks (repeatable or comma separated)")->delimiter(',');
    verify->add_flag("--quick", quick, "reduced sample sizes");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Output out(out_path);

    if (*spectra) {
        return run(out, [&](spl_text** t) { return spl_spectra(n, j, lmax, format.c_str(), t); });
    }

    if (*solve) {
        spl_solution* sol = nullptr;
        const spl_status s = spl_solution_create(m, k, kind.c_str(), &sol);
        if (s != SPL_OK) {
            std::cerr << "error: " << spl_last_error() << '\n';
            return exit_code(s);
        }
        const int code = run(out, [&](spl_text** t) {
            return spl_solution_report(sol, decompose ? 1 : 0, dump_basis ? 1 : 0, format.c_str(), t);
        });
        spl_solution_free(sol);
        return code;
    }

    if (*index) {
        auto fail_input = [&](const std::string& message) {
            out.write("{\n  \"error\": {\n    \"code\": \"input\",\n    \"message\": \"" + json_escape(message) + "\"\n  }\n}\n");
            std::cerr << "error: " << message << '\n';
            return kExitInput;
        };
        std::ifstream f(descriptor_path, std::ios::binary);
        if (!f) return fail_input("cannot read descriptor " + descriptor_path);
        std::stringstream buf;
        buf << f.rdbuf();
        spl_descriptor* desc = nullptr;
        const spl_status s = spl_descriptor_parse(buf.str().c_str(), &desc);
        if (s == SPL_INPUT) return fail_input(spl_last_error());
        if (s != SPL_OK) {
            std::cerr << "error: " << spl_last_error() << '\n';
            return exit_code(s);
        }
        int code;
        if (format == "text") {
            code = index_text(out, desc, op, index_j);
        } else {
            code = run(out, [&](spl_text** t) { return spl_index(desc, op.c_str(), index_j, t); });
        }
        spl_descriptor_free(desc);
        return code;
    }

    if (*verify) {
        std::string joined;
        for (const auto& name : only) joined += (joined.empty() ? "" : ",") + name;
        return run(out, [&](spl_text** t) { return spl_verify(joined.c_str(), quick ? 1 : 0, format.c_str(), t); });
    }
    return kExitUsage;
}
