// Acceptance run: one PASS/FAIL line per criterion, each with its time
// budget. Exit status is nonzero if any criterion fails.
#include "spinorlab/index.hpp"
#include "spinorlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

using namespace spinorlab;

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<std::string> checks;
    double budget_s;  // <= 0: no time limit
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "pointwise algebraic identities", {"algebra"}, 10},
        {2, "block form of the twisted Dirac operator", {"theorem1"}, 30},
        {3, "Clifford contraction anticommutes with the gradient to -D_T", {"y-identity"}, 30},
        {4, "monogenic dimension law and sphere multiplicities", {"monogenic-dims"}, 120},
        {5, "RS solution spaces: D^3 L, Xi equation, direct sum, decompositions",
         {"direct-sum", "xi-equation", "decompose"}, 300},
        {6, "integrality of the higher spin multiplicities", {"spectra-integrality"}, 5},
        {7, "Weyl dimension of the kernel weight equals dim M1", {"weyl"}, 60},
        {8, "dimension 4 index relation and K3 values", {"index-dim4"}, 1},
        {9, "degree 8 integrand audit", {"dim8-audit"}, 1},
    };
    return list;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string failed_checks(const VerifyReport& r) {
    std::string out;
    for (const auto& c : r.checks)
        if (!c.passed) out += (out.empty() ? "" : ",") + c.name;
    return out;
}

bool report(int number, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    return ok;
}

bool run_criterion(const Criterion& c) {
    VerifyOptions opt;
    opt.only = c.checks;
    const auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    try {
        r = run_verify(opt);
    } catch (const std::exception& e) {
        return report(c.number, false, std::string(c.title) + " (error: " + e.what() + ")");
    }
    const double t = seconds_since(start);
    long cases = 0;
    for (const auto& chk : r.checks) cases += chk.cases;
    const bool in_time = t < c.budget_s;
    char buf[256];
    std::snprintf(buf, sizeof buf, " (%ld cases, %.2f s, budget %.0f s)", cases, t, c.budget_s);
    std::string what = std::string(c.title) + buf;
    if (!r.passed()) what += " failed: " + failed_checks(r);
    if (!in_time) what += " over budget";
    if (c.number == 9) {
        const Dim8Audit a = dim8_audit();
        what += std::string(" [p1^2 coefficient ") + a.rs_p1sq.get_str() + ", reference " +
                a.reference_rs_p1sq.get_str() + ", agrees=" + (a.p1sq_matches_reference ? "true" : "false") + "]";
    }
    return report(c.number, r.passed() && in_time && r.checks.size() == c.checks.size(), what);
}

bool run_determinism() {
    const auto start = std::chrono::steady_clock::now();
    try {
        const VerifyReport a = run_verify({});
        const VerifyReport b = run_verify({});
        const std::string ja = a.to_json(), jb = b.to_json();
        char buf[160];
        std::snprintf(buf, sizeof buf, " (%zu bytes, %.2f s for two runs)", ja.size(), seconds_since(start));
        const bool same = ja == jb;
        return report(10, same, std::string("two full verify runs are byte-identical") + buf +
                                    (same ? "" : " reports differ"));
    } catch (const std::exception& e) {
        return report(10, false, std::string("full verify run threw: ") + e.what());
    }
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria())
        if (!run_criterion(c)) ++failed;
    if (!run_determinism()) ++failed;
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
