// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qlens/classify.hpp"
#include "qlens/sweep.hpp"
#include "qlens/verify.hpp"

using namespace qlens;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome suites(const std::vector<std::string>& names, std::int64_t r_max, int bound = 3) {
    VerifyOptions o;
    o.r_max = r_max;
    o.bound = bound;
    o.threads = default_threads();
    Outcome out;
    for (const auto& name : names) {
        const SuiteResult s = run_suite(name, o);
        out.pass = out.pass && s.pass;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += name + " " + std::to_string(s.checks - s.failures) + "/" + std::to_string(s.checks);
        if (!s.notes.empty() && (name == "certificates" || name == "anti-transpose")) out.detail += " (" + s.notes.front() + ")";
    }
    return out;
}

Outcome class_counts() {
    Outcome out = suites({"class-counts"}, 24);
    struct Example {
        std::int64_t r, n;
        int dim, position;
        std::int64_t expect;
    };
    const Example examples[] = {{12, 3, 7, 0, 4}, {12, 2, 7, 0, 2}, {10, 5, 7, 1, 4}, {8, 4, 5, 0, 2}};
    int ok = 0;
    for (const auto& e : examples) {
        const auto rep = enumerate_classes(e.r, e.n, e.dim, e.position);
        if (static_cast<std::int64_t>(rep.classes.size()) == e.expect && rep.predicted_count == e.expect) ++ok;
    }
    out.pass = out.pass && ok == 4;
    out.detail += "; examples " + std::to_string(ok) + "/4";
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1-step and 2-step counts, r <= 36", [] { return suites({"one-step", "two-step"}, 36); }},
        {"closed-form matrices, r <= 24", [] { return suites({"matrices"}, 24); }},
        {"all-unit dim-7 classes, r <= 30", [] { return suites({"coprime-classes"}, 30); }},
        {"class counts, r <= 24", class_counts},
        {"sum identity, r <= 24", [] { return suites({"sum-identity"}, 24); }},
        {"anti-transpose, r <= 16", [] { return suites({"anti-transpose"}, 16); }},
        {"certificates, r <= 12, bound 3", [] { return suites({"certificates"}, 12, 3); }},
        {"equivalence relation, r <= 24", [] { return suites({"relation"}, 24); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("criterion %zu: %s  %s [%s] %.1fs\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), s);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
