#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlens/classify.hpp"
#include "qlens/closedform.hpp"
#include "qlens/error.hpp"
#include "qlens/io.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/slp.hpp"
#include "qlens/sweep.hpp"
#include "qlens/verify.hpp"

using namespace qlens;

namespace {

enum Exit { ok = 0, negative = 1, usage = 2 };

struct Output {
    std::string format;
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw Error(Errc::BadParams, "cannot open " + path);
        f << text;
    }
    void emit_json(const json& j) const { emit(j.dump(2) + "\n"); }
};

std::string default_format(const std::string& fallback) {
    const char* env = std::getenv("QLENS_FORMAT");
    return env && *env ? env : fallback;
}

std::vector<EntryTag> exact_tags(const IntMatrix& m) {
    return std::vector<EntryTag>(m.size(), EntryTag::Exact);
}

int cmd_matrix(const Output& out, std::int64_t r, const std::string& weights, const std::string& method) {
    const WeightSystem ws = WeightSystem::make(r, parse_weights(weights));
    const bool want_enum = method != "formula", want_formula = method != "enum";
    LensMatrix lm;
    FormulaMatrix fm;
    if (want_enum) lm = adjacency_by_enumeration(ws);
    if (want_formula) fm = formula_matrix(ws);
    const bool match = !(want_enum && want_formula) || agrees(fm, lm.A);
    const char* verdict = match ? "MATCH" : "MISMATCH";
    if (out.format == "json") {
        json j;
        if (want_enum && want_formula) {
            j["enumeration"] = matrix_json(ws, lm.A, exact_tags(lm.A));
            j["formula"] = matrix_json(ws, fm);
            j["verdict"] = verdict;
        } else if (want_enum) {
            j = matrix_json(ws, lm.A, exact_tags(lm.A));
        } else {
            j = matrix_json(ws, fm);
        }
        out.emit_json(j);
    } else if (out.format == "csv") {
        std::string text;
        if (want_enum) text += matrix_csv(lm.A);
        if (want_enum && want_formula) text += "\n";
        if (want_formula) text += matrix_csv(fm.entries);
        out.emit(text);
    } else {
        std::ostringstream os;
        if (want_enum) os << "# enumeration\n" << matrix_plain(lm.A);
        if (want_formula) os << "# formula (* = known mod r)\n" << matrix_plain(fm.entries, &fm.tags);
        if (want_enum && want_formula) os << verdict << "\n";
        out.emit(os.str());
    }
    return match ? ok : negative;
}

int cmd_isomorphic(const Output& out, std::int64_t r, const std::string& lhs, const std::string& rhs) {
    const WeightSystem a = WeightSystem::make(r, parse_weights(lhs));
    const WeightSystem b = WeightSystem::make(r, parse_weights(rhs));
    if (!same_pattern(a, b)) {
        if (out.format == "json")
            out.emit_json(json{{"r", r}, {"lhs", a.input}, {"rhs", b.input}, {"error", "PatternMismatch"}});
        else
            out.emit("PATTERN_MISMATCH\n");
        return usage;
    }
    const InvariantTerms t = invariant_terms(a, b);
    if (out.format == "json") {
        json j{{"r", r}, {"lhs", a.input}, {"rhs", b.input}};
        j["invariants"] = invariant_json(t);
        j["isomorphic"] = t.isomorphic;
        out.emit_json(j);
    } else {
        std::ostringstream os;
        os << (t.isomorphic ? "ISOMORPHIC" : "NOT_ISOMORPHIC") << "\n";
        if (t.dim_index == 3)
            os << "coprime term " << t.coprime_term << " (ratios " << t.ratio_lhs << ", " << t.ratio_rhs << ")\n";
        for (const auto& c : t.congruences)
            os << "level " << c.level << " congruent mod " << t.n << ": " << (c.holds ? "yes" : "no") << "\n";
        out.emit(os.str());
    }
    return t.isomorphic ? ok : negative;
}

int cmd_classes(const Output& out, std::int64_t r, std::int64_t n, int dim, int position, bool coprime, bool members) {
    if (coprime) {
        n = 1;
        position = 0;
    }
    const ClassReport rep = enumerate_classes(r, n, dim, position);
    if (out.format == "json") out.emit_json(classes_json(rep, members));
    else out.emit(classes_csv(rep, members));
    return ok;
}

int cmd_certificate(const Output& out, std::int64_t r, const std::string& lhs, const std::string& rhs, int bound) {
    const WeightSystem a = WeightSystem::make(r, parse_weights(lhs));
    const WeightSystem b = WeightSystem::make(r, parse_weights(rhs));
    if (!same_pattern(a, b)) {
        out.emit(out.format == "json" ? json{{"error", "PatternMismatch"}}.dump(2) + "\n" : "PATTERN_MISMATCH\n");
        return usage;
    }
    if (!isomorphic(a, b)) {
        out.emit(out.format == "json" ? json{{"result", "NOT_ISOMORPHIC"}}.dump(2) + "\n" : "NOT_ISOMORPHIC\n");
        return negative;
    }
    const IntMatrix Ba = adjacency_by_enumeration(a).B(), Bb = adjacency_by_enumeration(b).B();
    const CertificateResult res = find_certificate(Ba, Bb, a, b, bound);
    for (const auto& line : res.log) std::cerr << line << "\n";
    if (!res.certificate) {
        out.emit(out.format == "json" ? json{{"result", "NOT_FOUND"}}.dump(2) + "\n" : "NOT_FOUND\n");
        return negative;
    }
    const auto& c = *res.certificate;
    const bool verified = verify_certificate(c.U, Ba, c.V, Bb);
    if (out.format == "json") {
        const auto tags = exact_tags(c.U);
        json j{{"result", "FOUND"}, {"method", method_name(res.method)}, {"verified", verified}};
        j["B"] = matrix_json(a, Ba, tags)["entries"];
        j["B_target"] = matrix_json(b, Bb, tags)["entries"];
        j["U"] = matrix_json(a, c.U, tags)["entries"];
        j["V"] = matrix_json(a, c.V, tags)["entries"];
        out.emit_json(j);
    } else {
        std::ostringstream os;
        os << "FOUND (" << method_name(res.method) << ", " << (verified ? "verified" : "NOT VERIFIED") << ")\n";
        os << "# U\n" << matrix_plain(c.U) << "# V\n" << matrix_plain(c.V);
        out.emit(os.str());
    }
    return verified ? ok : negative;
}

int cmd_verify(const Output& out, const VerifyOptions& opts, const std::vector<std::string>& only) {
    std::vector<std::string> names = only.empty() ? suite_names() : only;
    std::vector<SuiteResult> results;
    bool all = true;
    for (const auto& name : names) {
        results.push_back(run_suite(name, opts));
        all = all && results.back().pass;
    }
    if (out.format == "json") {
        json j{{"r_min", opts.r_min}, {"r_max", opts.r_max}, {"pass", all}};
        j["suites"] = json::array();
        for (const auto& s : results) j["suites"].push_back(suite_json(s));
        out.emit_json(j);
    } else if (out.format == "csv") {
        std::ostringstream os;
        os << "suite,checks,failures,seconds,result\n";
        for (const auto& s : results)
            os << s.name << ',' << s.checks << ',' << s.failures << ',' << s.seconds << ','
               << (s.pass ? "PASS" : "FAIL") << '\n';
        out.emit(os.str());
    } else {
        std::ostringstream os;
        os << std::left << std::setw(17) << "suite" << std::right << std::setw(12) << "checks" << std::setw(10)
           << "failures" << std::setw(10) << "seconds" << "  result\n";
        for (const auto& s : results) {
            os << std::left << std::setw(17) << s.name << std::right << std::setw(12) << s.checks << std::setw(10)
               << s.failures << std::setw(10) << std::fixed << std::setprecision(2) << s.seconds << "  "
               << (s.pass ? "PASS" : "FAIL") << "\n";
            if (!only.empty())
                for (const auto& [k, v] : s.cases) os << "    " << k << ": " << v << "\n";
            for (const auto& n : s.notes) os << "    note: " << n << "\n";
        }
        os << (all ? "ALL PASS" : "SOME FAILED") << "\n";
        out.emit(os.str());
    }
    return all ? ok : negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adjacency matrices, invariants and classes of quantum lens spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string format;
    int threads = default_threads();
    app.add_option("--format", format, "json, plain or csv (default from QLENS_FORMAT)")
        ->check(CLI::IsMember({"json", "plain", "csv"}));
    app.add_option("--out", out.path, "write output to this file");
    app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);

    std::int64_t r = 0, n = 0;
    std::string weights, lhs, rhs, method = "enum";
    int dim = 7, position = 0, bound = 3;
    bool coprime = false, members = false;

    auto* matrix = app.add_subcommand("matrix", "adjacency matrix of the reduced graph");
    matrix->add_option("--r", r, "order of the acting group")->required();
    matrix->add_option("--weights", weights, "comma separated weights")->required();
    matrix->add_option("--method", method, "enum, formula or both")->check(CLI::IsMember({"enum", "formula", "both"}));

    auto* iso = app.add_subcommand("isomorphic", "decide isomorphism by the invariants");
    iso->add_option("--r", r)->required();
    iso->add_option("--lhs", lhs)->required();
    iso->add_option("--rhs", rhs)->required();

    auto* classes = app.add_subcommand("classes", "isomorphism classes for fixed r, n, dimension and position");
    classes->add_option("--r", r)->required();
    auto* n_opt = classes->add_option("--n", n);
    classes->add_option("--dim", dim)->check(CLI::IsMember({3, 5, 7}));
    classes->add_option("--position", position);
    auto* cop = classes->add_flag("--coprime", coprime, "all weights units");
    cop->excludes(n_opt);
    classes->add_flag("--members", members, "list the members of each class");

    auto* cert = app.add_subcommand("certificate", "U, V with U B V = B'");
    cert->add_option("--r", r)->required();
    cert->add_option("--lhs", lhs)->required();
    cert->add_option("--rhs", rhs)->required();
    cert->add_option("--bound", bound, "entry bound for the fallback search");

    VerifyOptions vopts;
    std::vector<std::string> only;
    auto* verify = app.add_subcommand("verify", "enumeration-versus-closed-form sweeps");
    verify->add_option("--r-max", vopts.r_max)->required();
    verify->add_option("--r-min", vopts.r_min);
    verify->add_option("--only", only, "run only these suites")->check(CLI::IsMember(suite_names()));
    verify->add_option("--bound", vopts.bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    out.format = format.empty() ? default_format(classes->parsed() ? "csv" : "plain") : format;
    if (out.format != "json" && out.format != "plain" && out.format != "csv") {
        std::cerr << "unknown format " << out.format << "\n";
        return usage;
    }
    vopts.threads = threads;

    try {
        if (matrix->parsed()) return cmd_matrix(out, r, weights, method);
        if (iso->parsed()) return cmd_isomorphic(out, r, lhs, rhs);
        if (classes->parsed()) {
            if (!coprime && n_opt->count() == 0) {
                std::cerr << "classes needs --n or --coprime\n";
                return usage;
            }
            return cmd_classes(out, r, n, dim, position, coprime, members);
        }
        if (cert->parsed()) return cmd_certificate(out, r, lhs, rhs, bound);
        if (verify->parsed()) {
            if (vopts.r_max < 2 || vopts.r_min > vopts.r_max) {
                std::cerr << "empty sweep: need 2 <= r-min <= r-max\n";
                return usage;
            }
            return cmd_verify(out, vopts, only);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case Errc::CountMismatch:
        case Errc::Integrality:
        case Errc::Overflow: return negative;
        default: return usage;
        }
    }
    return usage;
}
