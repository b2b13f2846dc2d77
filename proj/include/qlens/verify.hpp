#ifndef QLENS_VERIFY_HPP
#define QLENS_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qlens {

struct VerifyOptions {
    std::int64_t r_min = 2;
    std::int64_t r_max = 12;
    int threads = 1;
    int bound = 3;   // certificate search bound
};

struct SuiteResult {
    std::string name;
    std::string description;
    bool pass = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::map<std::string, std::uint64_t> cases;   // per-case check counts
    std::vector<std::string> notes;               // failure samples and diagnostics
    double seconds = 0;
};

// one-step, two-step, matrices, coprime-classes, class-counts, sum-identity,
// anti-transpose, certificates, relation
const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

// throws BadParams for an unknown name
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

SuiteResult verify_one_step(const VerifyOptions& opts);
SuiteResult verify_two_step(const VerifyOptions& opts);
SuiteResult verify_matrices(const VerifyOptions& opts);
SuiteResult verify_coprime_classes(const VerifyOptions& opts);
SuiteResult verify_class_counts(const VerifyOptions& opts);
SuiteResult verify_sum_identity(const VerifyOptions& opts);
SuiteResult verify_anti_transpose(const VerifyOptions& opts);
SuiteResult verify_certificates(const VerifyOptions& opts);
SuiteResult verify_relation(const VerifyOptions& opts);

} // namespace qlens

#endif
