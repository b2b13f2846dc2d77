#ifndef QLENS_CLASSIFY_HPP
#define QLENS_CLASSIFY_HPP

#include <cstdint>
#include <vector>

#include "qlens/lensgraph.hpp"

namespace qlens {

using Weights = std::vector<std::int64_t>;

struct Congruence {
    int level;
    bool holds;   // m_level = n_level (mod n)
};

struct InvariantTerms {
    int dim_index = 0;
    int position = -1;
    std::int64_t r = 0;
    std::int64_t n = 1;
    // m2^{-1} m1 mod r, or m1^{-1} m2 when level 2 carries the non-unit
    std::int64_t ratio_lhs = 0;
    std::int64_t ratio_rhs = 0;
    // (ratio_rhs - ratio_lhs) * r(r-1)(r-2)/3 mod r; only meaningful for dim 7
    std::int64_t coprime_term = 0;
    std::vector<Congruence> congruences;
    bool isomorphic = false;
};

bool same_pattern(const WeightSystem& a, const WeightSystem& b);

// throws PatternMismatch when the gcd patterns differ
InvariantTerms invariant_terms(const WeightSystem& a, const WeightSystem& b);

bool isomorphic_dim3(const WeightSystem& a, const WeightSystem& b);
bool isomorphic_dim5(const WeightSystem& a, const WeightSystem& b);
bool isomorphic_dim7(const WeightSystem& a, const WeightSystem& b);
bool isomorphic(const WeightSystem& a, const WeightSystem& b);

Weights canonical_representative(const WeightSystem& ws);

// dim is the lens dimension 3, 5 or 7; n = 1 selects the all-unit family
std::int64_t count_classes(std::int64_t r, std::int64_t n, int dim, int position);

// weights in [1, r], units everywhere except a gcd-n weight at `position`
std::vector<Weights> in_scope_tuples(std::int64_t r, std::int64_t n, int dim, int position);

struct ClassEntry {
    Weights representative;
    std::vector<Weights> members;
};

struct ClassReport {
    std::int64_t r = 0;
    std::int64_t n = 1;
    int dim = 7;
    int position = -1;
    std::vector<ClassEntry> classes;   // sorted by representative
    std::int64_t predicted_count = 0;
};

// throws CountMismatch if the sweep disagrees with count_classes
ClassReport enumerate_classes(std::int64_t r, std::int64_t n, int dim, int position);

} // namespace qlens

#endif
