#include <doctest.h>

#include <numeric>
#include <set>

#include "qlens/classify.hpp"
#include "qlens/error.hpp"
#include "qlens/integer.hpp"
#include "qlens/numtheory.hpp"

using namespace qlens;

namespace {

WeightSystem W(std::int64_t r, Weights w) { return WeightSystem::make(r, w); }

} // namespace

TEST_CASE("isomorphism examples") {
    CHECK(isomorphic(W(4, {2, 1}), W(4, {2, 3})));
    CHECK(isomorphic_dim3(W(4, {2, 1}), W(4, {2, 3})));
    CHECK(isomorphic(W(7, {1, 2, 3, 4}), W(7, {1, 2, 3, 4})));
    CHECK_THROWS_AS(isomorphic(W(4, {2, 1}), W(4, {4, 1})), Error);
    CHECK_THROWS_AS(isomorphic(W(4, {2, 1}), W(4, {2, 1, 1})), Error);

    CHECK(isomorphic_dim5(W(8, {4, 1, 1}), W(8, {4, 5, 1})));
    CHECK_FALSE(isomorphic_dim5(W(8, {4, 1, 1}), W(8, {4, 3, 1})));
    CHECK(isomorphic_dim5(W(8, {1, 4, 1}), W(8, {3, 4, 7})));
    CHECK_THROWS_AS(isomorphic_dim5(W(8, {4, 1}), W(8, {4, 1})), Error);

    CHECK_FALSE(isomorphic_dim7(W(3, {1, 1, 1, 1}), W(3, {1, 1, 2, 1})));
    CHECK(isomorphic_dim7(W(4, {1, 1, 1, 1}), W(4, {1, 1, 3, 1})));
    CHECK(isomorphic_dim7(W(12, {1, 1, 1, 3}), W(12, {1, 7, 7, 3})));
}

TEST_CASE("invariant terms") {
    const InvariantTerms t = invariant_terms(W(3, {1, 1, 1, 1}), W(3, {1, 1, 2, 1}));
    CHECK(t.coprime_term == 2);
    CHECK_FALSE(t.isomorphic);

    const InvariantTerms u = invariant_terms(W(12, {1, 1, 1, 3}), W(12, {1, 7, 7, 3}));
    CHECK(u.n == 3);
    CHECK(u.position == 3);
    CHECK(u.ratio_lhs == 1);
    CHECK(u.ratio_rhs == 1);
    CHECK(u.coprime_term == 0);
    REQUIRE(u.congruences.size() == 2);
    for (const Congruence& c : u.congruences) CHECK(c.holds);
    CHECK(u.isomorphic);

    // level 2 carries the non-unit: the ratio is m1^{-1} m2
    const InvariantTerms v = invariant_terms(W(9, {1, 2, 3, 1}), W(9, {1, 1, 3, 1}));
    CHECK(v.ratio_lhs == mod(mod_inverse(2, 9).value * 3, std::int64_t{9}));
    CHECK(v.ratio_rhs == 3);
}

TEST_CASE("canonical representatives: examples") {
    CHECK(canonical_representative(W(6, {1, 5, 5, 3})) == Weights{1, 5, 5, 3});
    CHECK(canonical_representative(W(10, {1, 5, 3, 1})) == Weights{1, 5, 3, 1});
    CHECK(canonical_representative(W(10, {7, 5, 13, 9})) == Weights{1, 5, 3, 1});
    CHECK(canonical_representative(W(3, {1, 1, 2, 1})) == Weights{1, 1, 2, 1});
    CHECK(canonical_representative(W(4, {3, 3, 1, 1})) == Weights{1, 1, 1, 1});
}

TEST_CASE("class counts: examples") {
    CHECK(count_classes(12, 3, 7, 0) == 4);
    CHECK(count_classes(12, 2, 7, 0) == 2);
    CHECK(count_classes(10, 5, 7, 1) == 4);
    CHECK(count_classes(8, 4, 5, 0) == 2);
    CHECK(count_classes(8, 4, 5, 1) == 1);
    CHECK(count_classes(3, 1, 7, 0) == 2);
    CHECK(count_classes(4, 1, 7, 0) == 1);
    CHECK(count_classes(9, 3, 3, 0) == 1);
    CHECK_THROWS_AS(count_classes(12, 5, 7, 0), Error);

    const ClassReport rep = enumerate_classes(3, 1, 7, 0);
    REQUIRE(rep.classes.size() == 2);
    CHECK(rep.classes[0].representative == Weights{1, 1, 1, 1});
    CHECK(rep.classes[1].representative == Weights{1, 1, 2, 1});
}

// classes from the invariant, checked against a transitive closure built only
// from pairwise decisions, with the representative properties on top
TEST_CASE("class structure for every family up to r = 15") {
    for (std::int64_t r = 2; r <= 15; ++r)
        for (std::int64_t n = 1; n <= r; ++n) {
            if (r % n) continue;
            for (int dim : {3, 5, 7}) {
                const int levels = (dim + 1) / 2;
                for (int pos = 0; pos < (n > 1 ? levels : 1); ++pos) {
                    const auto tuples = in_scope_tuples(r, n, dim, pos);
                    std::vector<int> label(tuples.size(), -1);
                    std::vector<WeightSystem> ws;
                    for (const auto& t : tuples) ws.push_back(W(r, t));
                    int classes = 0;
                    for (std::size_t i = 0; i < ws.size(); ++i) {
                        if (label[i] >= 0) continue;
                        label[i] = classes;
                        for (std::size_t j = i + 1; j < ws.size(); ++j)
                            if (isomorphic(ws[i], ws[j])) {
                                REQUIRE(label[j] < 0);
                                label[j] = classes;
                            }
                        ++classes;
                    }
                    REQUIRE(classes == count_classes(r, n, dim, pos));
                    std::vector<std::set<Weights>> reps(classes);
                    for (std::size_t i = 0; i < ws.size(); ++i) {
                        const Weights rep = canonical_representative(ws[i]);
                        const WeightSystem rws = W(r, rep);
                        REQUIRE(same_pattern(rws, ws[i]));
                        REQUIRE(isomorphic(rws, ws[i]));
                        REQUIRE(canonical_representative(rws) == rep);
                        reps[label[i]].insert(rep);
                    }
                    for (const auto& s : reps) REQUIRE(s.size() == 1);
                }
            }
        }
}

TEST_CASE("in_scope_tuples") {
    const auto t = in_scope_tuples(6, 3, 7, 3);
    CHECK(t.size() == 8);
    for (const auto& w : t) CHECK(w[3] == 3);
    CHECK(in_scope_tuples(5, 1, 5, 0).size() == 64);
}

// for a ratio difference d that is a multiple of n,
// d r(2r-n)(r-n)/3n = 0 (mod r) iff d r(r-1)(r-2)/3 = 0 (mod r)
TEST_CASE("two forms of the position 1/2 coprime term agree") {
    for (std::int64_t r = 2; r <= 150; ++r)
        for (std::int64_t n = 2; n <= r; ++n) {
            if (r % n) continue;
            for (std::int64_t j = 0; j < r / n; ++j) {
                const Integer d = n * j;
                const Integer a = d * (2 * r - n) * (r - n), b = d * (r - 1) * (r - 2);
                REQUIRE((a % (3 * n) == 0) == (b % 3 == 0));
            }
        }
}
