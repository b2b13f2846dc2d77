#include <doctest.h>

#include <bit>
#include <map>
#include <numeric>

#include "brute.hpp"
#include "qlens/error.hpp"
#include "qlens/lensgraph.hpp"

using namespace qlens;

namespace {

// every in-scope tuple mod r with 2..4 weights
std::vector<std::vector<std::int64_t>> small_tuples(std::int64_t r, int len) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> w(len, 1);
    for (;;) {
        int nonunit = 0;
        for (auto x : w)
            if (std::gcd(x % r, r) != 1) ++nonunit;
        if (nonunit <= 1) out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == r) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

} // namespace

TEST_CASE("WeightSystem metadata") {
    const WeightSystem ws = WeightSystem::make(6, {7, 3, 1, 1});
    CHECK(ws.m == std::vector<std::int64_t>{1, 3, 1, 1});
    CHECK(ws.position() == 1);
    CHECK(ws.n() == 3);
    CHECK(ws.dimension() == 7);
    CHECK(WeightSystem::make(6, {6, 1}).n() == 6);
    CHECK(WeightSystem::make(5, {1, 2, 3}).coprime());
    CHECK_THROWS_AS(WeightSystem::make(6, {2, 3, 1}), Error);
    CHECK_THROWS_AS(WeightSystem::make(1, {1, 1}), Error);
    CHECK_THROWS_AS(WeightSystem::make(6, {1}), Error);
    CHECK_THROWS_AS(WeightSystem::make(6, {1, 1, 1, 1, 1}), Error);
}

TEST_CASE("one-step examples") {
    const SkewProductGraph g(WeightSystem::make(4, {1, 2, 1, 1}));
    for (std::int64_t t = 0; t < 2; ++t) CHECK(count_kstep(g, {0, 0}, {1, t}, 1) == 2);
    const SkewProductGraph h(WeightSystem::make(6, {1, 3, 1, 1}));
    for (std::int64_t t = 0; t < 3; ++t) CHECK(count_kstep(h, {0, 0}, {1, t}, 1) == 2);
}

TEST_CASE("two-step example across the n-level") {
    const SkewProductGraph g(WeightSystem::make(6, {1, 3, 1}));
    CHECK(count_through(g, {0, 0}, {2, 0}, 1u << 1) == 3);
}

TEST_CASE("counting needs kept endpoints") {
    const SkewProductGraph g(WeightSystem::make(6, {1, 3, 1}));
    CHECK_THROWS_AS(count_admissible(g, {1, 4}, {2, 0}), Error);
    CHECK(count_admissible(g, {2, 0}, {0, 0}) == 0);
}

TEST_CASE("path counts agree with brute-force enumeration") {
    for (std::int64_t r = 2; r <= 6; ++r)
        for (int len = 2; len <= 4; ++len)
            for (const auto& w : small_tuples(r, len)) {
                const WeightSystem ws = WeightSystem::make(r, w);
                const SkewProductGraph g(ws);
                const brute::Graph bg{r, w};
                const auto kept = g.kept_vertices();
                for (const Vertex& u : kept)
                    for (const Vertex& v : kept) {
                        if (u.level > v.level) continue;
                        std::uint64_t all = 0;
                        std::map<unsigned, std::uint64_t> by_interior;
                        brute::paths(bg, u.level, u.residue, v.level, v.residue, [&](unsigned mask) {
                            ++all;
                            ++by_interior[mask & ~((1u << u.level) | (1u << v.level))];
                        });
                        REQUIRE(count_admissible(g, u, v) == all);
                        const unsigned span = ((1u << (v.level + 1)) - 1) & ~((1u << u.level) - 1);
                        const unsigned inner = span & ~((1u << u.level) | (1u << v.level));
                        Integer ksum = 0;
                        for (unsigned s = inner;; s = (s - 1) & inner) {
                            REQUIRE(count_through(g, u, v, s) == by_interior[s]);
                            if (s == 0) break;
                        }
                        for (int k = 1; k <= v.level - u.level + 1; ++k) {
                            std::uint64_t expect = 0;
                            for (const auto& [s, c] : by_interior)
                                if (std::popcount(s) == k - 1) expect += c;
                            const Integer got = count_kstep(g, u, v, k);
                            REQUIRE(got == expect);
                            ksum += got;
                        }
                        REQUIRE(ksum == all);
                    }
            }
}

TEST_CASE("level-restricted DPs agree with brute-force enumeration") {
    for (std::int64_t r = 2; r <= 5; ++r)
        for (const auto& w : small_tuples(r, 4)) {
            const WeightSystem ws = WeightSystem::make(r, w);
            const SkewProductGraph g(ws);
            const auto kept = g.kept_vertices();
            for (unsigned mask = 1; mask < 16; ++mask) {
                for (const Vertex& u : kept) {
                    if (!(mask >> u.level & 1)) continue;
                    const auto from = counts_from(g, u, mask);
                    const auto to = counts_to(g, u, mask);
                    for (const Vertex& v : kept) {
                        if (!(mask >> v.level & 1) || v.level < u.level) continue;
                        std::uint64_t expect = 0;
                        brute::paths({r, w}, u.level, u.residue, v.level, v.residue, [&](unsigned lv) {
                            if ((lv & ~mask) == 0) ++expect;
                        });
                        REQUIRE(from[g.id(v)] == expect);
                    }
                    for (const Vertex& v : kept) {
                        if (!(mask >> v.level & 1) || v.level > u.level) continue;
                        std::uint64_t expect = 0;
                        brute::paths({r, w}, v.level, v.residue, u.level, u.residue, [&](unsigned lv) {
                            if ((lv & ~mask) == 0) ++expect;
                        });
                        REQUIRE(to[g.id(v)] == expect);
                    }
                }
            }
        }
}

TEST_CASE("adjacency matrix shape and examples") {
    const LensMatrix lm = adjacency_by_enumeration(WeightSystem::make(2, {1, 1, 1, 1}));
    IntMatrix expect(4, 4);
    expect << 1, 2, 3, 4, 0, 1, 2, 3, 0, 0, 1, 2, 0, 0, 0, 1;
    CHECK(lm.A == expect);

    const LensMatrix six = adjacency_by_enumeration(WeightSystem::make(6, {1, 1, 1, 3}));
    CHECK(six.A.rows() == 6);
    CHECK(six.A(0, 1) == 6);
    CHECK(six.A(0, 2) == 21);

    for (std::int64_t r = 2; r <= 8; ++r)
        for (const auto& w : small_tuples(r, 4)) {
            const LensMatrix m = adjacency_by_enumeration(WeightSystem::make(r, w));
            const IntMatrix B = m.B();
            REQUIRE(B.rows() == m.ws.n() + 3);
            for (Eigen::Index i = 0; i < B.rows(); ++i)
                for (Eigen::Index j = 0; j <= i; ++j) REQUIRE(B(i, j) == 0);
            for (Eigen::Index i = 0; i + 1 < B.rows(); ++i)
                for (Eigen::Index j = i + 1; j < B.cols(); ++j)
                    if (m.level(i) < m.level(j)) REQUIRE(B(i, j) >= 0);
        }
}
