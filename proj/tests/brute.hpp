#ifndef QLENS_TESTS_BRUTE_HPP
#define QLENS_TESTS_BRUTE_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

// Plain depth-first enumeration of admissible paths in the skew product,
// written from the definitions and sharing no code with the library.
namespace brute {

struct Graph {
    std::int64_t r;
    std::vector<std::int64_t> m;

    std::int64_t g(int level) const {
        const std::int64_t x = ((m[level] % r) + r) % r;
        return std::gcd(x, r);   // gcd(0, r) = r
    }
    bool kept(int level, std::int64_t s) const { return s < g(level); }
};

// visit(levels_bitmask) is called once for every admissible path from
// (i, s) to (j, t); the mask holds every level the path touches
inline void paths(const Graph& G, int i, std::int64_t s, int j, std::int64_t t,
                  const std::function<void(unsigned)>& visit) {
    const int L = static_cast<int>(G.m.size());
    std::function<void(int, std::int64_t, unsigned)> go = [&](int lev, std::int64_t x, unsigned mask) {
        const std::int64_t y = (((x + G.m[lev]) % G.r) + G.r) % G.r;
        for (int k = lev; k < L && k <= j; ++k) {
            const unsigned nm = mask | (1u << k);
            if (G.kept(k, y)) {
                if (k == j && y == t) visit(nm);
                continue;
            }
            go(k, y, nm);
        }
    };
    go(i, s, 1u << i);
}

inline std::uint64_t total(const Graph& G, int i, std::int64_t s, int j, std::int64_t t) {
    std::uint64_t c = 0;
    paths(G, i, s, j, t, [&](unsigned) { ++c; });
    return c;
}

} // namespace brute

#endif
