#include "qlens/lensgraph.hpp"

#include <bit>
#include <string>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

namespace qlens {

namespace {

inline void add_checked(std::uint64_t& acc, std::uint64_t x) {
    if (__builtin_add_overflow(acc, x, &acc))
        throw Error(Errc::Overflow, "path count exceeds 64 bits");
}

inline bool in_mask(unsigned mask, int level) { return (mask >> level) & 1u; }

} // namespace

WeightSystem WeightSystem::make(std::int64_t r, const std::vector<std::int64_t>& weights) {
    if (r < 2) throw Error(Errc::InvalidWeights, "r must be at least 2");
    if (r > (std::int64_t{1} << 30)) throw Error(Errc::InvalidWeights, "r too large");
    if (weights.size() < 2 || weights.size() > 4)
        throw Error(Errc::InvalidWeights, "expected 2, 3 or 4 weights");
    WeightSystem ws;
    ws.r = r;
    ws.input = weights;
    int non_units = 0;
    for (std::int64_t w : weights) {
        if (w < 1) throw Error(Errc::InvalidWeights, "weights must be positive");
        ws.m.push_back(mod(w, r));
        ws.gcds.push_back(gcd_mod(w, r));
        if (ws.gcds.back() != 1) ++non_units;
    }
    if (non_units > 1)
        throw Error(Errc::InvalidWeights, "more than one weight shares a factor with r");
    return ws;
}

int WeightSystem::position() const {
    for (int i = 0; i < levels(); ++i)
        if (gcds[i] != 1) return i;
    return -1;
}

std::int64_t WeightSystem::n() const {
    int p = position();
    return p < 0 ? 1 : gcds[p];
}

SkewProductGraph::SkewProductGraph(const WeightSystem& ws) : ws_(ws) {}

std::vector<Vertex> SkewProductGraph::kept_vertices() const {
    std::vector<Vertex> out;
    for (int i = 0; i < levels(); ++i)
        for (std::int64_t b = 0; b < ws_.gcds[i]; ++b) out.push_back({i, b});
    return out;
}

std::vector<std::uint64_t> counts_from(const SkewProductGraph& g, const Vertex& src,
                                       unsigned mask) {
    const std::int64_t r = g.r();
    const auto& m = g.weights().m;
    std::vector<std::uint64_t> cnt(g.vertex_count(), 0), emit(g.vertex_count(), 0);
    mask |= 1u << src.level;
    for (int j = src.level; j < g.levels(); ++j) {
        if (!in_mask(mask, j)) continue;
        auto lower = [&](std::int64_t res) {
            std::uint64_t s = 0;
            for (int i = src.level; i < j; ++i)
                if (in_mask(mask, i)) add_checked(s, emit[i * r + mod(res - m[i], r)]);
            return s;
        };
        for (std::int64_t b = 0; b < g.cycle_count(j); ++b) {
            const Vertex kappa{j, b};
            std::uint64_t prev = (kappa == src) ? 1 : 0;
            emit[g.id(kappa)] = prev;
            std::int64_t res = b;
            for (std::int64_t s = 1; s <= g.cycle_length(j); ++s) {
                res = (res + m[j]) % r;
                const std::size_t w = j * r + res;
                std::uint64_t c = lower(res);
                add_checked(c, prev);
                cnt[w] = c;
                if (s < g.cycle_length(j)) {
                    emit[w] = c;
                    prev = c;
                }
            }
        }
    }
    return cnt;
}

std::vector<std::uint64_t> counts_to(const SkewProductGraph& g, const Vertex& dst,
                                     unsigned mask) {
    const std::int64_t r = g.r();
    const auto& m = g.weights().m;
    std::vector<std::uint64_t> cnt(g.vertex_count(), 0);
    mask |= 1u << dst.level;
    auto value = [&](const Vertex& w) -> std::uint64_t {
        if (w == dst) return 1;
        return g.is_kept(w) ? 0 : cnt[g.id(w)];
    };
    for (int j = dst.level; j >= 0; --j) {
        if (!in_mask(mask, j)) continue;
        for (std::int64_t b = 0; b < g.cycle_count(j); ++b) {
            const std::int64_t len = g.cycle_length(j);
            // walk the cycle backwards from the kept vertex b
            std::int64_t res = mod(b - m[j], r);
            for (std::int64_t s = 0; s < len; ++s) {
                const std::int64_t next = (res + m[j]) % r;
                std::uint64_t c = 0;
                for (int i = j; i <= dst.level; ++i)
                    if (in_mask(mask, i)) add_checked(c, value({i, next}));
                cnt[j * r + res] = c;
                res = mod(res - m[j], r);
            }
        }
    }
    return cnt;
}

Integer count_admissible(const SkewProductGraph& g, const Vertex& from, const Vertex& to) {
    if (!g.is_kept(from) || !g.is_kept(to))
        throw Error(Errc::NotKept, "endpoints must be kept vertices");
    if (from.level > to.level) return 0;
    return Integer(counts_to(g, to)[g.id(from)]);
}

Integer count_through(const SkewProductGraph& g, const Vertex& from, const Vertex& to,
                      unsigned interior) {
    if (!g.is_kept(from) || !g.is_kept(to))
        throw Error(Errc::NotKept, "endpoints must be kept vertices");
    if (from.level > to.level) return 0;
    const unsigned ends = (1u << from.level) | (1u << to.level);
    interior &= ~ends;
    Integer total = 0;
    // inclusion-exclusion over the levels a path is allowed to touch
    for (unsigned t = interior;; t = (t - 1) & interior) {
        Integer c(counts_to(g, to, ends | t)[g.id(from)]);
        if ((std::popcount(interior) - std::popcount(t)) % 2) total -= c;
        else total += c;
        if (t == 0) break;
    }
    return total;
}

Integer count_kstep(const SkewProductGraph& g, const Vertex& from, const Vertex& to, int k) {
    if (k < 1) throw Error(Errc::BadParams, "k must be positive");
    Integer total = 0;
    if (from.level > to.level) return total;
    unsigned between = 0;
    for (int i = from.level + 1; i < to.level; ++i) between |= 1u << i;
    for (unsigned s = between;; s = (s - 1) & between) {
        if (std::popcount(s) == k - 1) total += count_through(g, from, to, s);
        if (s == 0) break;
    }
    return total;
}

IntMatrix LensMatrix::B() const {
    IntMatrix b = A;
    for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, i) -= 1;
    return b;
}

LensMatrix adjacency_by_enumeration(const WeightSystem& ws) {
    SkewProductGraph g(ws);
    LensMatrix out;
    out.ws = ws;
    out.order = g.kept_vertices();
    const int size = static_cast<int>(out.order.size());
    out.A = IntMatrix::Zero(size, size);
    // columns at single-vertex levels: one backward pass each;
    // the remaining entries have a single-vertex level as source
    for (int c = 0; c < size; ++c) {
        const Vertex& t = out.order[c];
        if (g.cycle_count(t.level) != 1) continue;
        auto cnt = counts_to(g, t);
        for (int row = 0; row < size; ++row)
            if (out.order[row].level <= t.level) out.A(row, c) = Integer(cnt[g.id(out.order[row])]);
    }
    for (int row = 0; row < size; ++row) {
        const Vertex& s = out.order[row];
        if (g.cycle_count(s.level) != 1) continue;
        auto cnt = counts_from(g, s);
        for (int c = 0; c < size; ++c)
            if (out.order[c].level > s.level) out.A(row, c) = Integer(cnt[g.id(out.order[c])]);
    }
    for (int i = 0; i < size; ++i) {
        const Vertex& v = out.order[i];
        if (g.cycle_count(v.level) == 1) continue;
        out.A(i, i) = Integer(counts_to(g, v, 1u << v.level)[g.id(v)]);
    }
    return out;
}

} // namespace qlens
