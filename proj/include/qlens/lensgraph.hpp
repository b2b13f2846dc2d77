#ifndef QLENS_LENSGRAPH_HPP
#define QLENS_LENSGRAPH_HPP

#include <cstdint>
#include <vector>

#include "qlens/integer.hpp"

namespace qlens {

struct WeightSystem {
    std::int64_t r = 0;
    std::vector<std::int64_t> input;   // as given
    std::vector<std::int64_t> m;       // reduced mod r
    std::vector<std::int64_t> gcds;    // gcd(m_i, r), with gcd(0, r) = r

    static WeightSystem make(std::int64_t r, const std::vector<std::int64_t>& weights);

    int dim_index() const { return static_cast<int>(m.size()) - 1; }
    int levels() const { return static_cast<int>(m.size()); }
    int dimension() const { return 2 * dim_index() + 1; }
    // level whose gcd differs from 1, or -1 when all weights are units
    int position() const;
    std::int64_t n() const;
    bool coprime() const { return position() < 0; }
};

struct Vertex {
    int level = 0;
    std::int64_t residue = 0;
    bool operator==(const Vertex&) const = default;
};

class SkewProductGraph {
public:
    explicit SkewProductGraph(const WeightSystem& ws);

    const WeightSystem& weights() const { return ws_; }
    std::int64_t r() const { return ws_.r; }
    int levels() const { return ws_.levels(); }
    std::size_t vertex_count() const { return static_cast<std::size_t>(levels()) * ws_.r; }
    std::size_t id(const Vertex& v) const { return static_cast<std::size_t>(v.level) * ws_.r + v.residue; }

    bool is_kept(const Vertex& v) const { return v.residue < ws_.gcds[v.level]; }
    // range of the edges (e_ij, k) leaving v, for every j >= level(v)
    std::int64_t step(const Vertex& v) const { return (v.residue + ws_.m[v.level]) % ws_.r; }
    std::int64_t cycle_count(int level) const { return ws_.gcds[level]; }
    std::int64_t cycle_length(int level) const { return ws_.r / ws_.gcds[level]; }

    // level-major, residue order b = 0..gcd-1 within a level
    std::vector<Vertex> kept_vertices() const;

private:
    WeightSystem ws_;
};

// Level masks restrict which levels a path may touch.
constexpr unsigned all_levels = ~0u;

// cnt[id(w)] = admissible paths from src ending at w (interior avoids kept vertices)
std::vector<std::uint64_t> counts_from(const SkewProductGraph& g, const Vertex& src,
                                       unsigned mask = all_levels);

// cnt[id(u)] = admissible paths from u ending at dst
std::vector<std::uint64_t> counts_to(const SkewProductGraph& g, const Vertex& dst,
                                     unsigned mask = all_levels);

Integer count_admissible(const SkewProductGraph& g, const Vertex& from, const Vertex& to);

// paths whose levels, other than those of the endpoints, are exactly `interior`
Integer count_through(const SkewProductGraph& g, const Vertex& from, const Vertex& to,
                      unsigned interior);

Integer count_kstep(const SkewProductGraph& g, const Vertex& from, const Vertex& to, int k);

struct LensMatrix {
    WeightSystem ws;
    std::vector<Vertex> order;
    IntMatrix A;

    IntMatrix B() const;
    int level(int index) const { return order[index].level; }
};

LensMatrix adjacency_by_enumeration(const WeightSystem& ws);

} // namespace qlens

#endif
