#include "qlens/classify.hpp"

#include <algorithm>
#include <string>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

namespace qlens {

namespace {

std::int64_t ratio(const WeightSystem& ws) {
    const std::int64_t r = ws.r;
    if (ws.position() == 2) return mod(mod_inverse(ws.m[1], r).value * ws.m[2], r);
    return mod(mod_inverse(ws.m[2], r).value * ws.m[1], r);
}

// r(r-1)(r-2)/3 mod r
std::int64_t cube_term(std::int64_t r) {
    const __int128 v = static_cast<__int128>(r) * (r - 1) * (r - 2) / 3;
    return static_cast<std::int64_t>(v % r);
}

int lens_dim(int dim_index) { return 2 * dim_index + 1; }

void check_dim(const WeightSystem& a, const WeightSystem& b, int dim_index) {
    if (a.dim_index() != dim_index || b.dim_index() != dim_index)
        throw Error(Errc::PatternMismatch, "expected dimension " + std::to_string(lens_dim(dim_index)));
}

} // namespace

bool same_pattern(const WeightSystem& a, const WeightSystem& b) {
    return a.r == b.r && a.dim_index() == b.dim_index() && a.position() == b.position() && a.n() == b.n();
}

InvariantTerms invariant_terms(const WeightSystem& a, const WeightSystem& b) {
    if (!same_pattern(a, b)) throw Error(Errc::PatternMismatch, "different r, dimension or gcd pattern");
    InvariantTerms t;
    t.dim_index = a.dim_index();
    t.position = a.position();
    t.r = a.r;
    t.n = a.n();
    auto congruent = [&](int level) {
        t.congruences.push_back({level, mod(a.m[level] - b.m[level], t.n) == 0});
        return t.congruences.back().holds;
    };
    if (t.dim_index == 1 || (t.position < 0 && t.dim_index == 2)) {
        t.isomorphic = true;
        return t;
    }
    if (t.dim_index == 2) {
        t.isomorphic = t.position == 1 || congruent(1);
        return t;
    }
    t.ratio_lhs = ratio(a);
    t.ratio_rhs = ratio(b);
    t.coprime_term = static_cast<std::int64_t>(
        static_cast<__int128>(mod(t.ratio_rhs - t.ratio_lhs, t.r)) * cube_term(t.r) % t.r);
    bool ok = t.coprime_term == 0;
    switch (t.position) {
    case 0:
    case 3:
        ok = congruent(1) && ok;
        ok = congruent(2) && ok;
        break;
    case 1: ok = congruent(2) && ok; break;
    case 2: ok = congruent(1) && ok; break;
    default: break;
    }
    t.isomorphic = ok;
    return t;
}

bool isomorphic_dim3(const WeightSystem& a, const WeightSystem& b) {
    check_dim(a, b, 1);
    return invariant_terms(a, b).isomorphic;
}

bool isomorphic_dim5(const WeightSystem& a, const WeightSystem& b) {
    check_dim(a, b, 2);
    return invariant_terms(a, b).isomorphic;
}

bool isomorphic_dim7(const WeightSystem& a, const WeightSystem& b) {
    check_dim(a, b, 3);
    return invariant_terms(a, b).isomorphic;
}

bool isomorphic(const WeightSystem& a, const WeightSystem& b) {
    return invariant_terms(a, b).isomorphic;
}

Weights canonical_representative(const WeightSystem& ws) {
    const std::int64_t r = ws.r, n = ws.n();
    const int p = ws.position();
    const int levels = ws.levels();
    if (p < 0) {
        Weights shape(levels, 1);
        if (levels < 4) return shape;
        for (std::int64_t k2 : {std::int64_t{1}, r - 1}) {
            shape[2] = k2;
            if (isomorphic(ws, WeightSystem::make(r, shape))) return shape;
        }
        throw Error(Errc::PatternMismatch, "no all-unit representative found");
    }
    // free slots take the smallest unit lift; the rest are 1, the non-unit is n
    Weights shape(levels, 1);
    shape[p] = n;
    std::vector<int> free;
    if (levels == 3 && p != 1) free.push_back(1);
    if (levels == 4) {
        if (p != 1) free.push_back(1);
        if (p != 2) free.push_back(2);
    }
    std::vector<std::int64_t> lifts;
    for (std::int64_t k = 1; k <= r; ++k)
        if (gcd(k, r) == 1) lifts.push_back(k);
    Weights best;
    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == free.size()) return isomorphic(ws, WeightSystem::make(r, shape));
        for (std::int64_t k : lifts) {
            if (mod(k - ws.m[free[i]], n) != 0) continue;
            shape[free[i]] = k;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    if (!search(search, 0)) throw Error(Errc::PatternMismatch, "no representative of the required shape");
    return shape;
}

std::int64_t count_classes(std::int64_t r, std::int64_t n, int dim, int position) {
    if (r < 2 || n < 1 || r % n != 0) throw Error(Errc::BadParams, "n must divide r");
    if (dim != 3 && dim != 5 && dim != 7) throw Error(Errc::BadParams, "dim must be 3, 5 or 7");
    const int levels = (dim + 1) / 2;
    if (n > 1 && (position < 0 || position >= levels)) throw Error(Errc::BadPosition, "position out of range");
    if (n == 1) return dim == 7 && r % 3 == 0 ? 2 : 1;
    const std::int64_t u = euler_phi(n);
    if (dim == 3) return 1;
    if (dim == 5) return position == 1 ? 1 : u;
    const std::int64_t base = (position == 0 || position == 3) ? u * u : u;
    if (r % 3 == 0 && n % 3 != 0) return 2 * base;
    return base;
}

std::vector<Weights> in_scope_tuples(std::int64_t r, std::int64_t n, int dim, int position) {
    const int levels = (dim + 1) / 2;
    std::vector<std::int64_t> units, special;
    for (std::int64_t k = 1; k <= r; ++k) {
        if (gcd(k, r) == 1) units.push_back(k);
        if (gcd_mod(k, r) == n) special.push_back(k);
    }
    std::vector<Weights> out;
    Weights w(levels);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == levels) {
            out.push_back(w);
            return;
        }
        const auto& pool = (n > 1 && i == position) ? special : units;
        for (std::int64_t k : pool) {
            w[i] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

ClassReport enumerate_classes(std::int64_t r, std::int64_t n, int dim, int position) {
    ClassReport rep;
    rep.r = r;
    rep.n = n;
    rep.dim = dim;
    rep.position = n > 1 ? position : -1;
    rep.predicted_count = count_classes(r, n, dim, position);
    std::vector<WeightSystem> heads;
    for (const Weights& w : in_scope_tuples(r, n, dim, position)) {
        WeightSystem ws = WeightSystem::make(r, w);
        std::size_t c = 0;
        while (c < heads.size() && !isomorphic(heads[c], ws)) ++c;
        if (c == heads.size()) {
            heads.push_back(ws);
            rep.classes.push_back({canonical_representative(ws), {}});
        }
        rep.classes[c].members.push_back(w);
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ClassEntry& a, const ClassEntry& b) { return a.representative < b.representative; });
    if (static_cast<std::int64_t>(rep.classes.size()) != rep.predicted_count)
        throw Error(Errc::CountMismatch, "observed " + std::to_string(rep.classes.size()) + " classes, expected " +
                                             std::to_string(rep.predicted_count));
    return rep;
}

} // namespace qlens
