#include "qlens/closedform.hpp"

#include <string>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

namespace qlens {

namespace {

FormulaMatrix blank(std::int64_t r, std::int64_t n, int dim_index, int position) {
    FormulaMatrix f;
    f.r = r;
    f.n = n;
    f.dim_index = dim_index;
    f.position = position;
    const Eigen::Index size = (position < 0 ? 1 : n) + dim_index;
    f.entries = IntMatrix::Identity(size, size);
    f.tags.assign(size * size, EntryTag::Exact);
    return f;
}

void set_mod(FormulaMatrix& f, Eigen::Index i, Eigen::Index j, const Integer& v) {
    f.entries(i, j) = mod(v, Integer(f.r));
    f.tag(i, j) = EntryTag::ModR;
}

void require(const WeightSystem& ws, int dim_index, int position) {
    if (ws.dim_index() != dim_index || ws.position() != position)
        throw Error(Errc::PatternMismatch,
                    "weights do not have a non-unit at level " + std::to_string(position));
}

// inverse mod n of the weight at level i (0 at the non-unit level)
std::int64_t a_of(const WeightSystem& ws, int i) {
    if (i == ws.position()) return 0;
    return mod_inverse(ws.m[i], ws.n()).value;
}

Integer half(std::int64_t r, std::int64_t n) { return exact_div(Integer(r) * (r - n), 2 * n); }
Integer full(std::int64_t r, std::int64_t n) { return exact_div(Integer(r) * (r + n), 2 * n); }

Integer triangular(std::int64_t r) { return exact_div(Integer(r) * (r + 1), 2); }

// k_l with 0 <= v + r*k_l < r
std::int64_t k_of(std::int64_t v, std::int64_t r) { return canonical_shift(v, r).shift; }

} // namespace

Integer exact_div(const Integer& num, const Integer& den) {
    if (den == 0 || num % den != 0)
        throw Error(Errc::Integrality, num.str() + " / " + den.str());
    return num / den;
}

Integer one_step(std::int64_t r, std::int64_t n) {
    if (n < 1 || r % n) throw Error(Errc::InvalidN, "n must divide r");
    return r / n;
}

Integer two_step_into(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t) {
    if (t == 0) return exact_div(Integer(r) * (r + n - 2), 2 * n);
    AuxInteger s = canonical_shift(a * t - 1, n);
    return half(r, n) + Integer(s.value()) * (r / n);
}

Integer two_step_out(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t) {
    if (t == 0) return half(r, n);
    AuxInteger s = canonical_shift(a * t, n);
    return full(r, n) - Integer(s.value()) * (r / n);
}

Integer two_step_out_printed(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t) {
    if (t == 0) return half(r, n);
    AuxInteger s = canonical_shift(a * t, n);
    return half(r, n) - Integer(s.value() - 1) * (r / n);
}

Integer two_step_across(std::int64_t r, std::int64_t n) { return half(r, n); }

FormulaMatrix matrix_dim3(std::int64_t r, std::int64_t n, int position) {
    if (n < 1 || r % n) throw Error(Errc::InvalidN, "n must divide r");
    if (position != 0 && position != 1) throw Error(Errc::BadPosition, "dim 3 has levels 0 and 1");
    FormulaMatrix f = blank(r, n, 1, position);
    const Integer R = r / n;
    for (std::int64_t t = 0; t < n; ++t) {
        if (position == 0) f.entries(t, n) = R;
        else f.entries(0, 1 + t) = R;
    }
    return f;
}

FormulaMatrix matrix_dim5(const WeightSystem& ws) {
    const int k = ws.position();
    if (ws.dim_index() != 2 || k < 0) throw Error(Errc::PatternMismatch, "expected dim 5 with one non-unit");
    const std::int64_t r = ws.r, n = ws.n();
    const Integer R = r / n;
    FormulaMatrix f = blank(r, n, 2, k);
    IntMatrix& A = f.entries;
    if (k == 0) {
        const std::int64_t a1 = a_of(ws, 1);
        for (std::int64_t t = 0; t < n; ++t) {
            A(t, n) = R;
            A(t, n + 1) = R + two_step_out(r, n, a1, t);
        }
        A(n, n + 1) = r;
    } else if (k == 1) {
        for (std::int64_t t = 0; t < n; ++t) {
            A(0, 1 + t) = R;
            A(1 + t, n + 1) = R;
        }
        A(0, n + 1) = full(r, n);
    } else {
        const std::int64_t a1 = a_of(ws, 1);
        A(0, 1) = r;
        for (std::int64_t t = 0; t < n; ++t) {
            A(0, 2 + t) = R + two_step_into(r, n, a1, t);
            A(1, 2 + t) = R;
        }
    }
    return f;
}

FormulaMatrix matrix_dim7_k3(const WeightSystem& ws) {
    require(ws, 3, 3);
    const std::int64_t r = ws.r, n = ws.n();
    const std::int64_t m1 = ws.m[1], m2 = ws.m[2];
    const std::int64_t a1 = a_of(ws, 1), a2 = a_of(ws, 2);
    const Integer R = r / n;
    FormulaMatrix f = blank(r, n, 3, 3);
    IntMatrix& A = f.entries;
    A(0, 1) = r;
    A(0, 2) = triangular(r);
    A(1, 2) = r;
    for (std::int64_t t = 0; t < n; ++t) {
        A(1, 3 + t) = R + two_step_into(r, n, a2, t);
        A(2, 3 + t) = R;
    }

    const std::int64_t c = mod_inverse(m2, r).value * m1;
    auto selected = [&](std::int64_t h, std::int64_t l) { return mod(l - (m2 * a1 * h - 1), n) == 0; };
    // everything below is scaled by 3n
    Integer base = -Integer(c) * r * (r - 2) * (r - 1);
    for (std::int64_t l = 1; l <= r - 2; ++l)
        base += 3 * Integer(l) * r * (1 - k_of(c * (l + 1), r));
    for (std::int64_t h = 0; h < n; ++h)
        for (std::int64_t l = 1; l <= r - 2; ++l)
            if (selected(h, l)) base += 3 * Integer(l) * h;
    const Integer scale = 3 * n;
    for (std::int64_t t = 0; t < n; ++t) {
        Integer x = base;
        if (t == 0) {
            x -= scale * R;
        } else {
            const std::int64_t st = canonical_shift(a2 * t - 1, n).value();
            for (std::int64_t h = st + 1; h < n; ++h)
                for (std::int64_t l = 1; l <= r - 2; ++l)
                    if (selected(h, l)) x -= scale * l;
            x += scale * R * (a2 * t + a1 * t - 1);
        }
        set_mod(f, 0, 3 + t, exact_div(x, scale));
    }
    return f;
}

FormulaMatrix matrix_dim7_k0(const WeightSystem& ws) {
    require(ws, 3, 0);
    const std::int64_t r = ws.r, n = ws.n();
    const std::int64_t m1 = ws.m[1], m2 = ws.m[2];
    const std::int64_t a1 = a_of(ws, 1), a2 = a_of(ws, 2);
    const Integer R = r / n;
    FormulaMatrix f = blank(r, n, 3, 0);
    IntMatrix& A = f.entries;
    for (std::int64_t t = 0; t < n; ++t) {
        A(t, n) = R;
        A(t, n + 1) = R + two_step_out(r, n, a1, t);
    }
    A(n, n + 1) = r;
    A(n, n + 2) = triangular(r);
    A(n + 1, n + 2) = r;

    const std::int64_t c = mod_inverse(m2, r).value * m1;
    auto T3 = [&](std::int64_t l) { return Integer(r) - c * (l + 1) - Integer(r) * k_of(c * (l + 1), r); };
    // scaled by 3n
    Integer base = -Integer(c) * r * (r - 2) * (r - 1);
    for (std::int64_t l = 0; l <= r - 2; ++l)
        base += 3 * Integer(l) * r * (1 - k_of(c * (l + 1), r));
    for (std::int64_t l = 1; l <= r - 2; ++l)
        base -= 3 * Integer(l % n) * T3(l);
    const Integer scale = 3 * n;
    for (std::int64_t t = 0; t < n; ++t) {
        Integer x = base;
        if (t == 0) {
            x += scale * R;
        } else {
            const std::int64_t ct = canonical_shift(a1 * t, n).value();
            for (std::int64_t l = 1; l <= r - 2; ++l)
                if (l % n >= ct) x += scale * T3(l);
            x -= scale * R * (a2 * t + a1 * t - 1);
        }
        set_mod(f, t, n + 2, exact_div(x, scale));
    }
    return f;
}

FormulaMatrix matrix_dim7_k2(const WeightSystem& ws) {
    require(ws, 3, 2);
    const std::int64_t r = ws.r, n = ws.n();
    const std::int64_t a1 = a_of(ws, 1);
    const Integer R = r / n;
    FormulaMatrix f = blank(r, n, 3, 2);
    IntMatrix& A = f.entries;
    A(0, 1) = r;
    for (std::int64_t t = 0; t < n; ++t) {
        A(0, 2 + t) = R + two_step_into(r, n, a1, t);
        A(1, 2 + t) = R;
        A(2 + t, n + 2) = R;
    }
    A(1, n + 2) = full(r, n);
    const Integer inv = mod_inverse(ws.m[1], r).value;
    const Integer num = -2 * inv * ws.m[2] * r * (2 * r - n) * (r - n)
                        + 3 * Integer(n) * inv * r * (r - n) * (n - 1)
                        + 6 * Integer(n) * n * r * (r - 1);
    set_mod(f, 0, n + 2, exact_div(num, 12 * Integer(n) * n));
    return f;
}

FormulaMatrix matrix_dim7_k1(const WeightSystem& ws) {
    require(ws, 3, 1);
    const std::int64_t r = ws.r, n = ws.n();
    const std::int64_t a2 = a_of(ws, 2);
    const Integer R = r / n;
    FormulaMatrix f = blank(r, n, 3, 1);
    IntMatrix& A = f.entries;
    for (std::int64_t t = 0; t < n; ++t) {
        A(0, 1 + t) = R;
        A(1 + t, n + 1) = R;
        A(1 + t, n + 2) = R + two_step_out(r, n, a2, t);
    }
    A(0, n + 1) = full(r, n);
    A(n + 1, n + 2) = r;
    const Integer inv = mod_inverse(ws.m[2], r).value;
    const Integer num = -2 * inv * ws.m[1] * r * (2 * r - n) * (r - n)
                        + 3 * Integer(n) * inv * r * (r - n) * (n - 1)
                        + 6 * Integer(n) * n * r * (r - 1);
    set_mod(f, 0, n + 2, exact_div(num, 12 * Integer(n) * n));
    return f;
}

FormulaMatrix matrix_coprime(const WeightSystem& ws) {
    if (!ws.coprime()) throw Error(Errc::PatternMismatch, "expected all weights to be units");
    const std::int64_t r = ws.r;
    FormulaMatrix f = blank(r, 1, ws.dim_index(), -1);
    IntMatrix& A = f.entries;
    const int size = ws.levels();
    for (int i = 0; i + 1 < size; ++i) A(i, i + 1) = r;
    for (int i = 0; i + 2 < size; ++i) A(i, i + 2) = triangular(r);
    if (size == 4) {
        SkewProductGraph g(ws);
        A(0, 3) = count_admissible(g, {0, 0}, {3, 0});
    }
    return f;
}

FormulaMatrix matrix_dim7_coprime(const WeightSystem& ws) {
    if (ws.dim_index() != 3) throw Error(Errc::PatternMismatch, "expected four weights");
    return matrix_coprime(ws);
}

FormulaMatrix formula_matrix(const WeightSystem& ws) {
    if (ws.coprime()) return matrix_coprime(ws);
    switch (ws.dim_index()) {
    case 1: return matrix_dim3(ws.r, ws.n(), ws.position());
    case 2: return matrix_dim5(ws);
    default: break;
    }
    switch (ws.position()) {
    case 0: return matrix_dim7_k0(ws);
    case 1: return matrix_dim7_k1(ws);
    case 2: return matrix_dim7_k2(ws);
    default: return matrix_dim7_k3(ws);
    }
}

Integer sum_identity_rhs(const WeightSystem& ws) {
    require(ws, 3, 3);
    const std::int64_t r = ws.r;
    const Integer c = mod_inverse(ws.m[2], r).value * Integer(ws.m[1]);
    return mod(-c * exact_div(Integer(r) * (r - 1) * (r - 2), 3), Integer(r));
}

bool agrees(const FormulaMatrix& f, const IntMatrix& a) {
    if (a.rows() != f.size() || a.cols() != f.size()) return false;
    const Integer r = f.r;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (f.tag(i, j) == EntryTag::Exact) {
                if (f.entries(i, j) != a(i, j)) return false;
            } else if (mod(f.entries(i, j) - a(i, j), r) != 0) {
                return false;
            }
        }
    return true;
}

} // namespace qlens
