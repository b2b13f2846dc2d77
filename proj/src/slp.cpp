#include "qlens/slp.hpp"

#include <algorithm>
#include <map>

#include "qlens/classify.hpp"
#include "qlens/closedform.hpp"
#include "qlens/intlinear.hpp"

namespace qlens {

namespace {

using Terms = std::vector<std::pair<int, Integer>>;

struct Equation {
    Terms terms;
    Integer rhs;
};

Integer digit_value(int idx) {
    // 0, 1, -1, 2, -2, ...
    return idx == 0 ? Integer(0) : (idx % 2 ? Integer((idx + 1) / 2) : -Integer(idx / 2));
}

// depth-first search with unit propagation; first solution in value order wins
bool solve_bounded(const std::vector<Equation>& eqs, std::vector<std::optional<Integer>>& x, int bound) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const Equation& e : eqs) {
            Integer sum = 0;
            int open = -1, count = 0;
            for (const auto& [v, c] : e.terms) {
                if (x[v]) sum += c * *x[v];
                else {
                    open = v;
                    ++count;
                }
            }
            if (count == 0) {
                if (sum != e.rhs) return false;
            } else if (count == 1) {
                Integer c = 0;
                for (const auto& [v, cv] : e.terms)
                    if (v == open) c += cv;
                const Integer rest = e.rhs - sum;
                if (c == 0) continue;
                if (rest % c != 0) return false;
                const Integer val = rest / c;
                if (abs(val) > bound) return false;
                x[open] = val;
                changed = true;
            }
        }
    }
    auto it = std::find_if(x.begin(), x.end(), [](const auto& v) { return !v.has_value(); });
    if (it == x.end()) return true;
    for (int idx = 0; idx <= 2 * bound; ++idx) {
        auto trial = x;
        trial[it - x.begin()] = digit_value(idx);
        if (solve_bounded(eqs, trial, bound)) {
            x = std::move(trial);
            return true;
        }
    }
    return false;
}

// odometer over [0, top]^f, last coordinate fastest; false after the last vector
bool advance(std::vector<int>& idx, int top) {
    for (std::size_t pos = idx.size(); pos > 0; --pos) {
        if (idx[pos - 1] < top) {
            ++idx[pos - 1];
            return true;
        }
        idx[pos - 1] = 0;
    }
    return false;
}

bool column_nonzero(const IntMatrix& M, Eigen::Index c) {
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        if (M(i, c) != 0) return true;
    return false;
}

bool row_nonzero(const IntMatrix& M, Eigen::Index r) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        if (M(r, j) != 0) return true;
    return false;
}

// V with C V = target, entries bounded
std::optional<IntMatrix> solve_right(const IntMatrix& C, const IntMatrix& target, const PosetP& P, int bound) {
    const int N = P.size();
    IntMatrix V = IntMatrix::Identity(N, N);
    for (int q = 0; q < N; ++q) {
        std::vector<int> vars;
        for (int s = 0; s < N; ++s)
            if (P.less(s, q) && column_nonzero(C, s)) vars.push_back(s);
        std::vector<Equation> eqs;
        for (int p = 0; p < N; ++p) {
            Equation e;
            e.rhs = target(p, q) - C(p, q);
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (C(p, vars[v]) != 0) e.terms.emplace_back(static_cast<int>(v), C(p, vars[v]));
            if (!e.terms.empty() || e.rhs != 0) eqs.push_back(std::move(e));
        }
        std::vector<std::optional<Integer>> x(vars.size());
        if (!solve_bounded(eqs, x, bound)) return std::nullopt;
        for (std::size_t v = 0; v < vars.size(); ++v) V(vars[v], q) = *x[v];
    }
    return V;
}

// U with U C = target, entries bounded
std::optional<IntMatrix> solve_left(const IntMatrix& C, const IntMatrix& target, const PosetP& P, int bound) {
    const int N = P.size();
    IntMatrix U = IntMatrix::Identity(N, N);
    for (int p = 0; p < N; ++p) {
        std::vector<int> vars;
        for (int a = 0; a < N; ++a)
            if (P.less(p, a) && row_nonzero(C, a)) vars.push_back(a);
        std::vector<Equation> eqs;
        for (int q = 0; q < N; ++q) {
            Equation e;
            e.rhs = target(p, q) - C(p, q);
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (C(vars[v], q) != 0) e.terms.emplace_back(static_cast<int>(v), C(vars[v], q));
            if (!e.terms.empty() || e.rhs != 0) eqs.push_back(std::move(e));
        }
        std::vector<std::optional<Integer>> x(vars.size());
        if (!solve_bounded(eqs, x, bound)) return std::nullopt;
        for (std::size_t v = 0; v < vars.size(); ++v) U(p, vars[v]) = *x[v];
    }
    return U;
}

} // namespace

std::vector<std::pair<int, int>> loose_positions(const WeightSystem& ws) {
    std::vector<std::pair<int, int>> out;
    if (ws.coprime()) {
        if (ws.levels() == 4) out.emplace_back(0, 3);
        return out;
    }
    const FormulaMatrix f = formula_matrix(ws);
    for (Eigen::Index i = 0; i < f.size(); ++i)
        for (Eigen::Index j = 0; j < f.size(); ++j)
            if (f.tag(i, j) == EntryTag::ModR) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

PosetP build_poset(std::int64_t n, int dim_index, int k) {
    if (dim_index < 1 || k < 1 || k > dim_index + 1) throw Error(Errc::BadPosition, "k outside 1..dim_index+1");
    if (n < 1) throw Error(Errc::BadParams, "n must be positive");
    PosetP P;
    for (int level = 0; level <= dim_index; ++level)
        for (std::int64_t b = 0; b < (level == k - 1 ? n : 1); ++b) P.level.push_back(level);
    return P;
}

PosetP poset_of(const WeightSystem& ws) {
    return build_poset(ws.n(), ws.dim_index(), ws.coprime() ? 1 : ws.position() + 1);
}

IntMatrix unitriangular_inverse(const IntMatrix& M) {
    const Eigen::Index n = M.rows();
    IntMatrix X = IntMatrix::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j - 1; i >= 0; --i) {
            Integer s = 0;
            for (Eigen::Index k = i + 1; k <= j; ++k)
                if (M(i, k) != 0) s += M(i, k) * X(k, j);
            X(i, j) = -s;
        }
    return X;
}

std::optional<SLPCertificate> solve_equivalence(const IntMatrix& B, const IntMatrix& target, const PosetP& P) {
    const int N = P.size();
    if (B.rows() != N || B.cols() != N || target.rows() != N || target.cols() != N)
        throw Error(Errc::SizeMismatch, "matrix and poset sizes differ");
    // U B = target W, with W = V^{-1}
    std::vector<std::pair<int, int>> ue, we;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (P.less(i, j)) {
                if (row_nonzero(B, j)) ue.emplace_back(i, j);
                if (column_nonzero(target, i)) we.emplace_back(i, j);
            }
    const int nv = static_cast<int>(ue.size() + we.size());
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> rhs;
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            std::vector<Integer> row(nv, 0);
            bool any = false;
            for (std::size_t e = 0; e < ue.size(); ++e)
                if (ue[e].first == p && B(ue[e].second, q) != 0) {
                    row[e] += B(ue[e].second, q);
                    any = true;
                }
            for (std::size_t e = 0; e < we.size(); ++e)
                if (we[e].second == q && target(p, we[e].first) != 0) {
                    row[ue.size() + e] -= target(p, we[e].first);
                    any = true;
                }
            const Integer c = target(p, q) - B(p, q);
            if (any || c != 0) {
                rows.push_back(std::move(row));
                rhs.push_back(c);
            }
        }
    IntMatrix U = IntMatrix::Identity(N, N), W = IntMatrix::Identity(N, N);
    if (!rows.empty()) {
        IntMatrix A(static_cast<Eigen::Index>(rows.size()), nv);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < nv; ++j) A(i, j) = rows[i][j];
        auto x = solve_linear(A, rhs);
        if (!x) return std::nullopt;
        for (std::size_t e = 0; e < ue.size(); ++e) U(ue[e].first, ue[e].second) = (*x)[e];
        for (std::size_t e = 0; e < we.size(); ++e) W(we[e].first, we[e].second) = (*x)[ue.size() + e];
    }
    SLPCertificate cert{U, unitriangular_inverse(W)};
    if (!verify_certificate(cert.U, B, cert.V, target)) return std::nullopt;
    return cert;
}

std::optional<SLPCertificate> bounded_search(const IntMatrix& B, const IntMatrix& target, const PosetP& P,
                                             int bound) {
    const int N = P.size();
    if (B.rows() != N || B.cols() != N || target.rows() != N || target.cols() != N)
        throw Error(Errc::SizeMismatch, "matrix and poset sizes differ");
    if (bound < 0) throw Error(Errc::BadParams, "bound must be non-negative");
    if (B == target) return SLPCertificate{IntMatrix::Identity(N, N), IntMatrix::Identity(N, N)};
    // no integer solution at all means no bounded one either
    if (!solve_equivalence(B, target, P)) return std::nullopt;

    std::vector<std::pair<int, int>> fu, fv;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (P.less(i, j)) {
                if (row_nonzero(B, j)) fu.emplace_back(i, j);
                if (column_nonzero(B, i)) fv.emplace_back(i, j);
            }
    const bool enumerate_u = fu.size() <= fv.size();
    const auto& free = enumerate_u ? fu : fv;
    const std::size_t f = free.size();

    std::vector<int> idx(f, 0);
    for (int shell = 0; shell <= bound; ++shell) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            int top = 0;
            for (int d : idx) top = std::max(top, (d + 1) / 2);
            if (top == shell) {
                IntMatrix M = IntMatrix::Identity(N, N);
                for (std::size_t e = 0; e < f; ++e) M(free[e].first, free[e].second) = digit_value(idx[e]);
                if (enumerate_u) {
                    const IntMatrix C = M * B;
                    if (auto V = solve_right(C, target, P, bound); V && verify_certificate(M, B, *V, target))
                        return SLPCertificate{M, *V};
                } else {
                    const IntMatrix C = B * M;
                    if (auto U = solve_left(C, target, P, bound); U && verify_certificate(*U, B, M, target))
                        return SLPCertificate{*U, M};
                }
            }
            if (!advance(idx, 2 * shell)) break;
        }
    }
    return std::nullopt;
}

std::optional<SLPCertificate> structured_certificate(const IntMatrix& B, const IntMatrix& target, const PosetP& P,
                                                     const std::vector<std::pair<int, int>>& loose) {
    const int N = P.size();
    if (B.rows() != N || target.rows() != N) throw Error(Errc::SizeMismatch, "matrix and poset sizes differ");
    std::map<std::pair<int, int>, int> row_of;
    for (const auto& e : loose) row_of.emplace(e, static_cast<int>(row_of.size()));
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            if (!row_of.count({p, q}) && B(p, q) != target(p, q)) return std::nullopt;

    struct Move {
        bool row;
        int a, b;
        std::vector<std::pair<int, Integer>> effect;   // loose row index, coefficient
    };
    std::vector<Move> moves;
    for (int p = 0; p < N; ++p)
        for (int s = 0; s < N; ++s) {
            if (!P.less(p, s)) continue;
            // row p += c * row s
            Move mv{true, p, s, {}};
            bool ok = row_nonzero(B, s);
            for (int q = 0; q < N && ok; ++q)
                if (B(s, q) != 0) {
                    auto it = row_of.find({p, q});
                    if (it == row_of.end()) ok = false;
                    else mv.effect.emplace_back(it->second, B(s, q));
                }
            if (ok) moves.push_back(std::move(mv));
        }
    for (int s = 0; s < N; ++s)
        for (int q = 0; q < N; ++q) {
            if (!P.less(s, q)) continue;
            // column q += d * column s
            Move mv{false, s, q, {}};
            bool ok = column_nonzero(B, s);
            for (int p = 0; p < N && ok; ++p)
                if (B(p, s) != 0) {
                    auto it = row_of.find({p, q});
                    if (it == row_of.end()) ok = false;
                    else mv.effect.emplace_back(it->second, B(p, s));
                }
            if (ok) moves.push_back(std::move(mv));
        }

    std::vector<Integer> rhs(row_of.size());
    for (const auto& [e, i] : row_of) rhs[i] = target(e.first, e.second) - B(e.first, e.second);
    IntMatrix U = IntMatrix::Identity(N, N), V = IntMatrix::Identity(N, N);
    if (!moves.empty() && !row_of.empty()) {
        IntMatrix A = IntMatrix::Zero(static_cast<Eigen::Index>(row_of.size()), static_cast<Eigen::Index>(moves.size()));
        for (std::size_t m = 0; m < moves.size(); ++m)
            for (const auto& [i, c] : moves[m].effect) A(i, m) += c;
        auto x = solve_linear(A, rhs);
        if (!x) return std::nullopt;
        for (std::size_t m = 0; m < moves.size(); ++m) {
            if (moves[m].row) U(moves[m].a, moves[m].b) += (*x)[m];
            else V(moves[m].a, moves[m].b) += (*x)[m];
        }
    }
    if (!verify_certificate(U, B, V, target)) return std::nullopt;
    return SLPCertificate{U, V};
}

const char* method_name(CertMethod m) {
    switch (m) {
    case CertMethod::Identity: return "identity";
    case CertMethod::Structured: return "structured";
    case CertMethod::Linear: return "linear";
    case CertMethod::Bounded: return "bounded";
    case CertMethod::None: return "none";
    }
    return "none";
}

CertificateResult find_certificate(const IntMatrix& B, const IntMatrix& target, const WeightSystem& ws,
                                   const WeightSystem& ws_target, int bound) {
    if (!invariant_terms(ws, ws_target).isomorphic)
        throw Error(Errc::NotIsomorphic, "invariants differ");
    CertificateResult res;
    const PosetP P = poset_of(ws);
    const int N = P.size();
    if (B.rows() != N || target.rows() != N) throw Error(Errc::SizeMismatch, "matrix and poset sizes differ");
    if (B == target) {
        res.certificate = SLPCertificate{IntMatrix::Identity(N, N), IntMatrix::Identity(N, N)};
        res.method = CertMethod::Identity;
        return res;
    }
    if ((res.certificate = structured_certificate(B, target, P, loose_positions(ws)))) {
        res.method = CertMethod::Structured;
        return res;
    }
    res.log.push_back("structured solve failed; trying the full linear system");
    if ((res.certificate = solve_equivalence(B, target, P))) {
        res.method = CertMethod::Linear;
        return res;
    }
    res.log.push_back("linear system has no integer solution; trying bounded search");
    if ((res.certificate = bounded_search(B, target, P, bound))) {
        res.method = CertMethod::Bounded;
        return res;
    }
    res.log.push_back("no certificate found");
    return res;
}

} // namespace qlens
