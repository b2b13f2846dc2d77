#include "qlens/intlinear.hpp"

#include "qlens/error.hpp"

namespace qlens {

void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& p, Integer& q) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer quo = old_r / r;
        Integer tmp = old_r - quo * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quo * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quo * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    p = old_s;
    q = old_t;
}

std::optional<std::vector<Integer>> solve_linear(const IntMatrix& A, const std::vector<Integer>& b) {
    const Eigen::Index m = A.rows(), nv = A.cols();
    if (static_cast<Eigen::Index>(b.size()) != m) throw Error(Errc::SizeMismatch, "rhs length");
    IntMatrix M = A;
    IntMatrix Q = IntMatrix::Identity(nv, nv);
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < m && col < nv; ++i) {
        for (Eigen::Index j = col + 1; j < nv; ++j) {
            if (M(i, j) == 0) continue;
            Integer g, p, q;
            const Integer a = M(i, col), c = M(i, j);
            extended_gcd(a, c, g, p, q);
            const Integer u = c / g, v = a / g;
            // [col j] <- [col j] * [[p, -u], [q, v]], determinant 1
            for (Eigen::Index r = 0; r < m; ++r) {
                Integer x = M(r, col), y = M(r, j);
                M(r, col) = p * x + q * y;
                M(r, j) = v * y - u * x;
            }
            for (Eigen::Index r = 0; r < nv; ++r) {
                Integer x = Q(r, col), y = Q(r, j);
                Q(r, col) = p * x + q * y;
                Q(r, j) = v * y - u * x;
            }
        }
        if (M(i, col) != 0) {
            pivots.emplace_back(i, col);
            ++col;
        }
    }
    std::vector<Integer> y(nv, 0);
    std::size_t next = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        Integer rem = b[i];
        for (Eigen::Index c = 0; c < col; ++c)
            if (y[c] != 0) rem -= M(i, c) * y[c];
        if (next < pivots.size() && pivots[next].first == i) {
            const Integer& piv = M(i, pivots[next].second);
            if (rem % piv != 0) return std::nullopt;
            y[pivots[next].second] = rem / piv;
            ++next;
        } else if (rem != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(nv, 0);
    for (Eigen::Index r = 0; r < nv; ++r)
        for (Eigen::Index c = 0; c < col; ++c)
            if (y[c] != 0) x[r] += Q(r, c) * y[c];
    return x;
}

} // namespace qlens
