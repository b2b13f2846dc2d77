#ifndef QLENS_SLP_HPP
#define QLENS_SLP_HPP

#include <optional>
#include <string>
#include <vector>

#include "qlens/error.hpp"
#include "qlens/integer.hpp"
#include "qlens/lensgraph.hpp"

namespace qlens {

// i <= j iff i == j or level(i) < level(j)
struct PosetP {
    std::vector<int> level;

    int size() const { return static_cast<int>(level.size()); }
    bool leq(int i, int j) const { return i == j || level[i] < level[j]; }
    bool less(int i, int j) const { return level[i] < level[j]; }
};

// k is 1-based: the level k-1 carries the n parallel elements
PosetP build_poset(std::int64_t n, int dim_index, int k);
PosetP poset_of(const WeightSystem& ws);

template <typename Scalar>
bool is_member(const Matrix<Scalar>& M, const PosetP& P) {
    if (M.rows() != P.size() || M.cols() != P.size()) throw Error(Errc::SizeMismatch, "matrix and poset sizes differ");
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (i == j) {
                if (M(i, j) != 1) return false;
            } else if (M(i, j) != 0 && !(i < j && P.leq(i, j))) {
                return false;
            }
        }
    return true;
}

template <typename Scalar>
bool verify_certificate(const Matrix<Scalar>& U, const Matrix<Scalar>& B, const Matrix<Scalar>& V,
                        const Matrix<Scalar>& target) {
    const Eigen::Index n = B.rows();
    if (B.cols() != n || U.rows() != n || U.cols() != n || V.rows() != n || V.cols() != n ||
        target.rows() != n || target.cols() != n)
        throw Error(Errc::SizeMismatch, "certificate sizes differ");
    const Matrix<Scalar> product = U * B * V;
    return product == target;
}

// inverse of a unit upper triangular matrix
IntMatrix unitriangular_inverse(const IntMatrix& M);

struct SLPCertificate {
    IntMatrix U;
    IntMatrix V;
};

// exact decision of U B V = target over SL_P
std::optional<SLPCertificate> solve_equivalence(const IntMatrix& B, const IntMatrix& target, const PosetP& P);

// certificate with all free entries in [-bound, bound]; nothing when none was
// found, which does not prove the pair inequivalent
std::optional<SLPCertificate> bounded_search(const IntMatrix& B, const IntMatrix& target, const PosetP& P,
                                             int bound);

// entries known only mod r: the MOD_R tags of the closed form, or the
// three-step corner when every weight is a unit
std::vector<std::pair<int, int>> loose_positions(const WeightSystem& ws);

// U and V built from moves that only touch the positions in `loose`,
// requiring exact agreement everywhere else
std::optional<SLPCertificate> structured_certificate(const IntMatrix& B, const IntMatrix& target, const PosetP& P,
                                                     const std::vector<std::pair<int, int>>& loose);

enum class CertMethod { Identity, Structured, Linear, Bounded, None };

const char* method_name(CertMethod m);

struct CertificateResult {
    std::optional<SLPCertificate> certificate;
    CertMethod method = CertMethod::None;
    std::vector<std::string> log;
};

// throws NotIsomorphic when the invariants separate ws and ws_target
CertificateResult find_certificate(const IntMatrix& B, const IntMatrix& target, const WeightSystem& ws,
                                   const WeightSystem& ws_target, int bound = 3);

} // namespace qlens

#endif
