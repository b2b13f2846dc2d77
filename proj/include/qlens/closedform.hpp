#ifndef QLENS_CLOSEDFORM_HPP
#define QLENS_CLOSEDFORM_HPP

#include <cstdint>
#include <vector>

#include "qlens/integer.hpp"
#include "qlens/lensgraph.hpp"

namespace qlens {

enum class EntryTag { Exact, ModR };

struct FormulaMatrix {
    std::int64_t r = 0;
    std::int64_t n = 1;
    int dim_index = 0;
    int position = -1;   // -1: all weights units
    IntMatrix entries;
    std::vector<EntryTag> tags;   // row-major

    Eigen::Index size() const { return entries.rows(); }
    EntryTag tag(Eigen::Index i, Eigen::Index j) const { return tags[i * size() + j]; }
    EntryTag& tag(Eigen::Index i, Eigen::Index j) { return tags[i * size() + j]; }
};

// num / den, throwing Integrality unless den divides num
Integer exact_div(const Integer& num, const Integer& den);

// path counts between a unit level and the level with n kept vertices;
// a is the inverse mod n of the weight at the intermediate unit level
Integer one_step(std::int64_t r, std::int64_t n);
Integer two_step_into(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t);
Integer two_step_out(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t);
Integer two_step_across(std::int64_t r, std::int64_t n);
// the simplified closed form as printed, which differs from two_step_out for t != 0
Integer two_step_out_printed(std::int64_t r, std::int64_t n, std::int64_t a, std::int64_t t);

FormulaMatrix matrix_dim3(std::int64_t r, std::int64_t n, int position);
FormulaMatrix matrix_dim5(const WeightSystem& ws);
FormulaMatrix matrix_dim7_k0(const WeightSystem& ws);
FormulaMatrix matrix_dim7_k1(const WeightSystem& ws);
FormulaMatrix matrix_dim7_k2(const WeightSystem& ws);
FormulaMatrix matrix_dim7_k3(const WeightSystem& ws);
// all weights units; the dim-7 corner comes from enumeration
FormulaMatrix matrix_coprime(const WeightSystem& ws);
FormulaMatrix matrix_dim7_coprime(const WeightSystem& ws);

FormulaMatrix formula_matrix(const WeightSystem& ws);

// mod-r value of the coprime invariant c * r(r-1)(r-2)/3 used for k=3
Integer sum_identity_rhs(const WeightSystem& ws);

// MOD_R entries compared mod r, the rest exactly
bool agrees(const FormulaMatrix& f, const IntMatrix& a);

} // namespace qlens

#endif
