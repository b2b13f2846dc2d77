#ifndef QLENS_INTLINEAR_HPP
#define QLENS_INTLINEAR_HPP

#include <optional>
#include <vector>

#include "qlens/integer.hpp"

namespace qlens {

// An integer x with A x = b, or nothing when none exists. Column Hermite
// reduction by extended-gcd column operations, then forward substitution.
std::optional<std::vector<Integer>> solve_linear(const IntMatrix& A, const std::vector<Integer>& b);

// g = gcd(a, b) = p*a + q*b, g >= 0
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& p, Integer& q);

} // namespace qlens

#endif
