#ifndef QLENS_NUMTHEORY_HPP
#define QLENS_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace qlens {

// Residue moduli stay far below 2^31, so products of two residues fit in
// int64; anything that grows (path counts, formula sums) uses Integer.

struct Residue {
    std::int64_t value = 0;
    std::int64_t modulus = 1;
};

// base + shift*modulus is the representative of base in [0, modulus)
struct AuxInteger {
    std::int64_t base = 0;
    std::int64_t shift = 0;
    std::int64_t modulus = 1;
    std::int64_t value() const { return base + shift * modulus; }
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

// gcd(m mod r, r) with the convention gcd(0, r) = r
std::int64_t gcd_mod(std::int64_t m, std::int64_t r);

Residue mod_inverse(std::int64_t a, std::int64_t m);

AuxInteger canonical_shift(std::int64_t x, std::int64_t m);

std::vector<Residue> units_group(std::int64_t n);

std::vector<std::int64_t> prime_factors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

std::int64_t coprime_lift(std::int64_t k, std::int64_t n, std::int64_t r);

// multiplicity of p in n
int valuation(std::int64_t n, std::int64_t p);

std::int64_t three_adic_adjust(std::int64_t m, std::int64_t r);

} // namespace qlens

#endif
