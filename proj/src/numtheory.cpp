#include "qlens/numtheory.hpp"

#include <numeric>
#include <string>

#include "qlens/error.hpp"
#include "qlens/integer.hpp"

namespace qlens {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

std::int64_t gcd_mod(std::int64_t m, std::int64_t r) {
    std::int64_t x = mod(m, r);
    return x == 0 ? r : std::gcd(x, r);
}

Residue mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw Error(Errc::BadParams, "modulus must be positive");
    if (m == 1) return {0, 1};
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw Error(Errc::NotInvertible,
                    std::to_string(a) + " mod " + std::to_string(m));
    return {mod(old_s, m), m};
}

AuxInteger canonical_shift(std::int64_t x, std::int64_t m) {
    if (m < 1) throw Error(Errc::BadParams, "modulus must be positive");
    AuxInteger out;
    out.base = x;
    out.modulus = m;
    out.shift = (mod(x, m) - x) / m;
    return out;
}

std::vector<Residue> units_group(std::int64_t n) {
    if (n < 1) throw Error(Errc::BadParams, "n must be positive");
    std::vector<Residue> out;
    if (n == 1) {
        out.push_back({0, 1});
        return out;
    }
    for (std::int64_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) out.push_back({u, n});
    return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw Error(Errc::BadParams, "n must be positive");
    std::int64_t out = n;
    for (std::int64_t p : prime_factors(n)) out = out / p * (p - 1);
    return out;
}

std::int64_t coprime_lift(std::int64_t k, std::int64_t n, std::int64_t r) {
    if (n < 1 || r < 1 || r % n != 0)
        throw Error(Errc::BadParams, "n must divide r");
    if (std::gcd(mod(k, n), n) != 1 && n > 1)
        throw Error(Errc::NotInvertible, "k must be a unit mod n");
    std::int64_t p = 1;
    for (std::int64_t q : prime_factors(r))
        if (k % q != 0 && n % q != 0) p *= q;
    return n * p + k;
}

int valuation(std::int64_t n, std::int64_t p) {
    int d = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++d;
    }
    return d;
}

std::int64_t three_adic_adjust(std::int64_t m, std::int64_t r) {
    if (r < 1 || r % 3 != 0)
        throw Error(Errc::ThreeDoesNotDivide, "r = " + std::to_string(r));
    std::int64_t step = r;
    for (int d = valuation(r, 3); d > 0; --d) step /= 3;
    // both candidates leave the class of m mod 3; keep the one that stays a unit
    std::int64_t a = m + step;
    if (mod(a, 3) != 0) return a;
    return m + 2 * step;
}

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::NotKept: return "NotKept";
    case Errc::BadPosition: return "BadPosition";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotIsomorphic: return "NotIsomorphic";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::BadParams: return "BadParams";
    case Errc::InvalidN: return "InvalidN";
    case Errc::ThreeDoesNotDivide: return "ThreeDoesNotDivide";
    case Errc::Integrality: return "Integrality";
    case Errc::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace qlens
