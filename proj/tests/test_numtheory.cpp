#include <doctest.h>

#include <numeric>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

using namespace qlens;

TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(1, 5).value == 1);
    CHECK(mod_inverse(3, 7).value == 5);
    CHECK(mod_inverse(5, 12).value == 5);
    CHECK(mod_inverse(-1, 7).value == 6);
    CHECK(mod_inverse(4, 1).value == 0);
    CHECK_THROWS_AS(mod_inverse(2, 4), Error);
    try {
        mod_inverse(6, 9);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInvertible);
    }
}

TEST_CASE("mod_inverse agrees with search for every unit up to 200") {
    for (std::int64_t m = 2; m <= 200; ++m)
        for (std::int64_t a = 0; a < m; ++a) {
            std::int64_t found = -1;
            for (std::int64_t b = 0; b < m; ++b)
                if (a * b % m == 1) found = b;
            if (found < 0) {
                CHECK_THROWS_AS(mod_inverse(a, m), Error);
            } else {
                const Residue inv = mod_inverse(a, m);
                REQUIRE(inv.value == found);
                REQUIRE(inv.modulus == m);
            }
        }
}

TEST_CASE("canonical_shift") {
    CHECK(canonical_shift(0, 3).shift == 0);
    CHECK(canonical_shift(-1, 3).shift == 1);
    CHECK(canonical_shift(-1, 3).value() == 2);
    const AuxInteger s = canonical_shift(1 * 1 - 1, 3);
    CHECK(s.shift == 0);
    CHECK(s.value() == 0);
    for (std::int64_t m = 1; m <= 40; ++m)
        for (std::int64_t x = -200; x <= 200; ++x) {
            const AuxInteger a = canonical_shift(x, m);
            REQUIRE(a.value() >= 0);
            REQUIRE(a.value() < m);
            REQUIRE((a.value() - x) % m == 0);
        }
    CHECK_THROWS_AS(canonical_shift(1, 0), Error);
}

TEST_CASE("units_group and euler_phi") {
    auto values = [](std::int64_t n) {
        std::vector<std::int64_t> v;
        for (const Residue& u : units_group(n)) v.push_back(u.value);
        return v;
    };
    CHECK(values(2) == std::vector<std::int64_t>{1});
    CHECK(values(6) == std::vector<std::int64_t>{1, 5});
    CHECK(values(5) == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(units_group(1).size() == 1);
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t count = 0;
        for (std::int64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        REQUIRE(euler_phi(n) == count);
        REQUIRE(static_cast<std::int64_t>(units_group(n).size()) == count);
    }
}

TEST_CASE("gcd_mod treats 0 as r") {
    CHECK(gcd_mod(0, 6) == 6);
    CHECK(gcd_mod(6, 6) == 6);
    CHECK(gcd_mod(4, 6) == 2);
    CHECK(gcd_mod(-1, 6) == 1);
}

TEST_CASE("coprime_lift") {
    CHECK(coprime_lift(1, 2, 4) % 2 == 1);
    CHECK(std::gcd(coprime_lift(1, 2, 4), std::int64_t{4}) == 1);
    CHECK(coprime_lift(5, 6, 12) % 6 == 5);
    for (std::int64_t r = 1; r <= 200; ++r)
        for (std::int64_t n = 1; n <= r; ++n) {
            if (r % n) continue;
            for (std::int64_t k = 0; k < n; ++k) {
                if (std::gcd(k, n) != 1) continue;
                const std::int64_t lift = coprime_lift(k, n, r);
                REQUIRE(((lift - k) % n + n) % n == 0);
                REQUIRE(std::gcd(lift, r) == 1);
            }
        }
    CHECK_THROWS_AS(coprime_lift(2, 4, 8), Error);
    CHECK_THROWS_AS(coprime_lift(1, 5, 12), Error);
}

TEST_CASE("three_adic_adjust") {
    CHECK(three_adic_adjust(1, 3) == 2);
    CHECK(three_adic_adjust(1, 9) == 2);
    CHECK(three_adic_adjust(2, 6) == 4);
    CHECK_THROWS_AS(three_adic_adjust(1, 4), Error);
    for (std::int64_t r = 3; r <= 200; r += 3) {
        std::int64_t step = r;
        while (step % 3 == 0) step /= 3;
        for (std::int64_t m = 1; m < r; ++m) {
            if (std::gcd(m, r) != 1) continue;
            const std::int64_t a = three_adic_adjust(m, r);
            REQUIRE((a == m + step || a == m + 2 * step));
            REQUIRE(a % 3 != m % 3);
            REQUIRE(std::gcd(a, r) == 1);
        }
    }
}

TEST_CASE("valuation and prime_factors") {
    CHECK(valuation(72, 3) == 2);
    CHECK(valuation(72, 2) == 3);
    CHECK(valuation(5, 3) == 0);
    CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(prime_factors(1).empty());
}
