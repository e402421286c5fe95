#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holderlab/bigint.hpp"
#include "holderlab/exact_positive.hpp"
#include "holderlab/factor.hpp"
#include "holderlab/rational.hpp"

using namespace holderlab;

namespace {

// Independent oracle: search a^q = b^p over q in [1,20], p in [-20,20],
// p != 0, by plain big-rational exponentiation.
std::optional<Rational> brute_force_dependence(const Rational& a, const Rational& b) {
    for (std::int64_t q = 1; q <= 20; ++q) {
        Rational aq = a.pow(q);
        for (std::int64_t p = -20; p <= 20; ++p) {
            if (p == 0) continue;
            if (aq == b.pow(p)) return Rational(p, q);
        }
    }
    return std::nullopt;
}

bool is_prime_by_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("bigint arithmetic basics") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321098765432109876543210");
    CHECK((a + b).to_string() == "1111111110111111111011111111100");
    CHECK((b - a).to_string() == "864197532086419753208641975320");
    CHECK((a * BigInt(0)).is_zero());
    CHECK((-a + a).is_zero());
    auto [q, r] = BigInt::div_mod(b, a);
    CHECK((q * a + r) == b);
    CHECK(BigInt::gcd(BigInt(360), BigInt(84)).to_string() == "12");
    CHECK(BigInt::pow(BigInt(3), 40).to_string() == "12157665459056928801");
    CHECK(BigInt::nth_root_exact(BigInt(4096), 3).value() == BigInt(16));
    CHECK(!BigInt::nth_root_exact(BigInt(2), 2).has_value());
    CHECK(BigInt(-7) % BigInt(3) == BigInt(-1));
    CHECK(BigInt(-7) / BigInt(3) == BigInt(-2));
}

TEST_CASE("bigint division identities on random operands") {
    std::mt19937_64 rng(88);
    for (int i = 0; i < 400; ++i) {
        // mixed sizes: up to ~190 bits over up to ~100 bits
        BigInt a(1), b(0);
        int la = 1 + static_cast<int>(rng() % 3), lb = 1 + static_cast<int>(rng() % 2);
        for (int j = 0; j < la; ++j)
            a = a * BigInt::from_uint64(rng() | 1) + BigInt(static_cast<std::int64_t>(rng() % 97));
        for (int j = 0; j < lb; ++j)
            b = b * BigInt::from_uint64(rng() | 1) + BigInt(static_cast<std::int64_t>(rng() % 89));
        if (b.is_zero()) b = BigInt(7);
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        auto [q, r] = BigInt::div_mod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
    // against native 64-bit division
    for (int i = 0; i < 400; ++i) {
        std::int64_t x = static_cast<std::int64_t>(rng() % 2000000000) - 1000000000;
        std::int64_t y = static_cast<std::int64_t>(rng() % 99999) + 1;
        if (rng() & 1) y = -y;
        auto [q, r] = BigInt::div_mod(BigInt(x), BigInt(y));
        CHECK(q == BigInt(x / y));
        CHECK(r == BigInt(x % y));
    }
}

TEST_CASE("rational_power round trip when exact") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        Rational base(static_cast<std::int64_t>(rng() % 20) + 2,
                      static_cast<std::int64_t>(rng() % 20) + 2);
        if (base.is_one()) continue;
        std::int64_t k = static_cast<std::int64_t>(rng() % 5) + 1;
        Rational powed = base.pow(k);
        auto back = rational_power(powed, Rational(1, k));
        REQUIRE(back.has_value());
        CHECK(*back == base);
    }
}

TEST_CASE("bigint round trips through strings") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        BigInt x(1);
        int limbs = static_cast<int>(rng() % 6) + 1;
        for (int j = 0; j < limbs; ++j)
            x = x * BigInt(static_cast<std::int64_t>(rng() % 1000000000)) + BigInt(1);
        CHECK(BigInt::from_string(x.to_string()) == x);
    }
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(12, 18) == Rational(2, 3));
    CHECK(Rational(-12, -18) == Rational(2, 3));
    CHECK(Rational(12, -18) == Rational(-2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den().is_one());
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2).pow(-3) == Rational(8));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(3, 4) < Rational(4, 5));
}

TEST_CASE("factorize on the stated examples") {
    CHECK(factorize(BigInt(1)).empty());
    PrimeExponentVector twelve = factorize(BigInt(12));
    REQUIRE(twelve.size() == 2);
    CHECK(twelve[0].prime == BigInt(2));
    CHECK(twelve[0].exponent == 2);
    CHECK(twelve[1].prime == BigInt(3));
    CHECK(twelve[1].exponent == 1);
    // trial division up to sqrt(9973) confirms primality
    REQUIRE(is_prime_by_trial(9973));
    PrimeExponentVector p = factorize(BigInt(9973));
    REQUIRE(p.size() == 1);
    CHECK(p[0].prime == BigInt(9973));
    CHECK(p[0].exponent == 1);
    CHECK_THROWS_AS(factorize(BigInt(0)), std::invalid_argument);
}

TEST_CASE("factorize round trip on random composites") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        std::int64_t n = static_cast<std::int64_t>(rng() % 1000000000000ll) + 1;
        auto f = factorize(BigInt(n));
        CHECK(reconstruct(f) == Rational(n));
        for (std::size_t j = 1; j < f.size(); ++j) CHECK(f[j - 1].prime < f[j].prime);
    }
    // a semiprime of two large factors exercises the rho fallback
    BigInt semi = BigInt(1000003) * BigInt(998244353);
    auto f = factorize(semi);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == BigInt(1000003));
    CHECK(f[1].prime == BigInt(998244353));
}

TEST_CASE("exponent_vector on the stated examples") {
    auto v = exponent_vector(Rational(1, 8));
    REQUIRE(v.size() == 1);
    CHECK(v[0].prime == BigInt(2));
    CHECK(v[0].exponent == -3);

    // 12/18 canonicalizes to 2/3 first
    v = exponent_vector(Rational(12, 18));
    REQUIRE(v.size() == 2);
    CHECK(v[0].prime == BigInt(2));
    CHECK(v[0].exponent == 1);
    CHECK(v[1].prime == BigInt(3));
    CHECK(v[1].exponent == -1);

    CHECK(exponent_vector(Rational(1)).empty());
    CHECK_THROWS_AS(exponent_vector(Rational(-2, 3)), std::invalid_argument);
}

TEST_CASE("mult_dependence on the stated examples") {
    LogRatio r = mult_dependence(Rational(4), Rational(8));
    REQUIRE(r.is_rational());
    CHECK(r.value == Rational(2, 3));
    // brute-force confirmation: 4^3 = 8^2
    CHECK(brute_force_dependence(Rational(4), Rational(8)).value() == Rational(2, 3));

    r = mult_dependence(Rational(1, 4), Rational(1, 8));
    REQUIRE(r.is_rational());
    CHECK(r.value == Rational(2, 3));
    CHECK(brute_force_dependence(Rational(1, 4), Rational(1, 8)).value() == Rational(2, 3));

    CHECK(mult_dependence(Rational(12), Rational(18)).is_incommensurable());
    CHECK(!brute_force_dependence(Rational(12), Rational(18)).has_value());

    CHECK(mult_dependence(Rational(2), Rational(3)).is_incommensurable());
    CHECK(!brute_force_dependence(Rational(2), Rational(3)).has_value());

    CHECK_THROWS_AS(mult_dependence(Rational(1), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(mult_dependence(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("mult_dependence agrees with the brute-force oracle") {
    // values 2^e2 * 3^e3 * 5^e5 with exponents in [-6, 6]
    std::mt19937_64 rng(123);
    auto random_value = [&rng]() {
        Rational v(1);
        std::int64_t e2 = static_cast<std::int64_t>(rng() % 13) - 6;
        std::int64_t e3 = static_cast<std::int64_t>(rng() % 13) - 6;
        std::int64_t e5 = static_cast<std::int64_t>(rng() % 13) - 6;
        return Rational(2).pow(e2) * Rational(3).pow(e3) * Rational(5).pow(e5);
    };
    int checked = 0;
    while (checked < 600) {
        Rational a = random_value(), b = random_value();
        if (a.is_one() || b.is_one()) continue;
        ++checked;
        LogRatio fast = mult_dependence(a, b);
        auto slow = brute_force_dependence(a, b);
        if (fast.is_rational()) {
            REQUIRE(slow.has_value());
            CHECK(fast.value == *slow);
            // direct verification of a^q = b^p
            std::int64_t p = fast.value.num().to_int64(), q = fast.value.den().to_int64();
            CHECK(a.pow(q) == b.pow(p));
        } else {
            CHECK(!slow.has_value());
        }
    }
}

TEST_CASE("mult_dependence symmetry and reflexivity") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Rational a = Rational(2).pow(static_cast<std::int64_t>(rng() % 9) - 4) *
                     Rational(3).pow(static_cast<std::int64_t>(rng() % 9) - 4);
        Rational b = Rational(2).pow(static_cast<std::int64_t>(rng() % 9) - 4) *
                     Rational(3).pow(static_cast<std::int64_t>(rng() % 9) - 4);
        if (a.is_one() || b.is_one()) continue;
        CHECK(mult_dependence(a, a).value == Rational(1));
        LogRatio ab = mult_dependence(a, b), ba = mult_dependence(b, a);
        CHECK(ab.is_rational() == ba.is_rational());
        if (ab.is_rational()) CHECK(ab.value == ba.value.reciprocal());
    }
}

TEST_CASE("rational_power on the stated examples") {
    CHECK(rational_power(Rational(1, 4), Rational(1, 2)).value() == Rational(1, 2));
    CHECK(rational_power(Rational(1, 2), Rational(3)).value() == Rational(1, 8));
    CHECK(!rational_power(Rational(1, 2), Rational(1, 2)).has_value());
    CHECK(rational_power(Rational(27, 8), Rational(-2, 3)).value() == Rational(4, 9));
    CHECK(rational_power(Rational(5, 7), Rational(0)).value() == Rational(1));
    CHECK_THROWS_AS(rational_power(Rational(-1, 2), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("exact positive values: products, powers, exact order") {
    ExactPositive half = ExactPositive::from_rational(Rational(1, 2));
    ExactPositive third = ExactPositive::from_rational(Rational(1, 3));
    CHECK(half.compare(third) > 0);
    CHECK(half.times(half) == ExactPositive::from_rational(Rational(1, 4)));
    CHECK(half.pow(Rational(-3)) == ExactPositive::from_rational(Rational(8)));
    // 2^(1/3) < 2^(2/3)
    ExactPositive a = ExactPositive::from_rational(Rational(2)).pow(Rational(1, 3));
    ExactPositive b = ExactPositive::from_rational(Rational(2)).pow(Rational(2, 3));
    CHECK(a.compare(b) < 0);
    CHECK(a.times(a) == b);
    CHECK(b.to_string() == "2^(2/3)");
    // 2^(3/2) vs 3: 8 vs 9 after squaring
    ExactPositive c = ExactPositive::from_rational(Rational(2)).pow(Rational(3, 2));
    CHECK(c.compare(ExactPositive::from_rational(Rational(3))) < 0);
    CHECK(c.compare(ExactPositive::from_rational(Rational(2))) > 0);

    ExactPositive lam = ExactPositive::symbolic_power("lambda", Rational(2));
    ExactPositive lam3 = ExactPositive::symbolic_power("lambda", Rational(3));
    CHECK(lam.compare(lam3) > 0);  // base < 1: higher power is smaller
    CHECK(lam.times(lam) == ExactPositive::symbolic_power("lambda", Rational(4)));
    CHECK_THROWS_AS(lam.compare(half), IncomparableValueError);
}

TEST_CASE("exact positive round trips rationals") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Rational q(static_cast<std::int64_t>(rng() % 5000) + 1,
                   static_cast<std::int64_t>(rng() % 5000) + 1);
        ExactPositive v = ExactPositive::from_rational(q);
        REQUIRE(v.as_rational().has_value());
        CHECK(*v.as_rational() == q);
    }
}
