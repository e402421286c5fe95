#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "holderlab/bigint.hpp"
#include "holderlab/rational.hpp"

namespace holderlab {

struct PrimeFactor {
    BigInt prime;
    std::int64_t exponent;  // nonzero; negative entries come from denominators

    friend bool operator==(const PrimeFactor& a, const PrimeFactor& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// Sorted by prime, strictly increasing, no zero exponents. Empty vector is
// the factorization of 1.
using PrimeExponentVector = std::vector<PrimeFactor>;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t pollard_rho_u64(std::uint64_t n) {
    if (!(n & 1)) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [n, c](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, std::int64_t>& out) {
    if (n <= 1) return;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    // Trial division by a 30-wheel before falling back to rho.
    static const int wheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};
    for (std::uint64_t base = 30; base * base <= n && base <= 2000000; base += 30) {
        for (int w : wheel) {
            std::uint64_t p = base + static_cast<std::uint64_t>(w) - 30;
            if (p < 17) continue;
            if (p * p > n) break;
            while (n % p == 0) {
                ++out[p];
                n /= p;
            }
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace detail

// Prime factorization of n >= 1. Empty result iff n = 1. Inputs are desk
// scale; anything whose hard cofactor exceeds 64 bits is rejected rather
// than silently mis-factored.
inline PrimeExponentVector factorize(const BigInt& n) {
    if (n.is_zero() || n.is_negative())
        throw std::invalid_argument("factorize: input must be a positive integer");
    std::map<std::uint64_t, std::int64_t> small;
    BigInt rest = n;
    if (!rest.fits_uint64()) {
        for (std::uint64_t p = 2; p <= 1000003; p = (p == 2 ? 3 : p + 2)) {
            BigInt bp(static_cast<std::int64_t>(p));
            for (;;) {
                auto [q, r] = BigInt::div_mod(rest, bp);
                if (!r.is_zero()) break;
                ++small[p];
                rest = q;
            }
            if (rest.fits_uint64()) break;
        }
        if (!rest.fits_uint64())
            throw std::domain_error("factorize: cofactor beyond supported range");
    }
    detail::factor_u64_into(rest.to_uint64(), small);
    PrimeExponentVector out;
    out.reserve(small.size());
    for (const auto& [p, e] : small)
        out.push_back({BigInt::from_uint64(p), e});
    return out;
}

inline Rational reconstruct(const PrimeExponentVector& v) {
    Rational r(1);
    for (const auto& f : v) {
        Rational p(f.prime);
        r = r * p.pow(f.exponent);
    }
    return r;
}

// Signed prime exponents of a positive rational: numerator factors minus
// denominator factors.
inline PrimeExponentVector exponent_vector(const Rational& q) {
    if (!q.is_positive()) throw std::invalid_argument("exponent_vector: input must be positive");
    std::map<BigInt, std::int64_t> merged;
    for (const auto& f : factorize(q.num())) merged[f.prime] += f.exponent;
    for (const auto& f : factorize(q.den())) merged[f.prime] -= f.exponent;
    PrimeExponentVector out;
    for (const auto& [p, e] : merged)
        if (e != 0) out.push_back({p, e});
    return out;
}

// Outcome of a log-ratio rationality decision. Rational(p/q) is produced
// only when a^q = b^p holds exactly; Incommensurable means no integer
// relation exists; Undetermined is reserved for callers working with opaque
// symbolic quantities.
struct LogRatio {
    enum class Kind { rational, incommensurable, undetermined };

    Kind kind = Kind::undetermined;
    Rational value;  // meaningful only when kind == rational

    static LogRatio rational(Rational v) { return {Kind::rational, std::move(v)}; }
    static LogRatio incommensurable() { return {Kind::incommensurable, Rational()}; }
    static LogRatio undetermined() { return {Kind::undetermined, Rational()}; }

    bool is_rational() const { return kind == Kind::rational; }
    bool is_incommensurable() const { return kind == Kind::incommensurable; }

    friend bool operator==(const LogRatio& a, const LogRatio& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != Kind::rational) return true;
        return a.value == b.value;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::rational: return value.to_string();
            case Kind::incommensurable: return "incommensurable";
            default: return "undetermined";
        }
    }
};

// Parallel-vector test on signed exponent maps: log a / log b is rational
// iff the two maps have the same support and one is a fixed rational
// multiple of the other. Exponents may themselves be rational (values
// closed under rational powers of rationals).
inline LogRatio log_ratio_of_exponent_maps(const std::map<BigInt, Rational>& ea,
                                           const std::map<BigInt, Rational>& eb) {
    if (ea.empty() || eb.empty())
        throw std::invalid_argument("log_ratio: arguments must differ from 1");
    if (ea.size() != eb.size()) return LogRatio::incommensurable();
    auto ia = ea.begin(), ib = eb.begin();
    Rational ratio = ia->second / ib->second;
    for (; ia != ea.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return LogRatio::incommensurable();
        if (ia->second != ratio * ib->second) return LogRatio::incommensurable();
    }
    return LogRatio::rational(ratio);
}

// Decides whether log a / log b is rational, for positive rationals a, b
// distinct from 1. Never returns Undetermined for rational inputs.
inline LogRatio mult_dependence(const Rational& a, const Rational& b) {
    if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("mult_dependence: arguments must be positive");
    if (a.is_one() || b.is_one())
        throw std::invalid_argument("mult_dependence: arguments must differ from 1");
    std::map<BigInt, Rational> ea, eb;
    for (const auto& f : exponent_vector(a)) ea[f.prime] = Rational(f.exponent);
    for (const auto& f : exponent_vector(b)) eb[f.prime] = Rational(f.exponent);
    return log_ratio_of_exponent_maps(ea, eb);
}

// Exact value of q^e for positive rational q when the required roots exist.
inline std::optional<Rational> rational_power(const Rational& q, const Rational& e) {
    if (!q.is_positive()) throw std::invalid_argument("rational_power: base must be positive");
    if (e.is_zero() || q.is_one()) return Rational(1);
    if (!e.den().fits_uint64() || !e.num().fits_int64())
        throw std::invalid_argument("rational_power: exponent out of supported range");
    Rational base = e.is_negative() ? q.reciprocal() : q;
    std::uint64_t num = e.num().abs().to_uint64();
    std::uint64_t den = e.den().to_uint64();
    Rational powed = base.pow(static_cast<std::int64_t>(num));
    if (den == 1) return powed;
    auto rn = BigInt::nth_root_exact(powed.num(), den);
    if (!rn) return std::nullopt;
    auto rd = BigInt::nth_root_exact(powed.den(), den);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

}  // namespace holderlab
