#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "holderlab/bigint.hpp"
#include "holderlab/errors.hpp"
#include "holderlab/factor.hpp"
#include "holderlab/rational.hpp"

namespace holderlab {

// Exact positive real of the form  base^t * prod_i p_i^{e_i}  with rational
// exponents over prime bases, plus at most one opaque symbolic base (a named
// value in (0,1) with no declared rational value). Closed under products and
// rational powers; ordering is decided exactly by clearing exponent
// denominators, and is refused (never guessed) when an opaque base mixes
// with other factors.
class ExactPositive {
public:
    ExactPositive() = default;

    static ExactPositive one() { return ExactPositive(); }

    static ExactPositive from_rational(const Rational& r) {
        if (!r.is_positive())
            throw std::invalid_argument("ExactPositive: value must be positive");
        ExactPositive v;
        for (const auto& f : exponent_vector(r)) v.primes_[f.prime] = Rational(f.exponent);
        return v;
    }

    static ExactPositive symbolic_power(std::string base, const Rational& exp) {
        ExactPositive v;
        if (!exp.is_zero()) v.symbolic_ = {std::move(base), exp};
        return v;
    }

    bool is_one() const { return primes_.empty() && !symbolic_; }
    bool has_symbolic() const { return symbolic_.has_value(); }
    const std::string& symbolic_base() const { return symbolic_->first; }
    const Rational& symbolic_exponent() const { return symbolic_->second; }
    const std::map<BigInt, Rational>& prime_exponents() const { return primes_; }

    bool is_rational() const {
        if (symbolic_) return false;
        for (const auto& [p, e] : primes_)
            if (!e.is_integer()) return false;
        return true;
    }

    std::optional<Rational> as_rational() const {
        if (!is_rational()) return std::nullopt;
        Rational r(1);
        for (const auto& [p, e] : primes_) r = r * Rational(p).pow(e.num().to_int64());
        return r;
    }

    ExactPositive times(const ExactPositive& o) const {
        ExactPositive v = *this;
        for (const auto& [p, e] : o.primes_) {
            Rational sum = map_get(v.primes_, p) + e;
            if (sum.is_zero())
                v.primes_.erase(p);
            else
                v.primes_[p] = sum;
        }
        if (o.symbolic_) {
            if (!v.symbolic_) {
                v.symbolic_ = o.symbolic_;
            } else if (v.symbolic_->first == o.symbolic_->first) {
                Rational sum = v.symbolic_->second + o.symbolic_->second;
                if (sum.is_zero())
                    v.symbolic_.reset();
                else
                    v.symbolic_->second = sum;
            } else {
                throw IncomparableValueError("ExactPositive: distinct opaque bases in one product");
            }
        }
        return v;
    }

    ExactPositive reciprocal() const { return pow(Rational(-1)); }

    ExactPositive divide(const ExactPositive& o) const { return times(o.reciprocal()); }

    ExactPositive pow(const Rational& e) const {
        ExactPositive v;
        if (e.is_zero()) return v;
        for (const auto& [p, ex] : primes_) v.primes_[p] = ex * e;
        if (symbolic_) v.symbolic_ = {symbolic_->first, symbolic_->second * e};
        return v;
    }

    // Three-way order: -1, 0, +1. Opaque-base values are comparable only
    // against values over the same base with no residual prime part.
    int compare(const ExactPositive& o) const {
        ExactPositive ratio = divide(o);
        if (ratio.symbolic_) {
            if (!ratio.primes_.empty())
                throw IncomparableValueError(
                    "ExactPositive: cannot order opaque base against rational factors");
            // base in (0,1): larger exponent means smaller value
            return ratio.symbolic_->second.is_positive() ? -1 : 1;
        }
        if (ratio.primes_.empty()) return 0;
        BigInt lcm(1);
        for (const auto& [p, e] : ratio.primes_) {
            BigInt g = BigInt::gcd(lcm, e.den());
            lcm = lcm / g * e.den();
        }
        BigInt above(1), below(1);
        for (const auto& [p, e] : ratio.primes_) {
            Rational cleared = e * Rational(lcm);
            std::uint64_t ie = cleared.num().abs().to_uint64();
            if (e.is_positive())
                above = above * BigInt::pow(p, ie);
            else
                below = below * BigInt::pow(p, ie);
        }
        if (above == below) return 0;
        return above < below ? -1 : 1;
    }

    friend bool operator==(const ExactPositive& a, const ExactPositive& b) {
        return a.primes_ == b.primes_ && a.symbolic_ == b.symbolic_;
    }

    // Rationality of log(this)/log(other); requires both values != 1 and no
    // opaque parts (the caller resolves symbolic bases first).
    LogRatio log_ratio_against(const ExactPositive& o) const {
        if (symbolic_ || o.symbolic_)
            throw IncomparableValueError("ExactPositive: log ratio with opaque base");
        return log_ratio_of_exponent_maps(primes_, o.primes_);
    }

    double to_double() const {
        if (symbolic_) return std::numeric_limits<double>::quiet_NaN();
        double v = 1.0;
        for (const auto& [p, e] : primes_) v *= std::pow(p.to_double(), e.to_double());
        return v;
    }

    std::string to_string() const {
        if (is_one()) return "1";
        if (auto r = as_rational()) return r->to_string();
        std::string out;
        auto append = [&out](const std::string& base, const Rational& e) {
            if (!out.empty()) out += "*";
            if (e.is_one()) {
                out += base;
            } else {
                out += base + "^(" + e.to_string() + ")";
            }
        };
        for (const auto& [p, e] : primes_) append(p.to_string(), e);
        if (symbolic_) append(symbolic_->first, symbolic_->second);
        return out;
    }

private:
    std::map<BigInt, Rational> primes_;
    std::optional<std::pair<std::string, Rational>> symbolic_;

    static Rational map_get(const std::map<BigInt, Rational>& m, const BigInt& k) {
        auto it = m.find(k);
        return it == m.end() ? Rational(0) : it->second;
    }
};

}  // namespace holderlab
