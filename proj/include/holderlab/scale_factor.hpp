#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "holderlab/exact_positive.hpp"
#include "holderlab/factor.hpp"
#include "holderlab/rational.hpp"

namespace holderlab {

// Contraction ratio in (0,1): either an exact rational, or a formal power
// base^e of a named base in (0,1). A named base may carry a declared exact
// rational value (then all arithmetic substitutes it eagerly) or stay
// opaque (then it is an independent formal symbol).
class ScaleFactor {
public:
    static ScaleFactor rational(Rational r) {
        if (!r.is_positive() || !(r < Rational(1)))
            throw std::invalid_argument("ScaleFactor: ratio must lie in (0,1)");
        ScaleFactor s;
        s.rational_ = std::move(r);
        return s;
    }

    static ScaleFactor base_power(std::string name, Rational exponent,
                                  std::optional<Rational> declared = std::nullopt) {
        if (!exponent.is_positive())
            throw std::invalid_argument("ScaleFactor: base-power exponent must be positive");
        if (name.empty()) throw std::invalid_argument("ScaleFactor: empty base name");
        if (declared && (!declared->is_positive() || !(*declared < Rational(1))))
            throw std::invalid_argument("ScaleFactor: declared base value must lie in (0,1)");
        ScaleFactor s;
        s.base_ = std::move(name);
        s.exponent_ = std::move(exponent);
        s.declared_ = std::move(declared);
        return s;
    }

    bool is_rational_form() const { return rational_.has_value(); }
    bool is_power_form() const { return !rational_.has_value(); }
    bool concrete() const { return rational_.has_value() || declared_.has_value(); }

    const Rational& rational_value() const { return *rational_; }
    const std::string& base_name() const { return base_; }
    const Rational& exponent() const { return exponent_; }
    const std::optional<Rational>& declared_value() const { return declared_; }

    ExactPositive to_exact() const {
        if (rational_) return ExactPositive::from_rational(*rational_);
        if (declared_) return ExactPositive::from_rational(*declared_).pow(exponent_);
        return ExactPositive::symbolic_power(base_, exponent_);
    }

    // Exact e-th power as a ScaleFactor, when representable in the same
    // form. Rational weights may fail (no exact root); power forms never do.
    std::optional<ScaleFactor> pow(const Rational& e) const {
        if (!e.is_positive()) throw std::invalid_argument("ScaleFactor: power must be positive");
        if (rational_) {
            auto v = rational_power(*rational_, e);
            if (!v) return std::nullopt;
            return ScaleFactor::rational(*v);
        }
        return ScaleFactor::base_power(base_, exponent_ * e, declared_);
    }

    friend bool operator==(const ScaleFactor& a, const ScaleFactor& b) {
        if (a.concrete() && b.concrete()) return a.to_exact() == b.to_exact();
        if (a.concrete() != b.concrete()) return false;
        return a.base_ == b.base_ && a.exponent_ == b.exponent_;
    }
    friend bool operator!=(const ScaleFactor& a, const ScaleFactor& b) { return !(a == b); }

    // Exact order when decidable: both concrete, or powers of one opaque
    // base. nullopt otherwise.
    static std::optional<int> compare(const ScaleFactor& a, const ScaleFactor& b) {
        if (a.concrete() && b.concrete()) return a.to_exact().compare(b.to_exact());
        if (!a.concrete() && !b.concrete() && a.base_ == b.base_) {
            if (a.exponent_ == b.exponent_) return 0;
            return a.exponent_ < b.exponent_ ? 1 : -1;  // base < 1 flips the order
        }
        return std::nullopt;
    }

    // Rationality of log a / log b across two ratios. Opaque bases are
    // independent formal symbols: any cross with a different base or a
    // plain rational is multiplicatively independent.
    static LogRatio cross_dependence(const ScaleFactor& a, const ScaleFactor& b) {
        if (a.concrete() && b.concrete())
            return a.to_exact().log_ratio_against(b.to_exact());
        if (!a.concrete() && !b.concrete() && a.base_ == b.base_)
            return LogRatio::rational(a.exponent_ / b.exponent_);
        return LogRatio::incommensurable();
    }

    double value_or_nan() const {
        if (!concrete()) return std::numeric_limits<double>::quiet_NaN();
        return to_exact().to_double();
    }

    std::string to_string() const {
        if (rational_) return rational_->to_string();
        std::string s = base_;
        if (!exponent_.is_one()) s += "^(" + exponent_.to_string() + ")";
        return s;
    }

private:
    ScaleFactor() = default;

    std::optional<Rational> rational_;
    std::string base_;
    Rational exponent_{1};
    std::optional<Rational> declared_;
};

}  // namespace holderlab
