#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holderlab/errors.hpp"
#include "holderlab/exact_positive.hpp"
#include "holderlab/scale_factor.hpp"

namespace holderlab {

// Eventually periodic point of a symbolic space, held in canonical form:
// the period is primitive and the preperiod is minimal (its last symbol
// differs from the period's last symbol). Equality of points is structural
// equality of canonical forms.
class SymbolicPoint {
public:
    SymbolicPoint(std::vector<std::uint32_t> preperiod, std::vector<std::uint32_t> period)
        : pre_(std::move(preperiod)), period_(std::move(period)) {
        if (period_.empty()) throw std::invalid_argument("SymbolicPoint: empty period");
        canonicalize();
    }

    // The depth-|word| cylinder representative: word followed by 0^inf.
    static SymbolicPoint cylinder(std::vector<std::uint32_t> word) {
        return SymbolicPoint(std::move(word), {0});
    }

    const std::vector<std::uint32_t>& preperiod() const { return pre_; }
    const std::vector<std::uint32_t>& period() const { return period_; }

    std::uint32_t at(std::size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return period_[(i - pre_.size()) % period_.size()];
    }

    std::vector<std::uint32_t> expand(std::size_t len) const {
        std::vector<std::uint32_t> out(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = at(i);
        return out;
    }

    std::uint32_t max_symbol() const {
        std::uint32_t m = 0;
        for (auto s : pre_) m = std::max(m, s);
        for (auto s : period_) m = std::max(m, s);
        return m;
    }

    friend bool operator==(const SymbolicPoint& a, const SymbolicPoint& b) {
        return a.pre_ == b.pre_ && a.period_ == b.period_;
    }
    friend bool operator!=(const SymbolicPoint& a, const SymbolicPoint& b) { return !(a == b); }
    friend bool operator<(const SymbolicPoint& a, const SymbolicPoint& b) {
        if (a.pre_ != b.pre_) return a.pre_ < b.pre_;
        return a.period_ < b.period_;
    }

    std::string to_string() const {
        std::string s;
        for (auto c : pre_) s += symbol_str(c);
        s += "(";
        for (auto c : period_) s += symbol_str(c);
        s += ")";
        return s;
    }

private:
    std::vector<std::uint32_t> pre_, period_;

    static std::string symbol_str(std::uint32_t c) {
        if (c < 10) return std::string(1, static_cast<char>('0' + c));
        return "[" + std::to_string(c) + "]";
    }

    void canonicalize() {
        // primitive period: shortest divisor-length word whose repetition
        // reproduces the full period
        for (std::size_t p = 1; p < period_.size(); ++p) {
            if (period_.size() % p) continue;
            bool ok = true;
            for (std::size_t i = p; i < period_.size() && ok; ++i)
                ok = period_[i] == period_[i % p];
            if (ok) {
                period_.resize(p);
                break;
            }
        }
        // minimal preperiod: absorb trailing symbols equal to the period's
        // last symbol by rotating the period right
        while (!pre_.empty() && pre_.back() == period_.back()) {
            pre_.pop_back();
            period_.insert(period_.begin(), period_.back());
            period_.pop_back();
        }
    }
};

namespace detail {

inline void check_alphabet(const SymbolicPoint& x, std::int64_t alphabet) {
    if (static_cast<std::int64_t>(x.max_symbol()) >= alphabet)
        throw std::out_of_range("symbol out of range for alphabet of size " +
                                std::to_string(alphabet));
}

}  // namespace detail

// Length of the maximal common prefix of two points; nullopt means the
// points are equal (infinite prefix). For distinct points the answer is at
// most |pre_x| + |pre_y| + lcm(|per_x|, |per_y|).
inline std::optional<std::uint64_t> common_prefix_length(const SymbolicPoint& x,
                                                         const SymbolicPoint& y,
                                                         std::int64_t alphabet) {
    detail::check_alphabet(x, alphabet);
    detail::check_alphabet(y, alphabet);
    if (x == y) return std::nullopt;
    std::uint64_t bound = x.preperiod().size() + y.preperiod().size() +
                          std::lcm(x.period().size(), y.period().size()) + 1;
    for (std::uint64_t i = 0; i < bound; ++i)
        if (x.at(i) != y.at(i)) return i;
    throw std::logic_error("common_prefix_length: distinct canonical points agree past bound");
}

// Metric model (Omega_N, rho): N symbols with either one uniform weight or
// a weight per symbol. Weight vectors may mix rational and declared-base
// entries freely; opaque-base entries must all share one base so that word
// weights stay exactly comparable.
class SymbolicSpace {
public:
    static SymbolicSpace uniform(std::int64_t alphabet, ScaleFactor weight) {
        if (alphabet < 2) throw std::invalid_argument("SymbolicSpace: alphabet size must be >= 2");
        SymbolicSpace s;
        s.alphabet_ = alphabet;
        s.weights_.push_back(std::move(weight));
        s.uniform_ = true;
        return s;
    }

    static SymbolicSpace weighted(std::vector<ScaleFactor> weights) {
        if (weights.size() < 2)
            throw std::invalid_argument("SymbolicSpace: need at least two weights");
        bool any_opaque = false;
        for (const auto& w : weights) any_opaque = any_opaque || !w.concrete();
        if (any_opaque) {
            const std::string& base = weights.front().concrete() ? "" : weights.front().base_name();
            for (const auto& w : weights)
                if (w.concrete() || w.base_name() != base)
                    throw std::invalid_argument(
                        "SymbolicSpace: opaque weights must all share one base");
        }
        SymbolicSpace s;
        s.alphabet_ = static_cast<std::int64_t>(weights.size());
        s.weights_ = std::move(weights);
        s.uniform_ = false;
        return s;
    }

    std::int64_t alphabet() const { return alphabet_; }
    bool is_uniform() const { return uniform_; }

    const ScaleFactor& uniform_weight() const {
        if (!uniform_) throw std::logic_error("SymbolicSpace: not uniform");
        return weights_.front();
    }

    const ScaleFactor& weight(std::uint32_t symbol) const {
        if (static_cast<std::int64_t>(symbol) >= alphabet_)
            throw std::out_of_range("SymbolicSpace: symbol out of range");
        return uniform_ ? weights_.front() : weights_[symbol];
    }

    const std::vector<ScaleFactor>& weights() const { return weights_; }

    friend bool operator==(const SymbolicSpace& a, const SymbolicSpace& b) {
        if (a.alphabet_ != b.alphabet_ || a.uniform_ != b.uniform_) return false;
        if (a.weights_.size() != b.weights_.size()) return false;
        for (std::size_t i = 0; i < a.weights_.size(); ++i)
            if (a.weights_[i] != b.weights_[i]) return false;
        return true;
    }
    friend bool operator!=(const SymbolicSpace& a, const SymbolicSpace& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(Omega_" + std::to_string(alphabet_) + ", ";
        if (uniform_) {
            s += "rho_" + weights_.front().to_string();
        } else {
            s += "rho_(";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) s += ",";
                s += weights_[i].to_string();
            }
            s += ")";
        }
        return s + ")";
    }

private:
    SymbolicSpace() = default;

    std::int64_t alphabet_ = 0;
    bool uniform_ = true;
    std::vector<ScaleFactor> weights_;
};

// Multiplicative weight of a finite word: the empty word has weight 1.
inline ExactPositive word_weight(const SymbolicSpace& space, std::span<const std::uint32_t> word) {
    ExactPositive w = ExactPositive::one();
    if (space.is_uniform()) {
        return space.uniform_weight().to_exact().pow(
            Rational(static_cast<std::int64_t>(word.size())));
    }
    for (auto s : word) w = w.times(space.weight(s).to_exact());
    return w;
}

// Exact distance value: either zero (equal points) or a positive product.
struct ExactDistance {
    bool zero = false;
    ExactPositive value;  // meaningful when !zero

    std::string to_string() const { return zero ? "0" : value.to_string(); }
};

inline ExactDistance distance(const SymbolicSpace& space, const SymbolicPoint& x,
                              const SymbolicPoint& y) {
    auto prefix = common_prefix_length(x, y, space.alphabet());
    if (!prefix) return {true, ExactPositive::one()};
    if (space.is_uniform()) {
        return {false,
                space.uniform_weight().to_exact().pow(Rational(static_cast<std::int64_t>(*prefix)))};
    }
    auto symbols = x.expand(*prefix);
    return {false, word_weight(space, symbols)};
}

// One point per depth-k word (the word followed by 0^inf), in lexicographic
// word order.
inline std::vector<SymbolicPoint> enumerate_cylinder_points(const SymbolicSpace& space,
                                                            std::uint32_t depth,
                                                            std::uint64_t max_points = 1u << 22) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < depth; ++i) {
        if (count > max_points / static_cast<std::uint64_t>(space.alphabet()))
            throw EnumerationLimitError("enumerate_cylinder_points: budget exceeded");
        count *= static_cast<std::uint64_t>(space.alphabet());
    }
    if (count > max_points)
        throw EnumerationLimitError("enumerate_cylinder_points: budget exceeded");
    std::vector<SymbolicPoint> points;
    points.reserve(count);
    std::vector<std::uint32_t> word(depth, 0);
    for (std::uint64_t idx = 0;; ++idx) {
        points.push_back(SymbolicPoint::cylinder(word));
        std::size_t pos = depth;
        while (pos > 0) {
            --pos;
            if (static_cast<std::int64_t>(++word[pos]) < space.alphabet()) break;
            word[pos] = 0;
            if (pos == 0) return points;
        }
        if (depth == 0) return points;
    }
}

}  // namespace holderlab
