#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "holderlab/errors.hpp"
#include "holderlab/exact_positive.hpp"
#include "holderlab/factor.hpp"
#include "holderlab/symbolic_space.hpp"

namespace holderlab {

namespace detail {

// Writes a > 0, a != 1 (no opaque part) as alpha^t with alpha the primitive
// rational root in (0,1): integer exponent vector with gcd 1. t is rational
// and carries the sign.
inline std::pair<Rational, Rational> primitive_root(const ExactPositive& a) {
    if (a.has_symbolic())
        throw IncomparableValueError("primitive_root: opaque base has no rational root");
    if (a.is_one()) throw std::invalid_argument("primitive_root: value must differ from 1");
    BigInt lcm_den(1);
    for (const auto& [p, e] : a.prime_exponents()) {
        BigInt g = BigInt::gcd(lcm_den, e.den());
        lcm_den = lcm_den / g * e.den();
    }
    BigInt gcd_num(0);
    for (const auto& [p, e] : a.prime_exponents()) {
        Rational cleared = e * Rational(lcm_den);
        gcd_num = BigInt::gcd(gcd_num, cleared.num());
    }
    Rational alpha(1);
    for (const auto& [p, e] : a.prime_exponents()) {
        Rational cleared = e * Rational(lcm_den);
        std::int64_t prim_exp = (cleared.num() / gcd_num).to_int64();
        alpha = alpha * Rational(p).pow(prim_exp);
    }
    Rational t(gcd_num, lcm_den);
    if (!(alpha < Rational(1))) {
        alpha = alpha.reciprocal();
        t = -t;
    }
    return {t, alpha};
}

}  // namespace detail

// Exact Holder exponent: a positive rational, or coef * log(alpha)/log(beta)
// with alpha, beta primitive rationals in (0,1). The log form normalizes to
// a rational whenever alpha and beta coincide, so equality of exponents is
// structural.
class HolderExponent {
public:
    static HolderExponent from_rational(Rational r) {
        if (!r.is_positive())
            throw std::invalid_argument("HolderExponent: exponent must be positive");
        HolderExponent e;
        e.rational_ = true;
        e.coef_ = std::move(r);
        return e;
    }

    static HolderExponent log_form(const ExactPositive& a, const ExactPositive& b) {
        auto [ta, alpha] = detail::primitive_root(a);
        auto [tb, beta] = detail::primitive_root(b);
        Rational coef = ta / tb;
        if (!coef.is_positive())
            throw std::invalid_argument("HolderExponent: log form must be positive");
        if (alpha == beta) return from_rational(coef);
        HolderExponent e;
        e.rational_ = false;
        e.coef_ = coef;
        e.alpha_ = alpha;
        e.beta_ = beta;
        return e;
    }

    static HolderExponent log_form(const Rational& a, const Rational& b) {
        return log_form(ExactPositive::from_rational(a), ExactPositive::from_rational(b));
    }

    bool is_rational() const { return rational_; }
    const Rational& rational_value() const {
        if (!rational_) throw std::logic_error("HolderExponent: not rational");
        return coef_;
    }
    const Rational& coef() const { return coef_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    HolderExponent times(const HolderExponent& o) const {
        if (rational_ && o.rational_) return from_rational(coef_ * o.coef_);
        if (rational_) {
            HolderExponent e = o;
            e.coef_ = e.coef_ * coef_;
            return e;
        }
        if (o.rational_) {
            HolderExponent e = *this;
            e.coef_ = e.coef_ * o.coef_;
            return e;
        }
        // (log a1/log b1)(log a2/log b2): one numerator must cancel against
        // the other denominator for an exact closed form.
        if (alpha_ == o.beta_) return scaled_log(coef_ * o.coef_, o.alpha_, beta_);
        if (o.alpha_ == beta_) return scaled_log(coef_ * o.coef_, alpha_, o.beta_);
        throw std::domain_error("HolderExponent: product has no exact closed form");
    }

    HolderExponent reciprocal() const {
        if (rational_) return from_rational(coef_.reciprocal());
        return scaled_log(coef_.reciprocal(), beta_, alpha_);
    }

    double value() const {
        double c = coef_.to_double();
        if (rational_) return c;
        return c * std::log(alpha_.to_double()) / std::log(beta_.to_double());
    }

    std::string to_string() const {
        if (rational_) return coef_.to_string();
        std::string s;
        if (!coef_.is_one()) s = "(" + coef_.to_string() + ")*";
        return s + "log(" + alpha_.to_string() + ")/log(" + beta_.to_string() + ")";
    }

    friend bool operator==(const HolderExponent& a, const HolderExponent& b) {
        if (a.rational_ != b.rational_) return false;
        if (a.rational_) return a.coef_ == b.coef_;
        return a.coef_ == b.coef_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    HolderExponent() = default;

    static HolderExponent scaled_log(const Rational& coef, const Rational& alpha,
                                     const Rational& beta) {
        if (alpha == beta) return from_rational(coef);
        HolderExponent e;
        e.rational_ = false;
        e.coef_ = coef;
        e.alpha_ = alpha;
        e.beta_ = beta;
        return e;
    }

    bool rational_ = true;
    Rational coef_{1};
    Rational alpha_, beta_;  // log-form parts, primitive, in (0,1)
};

// v^s as an exact value. For a log-form exponent this requires v to be a
// rational power of the form's base (always the case along constructed
// witness chains, where every distance is a power of the source weight).
inline ExactPositive pow_exact(const ExactPositive& v, const HolderExponent& s) {
    if (v.is_one()) return ExactPositive::one();
    if (s.is_rational()) return v.pow(s.rational_value());
    LogRatio t = v.log_ratio_against(ExactPositive::from_rational(s.beta()));
    if (!t.is_rational())
        throw std::domain_error("pow_exact: value is not a power of the exponent's base");
    return ExactPositive::from_rational(s.alpha()).pow(t.value * s.coef());
}

// One certified step of a bi-Holder map.
//   exponent_map - identity on sequences; the metric is reinterpreted with
//                  weights raised to a fixed exponent. Cert (sigma, 1).
//   block_encode - groups q source symbols per target symbol (lexicographic
//                  block values). Cert (1, r^-(q-1)) for uniform weight r.
//   block_decode - expands each symbol into p target symbols. Cert
//                  (1, r'^-(p-1)) for uniform target weight r'.
//   relabel      - a bijection of equal-size uniform alphabets. Cert (1, 1).
struct MapAtom {
    enum class Kind { exponent_map, block_encode, block_decode, relabel };

    Kind kind;
    SymbolicSpace source, target;
    std::int64_t block = 1;                // q (encode) or p (decode)
    std::vector<std::uint32_t> relabeling;  // target symbol per source symbol
    HolderExponent cert_s = HolderExponent::from_rational(Rational(1));
    ExactPositive cert_c;

    std::string describe() const {
        switch (kind) {
            case Kind::exponent_map: return "exponent-map s=" + cert_s.to_string();
            case Kind::block_encode: return "block-encode q=" + std::to_string(block);
            case Kind::block_decode: return "block-decode p=" + std::to_string(block);
            default: return "relabel";
        }
    }
};

namespace detail {

inline std::int64_t checked_alphabet_power(std::int64_t n, std::int64_t e) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (v > (std::int64_t{1} << 31) / n)
            throw EnumerationLimitError("alphabet size overflow in block construction");
        v *= n;
    }
    return v;
}

// Exponent relating two uniform weights: sigma with source^sigma = target.
inline HolderExponent reweight_exponent(const ScaleFactor& source, const ScaleFactor& target) {
    if (source.concrete() && target.concrete())
        return HolderExponent::log_form(target.to_exact(), source.to_exact());
    if (!source.concrete() && !target.concrete() && source.base_name() == target.base_name())
        return HolderExponent::from_rational(target.exponent() / source.exponent());
    throw IncomparableValueError("reweight: weights do not share an exact common base");
}

}  // namespace detail

inline MapAtom make_exponent_atom(const SymbolicSpace& space, const Rational& sigma) {
    if (!sigma.is_positive())
        throw std::invalid_argument("exponent map: sigma must be positive");
    std::vector<ScaleFactor> new_weights;
    for (const auto& w : space.weights()) {
        auto powed = w.pow(sigma);
        if (!powed)
            throw std::domain_error("exponent map: weight " + w.to_string() + "^" +
                                    sigma.to_string() +
                                    " has no exact representation; use base-power form");
        new_weights.push_back(*powed);
    }
    MapAtom atom{MapAtom::Kind::exponent_map,
                 space,
                 space.is_uniform() ? SymbolicSpace::uniform(space.alphabet(), new_weights[0])
                                    : SymbolicSpace::weighted(new_weights),
                 1,
                 {},
                 HolderExponent::from_rational(sigma),
                 ExactPositive::one()};
    return atom;
}

// Uniform reweight: identity on sequences from (Omega_N, r) to
// (Omega_N, r'), certified with the exact exponent sending r to r'.
inline MapAtom make_reweight_atom(const SymbolicSpace& space, const ScaleFactor& target_weight) {
    if (!space.is_uniform()) throw std::invalid_argument("reweight: space must be uniform");
    MapAtom atom{MapAtom::Kind::exponent_map,
                 space,
                 SymbolicSpace::uniform(space.alphabet(), target_weight),
                 1,
                 {},
                 detail::reweight_exponent(space.uniform_weight(), target_weight),
                 ExactPositive::one()};
    return atom;
}

// Identity on sequences between two spaces over the same alphabet whose
// weights are exactly an s-th power apart, componentwise. This is the
// general form of the exponent map; the certificate (s, 1) is exact.
inline MapAtom make_weight_map_atom(const SymbolicSpace& source, const SymbolicSpace& target,
                                    const HolderExponent& s) {
    if (source.alphabet() != target.alphabet())
        throw std::invalid_argument("weight map: alphabet mismatch");
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(source.alphabet()); ++i) {
        if (!(pow_exact(source.weight(i).to_exact(), s) == target.weight(i).to_exact()))
            throw std::invalid_argument("weight map: target weights are not the claimed power");
    }
    MapAtom atom{MapAtom::Kind::exponent_map,
                 source,
                 target,
                 1,
                 {},
                 s,
                 ExactPositive::one()};
    return atom;
}

inline MapAtom make_block_encode(const SymbolicSpace& space, std::int64_t q) {
    if (!space.is_uniform()) throw std::invalid_argument("block encode: space must be uniform");
    if (q < 1) throw std::invalid_argument("block encode: q must be >= 1");
    std::int64_t big = detail::checked_alphabet_power(space.alphabet(), q);
    ScaleFactor r = space.uniform_weight();
    MapAtom atom{MapAtom::Kind::block_encode,
                 space,
                 SymbolicSpace::uniform(big, *r.pow(Rational(q))),
                 q,
                 {},
                 HolderExponent::from_rational(Rational(1)),
                 r.to_exact().pow(Rational(-(q - 1)))};
    return atom;
}

inline MapAtom make_block_decode(std::int64_t alphabet, std::int64_t p, const ScaleFactor& weight) {
    if (alphabet < 2) throw std::invalid_argument("block decode: alphabet must be >= 2");
    if (p < 1) throw std::invalid_argument("block decode: p must be >= 1");
    std::int64_t big = detail::checked_alphabet_power(alphabet, p);
    MapAtom atom{MapAtom::Kind::block_decode,
                 SymbolicSpace::uniform(big, *weight.pow(Rational(p))),
                 SymbolicSpace::uniform(alphabet, weight),
                 p,
                 {},
                 HolderExponent::from_rational(Rational(1)),
                 weight.to_exact().pow(Rational(-(p - 1)))};
    return atom;
}

inline MapAtom make_relabel(const SymbolicSpace& space, std::vector<std::uint32_t> relabeling) {
    if (!space.is_uniform()) throw std::invalid_argument("relabel: space must be uniform");
    if (static_cast<std::int64_t>(relabeling.size()) != space.alphabet())
        throw std::invalid_argument("relabel: size mismatch");
    std::vector<std::uint32_t> seen(relabeling.size(), 0);
    for (auto s : relabeling) {
        if (s >= relabeling.size() || seen[s]) throw std::invalid_argument("relabel: not a bijection");
        seen[s] = 1;
    }
    MapAtom atom{MapAtom::Kind::relabel,
                 space,
                 space,
                 1,
                 std::move(relabeling),
                 HolderExponent::from_rational(Rational(1)),
                 ExactPositive::one()};
    return atom;
}

namespace detail {

inline std::vector<std::uint32_t> rotate_left(std::vector<std::uint32_t> w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    return w;
}

}  // namespace detail

inline SymbolicPoint eval_atom(const MapAtom& atom, const SymbolicPoint& x) {
    detail::check_alphabet(x, atom.source.alphabet());
    switch (atom.kind) {
        case MapAtom::Kind::exponent_map:
            return x;
        case MapAtom::Kind::relabel: {
            std::vector<std::uint32_t> pre = x.preperiod(), per = x.period();
            for (auto& s : pre) s = atom.relabeling[s];
            for (auto& s : per) s = atom.relabeling[s];
            return SymbolicPoint(std::move(pre), std::move(per));
        }
        case MapAtom::Kind::block_encode: {
            std::size_t q = static_cast<std::size_t>(atom.block);
            std::uint64_t n = static_cast<std::uint64_t>(atom.source.alphabet());
            std::size_t a = x.preperiod().size();
            std::size_t a2 = (a + q - 1) / q * q;
            std::vector<std::uint32_t> pre = x.expand(a2);
            std::vector<std::uint32_t> per =
                detail::rotate_left(x.period(), (a2 - a) % x.period().size());
            std::size_t len = std::lcm(per.size(), q);
            std::vector<std::uint32_t> tail(len);
            for (std::size_t i = 0; i < len; ++i) tail[i] = per[i % per.size()];
            auto group = [&](const std::vector<std::uint32_t>& syms) {
                std::vector<std::uint32_t> out;
                for (std::size_t i = 0; i < syms.size(); i += q) {
                    std::uint64_t v = 0;
                    for (std::size_t j = 0; j < q; ++j) v = v * n + syms[i + j];
                    out.push_back(static_cast<std::uint32_t>(v));
                }
                return out;
            };
            return SymbolicPoint(group(pre), group(tail));
        }
        case MapAtom::Kind::block_decode: {
            std::size_t p = static_cast<std::size_t>(atom.block);
            std::uint64_t n = static_cast<std::uint64_t>(atom.target.alphabet());
            auto split = [&](const std::vector<std::uint32_t>& syms) {
                std::vector<std::uint32_t> out;
                out.reserve(syms.size() * p);
                for (auto s : syms) {
                    std::uint64_t v = s;
                    std::vector<std::uint32_t> digits(p);
                    for (std::size_t j = p; j-- > 0;) {
                        digits[j] = static_cast<std::uint32_t>(v % n);
                        v /= n;
                    }
                    out.insert(out.end(), digits.begin(), digits.end());
                }
                return out;
            };
            return SymbolicPoint(split(x.preperiod()), split(x.period()));
        }
    }
    throw std::logic_error("eval_atom: unreachable");
}

// Certified bi-Holder witness: a composition of atoms between matching
// intermediate spaces with the claim
//   C^-1 d(x,y)^s <= d'(f x, f y) <= C d(x,y)^s  for all x, y.
struct MapWitness {
    SymbolicSpace source, target;
    std::vector<MapAtom> atoms;
    HolderExponent s = HolderExponent::from_rational(Rational(1));
    ExactPositive c;
};

inline MapWitness identity_witness(const SymbolicSpace& space) {
    return MapWitness{space, space, {}, HolderExponent::from_rational(Rational(1)),
                      ExactPositive::one()};
}

inline MapWitness witness_from_atom(MapAtom atom) {
    MapWitness w{atom.source, atom.target, {}, atom.cert_s, atom.cert_c};
    w.atoms.push_back(std::move(atom));
    return w;
}

inline MapWitness compose(const MapWitness& f, const MapWitness& g) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: intermediate spaces do not match (" +
                                    f.target.to_string() + " vs " + g.source.to_string() + ")");
    MapWitness w{f.source, g.target, f.atoms, f.s.times(g.s),
                 g.c.times(pow_exact(f.c, g.s))};
    w.atoms.insert(w.atoms.end(), g.atoms.begin(), g.atoms.end());
    return w;
}

inline SymbolicPoint eval(const MapWitness& w, const SymbolicPoint& x) {
    SymbolicPoint y = x;
    for (const auto& atom : w.atoms) y = eval_atom(atom, y);
    return y;
}

// Single exponent-map witness (identity on sequences, weights raised to
// sigma); its certificate (sigma, 1) is exact, not just a bound.
inline MapWitness build_exponent_witness(const SymbolicSpace& space, const Rational& sigma) {
    return witness_from_atom(make_exponent_atom(space, sigma));
}

// Uniform-space strict Holder witness from the block chain
//   encode q -> reweight -> relabel -> decode p,
// available exactly when log N / log N' = p/q is rational.
inline MapWitness build_uniform_holder_witness(std::int64_t n_source, const ScaleFactor& r_source,
                                               std::int64_t n_target, const ScaleFactor& r_target) {
    if (n_source < 2 || n_target < 2)
        throw std::invalid_argument("holder witness: alphabet sizes must be >= 2");
    LogRatio dep = mult_dependence(Rational(n_source), Rational(n_target));
    if (!dep.is_rational())
        throw IncommensurableError(
            "holder witness: log N / log N' is irrational; no strict Holder equivalence exists");
    std::int64_t p = dep.value.num().to_int64();
    std::int64_t q = dep.value.den().to_int64();
    if (!(BigInt::pow(BigInt(n_source), static_cast<std::uint64_t>(q)) ==
          BigInt::pow(BigInt(n_target), static_cast<std::uint64_t>(p))))
        throw std::logic_error("holder witness: dependence check failed");

    SymbolicSpace source = SymbolicSpace::uniform(n_source, r_source);
    MapAtom enc = make_block_encode(source, q);
    MapAtom rew = make_reweight_atom(enc.target, *r_target.pow(Rational(p)));
    std::vector<std::uint32_t> identity(static_cast<std::size_t>(rew.target.alphabet()));
    std::iota(identity.begin(), identity.end(), 0u);
    MapAtom rel = make_relabel(rew.target, std::move(identity));
    MapAtom dec = make_block_decode(n_target, p, r_target);
    if (!(dec.source == rel.target))
        throw std::logic_error("holder witness: chain spaces do not align");
    return compose(compose(witness_from_atom(std::move(enc)), witness_from_atom(std::move(rew))),
                   compose(witness_from_atom(std::move(rel)), witness_from_atom(std::move(dec))));
}

inline MapAtom invert_atom(const MapAtom& atom) {
    switch (atom.kind) {
        case MapAtom::Kind::exponent_map: {
            MapAtom inv = atom;
            std::swap(inv.source, inv.target);
            inv.cert_s = atom.cert_s.reciprocal();
            return inv;
        }
        case MapAtom::Kind::relabel: {
            MapAtom inv = atom;
            for (std::uint32_t i = 0; i < atom.relabeling.size(); ++i)
                inv.relabeling[atom.relabeling[i]] = i;
            return inv;
        }
        case MapAtom::Kind::block_encode: {
            MapAtom inv = atom;
            inv.kind = MapAtom::Kind::block_decode;
            std::swap(inv.source, inv.target);
            return inv;  // decode bound reuses the encode constant
        }
        case MapAtom::Kind::block_decode: {
            MapAtom inv = atom;
            inv.kind = MapAtom::Kind::block_encode;
            std::swap(inv.source, inv.target);
            return inv;
        }
    }
    throw std::logic_error("invert_atom: unreachable");
}

// Witness for the inverse bijection, with its certificate recomputed by
// composing the inverted atoms.
inline MapWitness inverse_witness(const MapWitness& w) {
    MapWitness inv = identity_witness(w.target);
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it)
        inv = compose(inv, witness_from_atom(invert_atom(*it)));
    return inv;
}

struct ViolationRecord {
    std::string source_distance, target_distance, ratio;
    std::string point_x, point_y;
    std::uint64_t pairs = 0;
    std::string bound;  // which side of the certificate failed

    friend bool operator<(const ViolationRecord& a, const ViolationRecord& b) {
        return std::tie(a.source_distance, a.target_distance) <
               std::tie(b.source_distance, b.target_distance);
    }
};

struct VerificationReport {
    bool pass = false;
    std::uint32_t depth = 0;
    std::uint64_t pair_count = 0;
    std::string claimed_s, claimed_c;
    std::string observed_min = "n/a", observed_max = "n/a";
    std::optional<ExactPositive> ratio_min, ratio_max;  // exact forms of the extremes
    std::vector<ViolationRecord> violations;
};

namespace detail {

struct PairClass {
    std::uint64_t count = 0;
    std::size_t exemplar_x = 0, exemplar_y = 0;
};

inline std::size_t first_difference(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return i;
    return n;
}

}  // namespace detail

// Exhaustive check of the certificate inequality over all unordered pairs
// of depth-k cylinder points. Pairs are grouped by their exact
// (source distance, target distance) class, so the number of exact
// comparisons is the number of distinct classes, not the number of pairs.
inline VerificationReport verify_witness(const MapWitness& w, std::uint32_t depth,
                                         std::uint64_t max_pairs = 10000000) {
    std::uint64_t max_points =
        static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(max_pairs))) + 2;
    auto points = enumerate_cylinder_points(w.source, depth, max_points);
    std::uint64_t count = points.size();
    std::uint64_t pairs = count * (count - 1) / 2;
    if (pairs > max_pairs) throw EnumerationLimitError("verify_witness: pair budget exceeded");

    std::vector<SymbolicPoint> images;
    images.reserve(points.size());
    for (const auto& x : points) images.push_back(eval(w, x));

    // expansion long enough that every distinct pair differs within it
    auto safe_length = [](const std::vector<SymbolicPoint>& ps) {
        std::size_t max_pre = 1, max_per = 1;
        for (const auto& p : ps) {
            max_pre = std::max(max_pre, p.preperiod().size());
            max_per = std::max(max_per, p.period().size());
        }
        return 2 * max_pre + max_per * max_per + 2;
    };
    const std::size_t src_len = safe_length(points);
    const std::size_t img_len = safe_length(images);

    std::vector<std::vector<std::uint32_t>> src_rows, img_rows;
    src_rows.reserve(points.size());
    img_rows.reserve(points.size());
    for (const auto& p : points) src_rows.push_back(p.expand(src_len));
    for (const auto& p : images) img_rows.push_back(p.expand(img_len));

    const bool src_uniform = w.source.is_uniform();
    const bool img_uniform = w.target.is_uniform();
    const std::size_t src_n = static_cast<std::size_t>(w.source.alphabet());
    const std::size_t img_n = static_cast<std::size_t>(w.target.alphabet());

    // class key: symbol counts of both common prefixes (uniform spaces
    // collapse to the prefix length alone)
    std::map<std::vector<std::uint32_t>, detail::PairClass> classes;
    std::vector<std::pair<std::size_t, std::size_t>> equal_images;
    std::vector<std::uint32_t> key;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            std::size_t ks = detail::first_difference(src_rows[i], src_rows[j]);
            if (ks >= src_len)
                throw std::logic_error("verify_witness: source points not distinct");
            std::size_t kt = detail::first_difference(img_rows[i], img_rows[j]);
            if (kt >= img_len) {
                // the expansion bound separates all distinct points, so only
                // genuinely equal images reach here
                if (images[i] == images[j]) {
                    equal_images.emplace_back(i, j);
                    continue;
                }
                throw std::logic_error("verify_witness: image expansion bound too small");
            }
            key.clear();
            if (src_uniform) {
                key.push_back(static_cast<std::uint32_t>(ks));
            } else {
                key.resize(src_n, 0);
                for (std::size_t t = 0; t < ks; ++t) ++key[src_rows[i][t]];
            }
            if (img_uniform) {
                key.push_back(static_cast<std::uint32_t>(kt));
            } else {
                std::size_t base = key.size();
                key.resize(base + img_n, 0);
                for (std::size_t t = 0; t < kt; ++t) ++key[base + img_rows[i][t]];
            }
            auto& cls = classes[key];
            if (cls.count == 0) {
                cls.exemplar_x = i;
                cls.exemplar_y = j;
            }
            ++cls.count;
        }
    }

    VerificationReport report;
    report.depth = depth;
    report.pair_count = pairs;
    report.claimed_s = w.s.to_string();
    report.claimed_c = w.c.to_string();

    const ExactPositive c_inv = w.c.reciprocal();
    std::optional<ExactPositive> min_ratio, max_ratio;
    for (const auto& [cls_key, cls] : classes) {
        ExactPositive d_src = ExactPositive::one();
        std::size_t pos = 0;
        if (src_uniform) {
            d_src = w.source.uniform_weight().to_exact().pow(
                Rational(static_cast<std::int64_t>(cls_key[pos++])));
        } else {
            for (std::size_t sym = 0; sym < src_n; ++sym, ++pos)
                d_src = d_src.times(w.source.weight(static_cast<std::uint32_t>(sym))
                                        .to_exact()
                                        .pow(Rational(static_cast<std::int64_t>(cls_key[pos]))));
        }
        ExactPositive d_img = ExactPositive::one();
        if (img_uniform) {
            d_img = w.target.uniform_weight().to_exact().pow(
                Rational(static_cast<std::int64_t>(cls_key[pos++])));
        } else {
            for (std::size_t sym = 0; sym < img_n; ++sym, ++pos)
                d_img = d_img.times(w.target.weight(static_cast<std::uint32_t>(sym))
                                        .to_exact()
                                        .pow(Rational(static_cast<std::int64_t>(cls_key[pos]))));
        }
        ExactPositive d_pow = pow_exact(d_src, w.s);
        ExactPositive ratio = d_img.divide(d_pow);
        if (!min_ratio || ratio.compare(*min_ratio) < 0) min_ratio = ratio;
        if (!max_ratio || ratio.compare(*max_ratio) > 0) max_ratio = ratio;
        bool lower_ok = c_inv.times(d_pow).compare(d_img) <= 0;
        bool upper_ok = d_img.compare(w.c.times(d_pow)) <= 0;
        if (!lower_ok || !upper_ok) {
            report.violations.push_back(
                {d_src.to_string(), d_img.to_string(), ratio.to_string(),
                 points[cls.exemplar_x].to_string(), points[cls.exemplar_y].to_string(), cls.count,
                 lower_ok ? "upper bound C*d^s" : "lower bound C^-1*d^s"});
        }
    }
    for (auto [i, j] : equal_images) {
        report.violations.push_back({distance(w.source, points[i], points[j]).to_string(), "0",
                                     "0", points[i].to_string(), points[j].to_string(), 1,
                                     "map is not injective on the sample"});
    }
    std::sort(report.violations.begin(), report.violations.end());
    if (min_ratio) report.observed_min = min_ratio->to_string();
    if (max_ratio) report.observed_max = max_ratio->to_string();
    report.ratio_min = std::move(min_ratio);
    report.ratio_max = std::move(max_ratio);
    report.pass = report.violations.empty();
    return report;
}

}  // namespace holderlab
