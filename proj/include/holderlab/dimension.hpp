#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "holderlab/rational.hpp"
#include "holderlab/symbolic_space.hpp"

namespace holderlab {

// Hausdorff dimension as a high-precision numeric value together with an
// exact symbolic form for reporting.
struct DimensionValue {
    double value = 0.0;
    std::string exact_form;
};

// dim (Omega_N, rho_r) = log N / (-log r), for a concrete uniform weight.
inline DimensionValue dimension_uniform(const SymbolicSpace& space) {
    if (!space.is_uniform())
        throw std::invalid_argument("dimension_uniform: space must have uniform weights");
    const ScaleFactor& r = space.uniform_weight();
    if (!r.concrete())
        throw std::invalid_argument("dimension_uniform: weight has no declared value");
    double rv = r.value_or_nan();
    double v = std::log(static_cast<double>(space.alphabet())) / -std::log(rv);
    std::string form = "log(" + std::to_string(space.alphabet()) + ")/-log(" + r.to_string() + ")";
    return {v, form};
}

inline double moran_sum(const std::vector<Rational>& ratios, double s) {
    double sum = 0.0;
    for (const auto& r : ratios) sum += std::pow(r.to_double(), s);
    return sum;
}

// Unique s > 0 with sum r_i^s = 1, by bisection to absolute tolerance 1e-12.
// The sum is strictly decreasing in s from m > 1 down to 0. Bracket starts
// at [1e-9, 64] and doubles upward in the rare case the root lies beyond.
inline double dimension_moran(const std::vector<Rational>& ratios) {
    if (ratios.size() < 2)
        throw std::invalid_argument("dimension_moran: need at least two ratios");
    for (const auto& r : ratios)
        if (!r.is_positive() || !(r < Rational(1)))
            throw std::invalid_argument("dimension_moran: ratios must lie in (0,1)");
    double lo = 1e-9, hi = 64.0;
    while (moran_sum(ratios, hi) > 1.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw std::domain_error("dimension_moran: root out of range");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (moran_sum(ratios, mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace holderlab
