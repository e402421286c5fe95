#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holderlab/witness.hpp"

using namespace holderlab;

namespace {

SymbolicSpace omega(std::int64_t n, Rational r) {
    return SymbolicSpace::uniform(n, ScaleFactor::rational(std::move(r)));
}

MapWitness bare_witness(const SymbolicSpace& space, HolderExponent s, ExactPositive c) {
    return MapWitness{space, space, {}, std::move(s), std::move(c)};
}

}  // namespace

TEST_CASE("holder exponent algebra") {
    HolderExponent one = HolderExponent::from_rational(Rational(1));
    HolderExponent half = HolderExponent::from_rational(Rational(1, 2));
    CHECK(half.times(half) == HolderExponent::from_rational(Rational(1, 4)));
    CHECK(half.reciprocal() == HolderExponent::from_rational(Rational(2)));

    // log(1/2)/log(1/27) normalizes coefficient and primitive bases
    HolderExponent s = HolderExponent::log_form(Rational(1, 2), Rational(1, 27));
    CHECK(!s.is_rational());
    CHECK(s.value() == doctest::Approx(0.210309917857152).epsilon(1e-12));
    CHECK(s.to_string() == "(1/3)*log(1/2)/log(1/3)");
    // structurally equal representations collapse
    CHECK(s == HolderExponent::log_form(Rational(1, 4), Rational(3, 3 * 27 * 27)));
    // dependent arguments normalize to a rational
    CHECK(HolderExponent::log_form(Rational(1, 4), Rational(1, 8)) ==
          HolderExponent::from_rational(Rational(2, 3)));
    // product with cancellation: (log a/log b)(log b/log c) = log a/log c
    HolderExponent ab = HolderExponent::log_form(Rational(1, 2), Rational(1, 3));
    HolderExponent bc = HolderExponent::log_form(Rational(1, 3), Rational(1, 5));
    CHECK(ab.times(bc) == HolderExponent::log_form(Rational(1, 2), Rational(1, 5)));
    CHECK(ab.times(ab.reciprocal()) == one);
    CHECK_THROWS_AS(ab.times(HolderExponent::log_form(Rational(1, 7), Rational(1, 11))),
                    std::domain_error);
    CHECK_THROWS_AS(HolderExponent::log_form(Rational(2), Rational(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("pow_exact against log-form exponents") {
    HolderExponent s = HolderExponent::log_form(Rational(1, 2), Rational(1, 27));
    // 9 = (1/27)^(-2/3), so 9^s = (1/2)^(-2/3) = 2^(2/3)
    ExactPositive nine = ExactPositive::from_rational(Rational(9));
    CHECK(pow_exact(nine, s) == ExactPositive::from_rational(Rational(2)).pow(Rational(2, 3)));
    CHECK(pow_exact(ExactPositive::one(), s) == ExactPositive::one());
    CHECK_THROWS_AS(pow_exact(ExactPositive::from_rational(Rational(5)), s), std::domain_error);
}

TEST_CASE("composition law on the stated examples") {
    SymbolicSpace space = omega(2, Rational(1, 3));
    MapWitness w = bare_witness(space, HolderExponent::from_rational(Rational(2, 3)),
                                ExactPositive::from_rational(Rational(7)));
    // identity then w: certificate unchanged
    MapWitness composed = compose(identity_witness(space), w);
    CHECK(composed.s == w.s);
    CHECK(composed.c == w.c);

    // (2/3, 1) then (1, 3) gives (2/3, 3)
    MapWitness a = bare_witness(space, HolderExponent::from_rational(Rational(2, 3)),
                                ExactPositive::one());
    MapWitness b = bare_witness(space, HolderExponent::from_rational(Rational(1)),
                                ExactPositive::from_rational(Rational(3)));
    MapWitness ab = compose(a, b);
    CHECK(ab.s == HolderExponent::from_rational(Rational(2, 3)));
    CHECK(ab.c == ExactPositive::from_rational(Rational(3)));

    // (1, 9) then (1/2, 1) gives (1/2, 9^(1/2)) = (1/2, 3)
    MapWitness c = bare_witness(space, HolderExponent::from_rational(Rational(1)),
                                ExactPositive::from_rational(Rational(9)));
    MapWitness d = bare_witness(space, HolderExponent::from_rational(Rational(1, 2)),
                                ExactPositive::one());
    MapWitness cd = compose(c, d);
    CHECK(cd.s == HolderExponent::from_rational(Rational(1, 2)));
    CHECK(cd.c == ExactPositive::from_rational(Rational(3)));

    CHECK_THROWS_AS(compose(w, bare_witness(omega(3, Rational(1, 3)), w.s, w.c)),
                    std::invalid_argument);
}

TEST_CASE("exponent witness on the stated examples") {
    // sigma = 1: the identity, d' = d
    SymbolicSpace space = SymbolicSpace::weighted(
        {ScaleFactor::rational(Rational(1, 2)), ScaleFactor::rational(Rational(1, 3))});
    MapWitness id = build_exponent_witness(space, Rational(1));
    CHECK(id.target == space);

    // (1/2, 1/3) with sigma = 2 squares every weight
    MapWitness sq = build_exponent_witness(space, Rational(2));
    CHECK(sq.target.weight(0) == ScaleFactor::rational(Rational(1, 4)));
    CHECK(sq.target.weight(1) == ScaleFactor::rational(Rational(1, 9)));
    CHECK(sq.s == HolderExponent::from_rational(Rational(2)));
    CHECK(sq.c == ExactPositive::one());

    // (1/4, 1/8) with sigma = 1/2: rejected in rational form (1/8 has no
    // exact square root), accepted in base-power form
    SymbolicSpace rational_form = SymbolicSpace::weighted(
        {ScaleFactor::rational(Rational(1, 4)), ScaleFactor::rational(Rational(1, 8))});
    CHECK_THROWS_AS(build_exponent_witness(rational_form, Rational(1, 2)), std::domain_error);
    SymbolicSpace power_form = SymbolicSpace::weighted(
        {ScaleFactor::base_power("lambda", Rational(2)),
         ScaleFactor::base_power("lambda", Rational(3))});
    MapWitness root = build_exponent_witness(power_form, Rational(1, 2));
    CHECK(root.target.weight(0) == ScaleFactor::base_power("lambda", Rational(1)));
    CHECK(root.target.weight(1) == ScaleFactor::base_power("lambda", Rational(3, 2)));
}

TEST_CASE("block regrouping on the stated examples") {
    MapAtom enc = make_block_encode(omega(2, Rational(1, 3)), 2);
    CHECK(enc.target.alphabet() == 4);
    CHECK(enc.target.uniform_weight() == ScaleFactor::rational(Rational(1, 9)));

    // (01)^inf groups into blocks "01" = symbol 1 of alphabet 4
    SymbolicPoint x({}, {0, 1});
    CHECK(eval_atom(enc, x) == SymbolicPoint({}, {1}));

    // 0(10)^inf is the same point as (01)^inf in canonical form
    SymbolicPoint y({0}, {1, 0});
    CHECK(y == x);
    CHECK(eval_atom(enc, y) == SymbolicPoint({}, {1}));

    // odd preperiod forces one period unroll before grouping
    SymbolicPoint z({1}, {0, 1, 1});
    auto img = eval_atom(enc, z);
    // z = 1,0,1,1,0,1,1,... blocks: (1,0),(1,1),(0,1),(1,0),(1,1),(0,1),...
    CHECK(img == SymbolicPoint({}, {2, 3, 1}));

    MapAtom dec = make_block_decode(2, 2, ScaleFactor::rational(Rational(1, 3)));
    CHECK(dec.source.alphabet() == 4);
    CHECK(eval_atom(dec, SymbolicPoint({}, {1})) == SymbolicPoint({}, {0, 1}));
    // decode splits symbol 6 of alphabet 8 into binary digits 1,1,0
    MapAtom dec8 = make_block_decode(2, 3, ScaleFactor::rational(Rational(1, 2)));
    CHECK(eval_atom(dec8, SymbolicPoint({}, {6})) == SymbolicPoint({}, {1, 1, 0}));
}

TEST_CASE("uniform holder witness: lipschitz-grade chain for N=4 vs N'=8") {
    MapWitness w = build_uniform_holder_witness(4, ScaleFactor::rational(Rational(1, 4)), 8,
                                                ScaleFactor::rational(Rational(1, 8)));
    // log 4 / log 8 = 2/3, and the weights line up so s collapses to 1
    CHECK(w.s == HolderExponent::from_rational(Rational(1)));
    SymbolicPoint x({}, {0}), y({}, {1});
    SymbolicPoint fx = eval(w, x), fy = eval(w, y);
    auto d = distance(w.source, x, y);
    auto dp = distance(w.target, fx, fy);
    CHECK(d.value == ExactPositive::one());
    CHECK(dp.value == ExactPositive::one());
    CHECK(verify_witness(w, 5).pass);
}

TEST_CASE("uniform holder witness: (Omega_2, 1/3) vs (Omega_8, 1/2)") {
    MapWitness w = build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 8,
                                                ScaleFactor::rational(Rational(1, 2)));
    CHECK(w.s == HolderExponent::log_form(Rational(1, 2), Rational(1, 27)));
    CHECK(w.c == ExactPositive::from_rational(Rational(2)).pow(Rational(2, 3)));
    VerificationReport report = verify_witness(w, 8);
    CHECK(report.pass);
    CHECK(report.pair_count == 256u * 255 / 2);
    CHECK(report.observed_min == "1");
    CHECK(report.observed_max == "2^(2/3)");
}

TEST_CASE("incommensurable alphabet sizes refuse a witness") {
    CHECK_THROWS_AS(build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 3,
                                                 ScaleFactor::rational(Rational(1, 3))),
                    IncommensurableError);
}

TEST_CASE("exponent witness verifies with extremes exactly 1") {
    SymbolicSpace space = SymbolicSpace::weighted(
        {ScaleFactor::rational(Rational(1, 2)), ScaleFactor::rational(Rational(1, 3))});
    MapWitness w = build_exponent_witness(space, Rational(2));
    for (std::uint32_t depth : {2u, 5u, 8u}) {
        VerificationReport report = verify_witness(w, depth);
        CHECK(report.pass);
        CHECK(report.observed_min == "1");
        CHECK(report.observed_max == "1");
    }
}

TEST_CASE("block encode bound is sharp at depth 2q") {
    for (std::int64_t q : {2, 3}) {
        SymbolicSpace space = omega(2, Rational(1, 3));
        MapWitness w = witness_from_atom(make_block_encode(space, q));
        VerificationReport report = verify_witness(w, static_cast<std::uint32_t>(2 * q));
        CHECK(report.pass);
        CHECK(report.observed_min == "1");
        // r^-(q-1) = 3^(q-1)
        CHECK(report.observed_max == Rational(3).pow(q - 1).to_string());
    }
}

TEST_CASE("corrupting the constant produces a concrete violating pair") {
    MapWitness w = build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 8,
                                                ScaleFactor::rational(Rational(1, 2)));
    MapWitness corrupted = w;
    corrupted.c = w.c.times(ExactPositive::from_rational(Rational(1, 2)));
    VerificationReport report = verify_witness(corrupted, 6);
    CHECK(!report.pass);
    REQUIRE(!report.violations.empty());
    CHECK(!report.violations.front().point_x.empty());
    bool upper_violated = false;
    for (const auto& v : report.violations)
        upper_violated = upper_violated || v.bound == "upper bound C*d^s";
    CHECK(upper_violated);
    // monotone in depth: failing at depth k keeps failing deeper
    CHECK(!verify_witness(corrupted, 7).pass);
}

TEST_CASE("witness evaluation is a bijection on enumerated points") {
    MapWitness w = build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 8,
                                                ScaleFactor::rational(Rational(1, 2)));
    MapWitness inv = inverse_witness(w);
    CHECK(inv.source == w.target);
    CHECK(inv.target == w.source);
    auto points = enumerate_cylinder_points(w.source, 7);
    std::set<SymbolicPoint> images;
    for (const auto& x : points) {
        SymbolicPoint fx = eval(w, x);
        images.insert(fx);
        CHECK(eval(inv, fx) == x);
    }
    CHECK(images.size() == points.size());
}

TEST_CASE("inverse witness certificate verifies") {
    MapWitness w = build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 8,
                                                ScaleFactor::rational(Rational(1, 2)));
    MapWitness inv = inverse_witness(w);
    CHECK(inv.s == w.s.reciprocal());
    CHECK(verify_witness(inv, 3).pass);
}

TEST_CASE("composition soundness on sampled chains") {
    std::mt19937_64 rng(31);
    std::vector<Rational> sigmas{Rational(2), Rational(3), Rational(1, 2), Rational(1)};
    for (int trial = 0; trial < 8; ++trial) {
        SymbolicSpace base = SymbolicSpace::weighted(
            {ScaleFactor::base_power("u", Rational(1 + static_cast<std::int64_t>(rng() % 3))),
             ScaleFactor::base_power("u", Rational(1 + static_cast<std::int64_t>(rng() % 3)))});
        MapWitness w = build_exponent_witness(base, sigmas[rng() % sigmas.size()]);
        MapWitness w2 = build_exponent_witness(w.target, sigmas[rng() % sigmas.size()]);
        MapWitness chain = compose(w, w2);
        // every atom's bound holds, so the composed certificate must hold
        CHECK(verify_witness(w, 6).pass);
        CHECK(verify_witness(w2, 6).pass);
        CHECK(verify_witness(chain, 6).pass);
    }
    // uniform chains mixing block and exponent atoms
    MapWitness enc = witness_from_atom(make_block_encode(omega(2, Rational(1, 4)), 2));
    MapWitness expo = build_exponent_witness(enc.target, Rational(1, 2));
    MapWitness chain = compose(enc, expo);
    CHECK(verify_witness(enc, 6).pass);
    CHECK(verify_witness(expo, 6).pass);
    CHECK(verify_witness(chain, 6).pass);
}

TEST_CASE("weight map atom validates its claim") {
    SymbolicSpace src = SymbolicSpace::weighted(
        {ScaleFactor::rational(Rational(1, 4)), ScaleFactor::rational(Rational(1, 8))});
    SymbolicSpace dst = SymbolicSpace::weighted(
        {ScaleFactor::rational(Rational(1, 9)), ScaleFactor::rational(Rational(1, 27))});
    // (1/4)^s = 1/9 for s = log(1/9)/log(1/4) = log 3/log 2
    HolderExponent s = HolderExponent::log_form(Rational(1, 9), Rational(1, 4));
    MapWitness w = witness_from_atom(make_weight_map_atom(src, dst, s));
    VerificationReport report = verify_witness(w, 8);
    CHECK(report.pass);
    CHECK(report.observed_min == "1");
    CHECK(report.observed_max == "1");
    CHECK_THROWS_AS(make_weight_map_atom(src, src, s), std::invalid_argument);
}

TEST_CASE("verify depth budget") {
    MapWitness w = build_exponent_witness(omega(2, Rational(1, 2)), Rational(2));
    CHECK_THROWS_AS(verify_witness(w, 20, 1000), EnumerationLimitError);
}

TEST_CASE("block-chain witnesses verify across alphabet-size combinations") {
    struct Combo {
        std::int64_t n1, n2;
        Rational r1, r2;
    };
    std::vector<Combo> combos = {
        {2, 4, Rational(1, 3), Rational(1, 2)},   {4, 2, Rational(1, 2), Rational(2, 5)},
        {2, 8, Rational(1, 4), Rational(1, 3)},   {8, 2, Rational(1, 2), Rational(1, 5)},
        {4, 8, Rational(1, 3), Rational(1, 4)},   {8, 4, Rational(2, 5), Rational(1, 2)},
        {3, 9, Rational(1, 2), Rational(1, 3)},   {9, 3, Rational(1, 3), Rational(1, 2)},
        {2, 16, Rational(1, 2), Rational(1, 2)},  {16, 4, Rational(1, 5), Rational(1, 7)},
    };
    for (const auto& c : combos) {
        MapWitness w = build_uniform_holder_witness(c.n1, ScaleFactor::rational(c.r1), c.n2,
                                                    ScaleFactor::rational(c.r2));
        std::uint32_t depth = 1;
        std::uint64_t points = static_cast<std::uint64_t>(c.n1);
        while (points * static_cast<std::uint64_t>(c.n1) <= 320) {
            points *= static_cast<std::uint64_t>(c.n1);
            ++depth;
        }
        VerificationReport rep = verify_witness(w, depth);
        CHECK(rep.pass);
        // aligned block boundaries put the ratio 1 inside the observed range
        ExactPositive one = ExactPositive::one();
        CHECK(rep.ratio_min->compare(one) <= 0);
        CHECK(rep.ratio_max->compare(one) >= 0);
        // and the inverse map passes with the reciprocal exponent
        MapWitness inv = inverse_witness(w);
        CHECK(inv.s == w.s.reciprocal());
        std::uint32_t inv_depth = 1;
        points = static_cast<std::uint64_t>(c.n2);
        while (points * static_cast<std::uint64_t>(c.n2) <= 320) {
            points *= static_cast<std::uint64_t>(c.n2);
            ++inv_depth;
        }
        CHECK(verify_witness(inv, inv_depth).pass);
    }
}

TEST_CASE("declared-base weights run through the chain exactly") {
    // (1/2)^(3/2) is irrational but exactly representable; the whole chain
    // and its verification stay exact
    ScaleFactor w = ScaleFactor::base_power("half", Rational(3, 2), Rational(1, 2));
    MapWitness chain = build_uniform_holder_witness(2, ScaleFactor::rational(Rational(1, 3)), 4, w);
    VerificationReport rep = verify_witness(chain, 8);
    CHECK(rep.pass);
    // s = log((1/2)^(3/2))/log((1/3)^2) = (3/4) log(1/2)/log(1/3)
    CHECK(chain.s == HolderExponent::log_form(Rational(1, 8), Rational(1, 81)));
    MapWitness inv = inverse_witness(chain);
    CHECK(verify_witness(inv, 4).pass);
}

TEST_CASE("non-identity relabeling is an isometry") {
    SymbolicSpace space = omega(4, Rational(1, 3));
    MapAtom atom = make_relabel(space, {2, 0, 3, 1});
    CHECK(eval_atom(atom, SymbolicPoint({0, 1}, {2, 3})) == SymbolicPoint({2, 0}, {3, 1}));
    MapWitness w = witness_from_atom(atom);
    VerificationReport rep = verify_witness(w, 4);
    CHECK(rep.pass);
    CHECK(rep.observed_min == "1");
    CHECK(rep.observed_max == "1");
    MapWitness inv = inverse_witness(w);
    for (const auto& x : enumerate_cylinder_points(space, 3))
        CHECK(eval(inv, eval(w, x)) == x);
    CHECK_THROWS_AS(make_relabel(space, {0, 1, 2, 2}), std::invalid_argument);
}
