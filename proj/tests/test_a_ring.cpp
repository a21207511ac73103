#include "tetra/a_ring.hpp"

#include "tetra/sampling.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tetra;

namespace {

const AElem t = AElem::t();
const AElem tp = AElem::t_prime();
const AElem tpp = AElem::t_second();
const AElem one(1);

}  // namespace

TEST_CASE("addition works sectorwise and cancels to canonical zero") {
    const AElem a = t + AElem::pole1_power(1);
    CHECK(a.pos().at(1) == Scalar(1));
    CHECK(a.pole1().at(1) == Scalar(1));
    CHECK(a.const_term().is_zero());

    const AElem b = AElem::t_power(-1) + Scalar(-1) * AElem::t_power(-1);
    CHECK(b.is_zero());
    CHECK(b == AElem());

    Rng rng(7);
    const AElem r = random_aelem(rng, 6);
    CHECK(r + AElem() == r);
}

TEST_CASE("the defining identities of t, t', t''") {
    CHECK(t * tp == t - one);
    CHECK(tp * tpp == tp - one);
    CHECK(tpp * t == tpp - one);
    CHECK(t * tp * tpp == Scalar(-1) * one);
}

TEST_CASE("mixed pole products reduce to partial fractions") {
    // 1/(t(t-1)) = 1/(t-1) - 1/t
    CHECK(AElem::t_power(-1) * AElem::pole1_power(1) ==
          AElem::pole1_power(1) - AElem::t_power(-1));
    // multiplying back clears the poles exactly
    for (unsigned i = 1; i <= 5; ++i) {
        for (unsigned j = 1; j <= 5; ++j) {
            const AElem m = AElem::t_power(-static_cast<int>(i)) * AElem::pole1_power(j);
            AElem back = m * AElem::t_power(static_cast<int>(i));
            for (unsigned k = 0; k < j; ++k)
                back = back * (t - one);
            CHECK(back == one);
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    Rng rng(42);
    for (int s = 0; s < 25; ++s) {
        const AElem a = random_aelem(rng, 6);
        const AElem b = random_aelem(rng, 6);
        const AElem c = random_aelem(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("prime automorphism") {
    CHECK(t.prime() == one - AElem::t_power(-1));
    CHECK(t.prime().prime() == Scalar(-1) * AElem::pole1_power(1));  // (1-t)^-1
    CHECK(t.prime().prime().prime() == t);

    Rng rng(11);
    for (int s = 0; s < 50; ++s) {
        const AElem a = random_aelem(rng, 6);
        const AElem b = random_aelem(rng, 6);
        CHECK((a * b).prime() == a.prime() * b.prime());
        CHECK(a.prime().prime().prime() == a);
    }
}

TEST_CASE("symmetric basis conversion") {
    const SymCoords s = AElem::t_power(-1).to_sym();
    CHECK(s.const_term == Scalar(1));
    CHECK(s.tp_pow.at(1) == Scalar(-1));
    CHECK(s.t_pow.empty());

    const SymCoords s1 = AElem::pole1_power(1).to_sym();
    CHECK(s1.const_term.is_zero());
    CHECK(s1.tpp_pow.at(1) == Scalar(-1));

    const SymCoords s2 = AElem::t_power(-2).to_sym();
    CHECK(s2.const_term == Scalar(1));
    CHECK(s2.tp_pow.at(1) == Scalar(-2));
    CHECK(s2.tp_pow.at(2) == Scalar(1));

    // round trips over the canonical basis up to degree 12
    for (int k = 1; k <= 12; ++k) {
        for (const AElem& b : {AElem::t_power(k), AElem::t_power(-k),
                               AElem::pole1_power(static_cast<unsigned>(k))})
            CHECK(AElem::from_sym(b.to_sym()) == b);
    }
    CHECK(AElem::from_sym(one.to_sym()) == one);

    // and over the symmetric basis in the other direction
    for (unsigned k = 1; k <= 12; ++k) {
        for (int which = 0; which < 3; ++which) {
            SymCoords unit;
            unit.const_term = Scalar(0);
            (which == 0 ? unit.t_pow : which == 1 ? unit.tp_pow : unit.tpp_pow)[k] = Scalar(1);
            CHECK(AElem::from_sym(unit).to_sym() == unit);
        }
    }

    Rng rng(3);
    for (int s3 = 0; s3 < 20; ++s3) {
        const AElem a = random_aelem(rng, 8);
        CHECK(AElem::from_sym(a.to_sym()) == a);
    }
}

TEST_CASE("degree") {
    CHECK(AElem().degree() == 0);
    CHECK(AElem(5).degree() == 0);
    CHECK((t * t * t).degree() == 3);
    CHECK((AElem::t_power(-2) + AElem::pole1_power(4)).degree() == 4);
}

TEST_CASE("units and powers") {
    CHECK(t.pow(-1) == AElem::t_power(-1));
    CHECK(t.pow(0) == one);
    CHECK(t.pow(3) == AElem::t_power(3));
    CHECK(tp.pow(-1) == one + AElem::pole1_power(1));  // t/(t-1)
    CHECK(tp.pow(-1) * tp == one);
    CHECK(tpp.pow(-2) * tpp.pow(2) == one);
    CHECK((t - one).pow(-2) == AElem::pole1_power(2));
    CHECK_FALSE((t + one).try_invert().has_value());
    CHECK_FALSE((t + AElem::pole1_power(1)).try_invert().has_value());
    CHECK_THROWS_AS((t + one).pow(-1), std::domain_error);

    // units stay units under the automorphism
    const AElem u = Scalar(3, 2) * t.pow(2) * (t - one).pow(-1);
    const auto inv = u.try_invert();
    REQUIRE(inv.has_value());
    CHECK(u * *inv == one);
}

TEST_CASE("canonical rendering") {
    CHECK(AElem().str() == "0");
    CHECK((Scalar(-1) * one + Scalar(2) * t.pow(2) + Scalar(1, 2) * AElem::t_power(-1) -
           Scalar(3) * AElem::pole1_power(2))
              .str() == "-1 + 2*t^2 + 1/2*t^-1 - 3*(t-1)^-2");
    CHECK(t.str() == "t");
    CHECK((t - one).str() == "-1 + t");
    CHECK(tp.str() == "1 - t^-1");
}
