#include "tetra/lhat.hpp"

#include "tetra/sampling.hpp"

#include <doctest.h>

using namespace tetra;

namespace {

const AElem t = AElem::t();
const AElem tp = AElem::t_prime();
const AElem one(1);

}  // namespace

TEST_CASE("central vectors satisfy c + c' + c'' = 0 by representation") {
    CHECK((CentralVec::c_unit() + CentralVec::cp_unit() + CentralVec::cpp_unit()).is_zero());
    CHECK(CentralVec::cpp_unit() == CentralVec{Scalar(-1), Scalar(-1)});
}

TEST_CASE("cocycle table entries") {
    CHECK(cocycle_table(TVar::T, 1, TVar::TPrime, 1) == -CentralVec::c_unit());
    CHECK(cocycle_table(TVar::T, 1, TVar::TPrime, 2) == Scalar(-2) * CentralVec::c_unit());
    CHECK(cocycle_table(TVar::T, 2, TVar::TPrime, 1).is_zero());  // binom(1,2) = 0
    CHECK(cocycle_table(TVar::TSecond, 1, TVar::T, 1) == -CentralVec::cpp_unit());
    CHECK(cocycle_table(TVar::TSecond, 1, TVar::T, 1) == CentralVec{Scalar(1), Scalar(1)});
    CHECK(cocycle_table(TVar::T, 3, TVar::T, 5).is_zero());
    // remaining sector pairs, i = j = 1
    CHECK(cocycle_table(TVar::TPrime, 1, TVar::TSecond, 1) == -CentralVec::cp_unit());
    CHECK(cocycle_table(TVar::TPrime, 1, TVar::T, 1) == CentralVec::c_unit());
    CHECK(cocycle_table(TVar::TSecond, 1, TVar::TPrime, 1) == CentralVec::cp_unit());
    CHECK(cocycle_table(TVar::T, 1, TVar::TSecond, 1) == CentralVec::cpp_unit());
}

TEST_CASE("cocycle on ring elements") {
    CHECK(cocycle(t, t.pow(-1)) == CentralVec::c_unit());
    CHECK(cocycle(tp, tp.pow(-1)) == CentralVec::cp_unit());
    CHECK(cocycle(t, t).is_zero());
    CHECK(cocycle(one, t + tp).is_zero());

    const AElem tpp = AElem::t_second();
    CHECK((cocycle(t, t.pow(-1)) + cocycle(tp, tp.pow(-1)) + cocycle(tpp, tpp.pow(-1))).is_zero());
}

TEST_CASE("cocycle skew-symmetry and cyclic identity on random elements") {
    Rng rng(13);
    for (int s = 0; s < 50; ++s) {
        const AElem a = random_aelem(rng, 5);
        const AElem b = random_aelem(rng, 5);
        const AElem c = random_aelem(rng, 5);
        CHECK((cocycle(a, b) + cocycle(b, a)).is_zero());
        CHECK((cocycle(a * b, c) + cocycle(b * c, a) + cocycle(c * a, b)).is_zero());
    }
}

TEST_CASE("loop bracket") {
    CHECK(l_bracket(tensor(Sl2Vec::X(), one), tensor(Sl2Vec::Y(), one)) ==
          tensor(Scalar(2) * Sl2Vec::X() + Scalar(2) * Sl2Vec::Y(), one));
    CHECK(l_bracket(tensor(Sl2Vec::X(), t), tensor(Sl2Vec::X(), tp)).is_zero());
    CHECK(l_bracket(tensor(Sl2Vec::Y(), t), tensor(Sl2Vec::Z(), t - one)) ==
          tensor(Scalar(2) * Sl2Vec::Y() + Scalar(2) * Sl2Vec::Z(), t * t - t));
}

TEST_CASE("lhat bracket carries the killing-weighted cocycle") {
    const LHatElem xt = LHatElem::from_loop(tensor(Sl2Vec::X(), t));
    const LHatElem ytp = LHatElem::from_loop(tensor(Sl2Vec::Y(), tp));
    const LHatElem expect = {tensor(Scalar(2) * Sl2Vec::X() + Scalar(2) * Sl2Vec::Y(), t - one),
                             Scalar(8) * CentralVec::c_unit()};
    CHECK(lhat_bracket(xt, ytp) == expect);

    // purely central arguments are invisible
    Rng rng(17);
    for (int s = 0; s < 20; ++s) {
        const LHatElem u = random_lhat(rng, 3);
        CHECK(lhat_bracket(u, LHatElem::from_central(CentralVec::c_unit())).is_zero());
        CHECK(lhat_bracket(LHatElem::from_central(CentralVec::cpp_unit()), u).is_zero());
    }

    const LHatElem x1 = LHatElem::from_loop(tensor(Sl2Vec::X(), one));
    const LHatElem y1 = LHatElem::from_loop(tensor(Sl2Vec::Y(), one));
    CHECK(lhat_bracket(x1, y1) ==
          LHatElem::from_loop(tensor(Scalar(2) * Sl2Vec::X() + Scalar(2) * Sl2Vec::Y(), one)));
}

TEST_CASE("lhat is a lie algebra on random elements") {
    Rng rng(19);
    for (int s = 0; s < 40; ++s) {
        const LHatElem u = random_lhat(rng, 4);
        const LHatElem v = random_lhat(rng, 4);
        const LHatElem w = random_lhat(rng, 4);
        CHECK((lhat_bracket(u, v) + lhat_bracket(v, u)).is_zero());
        const LHatElem jac = lhat_bracket(u, lhat_bracket(v, w)) +
                             lhat_bracket(v, lhat_bracket(w, u)) +
                             lhat_bracket(w, lhat_bracket(u, v));
        CHECK(jac.is_zero());
        // bilinearity in the first slot
        const Scalar s2(3, 2);
        CHECK(lhat_bracket(s2 * u + v, w) ==
              s2 * lhat_bracket(u, w) + lhat_bracket(v, w));
    }
}

TEST_CASE("projection to the loop algebra") {
    const LHatElem u = {tensor(Sl2Vec::X(), t), Scalar(4) * CentralVec::c_unit()};
    CHECK(pi_projection(u) == tensor(Sl2Vec::X(), t));
    CHECK(pi_projection(LHatElem::from_central(CentralVec::cp_unit())).is_zero());
    CHECK(pi_projection(LHatElem{}).is_zero());

    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
        const LHatElem u2 = random_lhat(rng, 3);
        const LHatElem v2 = random_lhat(rng, 3);
        CHECK(pi_projection(lhat_bracket(u2, v2)) ==
              l_bracket(pi_projection(u2), pi_projection(v2)));
    }
}

TEST_CASE("lhat rendering") {
    CHECK(LHatElem{}.str() == "0");
    const LHatElem u = {tensor(Sl2Vec::X(), one), Scalar(-4) * CentralVec::cp_unit()};
    CHECK(u.str() == "T(X, 1) - 4*c'");
    const LHatElem v = {-tensor(Sl2Vec::Y(), t) - tensor(Sl2Vec::Z(), t - one),
                        Scalar(4) * CentralVec::cpp_unit()};
    CHECK(v.str() == "T(Y, -t) + T(Z, 1 - t) - 4*c - 4*c'");
}
