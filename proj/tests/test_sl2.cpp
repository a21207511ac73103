#include "tetra/sl2.hpp"

#include "tetra/sampling.hpp"

#include <doctest.h>

using namespace tetra;

namespace {

const Sl2Vec X = Sl2Vec::X();
const Sl2Vec Y = Sl2Vec::Y();
const Sl2Vec Z = Sl2Vec::Z();

Sl2Vec mat_apply(const Mat3& m, const Sl2Vec& v) {
    Sl2Vec r;
    for (int i = 0; i < 3; ++i) {
        Scalar acc(0);
        for (int j = 0; j < 3; ++j)
            acc += m[i][j] * v.coord(j);
        (i == 0 ? r.x : i == 1 ? r.y : r.z) = acc;
    }
    return r;
}

}  // namespace

TEST_CASE("equitable structure constants") {
    CHECK(sl2_bracket(X, Y) == Scalar(2) * X + Scalar(2) * Y);
    CHECK(sl2_bracket(Y, Z) == Scalar(2) * Y + Scalar(2) * Z);
    CHECK(sl2_bracket(Z, X) == Scalar(2) * Z + Scalar(2) * X);
    CHECK(sl2_bracket(X, X).is_zero());

    Rng rng(5);
    for (int s = 0; s < 20; ++s) {
        const Sl2Vec u = random_sl2(rng);
        const Sl2Vec v = random_sl2(rng);
        CHECK((sl2_bracket(u, v) + sl2_bracket(v, u)).is_zero());
    }
}

TEST_CASE("jacobi identity") {
    const Sl2Vec basis[] = {X, Y, Z};
    const auto jacobi = [](const Sl2Vec& u, const Sl2Vec& v, const Sl2Vec& w) {
        return sl2_bracket(u, sl2_bracket(v, w)) + sl2_bracket(v, sl2_bracket(w, u)) +
               sl2_bracket(w, sl2_bracket(u, v));
    };
    for (const Sl2Vec& u : basis)
        for (const Sl2Vec& v : basis)
            for (const Sl2Vec& w : basis)
                CHECK(jacobi(u, v, w).is_zero());
    Rng rng(6);
    for (int s = 0; s < 50; ++s)
        CHECK(jacobi(random_sl2(rng), random_sl2(rng), random_sl2(rng)).is_zero());
}

TEST_CASE("canonical basis conversion") {
    const Sl2Vec e = from_canonical({Scalar(1), Scalar(0), Scalar(0)});
    const Sl2Vec f = from_canonical({Scalar(0), Scalar(1), Scalar(0)});
    const Sl2Vec h = from_canonical({Scalar(0), Scalar(0), Scalar(1)});
    CHECK(h == Z);
    CHECK(e == Scalar(1, 2) * X + Scalar(1, 2) * Z);
    CHECK(f == Scalar(-1, 2) * Y + Scalar(-1, 2) * Z);
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h carry over exactly
    CHECK(sl2_bracket(h, e) == Scalar(2) * e);
    CHECK(sl2_bracket(h, f) == Scalar(-2) * f);
    CHECK(sl2_bracket(e, f) == h);
}

TEST_CASE("adjoint matrix") {
    CHECK(mat_apply(adjoint_matrix(X), Y) == sl2_bracket(X, Y));
    CHECK(mat_apply(adjoint_matrix(Sl2Vec{}), X).is_zero());
    Rng rng(8);
    for (int s = 0; s < 20; ++s) {
        const Sl2Vec u = random_sl2(rng);
        const Mat3 m = adjoint_matrix(u);
        CHECK(m[0][0] + m[1][1] + m[2][2] == Scalar(0));  // ad is traceless
        const Sl2Vec v = random_sl2(rng);
        CHECK(mat_apply(m, v) == sl2_bracket(u, v));
    }
}

TEST_CASE("killing form values and gram matrix") {
    CHECK(killing(X, X) == Scalar(8));
    CHECK(killing(X, Y) == Scalar(-8));
    CHECK(killing(Z, Z) == Scalar(8));
    // regression constant derived from the adjoint-trace definition
    const long expected[3][3] = {{8, -8, -8}, {-8, 8, -8}, {-8, -8, 8}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(killing_gram()[i][j] == Scalar(expected[i][j]));
}

TEST_CASE("killing form invariance") {
    Rng rng(9);
    for (int s = 0; s < 30; ++s) {
        const Sl2Vec u = random_sl2(rng);
        const Sl2Vec v = random_sl2(rng);
        const Sl2Vec w = random_sl2(rng);
        CHECK(killing(sl2_bracket(u, v), w) == killing(u, sl2_bracket(v, w)));
        CHECK(killing(u, v) == killing(v, u));
    }
}
