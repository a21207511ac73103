#include "tetra/scalar.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tetra;

TEST_CASE("scalar arithmetic is exact and canonical") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(1, -2) == Scalar(-1, 2));
    CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
    CHECK(Scalar(1, 3) * Scalar(3) == Scalar(1));
    CHECK(Scalar(7, 2) - Scalar(7, 2) == Scalar(0));
    CHECK((Scalar(5, 6) / Scalar(5, 6)) == Scalar(1));
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar rendering and parsing") {
    CHECK(Scalar(-3).str() == "-3");
    CHECK(Scalar(1, 2).str() == "1/2");
    CHECK(Scalar(-6, 4).str() == "-3/2");
    CHECK(Scalar::from_string("22/7") == Scalar(22, 7));
    CHECK(Scalar::from_string("-5") == Scalar(-5));
    CHECK_THROWS_AS(Scalar::from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == Scalar(1));
    CHECK(binomial(8, 3) == Scalar(56));
    CHECK(binomial(1, 2) == Scalar(0));
    CHECK(binomial(16, 8) == Scalar(12870));
}
