#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "atgrid/eisenstein.hpp"
#include "atgrid/errors.hpp"

using atgrid::EisensteinInt;
using atgrid::RealityClass;

namespace {

EisensteinInt random_value(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    return {d(rng), d(rng)};
}

std::complex<double> embed(const EisensteinInt& x) {
    const auto [re, im] = x.embed_complex();
    return {re, im};
}

}  // namespace

TEST_CASE("ring operation examples") {
    const EisensteinInt w = EisensteinInt::omega();
    CHECK(w * w == EisensteinInt(-1, -1));
    CHECK(EisensteinInt(1, -1) * EisensteinInt(1, 1) == EisensteinInt(2, 1));
    CHECK(EisensteinInt(3, -2) + EisensteinInt(-3, 2) == EisensteinInt(0, 0));
    CHECK(-EisensteinInt(2, -5) == EisensteinInt(-2, 5));
}

TEST_CASE("conjugation") {
    CHECK(EisensteinInt(0, 1).conj() == EisensteinInt(-1, -1));
    CHECK(EisensteinInt(5, 0).conj() == EisensteinInt(5, 0));
    CHECK(EisensteinInt(1, -1).conj() == EisensteinInt(2, 1));
}

TEST_CASE("reality classes") {
    CHECK(EisensteinInt(0, 0).reality_class() == RealityClass::zero);
    CHECK(EisensteinInt(7, 0).reality_class() == RealityClass::real);
    CHECK(EisensteinInt(1, 2).reality_class() == RealityClass::purely_imaginary);
    CHECK(EisensteinInt(1, 1).reality_class() == RealityClass::generic);
    CHECK(EisensteinInt(-3, -6).reality_class() == RealityClass::purely_imaginary);
}

TEST_CASE("unit roots") {
    CHECK(EisensteinInt::unit_root(0) == EisensteinInt(1, 0));
    CHECK(EisensteinInt::unit_root(1) == EisensteinInt(0, 1));
    CHECK(EisensteinInt::unit_root(2) == EisensteinInt(-1, -1));
    CHECK(EisensteinInt::unit_root(5) == EisensteinInt(-1, -1));
    CHECK(EisensteinInt::unit_root(-1) == EisensteinInt(-1, -1));
    CHECK(EisensteinInt::unit_root(-2) == EisensteinInt(0, 1));

    const EisensteinInt w = EisensteinInt::unit_root(1);
    CHECK(w * w * w == EisensteinInt::one());
    CHECK(EisensteinInt::one() + w + w * w == EisensteinInt::zero());
}

TEST_CASE("complex embedding") {
    const auto [re1, im1] = EisensteinInt(0, 1).embed_complex();
    CHECK(re1 == doctest::Approx(-0.5));
    CHECK(im1 == doctest::Approx(std::sqrt(3.0) / 2));
    const auto [re2, im2] = EisensteinInt(1, 0).embed_complex();
    CHECK(re2 == doctest::Approx(1.0));
    CHECK(im2 == doctest::Approx(0.0));
    const auto [re3, im3] = EisensteinInt(1, 2).embed_complex();
    CHECK(re3 == doctest::Approx(0.0));
    CHECK(im3 == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("1 - w = i sqrt(3) w^2 and 1 - w^2 = -i sqrt(3) w in the embedding") {
    const EisensteinInt w = EisensteinInt::omega();
    const EisensteinInt w2 = w * w;
    const std::complex<double> i_sqrt3(0.0, std::sqrt(3.0));
    CHECK(std::abs(embed(EisensteinInt::one() - w) - i_sqrt3 * embed(w2)) < 1e-12);
    CHECK(std::abs(embed(EisensteinInt::one() - w2) + i_sqrt3 * embed(w)) < 1e-12);
}

TEST_CASE("randomized ring axioms and conjugation laws") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 10000; ++iter) {
        const EisensteinInt x = random_value(rng);
        const EisensteinInt y = random_value(rng);
        const EisensteinInt z = random_value(rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        REQUIRE(x.conj().conj() == x);
        REQUIRE((x * y).conj() == x.conj() * y.conj());
        REQUIRE((x + y).conj() == x.conj() + y.conj());

        const EisensteinInt norm_val = x * x.conj();
        REQUIRE(norm_val.is_real());
        REQUIRE(norm_val.a() == x.norm());
        REQUIRE(norm_val.a() >= 0);
        REQUIRE((norm_val.a() == 0) == x.is_zero());
    }
}

TEST_CASE("overflow is detected, never wrapped") {
    const EisensteinInt big(INT64_MAX, 0);
    CHECK_THROWS_AS(big + EisensteinInt::one(), std::overflow_error);
    CHECK_THROWS_AS(big * EisensteinInt(2, 0), std::overflow_error);
    CHECK_THROWS_AS(EisensteinInt(INT64_MIN, 0) - EisensteinInt::one(), std::overflow_error);
    CHECK_THROWS_AS(-EisensteinInt(INT64_MIN, 0), std::overflow_error);
    CHECK_THROWS_AS(EisensteinInt(INT64_MAX, INT64_MAX).norm(), std::overflow_error);
}

TEST_CASE("exact division") {
    const EisensteinInt w = EisensteinInt::omega();
    CHECK(EisensteinInt::div_exact(EisensteinInt::one(), w) == w * w);
    const EisensteinInt x(7, -4);
    const EisensteinInt y(2, 5);
    CHECK(EisensteinInt::div_exact(x * y, y) == x);
    CHECK_THROWS_AS(EisensteinInt::div_exact(EisensteinInt::one(), EisensteinInt(2, 0)),
                    atgrid::ExactnessError);
    CHECK_THROWS_AS(EisensteinInt::div_exact(x, EisensteinInt::zero()), atgrid::ExactnessError);
}

TEST_CASE("text rendering and parsing") {
    CHECK(EisensteinInt(-1, -1).to_string() == "-1-1w");
    CHECK(EisensteinInt(5, 0).to_string() == "5");
    CHECK(EisensteinInt(0, 1).to_string() == "0+1w");
    CHECK(EisensteinInt(3, -2).to_string() == "3-2w");

    CHECK(EisensteinInt::parse("-1-1w") == EisensteinInt(-1, -1));
    CHECK(EisensteinInt::parse("5") == EisensteinInt(5, 0));
    CHECK(EisensteinInt::parse("w") == EisensteinInt(0, 1));
    CHECK(EisensteinInt::parse("-w") == EisensteinInt(0, -1));
    CHECK(EisensteinInt::parse("2w") == EisensteinInt(0, 2));
    CHECK(EisensteinInt::parse("3-w") == EisensteinInt(3, -1));
    CHECK(EisensteinInt::parse(" 0 + 1w ") == EisensteinInt(0, 1));

    CHECK_THROWS_AS(EisensteinInt::parse(""), atgrid::ParseError);
    CHECK_THROWS_AS(EisensteinInt::parse("x"), atgrid::ParseError);
    CHECK_THROWS_AS(EisensteinInt::parse("1+"), atgrid::ParseError);
    CHECK_THROWS_AS(EisensteinInt::parse("1w2"), atgrid::ParseError);
    CHECK_THROWS_AS(EisensteinInt::parse("1+2"), atgrid::ParseError);

    std::mt19937 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        const EisensteinInt x = random_value(rng);
        REQUIRE(EisensteinInt::parse(x.to_string()) == x);
    }
}
