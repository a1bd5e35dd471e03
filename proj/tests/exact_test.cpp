#include "torsig/errors.hpp"
#include "torsig/exact.hpp"
#include "torsig/knot.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using torsig::ExactRational;
using torsig::ratio;

TEST_CASE("parse and str round-trip in lowest terms") {
    CHECK(ExactRational::parse("2/4").str() == "1/2");
    CHECK(ExactRational::parse("-6/4").str() == "-3/2");
    CHECK(ExactRational::parse("7").str() == "7");
    CHECK(ExactRational::parse("4/2").str() == "2");
    CHECK(ExactRational::parse("0/5").str() == "0");
    for (const char* s : {"1/3", "-5/7", "12345678901234567890123/7", "0", "-1"}) {
        CHECK(ExactRational::parse(ExactRational::parse(s).str()) == ExactRational::parse(s));
    }
    std::ostringstream os;
    os << ratio(10, -4);
    CHECK(os.str() == "-5/2");
}

TEST_CASE("malformed input is rejected") {
    for (const char* s : {"", "1/0", "a/b", "1/", "/2", "1//2", "1.5", " 1/2", "1/-2"}) {
        INFO(s);
        CHECK_THROWS_AS(ExactRational::parse(s), torsig::InvalidArgument);
    }
    CHECK_THROWS(ExactRational(1, 0));
    CHECK_THROWS(ExactRational(1) / ExactRational(0));
}

TEST_CASE("arithmetic and ordering") {
    CHECK(ratio(1, 2) + ratio(1, 3) == ratio(5, 6));
    CHECK(ratio(1, 2) * ratio(2, 3) == ratio(1, 3));
    CHECK(ratio(1, 2) / ratio(1, 4) == ExactRational(2));
    CHECK(-ratio(1, 2) == ratio(-1, 2));
    CHECK(ratio(1, 3) < ratio(1, 2));
    CHECK(ratio(-1, 2) < ExactRational(0));
    CHECK(ratio(6, 3).is_integer());
    CHECK(ratio(-3, 6).sign() == -1);
    CHECK(torsig::abs(ratio(-3, 4)) == ratio(3, 4));
}

TEST_CASE("floor, ceiling and fractional part") {
    CHECK(torsig::int_part(ratio(7, 2)) == 3);
    CHECK(torsig::int_part(ratio(-7, 2)) == -4);
    CHECK(torsig::ceil_part(ratio(-7, 2)) == -3);
    CHECK(torsig::ceil_part(ExactRational(5)) == 5);
    CHECK(torsig::frac_part(ratio(-1, 3)) == ratio(2, 3));
    for (long n = -20; n <= 20; ++n) {
        const auto x = ratio(n, 7);
        CHECK(ExactRational(torsig::int_part(x)) + torsig::frac_part(x) == x);
        CHECK(torsig::frac_part(x) >= ExactRational(0));
        CHECK(torsig::frac_part(x) < ExactRational(1));
    }
}

TEST_CASE("sawtooth is odd, periodic and zero on integers") {
    CHECK(torsig::sawtooth(ratio(1, 4)) == ratio(-1, 4));
    CHECK(torsig::sawtooth(ratio(3, 4)) == ratio(1, 4));
    CHECK(torsig::sawtooth(ExactRational(3)) == ExactRational(0));
    CHECK(torsig::sawtooth(ratio(1, 2)) == ExactRational(0));
    for (long n = -30; n <= 30; ++n) {
        const auto x = ratio(n, 11);
        CHECK(torsig::sawtooth(-x) == -torsig::sawtooth(x));
        CHECK(torsig::sawtooth(x + ExactRational(1)) == torsig::sawtooth(x));
        CHECK(torsig::is_integer_indicator(x) == (n % 11 == 0 ? 1 : 0));
    }
}

TEST_CASE("psi2 is the periodised Bernoulli polynomial") {
    CHECK(torsig::psi2(ExactRational(0)) == ratio(1, 6));
    CHECK(torsig::psi2(ratio(1, 2)) == ratio(-1, 12));
    CHECK(torsig::psi2(ratio(7, 3)) == torsig::psi2(ratio(1, 3)));
    CHECK(torsig::psi2(ratio(-1, 3)) == torsig::psi2(ratio(1, 3)));
}

TEST_CASE("to_int64 range") {
    CHECK(torsig::to_int64(torsig::BigInt("9223372036854775807")) == INT64_MAX);
    CHECK_THROWS_AS(torsig::to_int64(torsig::BigInt("9223372036854775808")), torsig::InvalidArgument);
}

TEST_CASE("knot and spectral parameter validation") {
    CHECK_NOTHROW(torsig::TorusKnot(2, 3));
    CHECK_THROWS_AS(torsig::TorusKnot(4, 6), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::TorusKnot(1, 3), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::TorusKnot(3, -2), torsig::InvalidArgument);
    CHECK(torsig::TorusKnot(3, 5).sigma_size() == 8);
    CHECK(torsig::TorusKnot(3, 5).swapped() == torsig::TorusKnot(5, 3));
    CHECK_NOTHROW(torsig::SpectralParameter(ExactRational(0)));
    CHECK_THROWS_AS(torsig::SpectralParameter(ExactRational(1)), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::SpectralParameter(ratio(-1, 2)), torsig::InvalidArgument);
}
