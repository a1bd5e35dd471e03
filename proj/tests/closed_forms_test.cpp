#include "oracles.hpp"

#include "torsig/closed_forms.hpp"
#include "torsig/errors.hpp"
#include "torsig/sigma.hpp"

#include <catch_amalgamated.hpp>

using torsig::ExactRational;
using torsig::SpectralParameter;
using torsig::TorusKnot;
using torsig::ratio;

TEST_CASE("integral routes: examples") {
    CHECK(torsig::integral_closed(TorusKnot(2, 3)) == ratio(-4, 3));
    CHECK(torsig::integral_closed(TorusKnot(2, 5)) == ratio(-12, 5));
    CHECK(torsig::integral_closed(TorusKnot(3, 5)) == ratio(-64, 15));
    CHECK(torsig::integral_via_dedekind(TorusKnot(2, 3)) == ratio(-4, 3));
    CHECK(torsig::integral_via_dedekind(TorusKnot(2, 5)) == ratio(-12, 5));
    CHECK(torsig::integral_via_dedekind(TorusKnot(3, 5)) == ratio(-64, 15));
    CHECK(torsig::integral_via_dedekind_printed(TorusKnot(2, 3)) == ratio(-8, 9));
}

TEST_CASE("integral routes agree with the summed oracle") {
    for (long p = 2; p <= 20; ++p)
        for (long q = p + 1; q <= 20; ++q) {
            if (!oracle::coprime(p, q)) continue;
            oracle::Q sum = 0;
            for (const auto& y : oracle::sigma(p, q)) {
                const oracle::Q d = y - 1;
                sum -= oracle::Q(1) - 2 * abs(d);
            }
            const ExactRational expected(torsig::BigInt(sum.get_num()), torsig::BigInt(sum.get_den()));
            const TorusKnot k(p, q);
            CHECK(torsig::integral_closed(k) == expected);
            CHECK(torsig::integral_via_dedekind(k) == expected);
            CHECK(torsig::integral_closed(k.swapped()) == expected);
        }
}

TEST_CASE("ordinary signature: examples") {
    CHECK(torsig::ordinary_signature_closed(TorusKnot(2, 3)) == -2);
    CHECK(torsig::ordinary_signature_closed(TorusKnot(3, 4)) == -6);
    CHECK(torsig::ordinary_signature_closed(TorusKnot(3, 5)) == -8);
    CHECK(torsig::ordinary_signature_closed(TorusKnot(4, 5)) == -8);
    CHECK(torsig::ordinary_signature_closed(TorusKnot(5, 7)) == -16);
    CHECK(torsig::ordinary_signature_even_printed(TorusKnot(3, 4)) == ExactRational(-4));
    CHECK_FALSE(torsig::ordinary_signature_even_printed(TorusKnot(3, 5)).has_value());
}

TEST_CASE("ordinary signature matches the counting oracle and is swap symmetric") {
    for (long p = 2; p <= 25; ++p)
        for (long q = 2; q <= 25; ++q) {
            if (p == q || !oracle::coprime(p, q)) continue;
            CHECK(torsig::ordinary_signature_closed(TorusKnot(p, q)) == oracle::signature(p, q, oracle::q(1, 2)));
        }
}

TEST_CASE("Tristram-Levine closed formula: examples") {
    CHECK(torsig::signature_closed(TorusKnot(2, 3), SpectralParameter(ratio(1, 4))) == -2);
    CHECK(torsig::signature_closed(TorusKnot(2, 3), SpectralParameter(ratio(1, 100))) == 0);
    CHECK_THROWS_AS(torsig::signature_closed(TorusKnot(2, 3), SpectralParameter(ratio(1, 2))),
                    torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::signature_closed(TorusKnot(2, 3), SpectralParameter(0)), torsig::InvalidArgument);
}

TEST_CASE("Tristram-Levine closed formula matches counting off the excluded set") {
    for (long p = 2; p <= 8; ++p)
        for (long q = 2; q <= 8; ++q) {
            if (p == q || !oracle::coprime(p, q)) continue;
            const TorusKnot k(p, q);
            const long d = 5 * p * q;
            for (long t = 1; t < d; ++t) {
                if (t % 5 == 0) continue;
                const auto c = oracle::q(t, d);
                const SpectralParameter param(ratio(t, d));
                const long expected = oracle::signature(p, q, c);
                CHECK(torsig::signature_closed(k, param) == expected);
                CHECK(torsig::signature_closed(k.swapped(), param) == expected);
                CHECK(torsig::abs(torsig::signature_envelope_defect(k, param)) <= torsig::signature_envelope_bound(k));
            }
        }
}

TEST_CASE("evaluate_signature routes") {
    const TorusKnot k(3, 5);
    const SpectralParameter c(ratio(1, 7));
    CHECK(torsig::evaluate_signature(k, c, torsig::Route::closed_form).value ==
          torsig::evaluate_signature(k, c, torsig::Route::bruteforce).value);
    CHECK_THROWS_AS(torsig::evaluate_signature(k, c, torsig::Route::dedekind_route), torsig::InvalidArgument);
    CHECK(torsig::route_name(torsig::Route::closed_form) == "closed");
}
