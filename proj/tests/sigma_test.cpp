#include "oracles.hpp"

#include "torsig/errors.hpp"
#include "torsig/sigma.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>

using torsig::ExactRational;
using torsig::TorusKnot;
using torsig::ratio;

namespace {

ExactRational from(const oracle::Q& x) {
    return ExactRational(torsig::BigInt(x.get_num()), torsig::BigInt(x.get_den()));
}

std::vector<std::pair<long, long>> small_pairs(long max) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p <= max; ++p)
        for (long q = 2; q <= max; ++q)
            if (p != q && oracle::coprime(p, q)) out.emplace_back(p, q);
    return out;
}

} // namespace

TEST_CASE("sigma set examples") {
    const auto s23 = torsig::sigma_set(TorusKnot(2, 3)).elements();
    REQUIRE(s23.size() == 2);
    CHECK(s23[0] == ratio(5, 6));
    CHECK(s23[1] == ratio(7, 6));
    const auto s25 = torsig::sigma_set(TorusKnot(2, 5)).elements();
    CHECK(s25 == std::vector<ExactRational>{ratio(7, 10), ratio(9, 10), ratio(11, 10), ratio(13, 10)});
}

TEST_CASE("sigma set matches direct enumeration") {
    for (auto [p, q] : small_pairs(12)) {
        auto expected = oracle::sigma(p, q);
        std::sort(expected.begin(), expected.end());
        const auto got = torsig::sigma_set(TorusKnot(p, q)).elements();
        REQUIRE(got.size() == expected.size());
        REQUIRE(got.size() == static_cast<std::size_t>((p - 1) * (q - 1)));
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == from(expected[i]));
    }
}

TEST_CASE("signature_at examples") {
    CHECK(torsig::signature_at(TorusKnot(2, 3), ratio(1, 2)) == -2);
    CHECK(torsig::signature_at(TorusKnot(2, 3), ratio(1, 100)) == 0);
    CHECK(torsig::signature_at(TorusKnot(3, 5), ratio(1, 2)) == -8);
    CHECK(torsig::ordinary_signature_bruteforce(TorusKnot(2, 3)) == -2);
    CHECK(torsig::ordinary_signature_bruteforce(TorusKnot(3, 4)) == -6);
    CHECK(torsig::ordinary_signature_bruteforce(TorusKnot(3, 5)) == -8);
}

TEST_CASE("signature_at rejects jumps and points outside (0,1)") {
    const TorusKnot k(2, 3);
    CHECK_THROWS_AS(torsig::signature_at(k, ratio(5, 6)), torsig::JumpPointError);
    CHECK_THROWS_AS(torsig::signature_at(k, ratio(1, 6)), torsig::JumpPointError);
    CHECK_THROWS_AS(torsig::signature_at(k, ExactRational(0)), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::signature_at(k, ExactRational(1)), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::signature_at(k, ratio(3, 2)), torsig::InvalidArgument);
    // 1/2 has denominator dividing pq but is not a jump.
    CHECK_NOTHROW(torsig::signature_at(k, ratio(1, 2)));
}

TEST_CASE("counting modes agree with each other and with the oracle") {
    for (auto [p, q] : small_pairs(9)) {
        const TorusKnot knot(p, q);
        const torsig::SignatureEvaluator stored(knot, torsig::CountingMode::stored);
        const torsig::SignatureEvaluator streaming(knot, torsig::CountingMode::streaming);
        const long d = 3 * p * q;
        for (long n = 1; n < d; ++n) {
            const auto x = oracle::q(n, d);
            const bool jump = oracle::is_jump(p, q, x);
            CHECK(torsig::is_jump_point(knot, from(x)) == jump);
            if (jump) {
                CHECK_THROWS_AS(stored.at(from(x)), torsig::JumpPointError);
                CHECK_THROWS_AS(streaming.at(from(x)), torsig::JumpPointError);
                continue;
            }
            const long expected = oracle::signature(p, q, x);
            CHECK(stored.at(from(x)) == expected);
            CHECK(streaming.at(from(x)) == expected);
        }
    }
}

TEST_CASE("signature is symmetric, even and bounded") {
    for (auto [p, q] : small_pairs(10)) {
        const TorusKnot knot(p, q);
        const long size = (p - 1) * (q - 1);
        for (long n = 1; n < 4 * p * q; ++n) {
            const auto x = ratio(n, 4 * p * q);
            if (torsig::is_jump_point(knot, x)) continue;
            const auto v = torsig::signature_at(knot, x);
            CHECK(v == torsig::signature_at(knot.swapped(), x));
            CHECK(v == torsig::signature_at(knot, ExactRational(1) - x));
            CHECK(v % 2 == 0);
            CHECK(v <= 0);
            CHECK(v >= -size);
        }
    }
}

TEST_CASE("integral by direct summation") {
    CHECK(torsig::integral_bruteforce(TorusKnot(2, 3)) == ratio(-4, 3));
    CHECK(torsig::integral_bruteforce(TorusKnot(2, 5)) == ratio(-12, 5));
    CHECK(torsig::integral_bruteforce(TorusKnot(3, 5)) == ratio(-64, 15));
}

TEST_CASE("profile examples") {
    const auto prof = torsig::signature_profile(TorusKnot(2, 3));
    CHECK(prof.breakpoints == std::vector<ExactRational>{ratio(1, 6), ratio(5, 6)});
    CHECK(prof.values == std::vector<std::int64_t>{0, -2, 0});
    CHECK(prof.integral() == ratio(-4, 3));
    CHECK(prof.value_at(ratio(1, 2)) == -2);
    CHECK_THROWS_AS(prof.value_at(ratio(1, 6)), torsig::JumpPointError);

    const auto p25 = torsig::signature_profile(TorusKnot(2, 5));
    CHECK(p25.breakpoints.front() == ratio(1, 10));
    CHECK(p25.minimum() == -4);
    CHECK(p25.value_at(ratio(1, 2)) == -4);
}

TEST_CASE("profile agrees with pointwise evaluation and the integral") {
    for (auto [p, q] : small_pairs(11)) {
        const TorusKnot knot(p, q);
        const auto prof = torsig::signature_profile(knot);
        REQUIRE(prof.values.size() == prof.breakpoints.size() + 1);
        CHECK(prof.values.front() == 0);
        CHECK(prof.values.back() == 0);
        for (std::size_t i = 1; i < prof.values.size(); ++i) CHECK(prof.values[i] != prof.values[i - 1]);
        for (std::size_t i = 0; i < prof.values.size(); ++i) {
            const ExactRational lo = i == 0 ? ExactRational(0) : prof.breakpoints[i - 1];
            const ExactRational hi = i == prof.breakpoints.size() ? ExactRational(1) : prof.breakpoints[i];
            const auto mid = (lo + hi) / ExactRational(2);
            CHECK(prof.values[i] == torsig::signature_at(knot, mid));
        }
        CHECK(prof.integral() == torsig::integral_bruteforce(knot));
        CHECK(prof.minimum() <= torsig::ordinary_signature_bruteforce(knot));
    }
}

TEST_CASE("tau examples") {
    const TorusKnot k(2, 3);
    CHECK(torsig::tau(k, 1) == 0);
    CHECK(torsig::tau(k, 2) == -2);
    CHECK(torsig::tau(k, 5) == -8);
    CHECK_THROWS_AS(torsig::tau(k, 0), torsig::InvalidArgument);
    CHECK_THROWS_AS(torsig::tau(k, 6), torsig::JumpPointError);
}

TEST_CASE("tau is a sum of signatures at roots of unity") {
    for (auto [p, q] : small_pairs(6)) {
        const TorusKnot knot(p, q);
        for (long m = 2; m <= 40; ++m) {
            bool any_jump = false;
            long sum = 0;
            for (long k = 1; k < m; ++k) {
                const auto x = oracle::q(k, m);
                if (oracle::is_jump(p, q, x)) {
                    any_jump = true;
                    break;
                }
                sum += oracle::signature(p, q, x);
            }
            if (any_jump) {
                CHECK_THROWS_AS(torsig::tau(knot, m), torsig::JumpPointError);
            } else {
                CHECK(torsig::tau(knot, m) == sum);
            }
        }
    }
}

TEST_CASE("streaming mode is selected by environment") {
    ::setenv("TORSIG_STREAMING", "1", 1);
    CHECK(torsig::default_counting_mode(TorusKnot(2, 3)) == torsig::CountingMode::streaming);
    ::unsetenv("TORSIG_STREAMING");
    CHECK(torsig::default_counting_mode(TorusKnot(2, 3)) == torsig::CountingMode::stored);
    CHECK(torsig::default_counting_mode(TorusKnot(4001, 4003)) == torsig::CountingMode::streaming);
}
