#include "torsig/dedekind.hpp"

#include "torsig/errors.hpp"
#include "torsig/knot.hpp"

#include <numeric>
#include <string>

namespace torsig {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

void require_modulus(std::int64_t b) {
    if (b < 1) throw InvalidArgument("modulus must be at least 1, got " + std::to_string(b));
}

BigInt from_i128(i128 v) {
    const bool negative = v < 0;
    u128 u = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
    BigInt out = static_cast<unsigned long>(u >> 64);
    out <<= 64;
    out += static_cast<unsigned long>(u & ~0UL);
    return negative ? BigInt(-out) : out;
}

} // namespace

ExactRational dedekind_sum(const BigInt& a, std::int64_t b) {
    require_modulus(b);
    BigInt reduced;
    mpz_fdiv_r(reduced.get_mpz_t(), a.get_mpz_t(), BigInt(b).get_mpz_t());
    const std::int64_t r = reduced.get_si();
    // ((j/b)) ((rj/b)) = (2j - b)(2t - b) / (4b^2) with t = rj mod b, or 0 when t = 0.
    i128 numerator = 0;
    for (std::int64_t j = 1; j < b; ++j) {
        const auto t = static_cast<std::int64_t>(static_cast<i128>(r) * j % b);
        if (t == 0) continue;
        numerator += static_cast<i128>(2 * j - b) * (2 * t - b);
    }
    const BigInt den = BigInt(4) * BigInt(b) * BigInt(b);
    return ExactRational(from_i128(numerator), den);
}

ExactRational dedekind_sum_fast(const BigInt& a, const BigInt& b) {
    if (b < 1) throw InvalidArgument("modulus must be at least 1, got " + b.get_str());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw InvalidArgument("dedekind_sum_fast needs gcd(a,b) = 1");

    BigInt h, k = b;
    mpz_fdiv_r(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // s(h,k) = -s(k mod h, h) + (h^2 + k^2 + 1)/(12hk) - 1/4, down to s(0,1) = 0.
    mpq_class total = 0;
    int sign = 1;
    while (h != 0) {
        mpq_class term(BigInt(h * h + k * k + 1), BigInt(12 * h * k));
        term.canonicalize();
        term -= mpq_class(1, 4);
        if (sign > 0) {
            total += term;
        } else {
            total -= term;
        }
        sign = -sign;
        BigInt next;
        mpz_fdiv_r(next.get_mpz_t(), k.get_mpz_t(), h.get_mpz_t());
        k = h;
        h = next;
    }
    return ExactRational(total.get_num(), total.get_den());
}

ExactRational dedekind_sum_auto(std::int64_t a, std::int64_t b) {
    if (std::gcd(a, b) == 1) return dedekind_sum_fast(BigInt(a), BigInt(b));
    return dedekind_sum(BigInt(a), b);
}

ExactRational rademacher_sum(const BigInt& a, std::int64_t b, const ExactRational& x, const ExactRational& y) {
    require_modulus(b);
    const ExactRational modulus(b);
    const ExactRational factor(a);
    ExactRational total;
    for (std::int64_t j = 0; j < b; ++j) {
        const ExactRational t = (ExactRational(j) + y) / modulus;
        const ExactRational left = sawtooth(t);
        if (left.sign() == 0) continue;
        total += left * sawtooth(factor * t + x);
    }
    return total;
}

ExactRational reciprocity_defect(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw InvalidArgument("reciprocity needs p, q >= 1");
    require_coprime(p, q);
    const ExactRational lhs = dedekind_sum(BigInt(p), q) + dedekind_sum(BigInt(q), p);
    const ExactRational rhs = (ratio(p, q) + ratio(q, p) + ratio(1, p * q)) / ExactRational(12) - ratio(1, 4);
    return lhs - rhs;
}

namespace {

ExactRational shifted_rhs(std::int64_t p, std::int64_t q, const ExactRational& x, const ExactRational& y,
                          const ExactRational& weight_y, const ExactRational& weight_x) {
    const ExactRational pq(p * q);
    const ExactRational mixed = ExactRational(p) * y + ExactRational(q) * x;
    ExactRational rhs = -ExactRational(is_integer_indicator(x) * is_integer_indicator(y)) / ExactRational(4);
    rhs += sawtooth(x) * sawtooth(y);
    rhs += (weight_y * psi2(y) + psi2(mixed) / pq + weight_x * psi2(x)) / ExactRational(2);
    return rhs;
}

void require_positive_coprime(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw InvalidArgument("reciprocity needs p, q >= 1");
    require_coprime(p, q);
}

} // namespace

ExactRational rademacher_reciprocity_rhs(std::int64_t p, std::int64_t q, const ExactRational& x,
                                         const ExactRational& y) {
    require_positive_coprime(p, q);
    return shifted_rhs(p, q, x, y, ratio(p, q), ratio(q, p));
}

ExactRational rademacher_reciprocity_rhs_transposed(std::int64_t p, std::int64_t q, const ExactRational& x,
                                                    const ExactRational& y) {
    require_positive_coprime(p, q);
    return shifted_rhs(p, q, x, y, ratio(q, p), ratio(p, q));
}

ExactRational rademacher_reciprocity_defect(std::int64_t p, std::int64_t q, const ExactRational& x,
                                            const ExactRational& y) {
    const ExactRational rhs = rademacher_reciprocity_rhs(p, q, x, y);
    return rademacher_sum(BigInt(p), q, x, y) + rademacher_sum(BigInt(q), p, y, x) - rhs;
}

ExactRational dedekind_sum_short_index(std::int64_t a, std::int64_t b) {
    require_modulus(b);
    ExactRational total;
    for (std::int64_t j = 0; j < a; ++j) {
        total += sawtooth(ratio(j, b)) * sawtooth(ratio(a * j, b));
    }
    return total;
}

ExactRational s1_closed(const BigInt& c) {
    if (c < 1) throw InvalidArgument("s1_closed needs c >= 1");
    return ExactRational(BigInt((c - 1) * (c - 2)), BigInt(12 * c));
}

} // namespace torsig
