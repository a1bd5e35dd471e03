#pragma once

// Exact rational arithmetic and the elementary periodic functions every
// formula in the library is assembled from.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace torsig {

using BigInt = mpz_class;

std::string to_string(const BigInt& n);

/// Narrowing conversion; throws InvalidArgument when `n` does not fit.
std::int64_t to_int64(const BigInt& n);

/// An arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class ExactRational {
public:
    ExactRational() = default;

    template <std::integral T>
    ExactRational(T n) : value_(to_big(n)) {} // NOLINT(implicit)

    ExactRational(const BigInt& n) : value_(n) {} // NOLINT(implicit)

    /// Throws std::domain_error when `den` is zero.
    ExactRational(const BigInt& num, const BigInt& den);

    /// Parses "a/b", "-a/b" or "n". Throws InvalidArgument on malformed text
    /// or a zero denominator.
    static ExactRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Canonical rendering: "a/b" in lowest terms, sign on the numerator,
    /// integers without "/1".
    std::string str() const;

    const mpq_class& raw() const { return value_; }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) {
        ExactRational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    template <std::integral T>
    static BigInt to_big(T n) {
        static_assert(sizeof(T) <= sizeof(long), "integer wider than long");
        if constexpr (std::is_signed_v<T>) {
            return BigInt(static_cast<long>(n));
        } else {
            return BigInt(static_cast<unsigned long>(n));
        }
    }

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& x);

/// num/den in lowest terms. Throws std::domain_error when den is zero.
ExactRational ratio(std::int64_t num, std::int64_t den);

ExactRational abs(const ExactRational& x);

/// Floor: the unique n with n <= x < n + 1.
BigInt int_part(const ExactRational& x);

/// x - floor(x), in [0, 1).
ExactRational frac_part(const ExactRational& x);

/// {x} - 1/2 off the integers, 0 on them. Odd and 1-periodic.
ExactRational sawtooth(const ExactRational& x);

/// 1 when x is an integer, else 0.
int is_integer_indicator(const ExactRational& x);

/// Periodised second Bernoulli polynomial {x}^2 - {x} + 1/6.
ExactRational psi2(const ExactRational& x);

/// Smallest integer >= x.
BigInt ceil_part(const ExactRational& x);

} // namespace torsig
