#include "torsig/exact.hpp"

#include "torsig/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace torsig {

std::string to_string(const BigInt& n) { return n.get_str(); }

std::int64_t to_int64(const BigInt& n) {
    if (!n.fits_slong_p()) {
        throw InvalidArgument("integer " + n.get_str() + " does not fit in 64 bits");
    }
    return n.get_si();
}

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) {
        throw InvalidArgument("not a rational number: \"" + std::string(whole) + "\"");
    }
    BigInt n(std::string(s), 10);
    return negative ? BigInt(-n) : n;
}

} // namespace

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(parse_int(text, text));
    }
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    // Only the numerator may carry a sign.
    if (!is_digits(den_text)) {
        throw InvalidArgument("not a rational number: \"" + std::string(text) + "\"");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw InvalidArgument("zero denominator in \"" + std::string(text) + "\"");
    }
    return ExactRational(parse_int(num_text, text), den);
}

std::string ExactRational::str() const { return value_.get_str(); }

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.sign() == 0) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.str(); }

ExactRational ratio(std::int64_t num, std::int64_t den) { return ExactRational(BigInt(num), BigInt(den)); }

ExactRational abs(const ExactRational& x) { return x.sign() < 0 ? -x : x; }

BigInt int_part(const ExactRational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return q;
}

BigInt ceil_part(const ExactRational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return q;
}

ExactRational frac_part(const ExactRational& x) { return x - ExactRational(int_part(x)); }

ExactRational sawtooth(const ExactRational& x) {
    if (x.is_integer()) return {};
    return frac_part(x) - ExactRational(1, 2);
}

int is_integer_indicator(const ExactRational& x) { return x.is_integer() ? 1 : 0; }

ExactRational psi2(const ExactRational& x) {
    const ExactRational f = frac_part(x);
    return f * f - f + ExactRational(1, 6);
}

} // namespace torsig
