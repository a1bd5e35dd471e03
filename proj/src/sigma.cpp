#include "torsig/sigma.hpp"

#include "torsig/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>

namespace torsig {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kStreamingThreshold = 10'000'000;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = ((a % m) + m) % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quotient = old_r / r;
        std::int64_t tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    return ((old_s % m) + m) % m;
}

void require_open_unit(const ExactRational& x) {
    if (x <= ExactRational(0) || x >= ExactRational(1)) {
        throw InvalidArgument("evaluation point must lie in (0,1), got " + x.str());
    }
}

} // namespace

SigmaSet::SigmaSet(const TorusKnot& knot) : knot_(knot) {
    const std::int64_t p = knot.p(), q = knot.q();
    numerators_.reserve(static_cast<std::size_t>(knot.sigma_size()));
    for (std::int64_t k = 1; k < p; ++k) {
        for (std::int64_t l = 1; l < q; ++l) {
            numerators_.push_back(k * q + l * p);
        }
    }
    std::sort(numerators_.begin(), numerators_.end());
}

ExactRational SigmaSet::element(std::size_t i) const {
    return ratio(numerators_.at(i), knot_.pq());
}

std::vector<ExactRational> SigmaSet::elements() const {
    std::vector<ExactRational> out;
    out.reserve(numerators_.size());
    for (std::size_t i = 0; i < numerators_.size(); ++i) out.push_back(element(i));
    return out;
}

std::size_t SigmaSet::count_between(std::int64_t lo, std::int64_t hi) const {
    if (hi < lo) return 0;
    const auto first = std::lower_bound(numerators_.begin(), numerators_.end(), lo);
    const auto last = std::upper_bound(first, numerators_.end(), hi);
    return static_cast<std::size_t>(last - first);
}

SigmaSet sigma_set(const TorusKnot& knot) { return SigmaSet(knot); }

CountingMode default_counting_mode(const TorusKnot& knot) {
    if (const char* env = std::getenv("TORSIG_STREAMING"); env != nullptr && std::string_view(env) == "1") {
        return CountingMode::streaming;
    }
    return knot.pq() > kStreamingThreshold ? CountingMode::streaming : CountingMode::stored;
}

bool sigma_contains_numerator(const TorusKnot& knot, std::int64_t n) {
    const std::int64_t p = knot.p(), q = knot.q();
    // n = kq + lp forces k = n q^{-1} mod p; the representation is unique.
    const std::int64_t n_mod_p = ((n % p) + p) % p;
    const auto k = static_cast<std::int64_t>(static_cast<i128>(n_mod_p) * mod_inverse(q, p) % p);
    if (k < 1) return false;
    const std::int64_t rest = n - k * q;
    if (rest % p != 0) return false;
    const std::int64_t l = rest / p;
    return l >= 1 && l <= q - 1;
}

bool is_jump_point(const TorusKnot& knot, const ExactRational& x) {
    const ExactRational scaled = x * ExactRational(knot.pq());
    if (!scaled.is_integer()) return false;
    const BigInt n = scaled.numerator();
    if (!n.fits_slong_p()) return false;
    const std::int64_t v = n.get_si();
    return sigma_contains_numerator(knot, v) || sigma_contains_numerator(knot, v + knot.pq());
}

SignatureEvaluator::SignatureEvaluator(const TorusKnot& knot)
    : SignatureEvaluator(knot, default_counting_mode(knot)) {}

SignatureEvaluator::SignatureEvaluator(const TorusKnot& knot, CountingMode mode)
    : knot_(knot), mode_(mode) {
    if (mode_ == CountingMode::stored) set_.emplace(knot_);
}

std::size_t SignatureEvaluator::count_window(std::int64_t lo, std::int64_t hi) const {
    if (set_) return set_->count_between(lo, hi);
    const std::int64_t p = knot_.p(), q = knot_.q();
    std::size_t count = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        const std::int64_t base = k * q;
        const std::int64_t l_lo = std::max<std::int64_t>(1, ceil_div(lo - base, p));
        const std::int64_t l_hi = std::min<std::int64_t>(q - 1, floor_div(hi - base, p));
        if (l_hi >= l_lo) count += static_cast<std::size_t>(l_hi - l_lo + 1);
    }
    return count;
}

std::int64_t SignatureEvaluator::at(const ExactRational& x) const {
    require_open_unit(x);
    if (is_jump_point(knot_, x)) {
        throw JumpPointError(x.str() + " is a jump point of the signature function of T(" +
                             std::to_string(knot_.p()) + "," + std::to_string(knot_.q()) + ")");
    }
    // Elements y with x < y < x + 1 have numerators in [floor(x pq) + 1, floor(x pq) + pq];
    // the right end is excluded exactly when it equals x pq + pq, i.e. x + 1 in Sigma.
    const std::int64_t f = to_int64(int_part(x * ExactRational(knot_.pq())));
    const auto inside = static_cast<std::int64_t>(count_window(f + 1, f + knot_.pq()));
    return knot_.sigma_size() - 2 * inside;
}

std::int64_t signature_at(const TorusKnot& knot, const ExactRational& x) {
    return SignatureEvaluator(knot).at(x);
}

std::int64_t signature_at(const TorusKnot& knot, const ExactRational& x, CountingMode mode) {
    return SignatureEvaluator(knot, mode).at(x);
}

std::int64_t ordinary_signature_bruteforce(const TorusKnot& knot) {
    return signature_at(knot, ExactRational(1, 2));
}

ExactRational integral_bruteforce(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q(), pq = knot.pq();
    // sum over Sigma of |y - 1| * pq, accumulated exactly.
    BigInt spread = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        i128 row = 0;
        for (std::int64_t l = 1; l < q; ++l) {
            const std::int64_t d = k * q + l * p - pq;
            row += d < 0 ? -d : d;
        }
        spread += BigInt(static_cast<long>(row));
    }
    const ExactRational j = ExactRational(knot.sigma_size()) - ExactRational(BigInt(2 * spread), BigInt(pq));
    return -j;
}

std::int64_t tau(const TorusKnot& knot, std::int64_t m) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (m == 1) return 0;
    const SignatureEvaluator eval(knot);
    std::int64_t total = 0;
    for (std::int64_t k = 1; k < m; ++k) {
        const ExactRational x = ratio(k, m);
        if (is_jump_point(knot, x)) {
            throw JumpPointError("tau: evaluation point " + x.str() + " is a jump point of the signature function");
        }
        total += eval.at(x);
    }
    return total;
}

std::int64_t SignatureProfile::value_at(const ExactRational& x) const {
    require_open_unit(x);
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
    if (it != breakpoints.end() && *it == x) {
        throw JumpPointError(x.str() + " is a jump point of the signature function");
    }
    return values.at(static_cast<std::size_t>(it - breakpoints.begin()));
}

ExactRational SignatureProfile::integral() const {
    ExactRational total;
    ExactRational left(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const ExactRational right = i < breakpoints.size() ? breakpoints[i] : ExactRational(1);
        total += (right - left) * ExactRational(values[i]);
        left = right;
    }
    return total;
}

std::int64_t SignatureProfile::minimum() const { return *std::min_element(values.begin(), values.end()); }

SignatureProfile signature_profile(const TorusKnot& knot) {
    const std::int64_t pq = knot.pq();
    const SigmaSet set(knot);

    // Passing y < 1 removes y from the window (+2); passing y - 1 for y > 1 adds y (-2).
    std::vector<std::pair<std::int64_t, std::int64_t>> jumps;
    jumps.reserve(set.size());
    for (const std::int64_t n : set.numerators()) {
        jumps.emplace_back(n % pq, n < pq ? 2 : -2);
    }
    std::sort(jumps.begin(), jumps.end());

    SignatureProfile profile;
    profile.p = knot.p();
    profile.q = knot.q();
    // Just right of 0 the window (x, x+1) holds the numerators 1..pq.
    std::int64_t value = knot.sigma_size() - 2 * static_cast<std::int64_t>(set.count_between(1, pq));
    profile.values.push_back(value);

    for (std::size_t i = 0; i < jumps.size();) {
        const std::int64_t at = jumps[i].first;
        std::int64_t step = 0;
        for (; i < jumps.size() && jumps[i].first == at; ++i) step += jumps[i].second;
        if (step == 0) continue;
        value += step;
        profile.breakpoints.push_back(ratio(at, pq));
        profile.values.push_back(value);
    }
    return profile;
}

} // namespace torsig
