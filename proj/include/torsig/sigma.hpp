#pragma once

// Brute-force ground truth for torus knot signatures: the jump set
// Sigma = { k/p + l/q : 1 <= k < p, 1 <= l < q } and the counting rule
//
//   sigma(e^{2 pi i x}) = |Sigma \ (x, x+1)| - |Sigma cap (x, x+1)|,
//
// valid for every x in (0,1) with neither x nor x+1 in Sigma.

#include "torsig/exact.hpp"
#include "torsig/knot.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace torsig {

/// Sigma stored as sorted integer numerators n over the common denominator
/// pq, so the element k/p + l/q is (kq + lp)/(pq).
class SigmaSet {
public:
    explicit SigmaSet(const TorusKnot& knot);

    const TorusKnot& knot() const { return knot_; }
    std::size_t size() const { return numerators_.size(); }
    std::span<const std::int64_t> numerators() const { return numerators_; }

    ExactRational element(std::size_t i) const;
    std::vector<ExactRational> elements() const;

    /// Number of elements whose numerator lies in the closed range [lo, hi].
    std::size_t count_between(std::int64_t lo, std::int64_t hi) const;

private:
    TorusKnot knot_;
    std::vector<std::int64_t> numerators_;
};

SigmaSet sigma_set(const TorusKnot& knot);

/// stored: materialise Sigma and binary-search it. streaming: count each
/// row k by floor arithmetic, O(p) per query and no O(pq) storage.
enum class CountingMode { stored, streaming };

/// streaming when TORSIG_STREAMING=1 is set or pq exceeds 10^7.
CountingMode default_counting_mode(const TorusKnot& knot);

/// Whether n/(pq) is an element of Sigma, decided arithmetically.
bool sigma_contains_numerator(const TorusKnot& knot, std::int64_t n);

/// x or x+1 lies in Sigma. Only such points make the counting rule ill-defined.
bool is_jump_point(const TorusKnot& knot, const ExactRational& x);

/// Reusable evaluator for many points on one knot.
class SignatureEvaluator {
public:
    explicit SignatureEvaluator(const TorusKnot& knot);
    SignatureEvaluator(const TorusKnot& knot, CountingMode mode);

    /// Throws InvalidArgument outside (0,1) and JumpPointError on a jump.
    std::int64_t at(const ExactRational& x) const;

    CountingMode mode() const { return mode_; }

private:
    std::size_t count_window(std::int64_t lo, std::int64_t hi) const;

    TorusKnot knot_;
    CountingMode mode_;
    std::optional<SigmaSet> set_;
};

std::int64_t signature_at(const TorusKnot& knot, const ExactRational& x);
std::int64_t signature_at(const TorusKnot& knot, const ExactRational& x, CountingMode mode);

/// sigma at x = 1/2.
std::int64_t ordinary_signature_bruteforce(const TorusKnot& knot);

/// I = -sum over Sigma of (1 - 2|y - 1|).
ExactRational integral_bruteforce(const TorusKnot& knot);

/// tau_m = sum_{k=1}^{m-1} sigma(k/m). Throws InvalidArgument for m < 1 and
/// JumpPointError when some k/m is a jump point (this includes every m
/// sharing the factor that makes k/m land on Sigma, e.g. m = pq).
std::int64_t tau(const TorusKnot& knot, std::int64_t m);

/// The whole step function x -> sigma(e^{2 pi i x}) on (0,1).
/// values[i] is the value on (breakpoints[i-1], breakpoints[i]) with the
/// conventions breakpoints[-1] = 0 and breakpoints[n] = 1.
struct SignatureProfile {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<ExactRational> breakpoints;
    std::vector<std::int64_t> values;

    /// Throws JumpPointError at a breakpoint, InvalidArgument outside (0,1).
    std::int64_t value_at(const ExactRational& x) const;

    /// Sum of (interval length) * value.
    ExactRational integral() const;

    std::int64_t minimum() const;
};

SignatureProfile signature_profile(const TorusKnot& knot);

} // namespace torsig
