#pragma once

#include "torsig/exact.hpp"

#include <cstdint>

namespace torsig {

/// The torus knot T(p,q). Construction enforces p, q >= 2 and gcd(p,q) = 1.
/// T(p,q) and T(q,p) are the same knot; every computation in the library is
/// symmetric under the swap.
class TorusKnot {
public:
    TorusKnot(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    std::int64_t pq() const { return p_ * q_; }

    /// |Sigma| = (p-1)(q-1), also the genus times two.
    std::int64_t sigma_size() const { return (p_ - 1) * (q_ - 1); }

    TorusKnot swapped() const { return TorusKnot(q_, p_); }

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// A point C in [0,1), standing for z = exp(2 pi i C) on the unit circle.
class SpectralParameter {
public:
    explicit SpectralParameter(ExactRational c);

    const ExactRational& value() const { return c_; }

private:
    ExactRational c_;
};

/// Throws InvalidArgument unless gcd(p,q) = 1.
void require_coprime(std::int64_t p, std::int64_t q);

} // namespace torsig
