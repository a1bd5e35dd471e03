#include "torsig/knot.hpp"

#include "torsig/errors.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace torsig {

void require_coprime(std::int64_t p, std::int64_t q) {
    if (std::gcd(p, q) != 1) {
        throw InvalidArgument("p and q must be coprime");
    }
}

TorusKnot::TorusKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p < 2 || q < 2) {
        throw InvalidArgument("p and q must be at least 2");
    }
    require_coprime(p, q);
    // 2pq must stay representable: Sigma numerators live in (0, 2pq).
    if (p > std::numeric_limits<std::int64_t>::max() / 2 / q) {
        throw InvalidArgument("p*q too large: " + std::to_string(p) + "*" + std::to_string(q));
    }
}

SpectralParameter::SpectralParameter(ExactRational c) : c_(std::move(c)) {
    if (c_ < ExactRational(0) || c_ >= ExactRational(1)) {
        throw InvalidArgument("spectral parameter must lie in [0,1), got " + c_.str());
    }
}

} // namespace torsig
