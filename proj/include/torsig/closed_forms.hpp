#pragma once

// Closed formulas for torus knot invariants. Every signature formula checks
// its own integrality before returning and throws ConsistencyError if the
// exact evaluation is not an integer.

#include "torsig/exact.hpp"
#include "torsig/knot.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace torsig {

enum class Route { bruteforce, closed_form, dedekind_route };

std::string_view route_name(Route route);

/// A signature or integral value together with how it was obtained.
struct SignatureResult {
    ExactRational value;
    Route route = Route::closed_form;
    TorusKnot knot;
    std::optional<SpectralParameter> parameter;
};

/// I = -(p - 1/p)(q - 1/q)/3.
ExactRational integral_closed(const TorusKnot& knot);

/// I = 4(s(p,q) + s(q,p) - s(1,pq)).
ExactRational integral_via_dedekind(const TorusKnot& knot);

/// -4(s(p,q) + s(q,p) + s(1,pq)): the sign pattern under which the identity
/// does NOT hold with the sawtooth conventions used here. Reported as an erratum.
ExactRational integral_via_dedekind_printed(const TorusKnot& knot);

/// Ordinary signature from Dedekind sums.
///   p, q odd:  -pq/2 + 2p/(3q) + 2q/(3p) + 1/(6pq) - 4(s(2p,q) + s(2q,p)) - 1
///   p odd, q even: -pq/2 + 1 - 4 s(2p,q) + 8 s(p,q)
/// Mixed parity is canonicalised so that p is the odd parameter.
std::int64_t ordinary_signature_closed(const TorusKnot& knot);

/// The mixed-parity expression with the Dedekind terms' signs flipped,
/// -pq/2 + 1 + 4 s(2p,q) - 8 s(p,q). Empty for odd/odd knots.
std::optional<ExactRational> ordinary_signature_even_printed(const TorusKnot& knot);

/// Tristram-Levine signature at z = exp(2 pi i C) via shifted Dedekind sums.
/// Requires C in (0,1) and Cpq not an integer (throws InvalidArgument).
std::int64_t signature_closed(const TorusKnot& knot, const SpectralParameter& c);

/// signature_closed - 2pq(C^2 - C): the deviation from the parabolic envelope.
ExactRational signature_envelope_defect(const TorusKnot& knot, const SpectralParameter& c);

/// Upper bound for |signature_envelope_defect| valid for every admissible C:
/// q/(3p) + p/(3q) + 1 + 1/(3pq) + (p + q).
ExactRational signature_envelope_bound(const TorusKnot& knot);

/// Evaluates sigma at C on the requested route (closed_form or bruteforce).
SignatureResult evaluate_signature(const TorusKnot& knot, const SpectralParameter& c, Route route);

} // namespace torsig
