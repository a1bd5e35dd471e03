#pragma once

// Lattice points in the rational triangle
//
//   A(p,q;C) = { (k,l) in Z_{>=0}^2 : k/p + l/q < 1 - C },   N(p,q;C) = |A(p,q;C)|,
//
// counted by enumeration and by Rosen's closed formula, plus the half-window
// count S(p,q) = |Sigma cap (0,1/2)| that determines the ordinary signature.

#include "torsig/exact.hpp"
#include "torsig/knot.hpp"

#include <cstdint>

namespace torsig {

/// Validated (p, q, C): p, q >= 1 coprime, 0 <= C < 1.
class TriangleCountArgs {
public:
    TriangleCountArgs(std::int64_t p, std::int64_t q, ExactRational c);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    const ExactRational& c() const { return c_; }

    /// C p q is an integer: the branch where Rosen's K switches form and the
    /// boundary line can pass through lattice points.
    bool cpq_integral() const;

private:
    std::int64_t p_;
    std::int64_t q_;
    ExactRational c_;
};

std::int64_t triangle_count_bruteforce(const TriangleCountArgs& args);

/// Number of (k,l) with 0 <= k < p, 0 <= l < q and k/p + l/q + C = r.
/// Throws InvalidArgument unless r is 0, 1 or 2.
std::int64_t delta(const TriangleCountArgs& args, int r);

enum class RosenVariant {
    corrected, ///< (1/2)(((Cp)) + ((Cq))); agrees with enumeration.
    printed,   ///< coefficient 1 on ((Cp)) + ((Cq)), as the formula is usually quoted.
};

/// The right-hand side of Rosen's formula as an exact rational.
ExactRational rosen_expression(const TriangleCountArgs& args, RosenVariant variant);

/// Rosen's formula (corrected variant). Throws ConsistencyError if it is not an integer.
std::int64_t triangle_count_rosen(const TriangleCountArgs& args);

/// Points of A(p,q;C) on the axes:
/// floor((1-C)p) + floor((1-C)q) + 1 - d((1-C)p) - d((1-C)q).
std::int64_t axis_count(const TriangleCountArgs& args);

/// Points of A(p,q;C) with k, l >= 1. Requires C p q not an integer.
std::int64_t interior_count(const TriangleCountArgs& args);

/// S(p,q) = #{1 <= k < p, 1 <= l < q : k/p + l/q < 1/2}, by enumeration.
std::int64_t half_count(const TorusKnot& knot);

/// N(p,q;1/2) from the odd/odd or odd/even closed forms (Dedekind sums).
ExactRational half_triangle_closed(const TorusKnot& knot);

/// S(p,q) = N(p,q;1/2) - Z(p,q;1/2) from the closed forms.
std::int64_t half_count_closed(const TorusKnot& knot);

/// (q-1)(p-1)^2/(8p) for q = np + 1, p odd >= 3, n even >= 2.
ExactRational special_case_half_count(std::int64_t p, std::int64_t n);

/// The mirror identity (p-1)(q-1)^2/(8q) for p = nq + 1, q odd >= 3, n even >= 2.
ExactRational mirror_special_case_half_count(std::int64_t q, std::int64_t n);

} // namespace torsig
