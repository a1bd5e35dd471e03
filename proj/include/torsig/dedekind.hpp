#pragma once

// Dedekind sums and their shifted (Dedekind-Rademacher) generalisation.
// Both sums run over a full residue system modulo the second argument:
//
//   s(a,b)     = sum_{j=0}^{b-1} ((j/b)) ((a j/b))
//   s(a,b;x,y) = sum_{j=0}^{b-1} (((j+y)/b)) ((a (j+y)/b + x))

#include "torsig/exact.hpp"

#include <cstdint>

namespace torsig {

/// Direct O(b) summation. Any integer a; gcd(a,b) need not be 1.
ExactRational dedekind_sum(const BigInt& a, std::int64_t b);

/// O(log b) evaluation by the reciprocity recursion. Requires b >= 1 and
/// gcd(a,b) = 1 (throws InvalidArgument otherwise).
ExactRational dedekind_sum_fast(const BigInt& a, const BigInt& b);

/// dedekind_sum_fast when gcd(a,b) = 1, dedekind_sum otherwise.
ExactRational dedekind_sum_auto(std::int64_t a, std::int64_t b);

/// Direct O(b) summation of the shifted sum.
ExactRational rademacher_sum(const BigInt& a, std::int64_t b, const ExactRational& x, const ExactRational& y);

/// s(p,q) + s(q,p) - [ (p/q + q/p + 1/(pq))/12 - 1/4 ]. Zero for coprime p, q.
ExactRational reciprocity_defect(std::int64_t p, std::int64_t q);

/// Right-hand side of the shifted reciprocity law,
///   -d(x)d(y)/4 + ((x))((y)) + ( (p/q) psi2(y) + psi2(py+qx)/(pq) + (q/p) psi2(x) ) / 2.
ExactRational rademacher_reciprocity_rhs(std::int64_t p, std::int64_t q, const ExactRational& x,
                                         const ExactRational& y);

/// The same law with the p/q and q/p weights exchanged. Kept only so the
/// validation report can show that this variant does not hold.
ExactRational rademacher_reciprocity_rhs_transposed(std::int64_t p, std::int64_t q, const ExactRational& x,
                                                    const ExactRational& y);

/// s(p,q;x,y) + s(q,p;y,x) - rademacher_reciprocity_rhs(p,q,x,y). Zero for coprime p, q.
ExactRational rademacher_reciprocity_defect(std::int64_t p, std::int64_t q, const ExactRational& x,
                                            const ExactRational& y);

/// Sum with j running 0..a-1 instead of over residues mod b. Not a Dedekind
/// sum; exists to witness that this indexing breaks reciprocity.
ExactRational dedekind_sum_short_index(std::int64_t a, std::int64_t b);

/// s(1,c) = (c-1)(c-2)/(12c).
ExactRational s1_closed(const BigInt& c);

} // namespace torsig
