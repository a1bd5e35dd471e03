#include "torsig/lattice.hpp"

#include "torsig/dedekind.hpp"
#include "torsig/errors.hpp"

#include <string>
#include <utility>

namespace torsig {

namespace {

ExactRational half() { return ratio(1, 2); }

// Numerators kq + lp strictly below (1 - C)pq are those <= ceil((1 - C)pq) - 1.
std::int64_t strict_bound(const TriangleCountArgs& args) {
    const ExactRational limit = (ExactRational(1) - args.c()) * ExactRational(args.p() * args.q());
    return to_int64(ceil_part(limit)) - 1;
}

} // namespace

TriangleCountArgs::TriangleCountArgs(std::int64_t p, std::int64_t q, ExactRational c)
    : p_(p), q_(q), c_(std::move(c)) {
    if (p < 1 || q < 1) throw InvalidArgument("p and q must be at least 1");
    require_coprime(p, q);
    if (c_ < ExactRational(0) || c_ >= ExactRational(1)) {
        throw InvalidArgument("C must lie in [0,1), got " + c_.str());
    }
}

bool TriangleCountArgs::cpq_integral() const { return (c_ * ExactRational(p_ * q_)).is_integer(); }

std::int64_t triangle_count_bruteforce(const TriangleCountArgs& args) {
    const std::int64_t p = args.p(), q = args.q();
    const std::int64_t bound = strict_bound(args);
    std::int64_t count = 0;
    for (std::int64_t k = 0; k <= p; ++k) {
        for (std::int64_t l = 0; l <= q; ++l) {
            if (k * q + l * p <= bound) ++count;
        }
    }
    return count;
}

std::int64_t delta(const TriangleCountArgs& args, int r) {
    if (r < 0 || r > 2) throw InvalidArgument("delta is defined for r = 0, 1, 2 only");
    const std::int64_t p = args.p(), q = args.q(), pq = p * q;
    const ExactRational target = (ExactRational(r) - args.c()) * ExactRational(pq);
    if (!target.is_integer()) return 0;
    const std::int64_t t = to_int64(target.numerator());
    std::int64_t count = 0;
    for (std::int64_t k = 0; k < p; ++k) {
        for (std::int64_t l = 0; l < q; ++l) {
            if (k * q + l * p == t) ++count;
        }
    }
    return count;
}

ExactRational rosen_expression(const TriangleCountArgs& args, RosenVariant variant) {
    const std::int64_t p = args.p(), q = args.q();
    const ExactRational& c = args.c();
    const ExactRational one_minus_c = ExactRational(1) - c;
    const ExactRational pq(p * q);
    const ExactRational cp = c * ExactRational(p);
    const ExactRational cq = c * ExactRational(q);
    const ExactRational cpq = c * pq;

    const ExactRational k_term = cpq.is_integer() ? ratio(1, 12 * p * q) - ratio(1, 8) : psi2(cpq) / (ExactRational(2) * pq);
    const ExactRational saw_weight = variant == RosenVariant::corrected ? half() : ExactRational(1);
    const ExactRational boundary =
        ratio(7, 8) * ExactRational(delta(args, 0)) + ratio(3, 8) * ExactRational(delta(args, 1)) -
        ratio(1, 8) * ExactRational(delta(args, 2));

    ExactRational n = one_minus_c * one_minus_c / ExactRational(2) * pq;
    n += one_minus_c / ExactRational(2) * ExactRational(p + q);
    n += ratio(q, 12 * p) + ratio(p, 12 * q) + k_term;
    n -= rademacher_sum(BigInt(p), q, cp, ExactRational(0));
    n -= rademacher_sum(BigInt(q), p, cq, ExactRational(0));
    n += saw_weight * (sawtooth(cp) + sawtooth(cq));
    n += one_minus_c * sawtooth(cpq);
    n -= boundary;
    n += ratio(1, 4);
    return n;
}

std::int64_t triangle_count_rosen(const TriangleCountArgs& args) {
    const ExactRational n = rosen_expression(args, RosenVariant::corrected);
    if (!n.is_integer()) {
        throw ConsistencyError("Rosen count is not an integer at (" + std::to_string(args.p()) + "," +
                               std::to_string(args.q()) + "," + args.c().str() + "): " + n.str());
    }
    return to_int64(n.numerator());
}

std::int64_t axis_count(const TriangleCountArgs& args) {
    const ExactRational one_minus_c = ExactRational(1) - args.c();
    const ExactRational along_p = one_minus_c * ExactRational(args.p());
    const ExactRational along_q = one_minus_c * ExactRational(args.q());
    return to_int64(int_part(along_p)) + to_int64(int_part(along_q)) + 1 - is_integer_indicator(along_p) -
           is_integer_indicator(along_q);
}

std::int64_t interior_count(const TriangleCountArgs& args) {
    if (args.cpq_integral()) {
        throw InvalidArgument("interior_count requires C*p*q not an integer, got C = " + args.c().str());
    }
    return triangle_count_bruteforce(args) - axis_count(args);
}

std::int64_t half_count(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q(), pq = knot.pq();
    std::int64_t count = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        for (std::int64_t l = 1; l < q; ++l) {
            if (2 * (k * q + l * p) < pq) ++count;
        }
    }
    return count;
}

ExactRational half_triangle_closed(const TorusKnot& knot) {
    std::int64_t p = knot.p(), q = knot.q();
    if (p % 2 == 1 && q % 2 == 1) {
        return ratio(p * q, 8) + ratio(p + q, 4) + ratio(q, 6 * p) + ratio(p, 6 * q) + ratio(1, 24 * p * q) -
               dedekind_sum_auto(2 * p, q) - dedekind_sum_auto(2 * q, p);
    }
    if (p % 2 == 0) std::swap(p, q);
    return ratio(p * q, 8) + ratio(p + q, 4) - dedekind_sum_auto(2 * p, q) + ExactRational(2) * dedekind_sum_auto(p, q);
}

std::int64_t half_count_closed(const TorusKnot& knot) {
    const ExactRational n = half_triangle_closed(knot);
    const std::int64_t z = axis_count(TriangleCountArgs(knot.p(), knot.q(), half()));
    const ExactRational s = n - ExactRational(z);
    if (!s.is_integer()) {
        throw ConsistencyError("closed half count is not an integer: " + s.str());
    }
    return to_int64(s.numerator());
}

ExactRational special_case_half_count(std::int64_t p, std::int64_t n) {
    if (p < 3 || p % 2 == 0) throw InvalidArgument("p must be odd and at least 3");
    if (n < 2 || n % 2 != 0) throw InvalidArgument("n must be even and at least 2");
    const std::int64_t q = n * p + 1;
    return ExactRational(BigInt((q - 1) * (p - 1) * (p - 1)), BigInt(8 * p));
}

ExactRational mirror_special_case_half_count(std::int64_t q, std::int64_t n) {
    if (q < 3 || q % 2 == 0) throw InvalidArgument("q must be odd and at least 3");
    if (n < 2 || n % 2 != 0) throw InvalidArgument("n must be even and at least 2");
    const std::int64_t p = n * q + 1;
    return ExactRational(BigInt((p - 1) * (q - 1) * (q - 1)), BigInt(8 * q));
}

} // namespace torsig
