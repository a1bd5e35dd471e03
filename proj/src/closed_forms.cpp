#include "torsig/closed_forms.hpp"

#include "torsig/dedekind.hpp"
#include "torsig/errors.hpp"
#include "torsig/sigma.hpp"

#include <string>
#include <utility>

namespace torsig {

namespace {

std::int64_t require_integer(const ExactRational& v, const std::string& what, const TorusKnot& knot) {
    if (!v.is_integer()) {
        throw ConsistencyError(what + " is not an integer for T(" + std::to_string(knot.p()) + "," +
                               std::to_string(knot.q()) + "): " + v.str());
    }
    return to_int64(v.numerator());
}

// (odd, even) ordering for mixed parity.
std::pair<std::int64_t, std::int64_t> odd_first(const TorusKnot& knot) {
    if (knot.p() % 2 == 0) return {knot.q(), knot.p()};
    return {knot.p(), knot.q()};
}

} // namespace

std::string_view route_name(Route route) {
    switch (route) {
    case Route::bruteforce: return "bruteforce";
    case Route::closed_form: return "closed";
    case Route::dedekind_route: return "dedekind";
    }
    return "unknown";
}

ExactRational integral_closed(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q();
    return -(ExactRational(p) - ratio(1, p)) * (ExactRational(q) - ratio(1, q)) / ExactRational(3);
}

ExactRational integral_via_dedekind(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q();
    return ExactRational(4) * (dedekind_sum_auto(p, q) + dedekind_sum_auto(q, p) - s1_closed(BigInt(knot.pq())));
}

ExactRational integral_via_dedekind_printed(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q();
    return ExactRational(-4) * (dedekind_sum_auto(p, q) + dedekind_sum_auto(q, p) + s1_closed(BigInt(knot.pq())));
}

std::int64_t ordinary_signature_closed(const TorusKnot& knot) {
    if (knot.p() % 2 == 1 && knot.q() % 2 == 1) {
        const std::int64_t p = knot.p(), q = knot.q();
        const ExactRational v = -ratio(p * q, 2) + ratio(2 * p, 3 * q) + ratio(2 * q, 3 * p) + ratio(1, 6 * p * q) -
                                ExactRational(4) * (dedekind_sum_auto(2 * p, q) + dedekind_sum_auto(2 * q, p)) - ExactRational(1);
        return require_integer(v, "ordinary signature", knot);
    }
    const auto [p, q] = odd_first(knot);
    const ExactRational v = -ratio(p * q, 2) + ExactRational(1) - ExactRational(4) * dedekind_sum_auto(2 * p, q) +
                            ExactRational(8) * dedekind_sum_auto(p, q);
    return require_integer(v, "ordinary signature", knot);
}

std::optional<ExactRational> ordinary_signature_even_printed(const TorusKnot& knot) {
    if (knot.p() % 2 == 1 && knot.q() % 2 == 1) return std::nullopt;
    const auto [p, q] = odd_first(knot);
    return -ratio(p * q, 2) + ExactRational(1) + ExactRational(4) * dedekind_sum_auto(2 * p, q) -
           ExactRational(8) * dedekind_sum_auto(p, q);
}

std::int64_t signature_closed(const TorusKnot& knot, const SpectralParameter& param) {
    const ExactRational& c = param.value();
    if (c.sign() == 0) throw InvalidArgument("signature is evaluated on C in (0,1); C = 0 is z = 1");
    const std::int64_t p = knot.p(), q = knot.q();
    const ExactRational pq(knot.pq());
    const ExactRational cpq = c * pq;
    if (cpq.is_integer()) {
        throw InvalidArgument("closed formula excluded by hypothesis: C*p*q = " + cpq.str() + " is an integer");
    }
    const ExactRational one_minus_c = ExactRational(1) - c;
    const ExactRational saw = sawtooth(cpq);
    const ExactRational zero;

    ExactRational v = ExactRational(-2) * (c - c * c) * pq;
    v += ratio(q, 3 * p) + ratio(p, 3 * q);
    v += (ExactRational(2) - ExactRational(4) * c) * saw;
    v += ExactRational(2) / pq * (saw * saw - ratio(1, 12));
    const ExactRational shifted = rademacher_sum(BigInt(p), q, c * ExactRational(p), zero) +
                                  rademacher_sum(BigInt(q), p, c * ExactRational(q), zero) +
                                  rademacher_sum(BigInt(p), q, one_minus_c * ExactRational(p), zero) +
                                  rademacher_sum(BigInt(q), p, one_minus_c * ExactRational(q), zero);
    v -= ExactRational(2) * shifted;
    return require_integer(v, "signature at C = " + c.str(), knot);
}

ExactRational signature_envelope_defect(const TorusKnot& knot, const SpectralParameter& param) {
    const ExactRational& c = param.value();
    const ExactRational sigma(signature_closed(knot, param));
    return sigma - ExactRational(2 * knot.pq()) * (c * c - c);
}

ExactRational signature_envelope_bound(const TorusKnot& knot) {
    const std::int64_t p = knot.p(), q = knot.q();
    return ratio(q, 3 * p) + ratio(p, 3 * q) + ExactRational(1) + ratio(1, 3 * p * q) + ExactRational(p + q);
}

SignatureResult evaluate_signature(const TorusKnot& knot, const SpectralParameter& c, Route route) {
    SignatureResult result{ExactRational(), route, knot, c};
    switch (route) {
    case Route::closed_form:
        result.value = ExactRational(signature_closed(knot, c));
        break;
    case Route::bruteforce:
        result.value = ExactRational(signature_at(knot, c.value()));
        break;
    case Route::dedekind_route:
        throw InvalidArgument("the dedekind route applies to the integral only");
    }
    return result;
}

} // namespace torsig
