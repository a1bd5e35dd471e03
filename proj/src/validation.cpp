#include "torsig/validation.hpp"

#include "torsig/closed_forms.hpp"
#include "torsig/dedekind.hpp"
#include "torsig/errors.hpp"
#include "torsig/knot.hpp"
#include "torsig/lattice.hpp"
#include "torsig/sigma.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace torsig {

namespace {

using Task = std::function<std::vector<ValidationEntry>()>;
using Eval = std::function<ExactRational()>;
using OptionalEval = std::function<std::optional<ExactRational>()>;

struct Cell {
    std::string formula;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<ExactRational> c;
    std::string extra;
};

std::string render(const Eval& f, bool& failed) {
    try {
        return f().str();
    } catch (const std::exception& e) {
        failed = true;
        return std::string("error: ") + e.what();
    }
}

ValidationEntry compare(Cell cell, const Eval& oracle, const Eval& closed, const OptionalEval& printed = {},
                        std::string_view erratum_id = {}) {
    ValidationEntry entry;
    entry.formula = std::move(cell.formula);
    entry.p = cell.p;
    entry.q = cell.q;
    entry.c = std::move(cell.c);
    entry.extra = std::move(cell.extra);

    bool failed = false;
    entry.oracle = render(oracle, failed);
    entry.closed = render(closed, failed);
    if (failed || entry.oracle != entry.closed) {
        entry.status = ValidationStatus::unexpected;
        return entry;
    }
    if (printed) {
        std::optional<ExactRational> variant;
        try {
            variant = printed();
        } catch (const std::exception& e) {
            entry.printed = std::string("error: ") + e.what();
            entry.status = ValidationStatus::unexpected;
            return entry;
        }
        if (variant && variant->str() != entry.oracle) {
            entry.printed = variant->str();
            entry.status = ValidationStatus::known_erratum;
            entry.erratum = std::string(erratum_id);
        }
    }
    return entry;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t min_p, std::int64_t max_n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = min_p; p <= max_n; ++p) {
        for (std::int64_t q = p + 1; q <= max_n; ++q) {
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

ExactRational as_rational(std::int64_t v) { return ExactRational(v); }

// Axis points of A(p,q;C), enumerated.
std::int64_t axis_count_enumerated(const TriangleCountArgs& args) {
    const std::int64_t p = args.p(), q = args.q();
    const ExactRational limit = (ExactRational(1) - args.c()) * ExactRational(p * q);
    std::int64_t count = 0;
    for (std::int64_t k = 0; k <= p; ++k) {
        if (ExactRational(k * q) < limit) ++count;
    }
    for (std::int64_t l = 1; l <= q; ++l) {
        if (ExactRational(l * p) < limit) ++count;
    }
    return count;
}

// Rosen's expression with delta_r counted over every non-negative (k,l).
ExactRational rosen_with_unbounded_delta(const TriangleCountArgs& args) {
    const std::int64_t p = args.p(), q = args.q(), pq = p * q;
    auto unbounded = [&](int r) {
        const ExactRational target = (ExactRational(r) - args.c()) * ExactRational(pq);
        if (!target.is_integer()) return std::int64_t{0};
        const std::int64_t t = to_int64(target.numerator());
        std::int64_t count = 0;
        for (std::int64_t k = 0; k * q <= t; ++k) {
            if ((t - k * q) % p == 0) ++count;
        }
        return count;
    };
    auto boundary = [&](auto&& count) {
        return ratio(7, 8) * ExactRational(count(0)) + ratio(3, 8) * ExactRational(count(1)) -
               ratio(1, 8) * ExactRational(count(2));
    };
    const ExactRational bounded = boundary([&](int r) { return delta(args, r); });
    return rosen_expression(args, RosenVariant::corrected) + bounded - boundary(unbounded);
}

std::vector<ConventionNote> convention_notes() {
    std::vector<ConventionNote> notes;
    {
        const ExactRational rhs = (ratio(2, 3) + ratio(3, 2) + ratio(1, 6)) / ExactRational(12) - ratio(1, 4);
        const ExactRational short_defect = dedekind_sum_short_index(2, 3) + dedekind_sum_short_index(3, 2) - rhs;
        notes.push_back({"dedekind-summation-index",
                         "Dedekind sums run over a full residue system j = 0..b-1 of the modulus b. Running j over "
                         "0..a-1 instead breaks reciprocity; values are the reciprocity defect.",
                         "p=2,q=3", reciprocity_defect(2, 3).str(), short_defect.str()});
    }
    {
        const ExactRational x = ratio(1, 2), y(0);
        const ExactRational lhs = rademacher_sum(BigInt(2), 3, x, y) + rademacher_sum(BigInt(3), 2, y, x);
        notes.push_back({"shifted-reciprocity-weights",
                         "Shifted reciprocity weights psi2(y) by p/q and psi2(x) by q/p. Exchanging the two weights "
                         "breaks the law; values are the defect lhs - rhs.",
                         "p=2,q=3,x=1/2,y=0", (lhs - rademacher_reciprocity_rhs(2, 3, x, y)).str(),
                         (lhs - rademacher_reciprocity_rhs_transposed(2, 3, x, y)).str()});
    }
    {
        const TriangleCountArgs args(2, 3, ExactRational(0));
        notes.push_back({"rosen-boundary-count-domain",
                         "delta_r counts solutions of k/p + l/q + C = r with 0 <= k < p, 0 <= l < q. Counting all "
                         "non-negative (k,l) breaks the formula whenever Cpq is an integer; values are the formula "
                         "result (enumeration gives " +
                             std::to_string(triangle_count_bruteforce(args)) + ").",
                         "p=2,q=3,C=0", rosen_expression(args, RosenVariant::corrected).str(),
                         rosen_with_unbounded_delta(args).str()});
    }
    return notes;
}

std::vector<Task> build_tasks(const ValidationOptions& opt) {
    const std::int64_t n = opt.max_n;
    const std::int64_t d = opt.grid_density;
    std::vector<Task> tasks;

    // Dedekind sums.
    for (std::int64_t b = 1; b <= n; ++b) {
        tasks.emplace_back([b] {
            std::vector<ValidationEntry> out;
            for (std::int64_t a = 0; a < b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                out.push_back(compare({"dedekind.fast", a, b, std::nullopt, {}},
                                      [=] { return dedekind_sum(BigInt(a), b); },
                                      [=] { return dedekind_sum_fast(BigInt(a), BigInt(b)); }));
            }
            return out;
        });
    }
    tasks.emplace_back([n] {
        std::vector<ValidationEntry> out;
        auto pairs = coprime_pairs(1, n);
        pairs.emplace_back(1, 1);
        for (const auto& [p, q] : pairs) {
            out.push_back(compare({"dedekind.reciprocity", p, q, std::nullopt, {}},
                                  [] { return ExactRational(0); },
                                  [p = p, q = q] { return reciprocity_defect(p, q); }));
        }
        return out;
    });
    for (const auto& [p, q] : coprime_pairs(1, n)) {
        tasks.emplace_back([p = p, q = q] {
            static const std::vector<ExactRational> shifts = {ExactRational(0), ratio(1, 2), ratio(1, 3), ratio(2, 3),
                                                              ratio(1, 4),      ratio(1, 7), ratio(5, 7)};
            std::vector<ValidationEntry> out;
            for (const auto& x : shifts) {
                for (const auto& y : shifts) {
                    out.push_back(compare(
                        {"dedekind.rademacher_reciprocity", p, q, std::nullopt, "x=" + x.str() + ",y=" + y.str()},
                        [=] { return rademacher_reciprocity_rhs(p, q, x, y); },
                        [=] { return rademacher_sum(BigInt(p), q, x, y) + rademacher_sum(BigInt(q), p, y, x); }));
                }
            }
            return out;
        });
    }
    tasks.emplace_back([n] {
        std::vector<ValidationEntry> out;
        for (std::int64_t c = 1; c <= n * n; ++c) {
            out.push_back(compare({"dedekind.s1_closed", 1, c, std::nullopt, {}},
                                  [=] { return dedekind_sum(BigInt(1), c); }, [=] { return s1_closed(BigInt(c)); }));
        }
        return out;
    });

    // Knot invariants, one task per knot.
    for (const auto& [p, q] : coprime_pairs(2, n)) {
        tasks.emplace_back([p = p, q = q] {
            const TorusKnot knot(p, q);
            std::vector<ValidationEntry> out;
            const ExactRational oracle_integral = integral_bruteforce(knot);
            const auto oracle_i = [&] { return oracle_integral; };
            out.push_back(compare({"integral.closed", p, q, std::nullopt, {}}, oracle_i,
                                  [&] { return integral_closed(knot); }));
            out.push_back(compare({"integral.dedekind", p, q, std::nullopt, {}}, oracle_i,
                                  [&] { return integral_via_dedekind(knot); },
                                  [&] { return std::optional(integral_via_dedekind_printed(knot)); },
                                  erratum::integral_dedekind_sign));
            out.push_back(compare({"integral.profile", p, q, std::nullopt, {}}, oracle_i,
                                  [&] { return signature_profile(knot).integral(); }));

            const std::int64_t ordinary = ordinary_signature_bruteforce(knot);
            out.push_back(compare({"signature.ordinary", p, q, std::nullopt, {}}, [&] { return as_rational(ordinary); },
                                  [&] { return as_rational(ordinary_signature_closed(knot)); },
                                  [&] { return ordinary_signature_even_printed(knot); },
                                  erratum::ordinary_mixed_parity_signs));
            if (p % 2 == 1 && q % 2 == 1) {
                out.push_back(compare({"signature.tau2", p, q, std::nullopt, {}}, [&] { return as_rational(ordinary); },
                                      [&] { return as_rational(tau(knot, 2)); }));
            }
            out.push_back(compare({"lattice.half_count_closed", p, q, std::nullopt, {}},
                                  [&] { return as_rational(half_count(knot)); },
                                  [&] { return as_rational(half_count_closed(knot)); }));
            if (p % 2 == 1 && q % 2 == 1) {
                out.push_back(compare({"lattice.interior_half", p, q, std::nullopt, {}},
                                      [&] { return as_rational(half_count(knot)); },
                                      [&] { return as_rational(interior_count(TriangleCountArgs(p, q, ratio(1, 2)))); }));
            }
            return out;
        });
        tasks.emplace_back([p = p, q = q, d] {
            const TorusKnot knot(p, q);
            const SignatureEvaluator oracle(knot);
            std::vector<ValidationEntry> out;
            const std::int64_t steps = d * p * q;
            for (std::int64_t t = 1; t < steps; ++t) {
                if (t % d == 0) continue;
                const ExactRational c = ratio(t, steps);
                out.push_back(compare({"signature.tristram_levine", p, q, c, {}},
                                      [&] { return as_rational(oracle.at(c)); },
                                      [&] { return as_rational(signature_closed(knot, SpectralParameter(c))); }));
            }
            return out;
        });
    }

    // Lattice counts on the spectral grid.
    for (const auto& [p, q] : coprime_pairs(1, n)) {
        tasks.emplace_back([p = p, q = q, d] {
            std::vector<ValidationEntry> out;
            const std::int64_t steps = d * p * q;
            for (std::int64_t t = 0; t < steps; ++t) {
                const TriangleCountArgs args(p, q, ratio(t, steps));
                out.push_back(compare({"lattice.rosen", p, q, args.c(), {}},
                                      [&] { return as_rational(triangle_count_bruteforce(args)); },
                                      [&] { return as_rational(triangle_count_rosen(args)); },
                                      [&] { return std::optional(rosen_expression(args, RosenVariant::printed)); },
                                      erratum::rosen_sawtooth_coefficient));
                out.push_back(compare({"lattice.axis_count", p, q, args.c(), {}},
                                      [&] { return as_rational(axis_count_enumerated(args)); },
                                      [&] { return as_rational(axis_count(args)); }));
            }
            return out;
        });
    }

    // Closed half counts on the lines q = np + 1 and p = nq + 1.
    tasks.emplace_back([n] {
        std::vector<ValidationEntry> out;
        const std::int64_t limit = 10 * n;
        for (std::int64_t a = 3; a <= limit; a += 2) {
            for (std::int64_t m = 2; m * a + 1 <= limit; m += 2) {
                const std::int64_t b = m * a + 1;
                const std::string extra = "n=" + std::to_string(m);
                out.push_back(compare({"lattice.special_case", a, b, std::nullopt, extra},
                                      [=] { return as_rational(half_count(TorusKnot(a, b))); },
                                      [=] { return special_case_half_count(a, m); }));
                out.push_back(compare({"lattice.special_case_mirror", b, a, std::nullopt, extra},
                                      [=] { return as_rational(half_count(TorusKnot(b, a))); },
                                      [=] { return mirror_special_case_half_count(a, m); }));
            }
        }
        return out;
    });
    return tasks;
}

bool entry_less(const ValidationEntry& a, const ValidationEntry& b) {
    if (a.formula != b.formula) return a.formula < b.formula;
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    if (a.c.has_value() != b.c.has_value()) return !a.c.has_value();
    if (a.c && *a.c != *b.c) return *a.c < *b.c;
    return a.extra < b.extra;
}

} // namespace

std::string_view status_name(ValidationStatus status) {
    switch (status) {
    case ValidationStatus::match: return "match";
    case ValidationStatus::known_erratum: return "known-erratum";
    case ValidationStatus::unexpected: return "UNEXPECTED";
    }
    return "unknown";
}

ValidationSummary ValidationReport::summary() const {
    ValidationSummary s;
    std::set<std::string> classes;
    for (const auto& e : entries) {
        ++s.total;
        switch (e.status) {
        case ValidationStatus::match: ++s.match; break;
        case ValidationStatus::known_erratum:
            ++s.known_erratum;
            if (e.erratum) classes.insert(*e.erratum);
            break;
        case ValidationStatus::unexpected: ++s.unexpected; break;
        }
    }
    s.errata_classes.assign(classes.begin(), classes.end());
    return s;
}

bool ValidationReport::has_unexpected() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ValidationEntry& e) { return e.status == ValidationStatus::unexpected; });
}

std::string ValidationReport::to_json() const {
    using json = nlohmann::ordered_json;
    const ValidationSummary s = summary();

    json root;
    root["schema"] = 1;
    root["parameters"] = {{"max", options.max_n}, {"grid_density", options.grid_density}};

    json by_formula = json::object();
    {
        std::map<std::string, std::array<std::size_t, 3>> counts;
        for (const auto& e : entries) ++counts[e.formula][static_cast<std::size_t>(e.status)];
        for (const auto& [formula, c] : counts) {
            by_formula[formula] = {{"match", c[0]}, {"known_erratum", c[1]}, {"unexpected", c[2]}};
        }
    }
    root["summary"] = {{"total", s.total},
                       {"match", s.match},
                       {"known_erratum", s.known_erratum},
                       {"unexpected", s.unexpected},
                       {"errata_classes", s.errata_classes},
                       {"by_formula", by_formula}};

    json conv = json::array();
    for (const auto& note : conventions) {
        conv.push_back({{"id", note.id},
                        {"description", note.description},
                        {"witness", note.witness},
                        {"adopted", note.adopted_value},
                        {"rejected", note.rejected_value}});
    }
    root["conventions"] = conv;

    json list = json::array();
    for (const auto& e : entries) {
        json input = {{"p", e.p}, {"q", e.q}};
        if (e.c) input["C"] = e.c->str();
        if (!e.extra.empty()) input["extra"] = e.extra;
        json item = {{"formula", e.formula}, {"input", input}, {"oracle", e.oracle}, {"closed", e.closed}};
        if (e.printed) item["printed"] = *e.printed;
        item["status"] = status_name(e.status);
        if (e.erratum) item["erratum"] = *e.erratum;
        list.push_back(std::move(item));
    }
    root["entries"] = std::move(list);
    return root.dump() + "\n";
}

ValidationReport run_validation(const ValidationOptions& options) {
    if (options.max_n < 5) throw InvalidArgument("--max must be at least 5");
    if (options.grid_density < 2) throw InvalidArgument("--grid-density must be at least 2");
    if (options.jobs < 1) throw InvalidArgument("--jobs must be at least 1");

    const std::vector<Task> tasks = build_tasks(options);
    std::vector<std::vector<ValidationEntry>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    {
        std::vector<std::jthread> pool;
        const unsigned extra_workers = options.jobs - 1;
        for (unsigned i = 0; i < extra_workers; ++i) pool.emplace_back(worker);
        worker();
    }

    ValidationReport report;
    report.options = options;
    for (auto& chunk : results) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(report.entries));
    }
    std::sort(report.entries.begin(), report.entries.end(), entry_less);
    report.conventions = convention_notes();
    return report;
}

} // namespace torsig
