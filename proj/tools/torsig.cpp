// torsig: signatures of torus knots, computed exactly.
//
// Exit codes: 0 success, 1 internal consistency failure, 2 invalid input.

#include "torsig/closed_forms.hpp"
#include "torsig/dedekind.hpp"
#include "torsig/errors.hpp"
#include "torsig/knot.hpp"
#include "torsig/profile_io.hpp"
#include "torsig/sigma.hpp"
#include "torsig/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

namespace {

constexpr int kExitConsistency = 1;
constexpr int kExitInvalid = 2;

struct Pair {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

void add_pair(CLI::App* cmd, Pair& pair) {
    cmd->add_option("p", pair.p, "first torus knot parameter")->required();
    cmd->add_option("q", pair.q, "second torus knot parameter")->required();
}

int run_ordinary(const Pair& pair, bool check) {
    const torsig::TorusKnot knot(pair.p, pair.q);
    const std::int64_t closed = torsig::ordinary_signature_closed(knot);
    if (check) {
        const std::int64_t brute = torsig::ordinary_signature_bruteforce(knot);
        if (brute != closed) {
            std::cerr << "closed form " << closed << " disagrees with lattice count " << brute << "\n";
            return kExitConsistency;
        }
    }
    std::cout << closed << "\n";
    return 0;
}

int run_signature(const Pair& pair, const std::string& c_text, bool check) {
    const torsig::TorusKnot knot(pair.p, pair.q);
    const auto c = torsig::ExactRational::parse(c_text);
    if (c <= torsig::ExactRational(0) || c >= torsig::ExactRational(1)) {
        throw torsig::InvalidArgument("C must lie in (0,1), got " + c.str());
    }
    if (torsig::is_jump_point(knot, c)) {
        throw torsig::JumpPointError(c.str() + " is a jump point of the signature function");
    }
    const torsig::SpectralParameter param(c);
    const bool closed_applies = !(c * torsig::ExactRational(knot.pq())).is_integer();
    if (!closed_applies) {
        std::cerr << "note: C*p*q is an integer, outside the closed formula's hypothesis; using lattice counting\n";
        std::cout << torsig::signature_at(knot, c) << "\n";
        return 0;
    }
    const std::int64_t value = torsig::signature_closed(knot, param);
    if (check) {
        const std::int64_t brute = torsig::signature_at(knot, c);
        if (brute != value) {
            std::cerr << "closed form " << value << " disagrees with lattice count " << brute << "\n";
            return kExitConsistency;
        }
    }
    std::cout << value << "\n";
    return 0;
}

int run_profile(const Pair& pair, const std::string& format) {
    const torsig::TorusKnot knot(pair.p, pair.q);
    const auto profile = torsig::signature_profile(knot);
    if (format == "json") {
        std::cout << torsig::profile_to_json(profile) << "\n";
    } else {
        std::cout << torsig::profile_to_tsv(profile);
    }
    return 0;
}

int run_integral(const Pair& pair, const std::string& route) {
    const torsig::TorusKnot knot(pair.p, pair.q);
    if (route == "closed") {
        std::cout << torsig::integral_closed(knot) << "\n";
    } else if (route == "bruteforce") {
        std::cout << torsig::integral_bruteforce(knot) << "\n";
    } else if (route == "dedekind") {
        std::cout << torsig::integral_via_dedekind(knot) << "\n";
    } else {
        const auto closed = torsig::integral_closed(knot);
        const auto brute = torsig::integral_bruteforce(knot);
        const auto dedekind = torsig::integral_via_dedekind(knot);
        std::cout << closed << "\n" << brute << "\n" << dedekind << "\n";
        if (!(closed == brute && brute == dedekind)) {
            std::cerr << "integral routes disagree\n";
            return kExitConsistency;
        }
    }
    return 0;
}

int run_tau(const Pair& pair, std::int64_t m) {
    const torsig::TorusKnot knot(pair.p, pair.q);
    std::cout << torsig::tau(knot, m) << "\n";
    return 0;
}

int run_dedekind(const Pair& pair, const std::string& x_text, const std::string& y_text) {
    if (pair.q < 1) throw torsig::InvalidArgument("q must be at least 1");
    if (x_text.empty() && y_text.empty()) {
        std::cout << torsig::dedekind_sum(torsig::BigInt(pair.p), pair.q) << "\n";
        return 0;
    }
    const auto x = x_text.empty() ? torsig::ExactRational(0) : torsig::ExactRational::parse(x_text);
    const auto y = y_text.empty() ? torsig::ExactRational(0) : torsig::ExactRational::parse(y_text);
    std::cout << torsig::rademacher_sum(torsig::BigInt(pair.p), pair.q, x, y) << "\n";
    return 0;
}

int run_validate(const torsig::ValidationOptions& options, const std::string& report_path) {
    const auto report = torsig::run_validation(options);
    const auto summary = report.summary();
    std::cout << "entries: " << summary.total << "\n"
              << "match: " << summary.match << "\n"
              << "known-erratum: " << summary.known_erratum << "\n"
              << "UNEXPECTED: " << summary.unexpected << "\n";
    for (const auto& cls : summary.errata_classes) std::cout << "erratum class: " << cls << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw torsig::InvalidArgument("cannot write report to " + report_path);
        out << report.to_json();
    }
    if (report.has_unexpected()) {
        for (const auto& e : report.entries) {
            if (e.status != torsig::ValidationStatus::unexpected) continue;
            std::cerr << "UNEXPECTED " << e.formula << " p=" << e.p << " q=" << e.q
                      << (e.c ? " C=" + e.c->str() : std::string()) << (e.extra.empty() ? "" : " " + e.extra)
                      << ": oracle " << e.oracle << ", closed " << e.closed << "\n";
        }
        return kExitConsistency;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact signatures of torus knots T(p,q)"};
    app.require_subcommand(1);

    Pair pair;
    bool check = false;

    auto* ordinary = app.add_subcommand("ordinary", "ordinary signature (z = -1)");
    add_pair(ordinary, pair);
    ordinary->add_flag("--check", check, "cross-check against lattice counting");

    std::string c_text;
    auto* signature = app.add_subcommand("signature", "Tristram-Levine signature at z = exp(2 pi i C)");
    add_pair(signature, pair);
    signature->add_option("C", c_text, "rational in (0,1), e.g. 1/4")->required();
    signature->add_flag("--check", check, "cross-check against lattice counting");

    std::string format = "json";
    auto* profile = app.add_subcommand("profile", "the full signature step function on (0,1)");
    add_pair(profile, pair);
    profile->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

    std::string route = "closed";
    auto* integral = app.add_subcommand("integral", "integral of the signature function over the circle");
    add_pair(integral, pair);
    integral->add_option("--route", route, "closed, bruteforce, dedekind or all")
        ->check(CLI::IsMember({"closed", "bruteforce", "dedekind", "all"}));

    std::int64_t m = 0;
    auto* tau = app.add_subcommand("tau", "signature of the m-fold branched cover");
    add_pair(tau, pair);
    tau->add_option("m", m, "cover degree")->required();

    std::string x_text, y_text;
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(p,q), or s(p,q;x,y) with shifts");
    dedekind->add_option("p", pair.p, "multiplier")->required();
    dedekind->add_option("q", pair.q, "modulus")->required();
    dedekind->add_option("--x", x_text, "shift x as a/b");
    dedekind->add_option("--y", y_text, "shift y as a/b");

    torsig::ValidationOptions options;
    options.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string report_path;
    auto* validate = app.add_subcommand("validate", "cross-check every closed formula against its oracle");
    validate->add_option("--max", options.max_n, "largest p, q in the grid (>= 5)");
    validate->add_option("--grid-density", options.grid_density, "spectral grid points per 1/(pq) (>= 2)");
    validate->add_option("--jobs", options.jobs, "worker threads");
    validate->add_option("--report", report_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*ordinary) return run_ordinary(pair, check);
        if (*signature) return run_signature(pair, c_text, check);
        if (*profile) return run_profile(pair, format);
        if (*integral) return run_integral(pair, route);
        if (*tau) return run_tau(pair, m);
        if (*dedekind) return run_dedekind(pair, x_text, y_text);
        if (*validate) return run_validate(options, report_path);
    } catch (const torsig::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const torsig::JumpPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const torsig::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    }
    return 0;
}
