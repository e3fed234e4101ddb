// ivi — invariants of squarefree monomial ideals generated by variable
// intervals: depth/dim recursions, Hilbert series, Betti tables, exact
// Stanley depth, primary decomposition, powers, and a recursion-vs-oracle
// sweep.  Exit codes: 0 success, 1 computation error, 2 verification
// mismatch.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ivi/golden.hpp"
#include "ivi/json_io.hpp"
#include "ivi/powers.hpp"
#include "ivi/sweep.hpp"

namespace {

using ivi::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

json envelope(const std::string& command) {
    return json{{"tool", "ivi"}, {"command", command}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int default_jobs() {
    if (const char* env = std::getenv("IVI_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int cmd_invariants(const std::string& pair_text, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    const ivi::InvariantReport rep = ivi::invariant_report(sp);
    if (as_json) {
        json doc = envelope("invariants");
        doc["input"] = ivi::pair_to_json(sp);
        doc.update(ivi::report_to_json(rep));
        emit(doc);
        return kExitOk;
    }
    std::cout << "pair: " << ivi::to_text(sp) << "\n";
    std::cout << "shape: " << ivi::shape_str(rep.shape) << "\n";
    std::cout << "depth(S/I)  = " << rep.depth_quotient << "   [recursion]\n";
    std::cout << "sdepth(S/I) = " << rep.sdepth_quotient << "   [recursion]\n";
    std::cout << "dim(S/I)    = " << rep.dim_quotient << "   [recursion]\n";
    if (rep.depth_ideal) std::cout << "depth(I)    = " << *rep.depth_ideal << "   [recursion]\n";
    if (rep.sdepth_ideal_lower)
        std::cout << "sdepth(I)  >= " << *rep.sdepth_ideal_lower << "   [closed-form]\n";
    if (rep.closed_form) std::cout << "closed form = " << *rep.closed_form << "   [closed-form]\n";
    return kExitOk;
}

int cmd_hilbert(const std::string& pair_text, bool use_oracle, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    const ivi::RationalSeries rec = ivi::hilbert_series(sp);
    bool match = true;
    ivi::RationalSeries orc;
    if (use_oracle) {
        orc = ivi::hilbert_by_inclusion_exclusion(ivi::interval_ideal(sp));
        match = rec == orc;
    }
    if (as_json) {
        json doc = envelope("hilbert");
        doc["input"] = ivi::pair_to_json(sp);
        json claims = json::array();
        claims.push_back(ivi::claim("series", ivi::series_to_json(rec), "recursion"));
        if (use_oracle) {
            claims.push_back(ivi::claim("series", ivi::series_to_json(orc), "oracle"));
            claims.push_back(ivi::claim("recursion_matches_oracle", match, "oracle"));
        }
        doc["claims"] = claims;
        emit(doc);
    } else {
        std::cout << "pair: " << ivi::to_text(sp) << "\n";
        std::cout << "H(S/I) = " << rec.str() << "   [recursion]\n";
        if (use_oracle) {
            std::cout << "H(S/I) = " << orc.str() << "   [oracle]\n";
            std::cout << (match ? "recursion matches the oracle\n" : "MISMATCH against the oracle\n");
        }
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_betti(const std::string& pair_text, bool use_oracle, const std::string& subject, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    const bool quotient = subject == "quotient";
    ivi::BettiTable rec = ivi::betti_by_splitting(sp);
    if (quotient) rec = ivi::quotient_from_ideal(rec);
    bool match = true;
    ivi::BettiTable orc;
    if (use_oracle) {
        orc = ivi::betti_by_homology(ivi::interval_ideal(sp),
                                     quotient ? ivi::Subject::Quotient : ivi::Subject::Ideal);
        match = rec == orc;
    }
    if (as_json) {
        json doc = envelope("betti");
        doc["input"] = ivi::pair_to_json(sp);
        json claims = json::array();
        claims.push_back(ivi::claim("betti", ivi::betti_to_json(rec), "recursion"));
        claims.push_back(ivi::claim("pd", ivi::proj_dim(rec), "recursion"));
        claims.push_back(ivi::claim("reg", ivi::regularity(rec), "recursion"));
        if (use_oracle) {
            claims.push_back(ivi::claim("betti", ivi::betti_to_json(orc), "oracle"));
            claims.push_back(ivi::claim("recursion_matches_oracle", match, "oracle"));
        }
        doc["claims"] = claims;
        emit(doc);
    } else {
        std::cout << "pair: " << ivi::to_text(sp) << "  subject: " << subject << "\n";
        std::cout << ivi::format_macaulay(rec);
        std::cout << "pd = " << ivi::proj_dim(rec) << ", reg = " << ivi::regularity(rec) << "   [recursion]\n";
        if (use_oracle) {
            std::cout << (match ? "recursion matches the oracle\n" : "MISMATCH against the oracle\n");
            if (!match) std::cout << ivi::format_macaulay(orc);
        }
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_sdepth(const std::string& pair_text, const std::string& mode_name, bool witness, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    const ivi::PosetMode mode = mode_name == "ideal" ? ivi::PosetMode::Ideal : ivi::PosetMode::Quotient;
    const ivi::MonomialIdeal I = ivi::interval_ideal(sp);
    const auto [value, partition] = ivi::sdepth_exact(I, mode);
    if (as_json) {
        json doc = envelope("sdepth");
        doc["input"] = ivi::pair_to_json(sp);
        doc["mode"] = mode_name;
        doc["claims"] = json::array({ivi::claim("sdepth", value, "oracle")});
        if (witness) doc["witness"] = ivi::partition_to_json(partition);
        emit(doc);
    } else {
        std::cout << "pair: " << ivi::to_text(sp) << "\n";
        std::cout << "sdepth(" << (mode == ivi::PosetMode::Ideal ? "I" : "S/I") << ") = " << value
                  << "   [oracle]\n";
        if (witness) {
            std::cout << "witness intervals (" << partition.intervals.size() << "):\n";
            std::cout << ivi::partition_to_json(partition).dump(2) << "\n";
        }
    }
    return kExitOk;
}

int cmd_primdec(const std::string& pair_text, bool use_oracle, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    const auto primes = ivi::primary_decomposition(sp);
    bool match = true;
    if (use_oracle) match = primes == ivi::minimal_covers(ivi::interval_ideal(sp));
    if (as_json) {
        json doc = envelope("primdec");
        doc["input"] = ivi::pair_to_json(sp);
        json claims = json::array();
        claims.push_back(ivi::claim("minimal_primes", ivi::primes_to_json(primes), "recursion"));
        claims.push_back(ivi::claim("prime_count", primes.size(), "recursion"));
        if (use_oracle) claims.push_back(ivi::claim("recursion_matches_oracle", match, "oracle"));
        doc["claims"] = claims;
        emit(doc);
    } else {
        std::cout << "pair: " << ivi::to_text(sp) << "\n";
        std::cout << primes.size() << " minimal primes:\n";
        for (const auto& p : primes) {
            std::cout << "  (";
            for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? ", " : "") << "x" << p[i];
            std::cout << ")\n";
        }
        if (use_oracle)
            std::cout << (match ? "recursion matches the cover oracle\n" : "MISMATCH against the cover oracle\n");
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_powers(const std::string& pair_text, int t, bool use_oracle, bool as_json) {
    const ivi::SequencePair sp = ivi::parse_pair(pair_text);
    json claims = json::array();
    std::string kind;
    int exact = -1, lower = -1, upper = -1;
    if (ivi::spread_condition(sp)) {
        kind = "spread";
        exact = ivi::spread_power_depth(sp, t);
        claims.push_back(ivi::claim("depth_power_quotient", exact, "closed-form"));
    } else if (ivi::chained_condition(sp)) {
        kind = "chained";
        const ivi::PowerBounds pb = ivi::chained_power_bounds(sp, t);
        lower = pb.lower;
        upper = pb.upper;
        claims.push_back(ivi::claim("depth_power_lower", pb.lower, "closed-form"));
        claims.push_back(ivi::claim("depth_power_upper", pb.upper, "closed-form"));
    } else {
        ivi::fail(ivi::errc::shape_mismatch, "power bounds need a spread- or chained-shaped pair");
    }
    bool match = true;
    int oracle_depth = -1;
    if (use_oracle) {
        oracle_depth = ivi::power_depth_oracle(sp, t);
        claims.push_back(ivi::claim("depth_power_quotient", oracle_depth, "oracle"));
        match = kind == "spread" ? oracle_depth == exact
                                 : (lower <= oracle_depth && oracle_depth <= upper);
        claims.push_back(ivi::claim("oracle_within_claims", match, "oracle"));
    }
    if (as_json) {
        json doc = envelope("powers");
        doc["input"] = ivi::pair_to_json(sp);
        doc["exponent"] = t;
        doc["shape"] = kind;
        doc["claims"] = claims;
        emit(doc);
    } else {
        std::cout << "pair: " << ivi::to_text(sp) << "  exponent: " << t << "  shape: " << kind << "\n";
        if (kind == "spread")
            std::cout << "depth(S/I^t) = " << exact << "   [closed-form]\n";
        else
            std::cout << lower << " <= depth(S/I^t) <= " << upper << "   [closed-form]\n";
        if (use_oracle) {
            std::cout << "depth(S/I^t) = " << oracle_depth << "   [oracle]\n";
            std::cout << (match ? "oracle agrees\n" : "MISMATCH against the oracle\n");
        }
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_sweep(const ivi::SweepConfig& config, bool as_json) {
    const ivi::SweepReport report = ivi::run_sweep(config);
    std::cerr << "sweep finished in " << report.seconds << " s\n";
    if (as_json) {
        json doc = envelope("sweep");
        doc["config"] = json{{"n_max", config.n_max}, {"s_max", config.s_max}};
        json names = json::array();
        for (ivi::SweepCheck c : ivi::all_sweep_checks())
            if (config.checks.count(c)) names.push_back(ivi::sweep_check_name(c));
        doc["config"]["checks"] = names;
        doc["instances"] = report.instances;
        doc["instances_done"] = report.instances_done;
        doc["checks_run"] = report.checks_run;
        doc["budget_exhausted"] = report.budget_exhausted;
        json mms = json::array();
        for (const auto& mm : report.mismatches)
            mms.push_back(json{{"pair", mm.pair_text}, {"check", mm.check}, {"detail", mm.detail}});
        doc["mismatches"] = mms;
        emit(doc);
    } else {
        std::cout << "instances: " << report.instances << ", completed: " << report.instances_done
                  << ", checks run: " << report.checks_run << "\n";
        for (const auto& mm : report.mismatches)
            std::cout << "MISMATCH [" << mm.check << "] " << mm.pair_text << ": " << mm.detail << "\n";
        std::cout << "mismatches: " << report.mismatches.size() << "\n";
        if (report.budget_exhausted) std::cout << "budget exhausted before completion\n";
    }
    if (report.budget_exhausted) return kExitError;
    return report.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_verify_examples(const std::string& fixtures_path, bool as_json) {
    json fixture;
    if (fixtures_path.empty()) {
        fixture = json::parse(ivi::golden_fixture_text());
    } else {
        std::ifstream in(fixtures_path);
        if (!in) ivi::fail(ivi::errc::parse_error, "cannot open fixture file " + fixtures_path);
        fixture = json::parse(in);
    }
    const auto checks = ivi::run_golden_checks(fixture);
    bool all_pass = true;
    if (as_json) {
        json doc = envelope("verify-examples");
        json rows = json::array();
        for (const auto& c : checks) {
            rows.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            all_pass = all_pass && c.pass;
        }
        doc["checks"] = rows;
        doc["pass"] = all_pass;
        emit(doc);
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
            all_pass = all_pass && c.pass;
        }
    }
    return all_pass ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of squarefree monomial ideals generated by variable intervals"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string pair_text;
    bool use_oracle = false;
    bool witness = false;

    auto* inv = app.add_subcommand("invariants", "depth, Stanley depth and dimension of the pair");
    inv->add_option("pair", pair_text, "pair text, e.g. \"n=10; a=1,2,3,6,7; b=4,5,7,8,10\"")->required();

    auto* hil = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    hil->add_option("pair", pair_text)->required();
    hil->add_flag("--oracle", use_oracle, "also run the inclusion-exclusion oracle and compare");

    std::string subject = "ideal";
    auto* bet = app.add_subcommand("betti", "graded Betti table");
    bet->add_option("pair", pair_text)->required();
    bet->add_flag("--oracle", use_oracle, "also run the homology oracle and compare");
    bet->add_option("--subject", subject, "ideal|quotient")->check(CLI::IsMember({"ideal", "quotient"}));

    std::string mode_name = "quotient";
    auto* sd = app.add_subcommand("sdepth", "exact Stanley depth by interval-partition search");
    sd->add_option("pair", pair_text)->required();
    sd->add_option("--mode", mode_name, "quotient|ideal")->check(CLI::IsMember({"quotient", "ideal"}));
    sd->add_flag("--witness", witness, "include the witness partition");

    auto* pd = app.add_subcommand("primdec", "primary decomposition (minimal primes)");
    pd->add_option("pair", pair_text)->required();
    pd->add_flag("--oracle", use_oracle, "also run the minimal-cover oracle and compare");

    int exponent = 2;
    auto* pw = app.add_subcommand("powers", "depth of powers: exact value or sandwich bounds");
    pw->add_option("pair", pair_text)->required();
    pw->add_option("-t,--exponent", exponent, "power exponent (default 2)");
    pw->add_flag("--oracle", use_oracle, "also run the homology oracle on the power");

    ivi::SweepConfig config;
    config.jobs = default_jobs();
    std::string checks_arg;
    auto* sw = app.add_subcommand("sweep", "recursion-vs-oracle sweep over all small pairs");
    sw->add_option("--n-max", config.n_max, "largest ambient variable count (default 6)");
    sw->add_option("--s-max", config.s_max, "largest interval count (default 3)");
    sw->add_option("--checks", checks_arg, "comma-separated check names (default: all)");
    sw->add_option("--budget-seconds", config.budget_seconds, "wall-clock budget, 0 = unlimited");
    sw->add_option("--jobs", config.jobs, "worker threads (default: IVI_JOBS or 1)");

    std::string fixtures_path;
    auto* ve = app.add_subcommand("verify-examples", "golden checks for the worked examples");
    ve->add_option("--fixtures", fixtures_path, "fixture JSON (default: built-in copy)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(pair_text, as_json);
        if (hil->parsed()) return cmd_hilbert(pair_text, use_oracle, as_json);
        if (bet->parsed()) return cmd_betti(pair_text, use_oracle, subject, as_json);
        if (sd->parsed()) return cmd_sdepth(pair_text, mode_name, witness, as_json);
        if (pd->parsed()) return cmd_primdec(pair_text, use_oracle, as_json);
        if (pw->parsed()) return cmd_powers(pair_text, exponent, use_oracle, as_json);
        if (sw->parsed()) {
            if (!checks_arg.empty()) {
                config.checks.clear();
                std::stringstream ss(checks_arg);
                std::string name;
                while (std::getline(ss, name, ','))
                    if (!name.empty()) config.checks.insert(ivi::sweep_check_from_name(name));
            }
            return cmd_sweep(config, as_json);
        }
        if (ve->parsed()) return cmd_verify_examples(fixtures_path, as_json);
    } catch (const ivi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
