// mixorder: scenario files in, curve tables and order/theorem reports out.
//
// Exit codes: 0 ok, 1 a checked conclusion failed, 2 usage or input error,
// 3 numerical breakdown, 4 inconclusive check.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixorder/errors.hpp"
#include "mixorder/io.hpp"
#include "mixorder/mixture.hpp"
#include "mixorder/orders.hpp"
#include "mixorder/theorems.hpp"

namespace {

using namespace mixorder;

enum Exit : int { kOk = 0, kConclusionFailed = 1, kUsage = 2, kNumeric = 3, kInconclusive = 4 };

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file_atomic(out_path, text);
    }
}

std::string verdict_text(const OrderVerdict& v) {
    std::ostringstream out;
    const std::string ord = to_string(v.order);
    if (v.inconclusive) {
        out << "inconclusive: " << v.reason << "\n";
        return out.str();
    }
    if (v.holds_leq && v.holds_geq) {
        out << "A =_" << ord << " B (both directions hold)\n";
    } else if (v.holds_leq) {
        out << "A <=_" << ord << " B\n";
    } else if (v.holds_geq) {
        out << "A >=_" << ord << " B\n";
    } else {
        out << "A and B are not ordered in " << ord << "\n";
    }
    out << "  max violation of <=: " << format_number(v.max_violation_leq, 6)
        << "  max violation of >=: " << format_number(v.max_violation_geq, 6) << "  slack " << v.slack << "\n";
    if (std::isfinite(v.witness_t)) out << "  witness t = " << format_number(v.witness_t) << "\n";
    out << "  grid points used: " << v.points_used << (v.truncated ? " (truncated)" : "") << "\n";
    if (v.hazard_check) {
        const auto& h = *v.hazard_check;
        out << "  hazard cross-check: <= " << (h.holds_leq ? "holds" : "fails") << ", >= "
            << (h.holds_geq ? "holds" : "fails") << (h.disagrees ? " (disagrees with ratio test)" : "") << "\n";
    }
    if (!v.reason.empty()) out << "  note: " << v.reason << "\n";
    return out.str();
}

std::string report_text(const TheoremReport& r, int example) {
    std::ostringstream out;
    out << "example " << example << " -> " << to_string(r.id) << ": claim " << r.asserted_relation() << "\n";
    for (const auto& h : r.hypotheses) {
        out << "  [" << (h.satisfied ? "ok" : (h.waived ? "waived" : "FAIL")) << "] " << h.name << ": " << h.detail
            << "\n";
    }
    out << "  conclusion: " << r.conclusion.relation() << " (claim " << (r.conclusion_holds ? "holds" : "fails")
        << ")\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    out << "  applicable: " << (r.applicable ? "yes" : "no") << ", consistent: " << (r.consistent ? "yes" : "NO")
        << "\n";
    return out.str();
}

std::string curve_csv(const Scenario& s, CurveKind which) {
    const EvaluationGrid grid = s.grid.build();
    const auto a = evaluate_curve(s.model_a(), grid, which);
    const auto b = evaluate_curve(s.model_b(), grid, which);
    std::string csv = "t,x,model_a,model_b\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        csv += format_number(a[i].t) + "," + format_number(a[i].x) + "," + format_number(a[i].value) + "," +
               format_number(b[i].value) + "\n";
    }
    return csv;
}

// Runs fn, mapping library exceptions onto the exit-code contract.
template <class F>
int guarded(F&& fn) {
    try {
        return fn();
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InfiniteMeanSuspected& e) {
        std::cerr << "inconclusive: infinite mean suspected: " << e.what() << "\n";
        return kInconclusive;
    } catch (const TailError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
}

// Canned example scenarios pick up MIXORDER_GRID_POINTS like parsed files do.
Scenario example_scenario(int k) {
    Scenario s = paper_example_scenario(k);
    s.grid.points = default_grid_points();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic-order checks for finite mixtures of MPHR laws"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string format = "text";

    auto* curve = app.add_subcommand("curve", "Tabulate a curve of both models as CSV");
    std::string which = "survival";
    curve->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    curve->add_option("--which", which, "survival, hazard, density or cdf")
        ->check(CLI::IsMember({"survival", "hazard", "density", "cdf"}));
    curve->add_option("-o,--out", out_path, "Output CSV (default stdout)");

    auto* verify = app.add_subcommand("verify-examples", "Check the worked examples 1..7");
    std::vector<int> ids;
    bool all = false;
    verify->add_option("ids", ids, "Example numbers")->check(CLI::Range(1, 7));
    verify->add_flag("--all", all, "Run all seven examples");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("-o,--out", out_path, "Output file (default stdout)");

    auto* check = app.add_subcommand("check-order", "Compare model A and model B in one order");
    std::string order = "st";
    check->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    check->add_option("--order", order, "st, hr, star or lorenz")
        ->check(CLI::IsMember({"st", "hr", "star", "lorenz"}));
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* search = app.add_subcommand("search", "Random search for scenarios violating a result");
    std::string theorem_name;
    long long trials = 1000;
    std::uint64_t seed = 42;
    bool drop_constraint = false;
    search->add_option("theorem_id", theorem_name, "Result id such as T1i or T5")->required();
    search->add_option("--trials", trials, "Number of accepted scenarios to try");
    search->add_option("--seed", seed, "Base seed");
    search->add_option("-o,--out", out_path, "Findings JSON (default stdout)");
    search->add_flag("--drop-constraint", drop_constraint,
                     "Do not enforce p_i * alpha_i balance (hazard-rate results only)");

    auto* sample = app.add_subcommand("sample", "Draw from model A");
    long long n = 0;
    std::uint64_t sample_seed = 1;
    sample->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    sample->add_option("-n,--n", n, "Number of draws")->required();
    sample->add_option("--seed", sample_seed, "Seed");
    sample->add_option("-o,--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (curve->parsed()) {
        return guarded([&] {
            const Scenario s = load_scenario(scenario_path);
            emit(out_path, curve_csv(s, parse_curve_kind(which)));
            return kOk;
        });
    }

    if (verify->parsed()) {
        if (all) ids = {1, 2, 3, 4, 5, 6, 7};
        if (ids.empty()) {
            std::cerr << "error: give example numbers or --all\n";
            return kUsage;
        }
        return guarded([&] {
            bool consistent = true;
            Json reports = Json::array();
            std::string text;
            for (int k : ids) {
                const TheoremReport r = check_theorem(paper_example_theorem(k), example_scenario(k));
                consistent = consistent && r.consistent;
                Json doc = report_to_json(r);
                doc["example"] = k;
                reports.push_back(doc);
                text += report_text(r, k);
            }
            if (format == "json") {
                Json doc{{"all_consistent", consistent}, {"reports", reports}};
                emit(out_path, doc.dump(2) + "\n");
            } else {
                emit(out_path, text);
            }
            return consistent ? kOk : kConclusionFailed;
        });
    }

    if (check->parsed()) {
        return guarded([&] {
            const Scenario s = load_scenario(scenario_path);
            const OrderVerdict v =
                check_order(parse_order_kind(order), s.model_a(), s.model_b(), s.grid.build());
            if (format == "json") {
                std::cout << verdict_to_json(v).dump(2) << "\n";
            } else {
                std::cout << verdict_text(v);
            }
            if (v.inconclusive) return kInconclusive;
            return v.holds_leq || v.holds_geq ? kOk : kConclusionFailed;
        });
    }

    if (search->parsed()) {
        if (trials < 1) {
            std::cerr << "error: --trials must be >= 1\n";
            return kUsage;
        }
        return guarded([&] {
            const TheoremId id = parse_theorem_id(theorem_name);
            SearchOptions options;
            options.grid.points = default_grid_points();
            if (drop_constraint) {
                if (id != TheoremId::T5 && id != TheoremId::T6 && id != TheoremId::C5 && id != TheoremId::C6) {
                    throw ParameterError("--drop-constraint applies to T5, T6, C5 and C6 only");
                }
                options.waived.push_back(kBalanceHypothesis);
            }
            const SearchOutcome outcome =
                search_counterexamples(id, static_cast<std::size_t>(trials), seed, options);
            emit(out_path, findings_to_json(outcome.findings).dump(2) + "\n");
            std::cerr << to_string(id) << ": " << outcome.accepted << " scenarios checked, " << outcome.skipped
                      << " skipped, " << outcome.inconclusive << " inconclusive, " << outcome.findings.size()
                      << " inconsistent\n";
            return kOk;
        });
    }

    if (sample->parsed()) {
        if (n < 1) {
            std::cerr << "error: -n must be >= 1\n";
            return kUsage;
        }
        return guarded([&] {
            const Scenario s = load_scenario(scenario_path);
            const auto draws = s.model_a().sample(static_cast<std::size_t>(n), sample_seed);
            std::string text;
            text.reserve(draws.size() * 20);
            for (double x : draws) text += format_number(x, 17) + "\n";
            emit(out_path, text);
            return kOk;
        });
    }
    return kUsage;
}
