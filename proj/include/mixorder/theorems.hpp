#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixorder/baseline.hpp"
#include "mixorder/majorization.hpp"
#include "mixorder/mixture.hpp"
#include "mixorder/orders.hpp"

namespace mixorder {

// Ids follow the results they encode. Suffix i/ii picks the oppositely
// ordered (K) or similarly ordered (L) case; T* are theorems, C* corollaries.
enum class TheoremId {
    T1i, T1ii, T2i, T2ii, C1i, C1ii, C2i, C2ii,
    T3i, T3ii, T4i, T4ii, C3i, C3ii, C4i, C4ii,
    T5, T6, C5, C6,
    T7, C7,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& name);
const std::vector<TheoremId>& all_theorem_ids();

struct GridSpec {
    std::size_t points = EvaluationGrid::kDefaultPoints;
    double t_min = EvaluationGrid::kDefaultTMin;
    double t_max = EvaluationGrid::kDefaultTMax;

    EvaluationGrid build() const { return EvaluationGrid::uniform(points, t_min, t_max); }
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Two mixtures over one baseline: model A from matrix a, model B from b or a * chain.
struct Scenario {
    Baseline baseline;
    MixtureVariant variant;
    /// lambda for VaryAlpha, alpha for VaryLambda.
    double common;
    ParameterMatrix a;
    Chain chain;
    std::optional<ParameterMatrix> b;
    GridSpec grid;
    std::optional<TheoremId> theorem;

    /// b when given, otherwise a * chain.
    ParameterMatrix matrix_b() const;
    MixtureModel model_a() const;
    MixtureModel model_b() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

MixtureModel make_model(const Baseline& baseline, MixtureVariant variant, double common, const ParameterMatrix& m);

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    /// Evaluated but not counted towards applicability.
    bool waived = false;
    std::string detail;
};

struct TheoremReport {
    TheoremId id;
    Scenario scenario;
    ParameterMatrix matrix_b;
    std::vector<Hypothesis> hypotheses;
    OrderKind order = OrderKind::St;
    /// Direction claimed by the result: A <= B when true, A >= B otherwise.
    bool asserted_leq = true;
    OrderVerdict conclusion;
    bool conclusion_holds = false;
    /// Every hypothesis is satisfied or waived.
    bool applicable = false;
    bool inconclusive = false;
    /// False only when the result applies, the check is conclusive and the claim fails.
    bool consistent = true;
    std::vector<std::string> notes;

    /// e.g. "A >=_hr B".
    std::string asserted_relation() const;
};

TheoremReport check_theorem(TheoremId id, const Scenario& s, const std::vector<std::string>& waived = {});

struct RatioMonotoneVerdict {
    bool monotone = false;
    bool inconclusive = false;
    double max_violation = 0.0;
    double witness_t = 0.0;
    double first_value = 0.0;
    double last_value = 0.0;
    std::string reason;
};

/// (1 - S^lambda(x)) / (x lambda r(x)) nonincreasing on the grid within slack.
RatioMonotoneVerdict t7_ratio_monotone(const Baseline& baseline, double lambda, const EvaluationGrid& grid,
                                       double slack = kDefaultSlack);

/// The worked examples 1..7 with their published constants.
Scenario paper_example_scenario(int k);
TheoremId paper_example_theorem(int k);
TheoremReport verify_paper_example(int k);

struct SearchOptions {
    /// Hypothesis names that are neither enforced during sampling nor required for applicability.
    std::vector<std::string> waived;
    /// Rejection attempts allowed per trial before it is skipped.
    std::size_t max_attempts = 20000;
    GridSpec grid;
};

struct SearchOutcome {
    std::size_t trials = 0;
    std::size_t accepted = 0;
    std::size_t skipped = 0;
    std::size_t inconclusive = 0;
    std::vector<TheoremReport> findings;
};

/// Random scenarios meeting the hypotheses of `id`; returns the inconsistent ones.
/// Trial k draws from its own stream derived from (seed, k).
SearchOutcome search_counterexamples(TheoremId id, std::size_t trials, std::uint64_t seed,
                                     const SearchOptions& options = {});

/// Name of the product-balance hypothesis of the hazard-rate results.
inline constexpr const char* kBalanceHypothesis = "balanced_products";

}  // namespace mixorder
