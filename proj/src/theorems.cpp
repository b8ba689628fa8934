#include "mixorder/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mixorder/errors.hpp"
#include "mixorder/mphr.hpp"

namespace mixorder {

namespace {

enum class Arity { Two, Many, Groups };
enum class ChainRule { AnyChain, SingleT, SameStructure, Intermediates, None };
enum class SideCondition { None, Tilt, Power };

struct Traits {
    MixtureVariant variant;
    OrderKind order;
    bool asserted_leq;
    Space space;
    Arity arity;
    ChainRule chain;
    SideCondition side;
    bool hazard_family;
};

Traits traits_of(TheoremId id) {
    using enum TheoremId;
    constexpr auto A = MixtureVariant::VaryAlpha;
    constexpr auto L = MixtureVariant::VaryLambda;
    constexpr auto st = OrderKind::St;
    switch (id) {
        case T1i: return {A, st, true, Space::K, Arity::Two, ChainRule::AnyChain, SideCondition::None, false};
        case T1ii: return {A, st, false, Space::L, Arity::Two, ChainRule::AnyChain, SideCondition::Tilt, false};
        case T2i: return {A, st, true, Space::K, Arity::Many, ChainRule::SingleT, SideCondition::None, false};
        case T2ii: return {A, st, false, Space::L, Arity::Many, ChainRule::SingleT, SideCondition::Tilt, false};
        case C1i: return {A, st, true, Space::K, Arity::Many, ChainRule::SameStructure, SideCondition::None, false};
        case C1ii: return {A, st, false, Space::L, Arity::Many, ChainRule::SameStructure, SideCondition::Tilt, false};
        case C2i: return {A, st, true, Space::K, Arity::Many, ChainRule::Intermediates, SideCondition::None, false};
        case C2ii: return {A, st, false, Space::L, Arity::Many, ChainRule::Intermediates, SideCondition::Tilt, false};
        case T3i: return {L, st, false, Space::K, Arity::Two, ChainRule::AnyChain, SideCondition::None, false};
        case T3ii: return {L, st, true, Space::L, Arity::Two, ChainRule::AnyChain, SideCondition::Power, false};
        case T4i: return {L, st, false, Space::K, Arity::Many, ChainRule::SingleT, SideCondition::None, false};
        case T4ii: return {L, st, true, Space::L, Arity::Many, ChainRule::SingleT, SideCondition::Power, false};
        case C3i: return {L, st, false, Space::K, Arity::Many, ChainRule::SameStructure, SideCondition::None, false};
        case C3ii: return {L, st, true, Space::L, Arity::Many, ChainRule::SameStructure, SideCondition::Power, false};
        case C4i: return {L, st, false, Space::K, Arity::Many, ChainRule::Intermediates, SideCondition::None, false};
        case C4ii: return {L, st, true, Space::L, Arity::Many, ChainRule::Intermediates, SideCondition::Power, false};
        case T5: return {A, OrderKind::Hr, false, Space::K, Arity::Two, ChainRule::AnyChain, SideCondition::None, true};
        case T6: return {A, OrderKind::Hr, false, Space::K, Arity::Many, ChainRule::SingleT, SideCondition::None, true};
        case C5:
            return {A, OrderKind::Hr, false, Space::K, Arity::Many, ChainRule::SameStructure, SideCondition::None,
                    true};
        case C6:
            return {A, OrderKind::Hr, false, Space::K, Arity::Many, ChainRule::Intermediates, SideCondition::None,
                    true};
        case T7: return {A, OrderKind::Star, false, Space::K, Arity::Groups, ChainRule::None, SideCondition::None, false};
        case C7:
            return {A, OrderKind::Lorenz, false, Space::K, Arity::Groups, ChainRule::None, SideCondition::None, false};
    }
    throw ParameterError("unknown theorem id");
}

const char* space_name(Space s) { return s == Space::K ? "K" : "L"; }

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(10);
    out << v;
    return out.str();
}

std::string fmt_row(const std::vector<double>& row) {
    std::string out = "(";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ", ";
        out += fmt(row[i]);
    }
    return out + ")";
}

bool is_waived(const std::vector<std::string>& waived, const std::string& name) {
    return std::find(waived.begin(), waived.end(), name) != waived.end();
}

// Worst relative violation of lhs_ij >= rhs_ij over all pairs and grid points. Each pair is read
// with the larger weight first: the condition is not symmetric in the labels while the mixture is,
// and only this orientation gives the sign the argument needs.
template <class Term>
Hypothesis pairwise_side_condition(const char* name, const std::vector<double>& weights, const EvaluationGrid& grid,
                                   Term term) {
    const std::size_t n = weights.size();
    double worst = 0.0;
    double worst_t = 0.0;
    std::size_t wi = 0;
    std::size_t wj = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool swap = weights[j] > weights[i];
                const auto [lhs, rhs] = term(grid.x(g), swap ? j : i, swap ? i : j);
                const double gap = (rhs - lhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
                if (gap > worst) {
                    worst = gap;
                    worst_t = grid.t(g);
                    wi = swap ? j : i;
                    wj = swap ? i : j;
                }
            }
        }
    }
    Hypothesis h{name};
    h.satisfied = worst <= 1e-12;
    std::ostringstream detail;
    detail << "checked for all pairs with p_i >= p_j on " << grid.size() << " grid points";
    if (!h.satisfied) {
        detail << "; fails for (i, j) = (" << wi + 1 << ", " << wj + 1 << ") at t = " << fmt(worst_t)
               << " with relative shortfall " << fmt(worst);
    }
    h.detail = detail.str();
    return h;
}

// Splits a row into two constant runs; returns n1 or nothing.
std::optional<std::size_t> two_runs(const std::vector<double>& v) {
    constexpr double tol = 1e-12;
    std::size_t n1 = 1;
    while (n1 < v.size() && std::abs(v[n1] - v[0]) <= tol) ++n1;
    if (n1 == v.size()) return std::nullopt;
    for (std::size_t i = n1; i < v.size(); ++i) {
        if (std::abs(v[i] - v[n1]) > tol) return std::nullopt;
    }
    return n1;
}

bool constant_on(const std::vector<double>& v, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
        if (std::abs(v[i] - v[from]) > 1e-12) return false;
    }
    return true;
}

struct Evaluated {
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> notes;
};

Evaluated evaluate_hypotheses(TheoremId id, const Traits& tr, const Scenario& s, const ParameterMatrix& b,
                              const EvaluationGrid& grid) {
    Evaluated out;
    const ParameterMatrix& a = s.a;
    const std::size_t n = a.size();

    if (tr.arity != Arity::Groups) {
        Hypothesis space{std::string("a_in_space_") + space_name(tr.space)};
        space.satisfied = in_space(a, tr.space);
        space.detail = "top " + fmt_row(a.top()) + ", bottom " + fmt_row(a.bottom());
        out.hypotheses.push_back(space);

        // B = A T1 ... Tk, recovering a single swap for 2x2 pairs given without a chain
        Chain chain = s.chain;
        Hypothesis witness{"chain_witness"};
        if (!s.chain.empty() && s.b) {
            const double gap = max_abs_difference(apply_chain(a, s.chain), *s.b);
            witness.satisfied = gap <= 1e-9;
            witness.detail = "max |A T1..Tk - B| = " + fmt(gap) + " over " + std::to_string(s.chain.size()) +
                             " transform(s)";
        } else if (!s.chain.empty()) {
            witness.satisfied = true;
            witness.detail = "B derived from A through " + std::to_string(s.chain.size()) + " transform(s)";
        } else if (s.b && n == 2) {
            const auto recovered = recover_t_transform_2x2(a, *s.b);
            witness.satisfied = recovered.has_value();
            if (recovered) {
                chain = {*recovered};
                witness.detail = "B = A T with recovered omega = " + fmt(recovered->omega());
            } else {
                witness.detail = "no swap T-transform maps A to B";
            }
        } else if (s.b) {
            witness.satisfied = max_abs_difference(a, *s.b) <= 1e-9;
            witness.detail = witness.satisfied ? "B equals A" : "no chain supplied for an n > 2 pair";
        } else {
            witness.satisfied = true;
            witness.detail = "empty chain, B equals A";
        }
        out.hypotheses.push_back(witness);

        switch (tr.chain) {
            case ChainRule::AnyChain:
            case ChainRule::None:
                break;
            case ChainRule::SingleT: {
                Hypothesis single{"single_t_transform"};
                single.satisfied = chain.size() <= 1;
                single.detail = std::to_string(chain.size()) + " transform(s) in the chain";
                out.hypotheses.push_back(single);
                break;
            }
            case ChainRule::SameStructure: {
                Hypothesis same{"same_structure"};
                same.satisfied = chain.empty() || same_structure(chain);
                same.detail = std::to_string(chain.size()) + " transform(s); permutations " +
                              (same.satisfied ? "all equal" : "differ");
                out.hypotheses.push_back(same);
                break;
            }
            case ChainRule::Intermediates: {
                Hypothesis length{"chain_length_at_least_2"};
                length.satisfied = chain.size() >= 2;
                length.detail = std::to_string(chain.size()) + " transform(s)";
                out.hypotheses.push_back(length);

                Hypothesis mid{std::string("intermediates_in_space_") + space_name(tr.space)};
                mid.satisfied = true;
                std::ostringstream detail;
                const auto steps = chain_intermediates(a, chain);
                for (std::size_t i = 0; i < steps.size(); ++i) {
                    const bool ok = in_space(steps[i], tr.space);
                    mid.satisfied = mid.satisfied && ok;
                    detail << (i ? "; " : "") << "A";
                    for (std::size_t k = 0; k <= i; ++k) detail << " T" << k + 1;
                    detail << (ok ? " in " : " not in ") << space_name(tr.space);
                }
                mid.detail = steps.empty() ? "no intermediate products" : detail.str();
                out.hypotheses.push_back(mid);
                out.notes.push_back(std::string("intermediate products are tested against space ") +
                                    space_name(tr.space) +
                                    ", the space of A; the undefined space named in the statement is read that way");
                break;
            }
        }
    }

    if (tr.side == SideCondition::Tilt) {
        const double lambda = s.common;
        out.hypotheses.push_back(pairwise_side_condition(
            "tilt_side_condition", a.top(), grid, [&](double x, std::size_t i, std::size_t j) {
                const double fi = mphr_survival(MphrParams(a.bottom()[i], lambda), s.baseline, x);
                const double fj = mphr_survival(MphrParams(a.bottom()[j], lambda), s.baseline, x);
                return std::pair{a.bottom()[j] * a.top()[i] * fi, a.bottom()[i] * a.top()[j] * fj};
            }));
    } else if (tr.side == SideCondition::Power) {
        const double abar = 1.0 - s.common;
        out.hypotheses.push_back(pairwise_side_condition(
            "power_side_condition", a.top(), grid, [&](double x, std::size_t i, std::size_t j) {
                const double log_s = s.baseline.log_survival(x);
                // p_i Fbar_i / (1 - abar S^lambda_i) with Fbar_i the component survival; the common alpha cancels
                const double si = std::exp(a.bottom()[i] * log_s);
                const double sj = std::exp(a.bottom()[j] * log_s);
                const double mi = 1.0 - abar * si;
                const double mj = 1.0 - abar * sj;
                return std::pair{a.top()[i] * si / (mi * mi), a.top()[j] * sj / (mj * mj)};
            }));
    }

    if (tr.hazard_family) {
        Hypothesis balance{kBalanceHypothesis};
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        std::ostringstream detail;
        for (std::size_t i = 0; i < n; ++i) {
            const double prod = a.top()[i] * a.bottom()[i];
            lo = std::min(lo, prod);
            hi = std::max(hi, prod);
            detail << (i ? " = " : "") << "p" << i + 1 << "*alpha" << i + 1;
        }
        detail << ": ";
        for (std::size_t i = 0; i < n; ++i) detail << (i ? ", " : "") << fmt(a.top()[i] * a.bottom()[i]);
        balance.satisfied = hi - lo <= 1e-10;
        balance.detail = detail.str();
        out.hypotheses.push_back(balance);

        Hypothesis positive{"baseline_hazard_positive"};
        positive.satisfied = true;
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const double r = s.baseline.hazard(grid.x(g));
            if (!(r > 0.0) || !std::isfinite(r)) {
                positive.satisfied = false;
                positive.detail = "r(x) = " + fmt(r) + " at t = " + fmt(grid.t(g));
                break;
            }
        }
        if (positive.satisfied) positive.detail = "r(x) > 0 and finite on every grid point";
        out.hypotheses.push_back(positive);

        Hypothesis tilt{"tilts_at_most_one"};
        const double top = *std::max_element(a.bottom().begin(), a.bottom().end());
        tilt.satisfied = top <= 1.0;
        tilt.detail = "largest alpha = " + fmt(top);
        out.hypotheses.push_back(tilt);
    }

    if (tr.arity == Arity::Groups) {
        std::optional<std::size_t> split = two_runs(a.bottom());
        if (!split) split = two_runs(b.bottom());
        Hypothesis groups{"two_group_structure"};
        groups.satisfied = split && constant_on(a.top(), 0, *split) && constant_on(a.top(), *split, n) &&
                           constant_on(a.bottom(), 0, *split) && constant_on(a.bottom(), *split, n) &&
                           constant_on(b.bottom(), 0, *split) && constant_on(b.bottom(), *split, n);
        groups.detail = split ? "n1 = " + std::to_string(*split) + ", n2 = " + std::to_string(n - *split)
                              : "rows are not two constant runs";
        out.hypotheses.push_back(groups);

        Hypothesis same_p{"same_mixing_proportions"};
        double gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(a.top()[i] - b.top()[i]));
        same_p.satisfied = gap <= 1e-12;
        same_p.detail = "max |p_i - q_i| = " + fmt(gap);
        out.hypotheses.push_back(same_p);

        Hypothesis ratio{"ratio_monotone"};
        const RatioMonotoneVerdict rv = t7_ratio_monotone(s.baseline, s.common, grid);
        ratio.satisfied = rv.monotone && !rv.inconclusive;
        ratio.detail = rv.inconclusive ? rv.reason
                                       : "(1 - S^lambda(x)) / (x lambda r(x)) runs from " + fmt(rv.first_value) +
                                             " to " + fmt(rv.last_value) +
                                             (rv.monotone ? ", nonincreasing"
                                                          : "; largest relative increase " + fmt(rv.max_violation) +
                                                                " at t = " + fmt(rv.witness_t));
        out.hypotheses.push_back(ratio);

        const std::size_t n1 = split.value_or(1);
        const std::size_t n2 = n - n1;
        const double a1 = a.bottom()[0];
        const double a2 = a.bottom()[n1];
        const double b1 = b.bottom()[0];
        const double b2 = b.bottom()[n1];
        const double p1 = a.top()[0];
        const double p2 = a.top()[n1];

        Hypothesis interval{"interval_ordering"};
        interval.satisfied = a1 >= b1 && b1 >= b2 && b2 >= a2;
        interval.detail = "alpha1 = " + fmt(a1) + ", beta1 = " + fmt(b1) + ", beta2 = " + fmt(b2) +
                          ", alpha2 = " + fmt(a2) + " (need alpha1 >= beta1 >= beta2 >= alpha2)";
        out.hypotheses.push_back(interval);

        Hypothesis weights{"p1_le_p2"};
        weights.satisfied = p1 <= p2;
        weights.detail = "p1 = " + fmt(p1) + ", p2 = " + fmt(p2);
        out.hypotheses.push_back(weights);

        Hypothesis total{"group_total_sum"};
        const double lhs = static_cast<double>(n1) * a1 + static_cast<double>(n2) * a2;
        const double rhs = static_cast<double>(n1) * b1 + static_cast<double>(n2) * b2;
        total.satisfied = lhs >= rhs - 1e-12;
        total.detail = "n1*alpha1 + n2*alpha2 = " + fmt(lhs) + ", n1*beta1 + n2*beta2 = " + fmt(rhs);
        out.hypotheses.push_back(total);

        const bool fwd = weakly_supermajorizes(b.bottom(), a.bottom());
        const bool back = weakly_supermajorizes(a.bottom(), b.bottom());
        out.notes.push_back(std::string("literal weak supermajorization of the tilt rows: beta over alpha ") +
                            (fwd ? "holds" : "fails") + ", alpha over beta " + (back ? "holds" : "fails") +
                            "; the interval, weight and total-sum conditions are checked instead");
    }

    (void)id;
    return out;
}

}  // namespace

std::string to_string(TheoremId id) {
    switch (id) {
        using enum TheoremId;
        case T1i: return "T1i";
        case T1ii: return "T1ii";
        case T2i: return "T2i";
        case T2ii: return "T2ii";
        case C1i: return "C1i";
        case C1ii: return "C1ii";
        case C2i: return "C2i";
        case C2ii: return "C2ii";
        case T3i: return "T3i";
        case T3ii: return "T3ii";
        case T4i: return "T4i";
        case T4ii: return "T4ii";
        case C3i: return "C3i";
        case C3ii: return "C3ii";
        case C4i: return "C4i";
        case C4ii: return "C4ii";
        case T5: return "T5";
        case T6: return "T6";
        case C5: return "C5";
        case C6: return "C6";
        case T7: return "T7";
        case C7: return "C7";
    }
    return "unknown";
}

const std::vector<TheoremId>& all_theorem_ids() {
    using enum TheoremId;
    static const std::vector<TheoremId> ids{T1i, T1ii, T2i, T2ii, C1i, C1ii, C2i, C2ii, T3i, T3ii, T4i,
                                            T4ii, C3i, C3ii, C4i, C4ii, T5, T6, C5, C6, T7, C7};
    return ids;
}

TheoremId parse_theorem_id(const std::string& name) {
    for (TheoremId id : all_theorem_ids()) {
        if (to_string(id) == name) return id;
    }
    throw ParameterError("unknown theorem id '" + name + "'");
}

MixtureModel make_model(const Baseline& baseline, MixtureVariant variant, double common, const ParameterMatrix& m) {
    return variant == MixtureVariant::VaryAlpha ? MixtureModel::vary_alpha(baseline, common, m.top(), m.bottom())
                                                : MixtureModel::vary_lambda(baseline, common, m.top(), m.bottom());
}

ParameterMatrix Scenario::matrix_b() const { return b ? *b : apply_chain(a, chain); }
MixtureModel Scenario::model_a() const { return make_model(baseline, variant, common, a); }
MixtureModel Scenario::model_b() const { return make_model(baseline, variant, common, matrix_b()); }

std::string TheoremReport::asserted_relation() const {
    return std::string("A ") + (asserted_leq ? "<=_" : ">=_") + to_string(order) + " B";
}

RatioMonotoneVerdict t7_ratio_monotone(const Baseline& baseline, double lambda, const EvaluationGrid& grid,
                                       double slack) {
    if (grid.size() < 2) {
        throw ParameterError("ratio monotonicity needs at least two grid points");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("lambda must be finite and > 0");
    }
    RatioMonotoneVerdict v;
    std::vector<double> values;
    values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double r = baseline.hazard(x);
        const double value = -std::expm1(lambda * baseline.log_survival(x)) / (x * lambda * r);
        if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(value)) {
            v.inconclusive = true;
            v.reason = "baseline hazard unusable at t = " + fmt(grid.t(i));
            return v;
        }
        values.push_back(value);
    }
    const MonotoneScan scan = scan_monotone(values);
    v.max_violation = scan.worst_increase;
    v.witness_t = scan.worst_increase > 0.0 ? grid.t(scan.increase_at) : std::numeric_limits<double>::quiet_NaN();
    v.monotone = scan.worst_increase <= slack;
    v.first_value = values.front();
    v.last_value = values.back();
    return v;
}

TheoremReport check_theorem(TheoremId id, const Scenario& s, const std::vector<std::string>& waived) {
    const Traits tr = traits_of(id);
    if (s.variant != tr.variant) {
        throw ShapeError(to_string(id) + " needs a " + to_string(tr.variant) + " scenario, got " +
                         to_string(s.variant));
    }
    if (tr.arity == Arity::Two && s.a.size() != 2) {
        throw ShapeError(to_string(id) + " compares two-component mixtures; scenario has " +
                         std::to_string(s.a.size()));
    }
    const ParameterMatrix b = s.matrix_b();
    if (b.size() != s.a.size()) {
        throw ShapeError("matrices A and B have different numbers of components");
    }
    const EvaluationGrid grid = s.grid.build();

    TheoremReport report{id, s, b};
    report.order = tr.order;
    report.asserted_leq = tr.asserted_leq;

    Evaluated ev = evaluate_hypotheses(id, tr, s, b, grid);
    report.hypotheses = std::move(ev.hypotheses);
    report.notes = std::move(ev.notes);
    report.applicable = true;
    for (auto& h : report.hypotheses) {
        h.waived = is_waived(waived, h.name);
        report.applicable = report.applicable && (h.satisfied || h.waived);
    }

    const MixtureModel ma = s.model_a();
    const MixtureModel mb = make_model(s.baseline, s.variant, s.common, b);
    try {
        report.conclusion = check_order(tr.order, ma, mb, grid);
    } catch (const InfiniteMeanSuspected& e) {
        report.conclusion.order = tr.order;
        report.conclusion.inconclusive = true;
        report.conclusion.reason = std::string("infinite mean suspected: ") + e.what();
    } catch (const TailError& e) {
        report.conclusion.order = tr.order;
        report.conclusion.inconclusive = true;
        report.conclusion.reason = e.what();
    }
    report.inconclusive = report.conclusion.inconclusive;
    report.conclusion_holds = !report.inconclusive && report.conclusion.holds(tr.asserted_leq);
    report.consistent = !(report.applicable && !report.inconclusive && !report.conclusion_holds);

    if (report.conclusion.hazard_check && report.conclusion.hazard_check->disagrees) {
        report.notes.push_back("pointwise hazard comparison disagrees with the survival-ratio test");
    }
    std::vector<std::string> failing;
    for (const auto& h : report.hypotheses) {
        if (!h.satisfied) failing.push_back(h.name + (h.waived ? " (waived)" : ""));
    }
    if (!failing.empty()) {
        std::string line = "hypotheses not met: ";
        for (std::size_t i = 0; i < failing.size(); ++i) line += (i ? ", " : "") + failing[i];
        if (report.conclusion_holds) line += "; the asserted conclusion holds anyway";
        report.notes.push_back(line);
    }
    if (!report.consistent) {
        report.notes.push_back("all hypotheses hold but " + report.asserted_relation() +
                               " fails on the grid; observed relation " + report.conclusion.relation());
    }
    return report;
}

TheoremId paper_example_theorem(int k) {
    using enum TheoremId;
    switch (k) {
        case 1: return T1i;
        case 2: return C1i;
        case 3: return C2i;
        case 4: return T3i;
        case 5: return C3i;
        case 6: return T5;
        case 7: return T7;
        default: break;
    }
    throw ParameterError("worked examples are numbered 1 to 7, got " + std::to_string(k));
}

Scenario paper_example_scenario(int k) {
    const TheoremId id = paper_example_theorem(k);
    const auto alpha_scn = [&](Baseline base, double lambda, ParameterMatrix a, Chain chain,
                               std::optional<ParameterMatrix> b) {
        return Scenario{base, MixtureVariant::VaryAlpha, lambda, std::move(a), std::move(chain), std::move(b),
                        GridSpec{}, id};
    };
    const auto lambda_scn = [&](Baseline base, double alpha, ParameterMatrix a, Chain chain,
                                std::optional<ParameterMatrix> b) {
        return Scenario{base, MixtureVariant::VaryLambda, alpha, std::move(a), std::move(chain), std::move(b),
                        GridSpec{}, id};
    };
    switch (k) {
        case 1:
            return alpha_scn(Baseline::exponential(0.2), 0.1, ParameterMatrix({0.6, 0.4}, {0.3, 0.4}),
                             {TTransform::swap(2, 0, 1, 0.4)}, ParameterMatrix({0.48, 0.52}, {0.36, 0.34}));
        case 2:
            return alpha_scn(Baseline::exponential(2.0), 0.2, ParameterMatrix({0.2, 0.3, 0.5}, {0.5, 0.3, 0.1}),
                             {TTransform::swap(3, 1, 2, 0.4), TTransform::swap(3, 1, 2, 0.2)},
                             ParameterMatrix({0.2, 0.388, 0.412}, {0.5, 0.212, 0.188}));
        case 3:
            // printed beta2 (0.568) disagrees with the chain, so B is derived from the chain
            return alpha_scn(Baseline::exponential(3.0), 0.2, ParameterMatrix({0.1, 0.4, 0.5}, {0.7, 0.5, 0.3}),
                             {TTransform::swap(3, 1, 2, 0.3), TTransform::swap(3, 0, 1, 0.4),
                              TTransform::swap(3, 0, 2, 0.1)},
                             std::nullopt);
        case 4:
            return lambda_scn(Baseline::exponential(2.0), 0.2, ParameterMatrix({0.2, 0.8}, {0.5, 0.25}),
                              {TTransform::swap(2, 0, 1, 0.3)}, ParameterMatrix({0.62, 0.38}, {0.325, 0.425}));
        case 5:
            return lambda_scn(Baseline::exponential(0.2), 0.2, ParameterMatrix({0.5, 0.4, 0.1}, {3.0, 4.0, 5.0}),
                              {TTransform::swap(3, 1, 2, 0.4), TTransform::swap(3, 1, 2, 0.2)},
                              ParameterMatrix({0.5, 0.268, 0.232}, {3.0, 4.44, 4.56}));
        case 6:
            return alpha_scn(Baseline::exponential(3.0), 0.2, ParameterMatrix({0.3, 0.7}, {0.7, 0.3}),
                             {TTransform::swap(2, 0, 1, 0.9)}, ParameterMatrix({0.34, 0.66}, {0.66, 0.34}));
        case 7: {
            const std::vector<double> p{0.3, 0.3, 0.3, 0.05, 0.05};
            return alpha_scn(Baseline::power_burr(0.2, 0.5), 0.1, ParameterMatrix(p, {8, 8, 8, 2, 2}), {},
                             ParameterMatrix(p, {6, 6, 6, 3, 3}));
        }
        default:
            break;
    }
    throw ParameterError("worked examples are numbered 1 to 7, got " + std::to_string(k));
}

TheoremReport verify_paper_example(int k) {
    return check_theorem(paper_example_theorem(k), paper_example_scenario(k));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Draw {
  public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    std::vector<double> weights(std::size_t n) {
        std::vector<double> w(n);
        double total = 0.0;
        for (double& v : w) total += (v = uniform(0.05, 1.0));
        for (double& v : w) v /= total;
        renormalize(w);
        return w;
    }
    // Last entry absorbs rounding so the row sums to 1 within the model tolerance.
    static void renormalize(std::vector<double>& w) {
        double head = 0.0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) head += w[i];
        w.back() = 1.0 - head;
    }
    TTransform random_swap(std::size_t n) {
        const std::size_t i = index(0, n - 1);
        std::size_t j = index(0, n - 2);
        if (j >= i) ++j;
        return TTransform::swap(n, i, j, uniform(0.0, 1.0));
    }
    Baseline baseline() {
        if (uniform(0.0, 1.0) < 0.5) return Baseline::exponential(uniform(0.1, 3.0));
        return Baseline::power_burr(uniform(0.3, 3.0), uniform(0.3, 3.0));
    }

  private:
    std::mt19937_64 rng_;
};

Scenario draw_scenario(TheoremId id, const Traits& tr, Draw& d, const SearchOptions& options) {
    const bool balance = !is_waived(options.waived, kBalanceHypothesis);
    if (tr.arity == Arity::Groups) {
        const std::size_t n1 = d.index(1, 3);
        const std::size_t n2 = d.index(1, 3);
        const std::size_t n = n1 + n2;
        std::array<double, 4> levels{d.uniform(0.05, 10.0), d.uniform(0.05, 10.0), d.uniform(0.05, 10.0),
                                     d.uniform(0.05, 10.0)};
        std::sort(levels.begin(), levels.end());
        const double p1 = d.uniform(0.05, 1.0) / static_cast<double>(n);
        const double p2 = (1.0 - static_cast<double>(n1) * p1) / static_cast<double>(n2);
        std::vector<double> p(n), alpha(n), beta(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool first = i < n1;
            p[i] = first ? p1 : p2;
            alpha[i] = first ? levels[3] : levels[0];
            beta[i] = first ? levels[2] : levels[1];
        }
        Draw::renormalize(p);
        return Scenario{Baseline::exponential(d.uniform(0.1, 3.0)), tr.variant, d.uniform(0.05, 2.0),
                        ParameterMatrix(p, alpha), {}, ParameterMatrix(p, beta), options.grid, id};
    }

    const std::size_t n = tr.arity == Arity::Two ? 2 : d.index(2, 4);
    std::vector<double> bottom(n);
    std::vector<double> top;
    for (double& v : bottom) {
        v = tr.variant == MixtureVariant::VaryAlpha ? d.uniform(0.05, 1.0) : d.uniform(0.1, 5.0);
    }
    std::sort(bottom.begin(), bottom.end());
    if (tr.hazard_family && balance) {
        // p_i proportional to 1 / alpha_i balances every product p_i alpha_i
        double total = 0.0;
        for (double v : bottom) total += 1.0 / v;
        for (double v : bottom) top.push_back(1.0 / v / total);
    } else {
        top = d.weights(n);
        std::sort(top.begin(), top.end(), std::greater<>());
    }
    if (tr.space == Space::L) std::reverse(bottom.begin(), bottom.end());

    Chain chain;
    switch (tr.chain) {
        case ChainRule::AnyChain:
        case ChainRule::SingleT:
        case ChainRule::None:
            chain.push_back(d.random_swap(n));
            break;
        case ChainRule::SameStructure: {
            const TTransform first = d.random_swap(n);
            const std::size_t k = d.index(1, 3);
            chain.push_back(first);
            for (std::size_t i = 1; i < k; ++i) chain.emplace_back(d.uniform(0.0, 1.0), first.permutation());
            break;
        }
        case ChainRule::Intermediates: {
            const std::size_t k = d.index(2, 3);
            for (std::size_t i = 0; i < k; ++i) chain.push_back(d.random_swap(n));
            break;
        }
    }
    const double common = tr.variant == MixtureVariant::VaryAlpha ? d.uniform(0.05, 2.0) : d.uniform(0.05, 1.0);
    return Scenario{d.baseline(), tr.variant, common, ParameterMatrix(top, bottom), chain, std::nullopt,
                    options.grid, id};
}

}  // namespace

SearchOutcome search_counterexamples(TheoremId id, std::size_t trials, std::uint64_t seed,
                                     const SearchOptions& options) {
    if (trials == 0) {
        throw ParameterError("counterexample search needs at least one trial");
    }
    const Traits tr = traits_of(id);
    const EvaluationGrid grid = options.grid.build();
    SearchOutcome outcome;
    outcome.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Draw d(splitmix64(seed ^ splitmix64(trial + 1)));
        bool accepted = false;
        for (std::size_t attempt = 0; attempt < options.max_attempts && !accepted; ++attempt) {
            Scenario s = draw_scenario(id, tr, d, options);
            Evaluated ev = evaluate_hypotheses(id, tr, s, s.matrix_b(), grid);
            const bool ok = std::all_of(ev.hypotheses.begin(), ev.hypotheses.end(), [&](const Hypothesis& h) {
                return h.satisfied || is_waived(options.waived, h.name);
            });
            if (!ok) continue;
            accepted = true;
            ++outcome.accepted;
            TheoremReport report = check_theorem(id, s, options.waived);
            if (report.inconclusive) ++outcome.inconclusive;
            if (!report.consistent) outcome.findings.push_back(std::move(report));
        }
        if (!accepted) ++outcome.skipped;
    }
    return outcome;
}

}  // namespace mixorder
