#include "mixorder/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": lengths " << a << " and " << b << " differ";
        throw ShapeError(msg.str());
    }
}

std::vector<double> increasing_partial_sums(std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        sorted[i] += sorted[i - 1];
    }
    return sorted;
}

}  // namespace

ParameterMatrix::ParameterMatrix(std::vector<double> top, std::vector<double> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    require_same_length(top_.size(), bottom_.size(), "parameter matrix rows");
    if (top_.size() < 2) {
        throw ShapeError("parameter matrix needs at least two columns");
    }
    for (std::size_t i = 0; i < top_.size(); ++i) {
        if (!(top_[i] > 0.0) || !std::isfinite(top_[i]) || !(bottom_[i] > 0.0) || !std::isfinite(bottom_[i])) {
            std::ostringstream msg;
            msg << "parameter matrix column " << i << " = (" << top_[i] << ", " << bottom_[i]
                << ") must be finite and > 0";
            throw ParameterError(msg.str());
        }
    }
}

TTransform::TTransform(double omega, std::vector<std::size_t> permutation)
    : omega_(omega), perm_(std::move(permutation)) {
    if (!(omega_ >= 0.0 && omega_ <= 1.0)) {
        std::ostringstream msg;
        msg << "T-transform weight omega = " << omega_ << " is outside [0, 1]";
        throw ParameterError(msg.str());
    }
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t target : perm_) {
        if (target >= perm_.size() || seen[target]) {
            throw ParameterError("T-transform permutation is not a bijection");
        }
        seen[target] = true;
    }
}

TTransform TTransform::swap(std::size_t n, std::size_t i, std::size_t j, double omega) {
    if (i >= n || j >= n) {
        throw ShapeError("swap index outside the matrix");
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return TTransform(omega, std::move(perm));
}

std::vector<double> TTransform::apply(std::span<const double> row) const {
    require_same_length(row.size(), perm_.size(), "T-transform size");
    std::vector<double> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = omega_ * row[j] + (1.0 - omega_) * row[perm_[j]];
    }
    return out;
}

bool majorizes(std::span<const double> a, std::span<const double> b) {
    require_same_length(a.size(), b.size(), "majorizes");
    if (a.empty()) return true;
    const auto sa = increasing_partial_sums(a);
    const auto sb = increasing_partial_sums(b);
    for (std::size_t j = 0; j + 1 < sa.size(); ++j) {
        if (sa[j] > sb[j] + kMajorizationSlack) return false;
    }
    return std::abs(sa.back() - sb.back()) <= kMajorizationSlack;
}

bool weakly_supermajorizes(std::span<const double> a, std::span<const double> b) {
    require_same_length(a.size(), b.size(), "weakly_supermajorizes");
    const auto sa = increasing_partial_sums(a);
    const auto sb = increasing_partial_sums(b);
    for (std::size_t j = 0; j < sa.size(); ++j) {
        if (sa[j] > sb[j] + kMajorizationSlack) return false;
    }
    return true;
}

ParameterMatrix apply_t_transform(const ParameterMatrix& m, const TTransform& t) {
    require_same_length(m.size(), t.size(), "apply_t_transform");
    return ParameterMatrix(t.apply(m.top()), t.apply(m.bottom()));
}

ParameterMatrix apply_chain(const ParameterMatrix& m, const Chain& chain) {
    ParameterMatrix out = m;
    for (const auto& t : chain) {
        out = apply_t_transform(out, t);
    }
    return out;
}

std::vector<ParameterMatrix> chain_intermediates(const ParameterMatrix& m, const Chain& chain) {
    std::vector<ParameterMatrix> steps;
    ParameterMatrix current = m;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        current = apply_t_transform(current, chain[i]);
        steps.push_back(current);
    }
    return steps;
}

double max_abs_difference(const ParameterMatrix& a, const ParameterMatrix& b) {
    require_same_length(a.size(), b.size(), "matrix comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max({worst, std::abs(a.top()[i] - b.top()[i]), std::abs(a.bottom()[i] - b.bottom()[i])});
    }
    return worst;
}

bool verify_chain_witness(const ParameterMatrix& a, const ParameterMatrix& b, const Chain& chain, double tol) {
    return max_abs_difference(apply_chain(a, chain), b) <= tol;
}

bool same_structure(const Chain& chain) {
    if (chain.empty()) {
        throw ParameterError("same_structure needs a nonempty chain");
    }
    return std::all_of(chain.begin(), chain.end(),
                       [&](const TTransform& t) { return t.permutation() == chain.front().permutation(); });
}

bool in_space(const ParameterMatrix& m, Space which) {
    const auto& a = m.top();
    const auto& b = m.bottom();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const double product = (a[i] - a[j]) * (b[i] - b[j]);
            if (which == Space::K ? product > 0.0 : product < 0.0) return false;
        }
    }
    return true;
}

bool row_majorizes(const ParameterMatrix& a, const ParameterMatrix& b) {
    require_same_length(a.size(), b.size(), "row_majorizes");
    return majorizes(a.top(), b.top()) && majorizes(a.bottom(), b.bottom());
}

std::optional<TTransform> recover_t_transform_2x2(const ParameterMatrix& a, const ParameterMatrix& b, double tol) {
    if (a.size() != 2 || b.size() != 2) {
        return std::nullopt;
    }
    // b_1 = omega a_1 + (1 - omega) a_2 on whichever row has distinct entries
    std::optional<double> omega;
    if (a == b) {
        omega = 1.0;
    } else if (std::abs(a.top()[0] - a.top()[1]) > tol) {
        omega = (b.top()[0] - a.top()[1]) / (a.top()[0] - a.top()[1]);
    } else if (std::abs(a.bottom()[0] - a.bottom()[1]) > tol) {
        omega = (b.bottom()[0] - a.bottom()[1]) / (a.bottom()[0] - a.bottom()[1]);
    }
    if (!omega) {
        return std::nullopt;
    }
    double w = *omega;
    if (w < -tol || w > 1.0 + tol) {
        return std::nullopt;
    }
    w = std::clamp(w, 0.0, 1.0);
    TTransform t = TTransform::swap(2, 0, 1, w);
    if (!verify_chain_witness(a, b, {t}, tol)) {
        return std::nullopt;
    }
    return t;
}

}  // namespace mixorder
