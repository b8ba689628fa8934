#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mixorder {

/// Two-row parameter matrix: mixing weights on top, a model parameter below.
class ParameterMatrix {
  public:
    /// Throws ShapeError on unequal or too-short rows, ParameterError on non-positive entries.
    ParameterMatrix(std::vector<double> top, std::vector<double> bottom);

    std::size_t size() const { return top_.size(); }
    const std::vector<double>& top() const { return top_; }
    const std::vector<double>& bottom() const { return bottom_; }

    friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;

  private:
    std::vector<double> top_;
    std::vector<double> bottom_;
};

/// T = omega * I + (1 - omega) * Pi. Permutations are 0-based here.
class TTransform {
  public:
    TTransform(double omega, std::vector<std::size_t> permutation);
    /// Pi exchanges i and j and fixes everything else.
    static TTransform swap(std::size_t n, std::size_t i, std::size_t j, double omega);

    double omega() const { return omega_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    std::size_t size() const { return perm_.size(); }

    /// row * T, i.e. out[j] = omega * row[j] + (1 - omega) * row[perm[j]].
    std::vector<double> apply(std::span<const double> row) const;

    friend bool operator==(const TTransform&, const TTransform&) = default;

  private:
    double omega_;
    std::vector<std::size_t> perm_;
};

using Chain = std::vector<TTransform>;

/// Absolute slack used by the majorization predicates.
inline constexpr double kMajorizationSlack = 1e-12;

/// a majorizes b: increasing partial sums of a never exceed those of b, equal totals.
bool majorizes(std::span<const double> a, std::span<const double> b);
/// Increasing partial sums of a never exceed those of b, totals included.
bool weakly_supermajorizes(std::span<const double> a, std::span<const double> b);

ParameterMatrix apply_t_transform(const ParameterMatrix& m, const TTransform& t);
/// Left to right: m T1 T2 ... Tk.
ParameterMatrix apply_chain(const ParameterMatrix& m, const Chain& chain);
/// Prefixes m T1, m T1 T2, ..., m T1 ... T(k-1).
std::vector<ParameterMatrix> chain_intermediates(const ParameterMatrix& m, const Chain& chain);

double max_abs_difference(const ParameterMatrix& a, const ParameterMatrix& b);
bool verify_chain_witness(const ParameterMatrix& a, const ParameterMatrix& b, const Chain& chain, double tol = 1e-9);

/// All transforms share one permutation. Empty chain is a ParameterError.
bool same_structure(const Chain& chain);

enum class Space { K, L };

/// K: rows oppositely ordered, (a_i - a_j)(b_i - b_j) <= 0 for all pairs. L: similarly ordered.
bool in_space(const ParameterMatrix& m, Space which);

bool row_majorizes(const ParameterMatrix& a, const ParameterMatrix& b);

/// omega with b = a * T_omega (swap), if one exists within tol.
std::optional<TTransform> recover_t_transform_2x2(const ParameterMatrix& a, const ParameterMatrix& b,
                                                  double tol = 1e-9);

}  // namespace mixorder
