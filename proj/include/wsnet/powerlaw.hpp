#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnet/graph.hpp"

namespace wsnet {

class PowerLawError : public std::runtime_error {
public:
    enum class Kind { InvalidSample, ZeroVariance, TooFewValues, InvalidArgument };

    PowerLawError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Hurwitz zeta  sum_{k>=0} (k + q)^-s  for s > 1, q > 0.
///
/// Sums the leading terms directly and closes the series with the tail
/// integral plus Euler-Maclaurin corrections, taking enough direct terms
/// that the truncation error stays below 1e-10 of the result.
double hurwitz_zeta(double s, double q);

/// Discrete power law p(x) = x^-alpha / zeta(alpha, xmin) for x >= xmin.
struct PowerLawFit {
    double alpha = 0.0;
    std::uint64_t xmin = 1;
    /// Kolmogorov-Smirnov distance between tail data and fitted model.
    double ks = 0.0;
    std::size_t ntail = 0;
    std::size_t n = 0;
    std::optional<double> pvalue;
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
    /// Bootstrap replicates whose refit failed (degenerate draw).
    std::size_t failed_replicates = 0;
};

/// Maximum-likelihood exponent for every candidate xmin (each distinct value
/// leaving at least two distinct values in the tail); keeps the candidate
/// with the smallest KS distance, ties to the smaller xmin.
///
/// Throws PowerLawError for an empty sample, zeros, or a sample with too few
/// distinct values.
PowerLawFit fit_discrete_power_law(std::span<const std::uint64_t> sample);

/// KS distance of `sample`'s tail (x >= xmin) against the power law
/// (alpha, xmin).
double ks_distance(std::span<const std::uint64_t> sample, double alpha, std::uint64_t xmin);

/// Semi-parametric bootstrap goodness-of-fit. Replicate r (seed + r) draws n
/// values, each from the fitted tail with probability ntail/n and otherwise
/// uniformly from the observed values below xmin, then refits. The p-value is
/// the fraction of replicates whose KS distance is at least the observed one.
PowerLawFit ks_pvalue(std::span<const std::uint64_t> sample, const PowerLawFit& fit, std::size_t replicates,
                      std::uint64_t seed, unsigned workers = 1);

/// Inversion sampler for the discrete power law: exact cumulative table over
/// the bulk, continuous approximation in the far tail.
class DiscretePowerLawSampler {
public:
    DiscretePowerLawSampler(double alpha, std::uint64_t xmin);

    /// `u` uniform in [0, 1).
    std::uint64_t draw(double u) const;

private:
    double alpha_;
    std::uint64_t xmin_;
    std::vector<double> cdf_;  // cdf_[i] = P(X <= xmin + i)
};

using DegreeHistogram = std::map<std::size_t, std::size_t>;

struct DegreeFit {
    DegreeHistogram histogram;  // includes degree 0
    std::optional<PowerLawFit> fit;
    std::string error;  // why `fit` is absent
};

struct DegreeDistributionReport {
    DegreeFit in;
    DegreeFit out;
    DegreeFit total;
};

struct DegreeFitOptions {
    std::size_t replicates = 0;  // 0: no bootstrap
    std::uint64_t seed = 42;
    unsigned workers = 1;
    std::size_t min_nonzero = 10;
};

/// Fits in-, out- and total-degree distributions with zero degrees removed.
/// Throws PowerLawError(TooFewValues) when any of the three has fewer than
/// `min_nonzero` nonzero entries; a fit that fails for another reason leaves
/// `fit` empty and explains why in `error`.
DegreeDistributionReport degree_distribution_report(const Graph& g, const DegreeFitOptions& options = {});

/// "degree<TAB>count" per line, ascending degree.
void write_histogram(const DegreeHistogram& h, std::ostream& os);

}  // namespace wsnet
