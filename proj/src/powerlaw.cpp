#include "wsnet/powerlaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "wsnet/parallel.hpp"
#include "wsnet/rng.hpp"

namespace wsnet {

namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

constexpr double kZetaTolerance = 1e-10;
constexpr double kAlphaLow = 1.0 + 1e-6;
constexpr double kAlphaHigh = 50.0;
// Gaps in the tail wider than this are bridged with zeta differences instead
// of term-by-term sums.
constexpr std::uint64_t kDirectSumGap = 64;

struct Histogram {
    std::vector<std::uint64_t> values;  // distinct, ascending
    std::vector<std::size_t> counts;
    std::vector<std::size_t> tail_count;  // observations >= values[i]
    std::vector<double> tail_logsum;      // sum of ln x over those observations
    std::size_t n = 0;
};

Histogram make_histogram(std::span<const std::uint64_t> sample) {
    if (sample.empty()) throw PowerLawError(PowerLawError::Kind::InvalidSample, "power-law fit: empty sample");
    std::vector<std::uint64_t> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 0)
        throw PowerLawError(PowerLawError::Kind::InvalidSample, "power-law fit: sample contains zeros");

    Histogram h;
    h.n = sorted.size();
    for (auto x : sorted) {
        if (h.values.empty() || h.values.back() != x) {
            h.values.push_back(x);
            h.counts.push_back(0);
        }
        ++h.counts.back();
    }
    const auto k = h.values.size();
    h.tail_count.assign(k + 1, 0);
    h.tail_logsum.assign(k + 1, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        h.tail_count[i] = h.tail_count[i + 1] + h.counts[i];
        h.tail_logsum[i] = h.tail_logsum[i + 1] + static_cast<double>(h.counts[i]) * std::log(static_cast<double>(h.values[i]));
    }
    return h;
}

double mle_alpha(double mean_log, double xmin) {
    // Negative mean log-likelihood per tail observation.
    auto objective = [&](double alpha) { return alpha * mean_log + std::log(hurwitz_zeta(alpha, xmin)); };
    constexpr int bits = std::numeric_limits<double>::digits / 2;
    return boost::math::tools::brent_find_minima(objective, kAlphaLow, kAlphaHigh, bits).first;
}

// KS distance of the tail starting at histogram index `first`.
double ks_tail(const Histogram& h, std::size_t first, double alpha) {
    const auto xmin = h.values[first];
    const double z = hurwitz_zeta(alpha, static_cast<double>(xmin));
    const double nt = static_cast<double>(h.tail_count[first]);

    double partial = 0.0;  // sum_{t = xmin}^{x} t^-alpha
    std::uint64_t x = xmin - 1;
    auto advance_to = [&](std::uint64_t target) {
        if (target - x <= kDirectSumGap) {
            for (auto t = x + 1; t <= target; ++t) partial += std::pow(static_cast<double>(t), -alpha);
        } else {
            partial = z - hurwitz_zeta(alpha, static_cast<double>(target + 1));
        }
        x = target;
    };

    double d = 0.0;
    std::size_t cum = 0;
    for (std::size_t j = first; j < h.values.size(); ++j) {
        advance_to(h.values[j]);
        cum += h.counts[j];
        const double s = static_cast<double>(cum) / nt;
        d = std::max(d, std::abs(s - partial / z));
        // The empirical CDF stays flat until the next observed value while
        // the model keeps rising; check the right end of the flat stretch.
        if (j + 1 < h.values.size() && h.values[j + 1] - 1 > x) {
            advance_to(h.values[j + 1] - 1);
            d = std::max(d, std::abs(s - partial / z));
        }
    }
    return d;
}

PowerLawFit fit_histogram(const Histogram& h) {
    const auto k = h.values.size();
    if (k < 2)
        throw PowerLawError(PowerLawError::Kind::ZeroVariance, "power-law fit: all observations are equal");

    PowerLawFit best;
    best.ks = std::numeric_limits<double>::infinity();
    best.n = h.n;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const double nt = static_cast<double>(h.tail_count[i]);
        const double xmin = static_cast<double>(h.values[i]);
        const double alpha = mle_alpha(h.tail_logsum[i] / nt, xmin);
        const double ks = ks_tail(h, i, alpha);
        if (ks < best.ks) {
            best.alpha = alpha;
            best.xmin = h.values[i];
            best.ks = ks;
            best.ntail = h.tail_count[i];
        }
    }
    return best;
}

}  // namespace

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !(q > 0.0) || !std::isfinite(s) || !std::isfinite(q))
        throw PowerLawError(PowerLawError::Kind::InvalidArgument, "hurwitz_zeta: requires s > 1 and q > 0");

    auto direct_terms = static_cast<std::size_t>(std::max(0.0, std::ceil(std::max(10.0, s) - q)));
    for (;;) {
        const double a = q + static_cast<double>(direct_terms);
        double direct = 0.0;
        for (std::size_t k = direct_terms; k-- > 0;) direct += std::pow(q + static_cast<double>(k), -s);

        const double a_pow = std::pow(a, -s);
        const double tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;
        // Euler-Maclaurin: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
        double rising = s * a_pow / a;
        double correction = 0.0;
        double last = 0.0;
        for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
            last = kBernoulliOverFactorial[j] * rising;
            correction += last;
            const double m = 2.0 * static_cast<double>(j + 1);
            rising *= (s + m - 1.0) * (s + m) / (a * a);
        }
        const double result = direct + tail + correction;
        if (std::abs(last) <= kZetaTolerance * 1e-3 * result || direct_terms > (1u << 20)) return result;
        direct_terms = direct_terms * 2 + 8;
    }
}

PowerLawFit fit_discrete_power_law(std::span<const std::uint64_t> sample) {
    return fit_histogram(make_histogram(sample));
}

double ks_distance(std::span<const std::uint64_t> sample, double alpha, std::uint64_t xmin) {
    auto h = make_histogram(sample);
    auto first = std::lower_bound(h.values.begin(), h.values.end(), xmin) - h.values.begin();
    if (static_cast<std::size_t>(first) == h.values.size() || h.values[first] != xmin)
        throw PowerLawError(PowerLawError::Kind::InvalidArgument, "ks_distance: xmin is not a sample value");
    return ks_tail(h, static_cast<std::size_t>(first), alpha);
}

DiscretePowerLawSampler::DiscretePowerLawSampler(double alpha, std::uint64_t xmin) : alpha_(alpha), xmin_(xmin) {
    if (!(alpha > 1.0) || xmin < 1)
        throw PowerLawError(PowerLawError::Kind::InvalidArgument, "sampler: requires alpha > 1 and xmin >= 1");
    constexpr std::size_t kMaxTable = std::size_t{1} << 17;
    const double z = hurwitz_zeta(alpha, static_cast<double>(xmin));
    double cum = 0.0;
    for (std::uint64_t x = xmin; cdf_.size() < kMaxTable; ++x) {
        cum += std::pow(static_cast<double>(x), -alpha) / z;
        cdf_.push_back(std::min(cum, 1.0));
        if (1.0 - cum < 1e-12) break;
    }
}

std::uint64_t DiscretePowerLawSampler::draw(double u) const {
    if (u < cdf_.back()) {
        auto idx = std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin();
        return xmin_ + static_cast<std::uint64_t>(idx);
    }
    // Beyond the table: continuous approximation conditioned on X >= edge.
    const double edge = static_cast<double>(xmin_ + cdf_.size());
    const double rest = std::max(1.0 - cdf_.back(), std::numeric_limits<double>::min());
    const double v = std::clamp((u - cdf_.back()) / rest, 0.0, 1.0 - 1e-16);
    const double x = std::floor((edge - 0.5) * std::pow(1.0 - v, -1.0 / (alpha_ - 1.0)) + 0.5);
    return static_cast<std::uint64_t>(std::clamp(x, edge, 1e15));
}

PowerLawFit ks_pvalue(std::span<const std::uint64_t> sample, const PowerLawFit& fit, std::size_t replicates,
                      std::uint64_t seed, unsigned workers) {
    if (replicates < 1) throw PowerLawError(PowerLawError::Kind::InvalidArgument, "ks_pvalue: replicates must be >= 1");

    std::vector<std::uint64_t> below;
    for (auto x : sample) {
        if (x < fit.xmin) below.push_back(x);
    }
    std::sort(below.begin(), below.end());
    const std::size_t n = sample.size();
    const double tail_prob = static_cast<double>(n - below.size()) / static_cast<double>(n);
    const DiscretePowerLawSampler sampler(fit.alpha, fit.xmin);

    // 1 = replicate at least as far from its fit as the data, 2 = refit failed.
    std::vector<unsigned char> outcome(replicates, 0);
    parallel_for(replicates, workers, [&](std::size_t r) {
        Rng rng(seed + r);
        std::vector<std::uint64_t> draw(n);
        for (auto& x : draw) {
            if (below.empty() || rng.uniform() < tail_prob) {
                x = sampler.draw(rng.uniform());
            } else {
                x = below[rng.below(below.size())];
            }
        }
        try {
            outcome[r] = fit_discrete_power_law(draw).ks >= fit.ks ? 1 : 0;
        } catch (const PowerLawError&) {
            outcome[r] = 2;
        }
    });

    PowerLawFit result = fit;
    result.replicates = replicates;
    result.seed = seed;
    result.failed_replicates = static_cast<std::size_t>(std::count(outcome.begin(), outcome.end(), 2));
    const auto exceed = std::count(outcome.begin(), outcome.end(), 1);
    result.pvalue = static_cast<double>(exceed) / static_cast<double>(replicates);
    return result;
}

DegreeDistributionReport degree_distribution_report(const Graph& g, const DegreeFitOptions& options) {
    auto seqs = degrees(g);
    DegreeDistributionReport report;

    std::array<std::pair<const std::vector<std::size_t>*, DegreeFit*>, 3> parts = {{
        {&seqs.in, &report.in},
        {&seqs.out, &report.out},
        {&seqs.total, &report.total},
    }};
    constexpr std::array<const char*, 3> names = {"in-degree", "out-degree", "total-degree"};

    std::array<std::vector<std::uint64_t>, 3> nonzero;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto d : *parts[i].first) {
            ++parts[i].second->histogram[d];
            if (d > 0) nonzero[i].push_back(d);
        }
        if (nonzero[i].size() < options.min_nonzero)
            throw PowerLawError(PowerLawError::Kind::TooFewValues,
                                std::string(names[i]) + ": only " + std::to_string(nonzero[i].size()) +
                                    " nonzero values, need " + std::to_string(options.min_nonzero));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& entry = *parts[i].second;
        try {
            auto fit = fit_discrete_power_law(nonzero[i]);
            if (options.replicates > 0) fit = ks_pvalue(nonzero[i], fit, options.replicates, options.seed, options.workers);
            entry.fit = fit;
        } catch (const PowerLawError& e) {
            entry.error = e.what();
        }
    }
    return report;
}

void write_histogram(const DegreeHistogram& h, std::ostream& os) {
    for (const auto& [degree, count] : h) os << degree << '\t' << count << '\n';
}

}  // namespace wsnet
