#include "wardsim/stats.hpp"

#include <algorithm>
#include <cmath>

#include "wardsim/errors.hpp"

namespace wardsim {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw parameter_error("EmpiricalDistribution requires at least one sample");
    }
    std::sort(samples_.begin(), samples_.end());
}

double wasserstein(const EmpiricalDistribution& u, const EmpiricalDistribution& v) {
    const auto& a = u.samples();
    const auto& b = v.samples();
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());

    double distance = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    double prev = 0.0;
    bool first = true;
    while (i < a.size() || j < b.size()) {
        double x;
        if (i < a.size() && (j >= b.size() || a[i] <= b[j])) {
            x = a[i];
        } else {
            x = b[j];
        }
        if (!first) {
            const double fa = static_cast<double>(i) / na;
            const double fb = static_cast<double>(j) / nb;
            distance += std::abs(fa - fb) * (x - prev);
        }
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        prev = x;
        first = false;
    }
    return distance;
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw parameter_error("quantile of empty sample");
    if (q < 0.0 || q > 1.0) throw parameter_error("quantile level must be in [0, 1]");
    if (sorted.size() == 1) return sorted[0];
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

SummaryStats summary_stats(std::span<const double> samples) {
    if (samples.empty()) throw parameter_error("summary_stats of empty sample");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    double sum = 0.0;
    for (double x : sorted) sum += x;
    const double mean = sum / static_cast<double>(sorted.size());

    double ss = 0.0;
    for (double x : sorted) ss += (x - mean) * (x - mean);

    SummaryStats stats;
    stats.n = sorted.size();
    stats.mean = mean;
    stats.std = std::sqrt(ss / static_cast<double>(sorted.size()));
    stats.min = sorted.front();
    stats.q25 = quantile_sorted(sorted, 0.25);
    stats.median = quantile_sorted(sorted, 0.5);
    stats.q75 = quantile_sorted(sorted, 0.75);
    stats.max = sorted.back();
    return stats;
}

} // namespace wardsim
