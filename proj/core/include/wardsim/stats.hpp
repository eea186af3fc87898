#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wardsim {

/// An empirical distribution over real values (days). Samples are stored
/// sorted ascending; construction from an empty vector is a contract error.
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(std::vector<double> samples);

    const std::vector<double>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double min() const noexcept { return samples_.front(); }
    double max() const noexcept { return samples_.back(); }

private:
    std::vector<double> samples_;
};

/// First Wasserstein distance between two empirical distributions, computed
/// exactly as the integral of |F - G| over the merged sample support. No
/// binning, so the value is reproducible bit for bit. Units follow the
/// samples (days here).
double wasserstein(const EmpiricalDistribution& u, const EmpiricalDistribution& v);

struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double std = 0.0; // population standard deviation
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

/// Mean, population std and quartiles (linear interpolation between order
/// statistics). Throws on empty input.
SummaryStats summary_stats(std::span<const double> samples);

/// Quantile of an ascending-sorted sample by linear interpolation.
double quantile_sorted(std::span<const double> sorted, double q);

} // namespace wardsim
