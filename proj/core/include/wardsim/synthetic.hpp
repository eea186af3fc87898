#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wardsim/spells.hpp"

namespace wardsim {

/// Per-cluster generator settings. Rates are in days; probabilities in [0,1].
struct ClusterProfile {
    double mean_los = 5.0;
    double mean_interarrival = 1.0;
    double female_prob = 0.5;
    double mean_episodes = 2.0;    // >= 1 after the draw
    double mean_consultants = 1.5; // >= 1 after the draw
    double mean_wards = 1.5;       // >= 1 after the draw
    double mean_cci = 5.0;
    // None, PR, SN, Both; normalised internally.
    std::array<double, 4> intervention_probs{0.7, 0.24, 0.04, 0.02};
    std::map<std::string, double> ltc_probs;
    std::map<std::string, double> icd_category_means;
};

struct SyntheticConfig {
    std::size_t n_spells = 10861;
    std::vector<double> cluster_weights; // must sum to 1
    std::vector<ClusterProfile> clusters;
    double patient_pool_factor = 0.48; // patients ~ factor x spells
    int max_wimd_rank = 1909;
    std::uint64_t seed = 0;

    void validate() const; // throws parameter_error
};

/// Four-cluster configuration mimicking the published population profile:
/// weights ~ (9.91, 19.27, 69.39, 1.44)% and mean stays of
/// (25.30, 6.46, 4.11, 75.36) days.
SyntheticConfig default_synthetic_config();

SyntheticConfig load_synthetic_config(const std::filesystem::path& path);
void save_synthetic_config(const std::filesystem::path& path, const SyntheticConfig& config);

/// Generates exactly n_spells records. Cluster membership is drawn from
/// cluster_weights; each cluster's admissions form a Poisson process with the
/// configured mean gap; stays are exponential (clamped at zero). Identical
/// config and seed give bit-identical output.
std::vector<SpellRecord> generate_synthetic(const SyntheticConfig& config);

} // namespace wardsim
