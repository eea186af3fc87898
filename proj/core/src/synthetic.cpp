#include "wardsim/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "wardsim/delimited.hpp"
#include "wardsim/errors.hpp"
#include "wardsim/rng.hpp"

namespace wardsim {

namespace {

using nlohmann::json;

constexpr std::uint64_t kLabelStream = 1;
constexpr std::uint64_t kArrivalStream = 2;
constexpr std::uint64_t kAttributeStream = 3;
constexpr std::uint64_t kPatientStream = 4;

constexpr double kWeightSumTolerance = 1e-12;

ClusterProfile profile_from_json(const json& j, const ClusterProfile& base) {
    ClusterProfile profile = base;
    profile.mean_los = j.value("mean_los", profile.mean_los);
    profile.mean_interarrival = j.value("mean_interarrival", profile.mean_interarrival);
    profile.female_prob = j.value("female_prob", profile.female_prob);
    profile.mean_episodes = j.value("mean_episodes", profile.mean_episodes);
    profile.mean_consultants = j.value("mean_consultants", profile.mean_consultants);
    profile.mean_wards = j.value("mean_wards", profile.mean_wards);
    profile.mean_cci = j.value("mean_cci", profile.mean_cci);
    if (j.contains("intervention_probs")) {
        auto probs = j.at("intervention_probs").get<std::vector<double>>();
        if (probs.size() != 4) {
            throw parameter_error("intervention_probs must have 4 entries (None, PR, SN, Both)");
        }
        std::copy(probs.begin(), probs.end(), profile.intervention_probs.begin());
    }
    if (j.contains("ltc_probs")) {
        profile.ltc_probs = j.at("ltc_probs").get<std::map<std::string, double>>();
    }
    if (j.contains("icd_category_means")) {
        profile.icd_category_means =
            j.at("icd_category_means").get<std::map<std::string, double>>();
    }
    return profile;
}

json profile_to_json(const ClusterProfile& profile) {
    json j;
    j["mean_los"] = profile.mean_los;
    j["mean_interarrival"] = profile.mean_interarrival;
    j["female_prob"] = profile.female_prob;
    j["mean_episodes"] = profile.mean_episodes;
    j["mean_consultants"] = profile.mean_consultants;
    j["mean_wards"] = profile.mean_wards;
    j["mean_cci"] = profile.mean_cci;
    j["intervention_probs"] = profile.intervention_probs;
    j["ltc_probs"] = profile.ltc_probs;
    j["icd_category_means"] = profile.icd_category_means;
    return j;
}

} // namespace

void SyntheticConfig::validate() const {
    if (cluster_weights.empty()) throw parameter_error("cluster_weights must not be empty");
    if (cluster_weights.size() != clusters.size()) {
        throw parameter_error("cluster_weights and clusters must have the same length");
    }
    double sum = 0.0;
    for (double w : cluster_weights) {
        if (w < 0.0) throw parameter_error("cluster weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw parameter_error("cluster_weights must sum to 1, got " + format_double(sum));
    }
    for (const auto& profile : clusters) {
        if (profile.mean_los <= 0.0) throw parameter_error("mean_los must be positive");
        if (profile.mean_interarrival <= 0.0) {
            throw parameter_error("mean_interarrival must be positive");
        }
    }
    if (patient_pool_factor <= 0.0 || patient_pool_factor > 1.0) {
        throw parameter_error("patient_pool_factor must be in (0, 1]");
    }
    if (max_wimd_rank < 1) throw parameter_error("max_wimd_rank must be positive");
}

SyntheticConfig default_synthetic_config() {
    // Published percentages (9.91, 19.27, 69.39, 1.44) add up to 100.01 after
    // rounding; normalise so the weights satisfy the sum-to-one contract.
    std::vector<double> weights{0.0991, 0.1927, 0.6939, 0.0144};
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;

    SyntheticConfig config;
    config.n_spells = 10861;
    config.cluster_weights = weights;
    config.clusters.resize(4);

    const std::array<double, 4> mean_los{25.30, 6.46, 4.11, 75.36};
    // Overall arrival rate of roughly 3.68 spells/day split by weight.
    const std::array<double, 4> mean_gap{2.742, 1.410, 0.3916, 18.87};
    const std::array<double, 4> mean_cci{9.0, 20.0, 4.0, 18.0};
    const std::array<double, 4> mean_episodes{2.5, 2.0, 1.5, 4.0};
    const std::array<double, 4> mean_consultants{2.0, 2.0, 1.5, 3.0};
    const std::array<double, 4> mean_wards{1.8, 1.5, 1.3, 2.5};
    const std::array<std::array<double, 4>, 4> intervention{{
        {0.8020, 0.1580, 0.0381, 0.0019},
        {0.8342, 0.1343, 0.0287, 0.0029},
        {0.6576, 0.2797, 0.0463, 0.0163},
        {0.8974, 0.0897, 0.0128, 0.0000},
    }};
    const std::array<std::pair<std::string, std::array<double, 4>>, 8> ltcs{{
        {"pulmonary", {1.0000, 1.0000, 1.0000, 1.0000}},
        {"diabetes", {0.1905, 0.2814, 0.1484, 0.2500}},
        {"ami", {0.1385, 0.2293, 0.0876, 0.1603}},
        {"chf", {0.1245, 0.5385, 0.0000, 0.2628}},
        {"renal", {0.0753, 0.1954, 0.0192, 0.1795}},
        {"cancer", {0.0762, 0.1223, 0.0293, 0.1090}},
        {"dementia", {0.0688, 0.2126, 0.0000, 0.2692}},
        {"cva", {0.0864, 0.1333, 0.0070, 0.1987}},
    }};
    // Category means chosen so the per-cluster totals echo the published
    // median ICD counts (9, 8, 5, 11).
    const std::array<std::pair<std::string, std::array<double, 4>>, 4> icds{{
        {"respiratory", {3.0, 3.0, 2.0, 4.0}},
        {"circulatory", {2.5, 2.5, 1.0, 3.0}},
        {"endocrine", {1.0, 1.2, 0.5, 1.5}},
        {"other", {2.5, 1.3, 1.5, 2.5}},
    }};

    for (std::size_t k = 0; k < 4; ++k) {
        ClusterProfile& profile = config.clusters[k];
        profile.mean_los = mean_los[k];
        profile.mean_interarrival = mean_gap[k];
        profile.female_prob = 0.5;
        profile.mean_episodes = mean_episodes[k];
        profile.mean_consultants = mean_consultants[k];
        profile.mean_wards = mean_wards[k];
        profile.mean_cci = mean_cci[k];
        profile.intervention_probs = intervention[k];
        for (const auto& [name, probs] : ltcs) profile.ltc_probs[name] = probs[k];
        for (const auto& [name, means] : icds) profile.icd_category_means[name] = means[k];
    }
    return config;
}

SyntheticConfig load_synthetic_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open config: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& error) {
        throw data_error("invalid JSON in " + path.string() + ": " + error.what());
    }

    SyntheticConfig config = default_synthetic_config();
    config.n_spells = j.value("n_spells", config.n_spells);
    config.patient_pool_factor = j.value("patient_pool_factor", config.patient_pool_factor);
    config.max_wimd_rank = j.value("max_wimd_rank", config.max_wimd_rank);
    config.seed = j.value("seed", config.seed);
    if (j.contains("cluster_weights")) {
        config.cluster_weights = j.at("cluster_weights").get<std::vector<double>>();
    }
    if (j.contains("clusters")) {
        const auto& entries = j.at("clusters");
        if (!entries.is_array()) throw parameter_error("clusters must be an array");
        config.clusters.clear();
        for (const auto& entry : entries) {
            config.clusters.push_back(profile_from_json(entry, ClusterProfile{}));
        }
    }
    config.validate();
    return config;
}

void save_synthetic_config(const std::filesystem::path& path, const SyntheticConfig& config) {
    json j;
    j["n_spells"] = config.n_spells;
    j["cluster_weights"] = config.cluster_weights;
    j["patient_pool_factor"] = config.patient_pool_factor;
    j["max_wimd_rank"] = config.max_wimd_rank;
    j["seed"] = config.seed;
    j["clusters"] = json::array();
    for (const auto& profile : config.clusters) {
        j["clusters"].push_back(profile_to_json(profile));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write config: " + path.string());
    out << j.dump(2) << '\n';
}

std::vector<SpellRecord> generate_synthetic(const SyntheticConfig& config) {
    config.validate();
    const std::size_t n_clusters = config.clusters.size();

    RandomStream label_rng(derive_seed(config.seed, kLabelStream));
    RandomStream patient_rng(derive_seed(config.seed, kPatientStream));

    std::vector<std::size_t> counts(n_clusters, 0);
    std::vector<int> labels(config.n_spells);
    for (std::size_t i = 0; i < config.n_spells; ++i) {
        const std::size_t k = label_rng.discrete(config.cluster_weights);
        labels[i] = static_cast<int>(k);
        ++counts[k];
    }

    const std::size_t pool_size = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::llround(config.patient_pool_factor * static_cast<double>(config.n_spells))));

    struct Pending {
        double admission;
        int cluster;
        std::size_t sequence;
        SpellRecord record;
    };
    std::vector<Pending> pending;
    pending.reserve(config.n_spells);

    for (std::size_t k = 0; k < n_clusters; ++k) {
        const ClusterProfile& profile = config.clusters[k];
        RandomStream arrival_rng(derive_seed(config.seed, kArrivalStream, k));
        RandomStream attr_rng(derive_seed(config.seed, kAttributeStream, k));

        double t = 0.0;
        for (std::size_t i = 0; i < counts[k]; ++i) {
            t += arrival_rng.exponential_mean(profile.mean_interarrival);

            SpellRecord record;
            record.admission_time = t;
            record.los = std::max(0.0, attr_rng.exponential_mean(profile.mean_los));
            record.discharge_time = record.admission_time + record.los;
            record.gender = attr_rng.bernoulli(profile.female_prob) ? "F" : "M";
            record.n_episodes = 1 + attr_rng.poisson(std::max(0.0, profile.mean_episodes - 1.0));
            record.n_consultants =
                1 + attr_rng.poisson(std::max(0.0, profile.mean_consultants - 1.0));
            record.n_wards = 1 + attr_rng.poisson(std::max(0.0, profile.mean_wards - 1.0));
            record.cci = attr_rng.poisson(profile.mean_cci);
            record.wimd_rank = static_cast<int>(
                attr_rng.integer(static_cast<std::uint64_t>(config.max_wimd_rank)) + 1);
            record.intervention = static_cast<Intervention>(
                attr_rng.discrete(std::span<const double>(profile.intervention_probs)));
            for (const auto& [name, prob] : profile.ltc_probs) {
                record.ltc_flags[name] = attr_rng.bernoulli(prob);
            }
            for (const auto& [name, mean] : profile.icd_category_means) {
                const int count = attr_rng.poisson(mean);
                if (count > 0) record.icd_category_counts[name] = count;
            }
            const std::size_t patient = patient_rng.integer(pool_size);
            record.patient_id = "P" + std::to_string(patient);
            record.cluster_label = static_cast<int>(k);

            pending.push_back({t, static_cast<int>(k), i, std::move(record)});
        }
    }

    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
        if (a.admission != b.admission) return a.admission < b.admission;
        if (a.cluster != b.cluster) return a.cluster < b.cluster;
        return a.sequence < b.sequence;
    });

    std::vector<SpellRecord> spells;
    spells.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        pending[i].record.spell_id = "S" + std::to_string(i + 1);
        spells.push_back(std::move(pending[i].record));
    }
    return spells;
}

} // namespace wardsim
