#include "wardsim/features.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "wardsim/errors.hpp"

namespace wardsim {

namespace {

constexpr double kConstantStdThreshold = 1e-12;

double numeric_field(const SpellRecord& spell, const std::string& name) {
    if (name == "los") return spell.los;
    if (name == "n_episodes") return spell.n_episodes;
    if (name == "n_consultants") return spell.n_consultants;
    if (name == "n_wards") return spell.n_wards;
    if (name == "cci") return spell.cci;
    if (name == "wimd_rank") return spell.wimd_rank;
    if (name == "copd_admissions_last_year") return spell.copd_admissions_last_year;
    if (name == "icd_total") return spell.icd_count();
    if (name.starts_with("icd:")) {
        auto it = spell.icd_category_counts.find(name.substr(4));
        return it != spell.icd_category_counts.end() ? it->second : 0.0;
    }
    throw parameter_error("unknown numeric feature: " + name);
}

std::string categorical_field(const SpellRecord& spell, const std::string& name) {
    if (name == "gender") return spell.gender;
    if (name == "intervention") return std::string(to_string(spell.intervention));
    if (name.starts_with("ltc:")) {
        auto it = spell.ltc_flags.find(name.substr(4));
        return it != spell.ltc_flags.end() && it->second ? "1" : "0";
    }
    throw parameter_error("unknown categorical feature: " + name);
}

} // namespace

FeatureSpec default_feature_spec(std::span<const SpellRecord> spells) {
    FeatureSpec spec;
    spec.numeric = {"los",  "n_episodes", "n_consultants",
                    "n_wards", "cci",     "wimd_rank",
                    "copd_admissions_last_year", "icd_total"};
    spec.categorical = {"gender", "intervention"};
    std::set<std::string> ltc_names;
    for (const auto& spell : spells) {
        for (const auto& [name, flag] : spell.ltc_flags) {
            (void)flag;
            ltc_names.insert(name);
        }
    }
    for (const auto& name : ltc_names) spec.categorical.push_back("ltc:" + name);
    return spec;
}

FeatureMatrix build_features(std::span<const SpellRecord> spells, const FeatureSpec& spec) {
    if (spells.empty()) throw parameter_error("build_features requires at least one spell");
    if (spec.numeric.empty() && spec.categorical.empty()) {
        throw parameter_error("feature spec selects no columns");
    }

    FeatureMatrix matrix;
    matrix.n_rows = spells.size();
    matrix.row_index.reserve(spells.size());
    for (const auto& spell : spells) matrix.row_index.push_back(spell.spell_id);

    matrix.numeric_names = spec.numeric;
    for (const auto& name : spec.numeric) {
        std::vector<double> raw;
        raw.reserve(spells.size());
        for (const auto& spell : spells) raw.push_back(numeric_field(spell, name));

        double sum = 0.0;
        for (double x : raw) sum += x;
        const double mean = sum / static_cast<double>(raw.size());
        double ss = 0.0;
        for (double x : raw) ss += (x - mean) * (x - mean);
        const double std_dev = std::sqrt(ss / static_cast<double>(raw.size()));

        std::vector<double> standardised(raw.size(), 0.0);
        const bool constant = std_dev <= kConstantStdThreshold;
        if (!constant) {
            for (std::size_t i = 0; i < raw.size(); ++i) {
                standardised[i] = (raw[i] - mean) / std_dev;
            }
        }
        matrix.numeric_raw.push_back(std::move(raw));
        matrix.numeric_std.push_back(std::move(standardised));
        matrix.constant_numeric.push_back(constant);
    }

    matrix.categorical_names = spec.categorical;
    for (const auto& name : spec.categorical) {
        std::vector<std::string> values;
        values.reserve(spells.size());
        for (const auto& spell : spells) values.push_back(categorical_field(spell, name));

        std::set<std::string> level_set(values.begin(), values.end());
        std::vector<std::string> levels(level_set.begin(), level_set.end());

        std::vector<int> codes;
        codes.reserve(values.size());
        for (const auto& value : values) {
            const auto it = std::lower_bound(levels.begin(), levels.end(), value);
            codes.push_back(static_cast<int>(it - levels.begin()));
        }
        matrix.categorical_levels.push_back(std::move(levels));
        matrix.categorical_codes.push_back(std::move(codes));
    }
    return matrix;
}

} // namespace wardsim
