#pragma once

#include <span>
#include <string>
#include <vector>

#include "wardsim/spells.hpp"

namespace wardsim {

/// Which spell attributes enter the clustering. Numeric names: los,
/// n_episodes, n_consultants, n_wards, cci, wimd_rank,
/// copd_admissions_last_year, icd_total, or icd:<category>. Categorical
/// names: gender, intervention, or ltc:<name>.
struct FeatureSpec {
    std::vector<std::string> numeric;
    std::vector<std::string> categorical;
};

/// The attribute set used throughout: utilisation and clinical numerics plus
/// gender, intervention status and every long-term-condition flag present.
FeatureSpec default_feature_spec(std::span<const SpellRecord> spells);

/// Mixed-type design matrix, column-major. Numeric columns keep the raw
/// values alongside z-scored copies; constant columns are flagged and their
/// standardised copy is all zeros. Categorical levels are sorted, so codes
/// are deterministic and mode ties can break lexicographically.
struct FeatureMatrix {
    std::size_t n_rows = 0;
    std::vector<std::string> numeric_names;
    std::vector<std::vector<double>> numeric_raw;
    std::vector<std::vector<double>> numeric_std;
    std::vector<bool> constant_numeric;
    std::vector<std::string> categorical_names;
    std::vector<std::vector<std::string>> categorical_levels; // per column, sorted
    std::vector<std::vector<int>> categorical_codes;
    std::vector<std::string> row_index; // spell_id per row
};

FeatureMatrix build_features(std::span<const SpellRecord> spells, const FeatureSpec& spec);

} // namespace wardsim
