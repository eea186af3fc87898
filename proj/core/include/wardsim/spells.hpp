#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wardsim {

/// Negative lengths of stay occur in administrative data (death before
/// arrival); anything below this floor is treated as corruption.
inline constexpr double kMinLengthOfStay = -1.0;

enum class Intervention { None, PR, SN, Both };

std::string_view to_string(Intervention intervention) noexcept;
Intervention intervention_from_string(std::string_view text); // throws validation_error

/// One administrative hospital spell. Timestamps are fractional days from an
/// arbitrary epoch; `los` is always `discharge_time - admission_time`.
struct SpellRecord {
    std::string patient_id;
    std::string spell_id;
    double admission_time = 0.0;
    double discharge_time = 0.0;
    std::string gender;
    int n_episodes = 1;
    int n_consultants = 1;
    int n_wards = 1;
    int cci = 0;
    std::map<std::string, bool> ltc_flags;
    int wimd_rank = 1;
    Intervention intervention = Intervention::None;
    std::map<std::string, int> icd_category_counts;
    std::vector<std::string> icd_codes; // raw codes, if the source carries them
    double los = 0.0;
    int copd_admissions_last_year = 0; // engineered
    std::optional<int> cluster_label;

    int ltc_count() const noexcept;
    int icd_count() const noexcept;
};

/// Maps logical spell fields to the column names of a concrete export.
/// Defaults match the files this library writes itself.
struct ColumnSchema {
    char delimiter = ',';
    std::string patient_id = "patient_id";
    std::string spell_id = "spell_id";
    std::string admission = "admission_time";
    std::string discharge = "discharge_time";
    std::string los = "los";
    std::string gender = "gender";
    std::string n_episodes = "n_episodes";
    std::string n_consultants = "n_consultants";
    std::string n_wards = "n_wards";
    std::string cci = "cci";
    std::string wimd_rank = "wimd_rank";
    std::string intervention = "intervention";
    std::string copd_admissions = "copd_admissions_last_year";
    std::string cluster_label = "cluster_label";
    std::string icd_codes = "icd_codes";
    std::string ltc_prefix = "ltc:";
    std::string icd_prefix = "icd:";
};

struct RowRejection {
    std::size_t row = 0; // 1-based data row index, header excluded
    std::string reason;
};

struct LoadResult {
    std::vector<SpellRecord> records; // admission-time order
    std::vector<RowRejection> rejections;
};

/// Loads spell records from a delimited file. Mandatory columns are the two
/// ids plus admission and discharge; a missing one is a schema error naming
/// the column. Bad rows (unparsable values, los below the floor) are rejected
/// and reported, never silently dropped.
LoadResult load_spells(const std::filesystem::path& source, const ColumnSchema& schema = {});

/// Writes records with a stable column order; load_spells round-trips the
/// output bit-identically.
void write_spells(const std::filesystem::path& target, std::span<const SpellRecord> spells,
                  const ColumnSchema& schema = {});

/// Recomputes the engineered attributes: the count of the patient's prior
/// admissions inside a 365-day window (exclusive of the spell itself), and
/// ICD category counts from raw codes via `icd_map` (unknown codes land in
/// "UNMAPPED"). Records without raw codes keep their existing counts.
/// Idempotent; input order is preserved.
std::vector<SpellRecord> engineer_features(std::vector<SpellRecord> spells,
                                           const std::map<std::string, std::string>& icd_map = {});

inline constexpr std::string_view kUnmappedIcdCategory = "UNMAPPED";

/// Reads a two-column (code,category) delimited file into an ICD map.
std::map<std::string, std::string> load_icd_map(const std::filesystem::path& path,
                                                char delimiter = ',');

} // namespace wardsim
