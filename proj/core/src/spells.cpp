#include "wardsim/spells.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "wardsim/delimited.hpp"
#include "wardsim/errors.hpp"

namespace wardsim {

namespace {

constexpr double kWindowDays = 365.0;
constexpr double kLosDerivationTolerance = 1e-9;

std::vector<std::string> split_codes(std::string_view joined) {
    std::vector<std::string> codes;
    std::size_t start = 0;
    while (start < joined.size()) {
        std::size_t pos = joined.find(';', start);
        if (pos == std::string_view::npos) pos = joined.size();
        if (pos > start) codes.emplace_back(joined.substr(start, pos - start));
        start = pos + 1;
    }
    return codes;
}

std::string join_codes(std::span<const std::string> codes) {
    std::string joined;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i > 0) joined += ';';
        joined += codes[i];
    }
    return joined;
}

int parse_count(std::string_view text, std::string_view what) {
    long long value = parse_integer(text);
    if (value < 0) {
        throw validation_error(std::string(what) + " must be nonnegative");
    }
    return static_cast<int>(value);
}

} // namespace

std::string_view to_string(Intervention intervention) noexcept {
    switch (intervention) {
    case Intervention::None: return "None";
    case Intervention::PR: return "PR";
    case Intervention::SN: return "SN";
    case Intervention::Both: return "Both";
    }
    return "None";
}

Intervention intervention_from_string(std::string_view text) {
    if (text == "None") return Intervention::None;
    if (text == "PR") return Intervention::PR;
    if (text == "SN") return Intervention::SN;
    if (text == "Both") return Intervention::Both;
    throw validation_error("unknown intervention: '" + std::string(text) + "'");
}

int SpellRecord::ltc_count() const noexcept {
    int count = 0;
    for (const auto& [name, flag] : ltc_flags) {
        (void)name;
        if (flag) ++count;
    }
    return count;
}

int SpellRecord::icd_count() const noexcept {
    int count = 0;
    for (const auto& [category, n] : icd_category_counts) {
        (void)category;
        count += n;
    }
    return count;
}

LoadResult load_spells(const std::filesystem::path& source, const ColumnSchema& schema) {
    Table table = read_delimited(source, schema.delimiter);

    auto require = [&](const std::string& name) {
        auto index = table.column_index(name);
        if (!index) throw schema_error("missing mandatory column: " + name);
        return *index;
    };
    const std::size_t col_patient = require(schema.patient_id);
    const std::size_t col_spell = require(schema.spell_id);
    const std::size_t col_admission = require(schema.admission);
    const std::size_t col_discharge = require(schema.discharge);

    const auto col_los = table.column_index(schema.los);
    const auto col_gender = table.column_index(schema.gender);
    const auto col_episodes = table.column_index(schema.n_episodes);
    const auto col_consultants = table.column_index(schema.n_consultants);
    const auto col_wards = table.column_index(schema.n_wards);
    const auto col_cci = table.column_index(schema.cci);
    const auto col_wimd = table.column_index(schema.wimd_rank);
    const auto col_intervention = table.column_index(schema.intervention);
    const auto col_copd = table.column_index(schema.copd_admissions);
    const auto col_cluster = table.column_index(schema.cluster_label);
    const auto col_codes = table.column_index(schema.icd_codes);

    std::vector<std::pair<std::string, std::size_t>> ltc_columns;
    std::vector<std::pair<std::string, std::size_t>> icd_columns;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const std::string& name = table.columns[i];
        if (name.starts_with(schema.ltc_prefix)) {
            ltc_columns.emplace_back(name.substr(schema.ltc_prefix.size()), i);
        } else if (name.starts_with(schema.icd_prefix)) {
            icd_columns.emplace_back(name.substr(schema.icd_prefix.size()), i);
        }
    }

    LoadResult result;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t row_number = r + 1;
        if (row.size() != table.columns.size()) {
            result.rejections.push_back({row_number, "wrong field count"});
            continue;
        }
        try {
            SpellRecord record;
            record.patient_id = row[col_patient];
            record.spell_id = row[col_spell];
            record.admission_time = parse_double(row[col_admission]);
            record.discharge_time = parse_double(row[col_discharge]);
            record.los = record.discharge_time - record.admission_time;
            if (record.los < kMinLengthOfStay) {
                throw validation_error("los below floor of " + format_double(kMinLengthOfStay));
            }
            if (col_los && !row[*col_los].empty()) {
                const double stated = parse_double(row[*col_los]);
                if (std::abs(stated - record.los) > kLosDerivationTolerance) {
                    throw validation_error("los column disagrees with discharge - admission");
                }
            }
            if (col_gender) record.gender = row[*col_gender];
            if (col_episodes && !row[*col_episodes].empty()) {
                record.n_episodes = parse_count(row[*col_episodes], "n_episodes");
            }
            if (col_consultants && !row[*col_consultants].empty()) {
                record.n_consultants = parse_count(row[*col_consultants], "n_consultants");
            }
            if (col_wards && !row[*col_wards].empty()) {
                record.n_wards = parse_count(row[*col_wards], "n_wards");
            }
            if (col_cci && !row[*col_cci].empty()) {
                record.cci = parse_count(row[*col_cci], "cci");
            }
            if (col_wimd && !row[*col_wimd].empty()) {
                record.wimd_rank = parse_count(row[*col_wimd], "wimd_rank");
                if (record.wimd_rank < 1) throw validation_error("wimd_rank must be positive");
            }
            if (col_intervention && !row[*col_intervention].empty()) {
                record.intervention = intervention_from_string(row[*col_intervention]);
            }
            if (col_copd && !row[*col_copd].empty()) {
                record.copd_admissions_last_year = parse_count(row[*col_copd], "copd_admissions");
            }
            if (col_cluster && !row[*col_cluster].empty()) {
                record.cluster_label = static_cast<int>(parse_integer(row[*col_cluster]));
            }
            if (col_codes && !row[*col_codes].empty()) {
                record.icd_codes = split_codes(row[*col_codes]);
            }
            for (const auto& [name, index] : ltc_columns) {
                if (row[index].empty()) continue;
                record.ltc_flags[name] = parse_integer(row[index]) != 0;
            }
            for (const auto& [name, index] : icd_columns) {
                if (row[index].empty()) continue;
                const int count = parse_count(row[index], "icd count");
                if (count > 0) record.icd_category_counts[name] = count;
            }
            result.records.push_back(std::move(record));
        } catch (const data_error& error) {
            result.rejections.push_back(
                {row_number, "row " + std::to_string(row_number) + ": " + error.what()});
        }
    }

    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const SpellRecord& a, const SpellRecord& b) {
                         return a.admission_time < b.admission_time;
                     });
    return result;
}

void write_spells(const std::filesystem::path& target, std::span<const SpellRecord> spells,
                  const ColumnSchema& schema) {
    std::set<std::string> ltc_names;
    std::set<std::string> icd_names;
    for (const auto& spell : spells) {
        for (const auto& [name, flag] : spell.ltc_flags) {
            (void)flag;
            ltc_names.insert(name);
        }
        for (const auto& [name, count] : spell.icd_category_counts) {
            (void)count;
            icd_names.insert(name);
        }
    }

    Table table;
    table.columns = {schema.patient_id,   schema.spell_id,    schema.admission,
                     schema.discharge,    schema.los,         schema.gender,
                     schema.n_episodes,   schema.n_consultants, schema.n_wards,
                     schema.cci,          schema.wimd_rank,   schema.intervention,
                     schema.copd_admissions, schema.cluster_label};
    for (const auto& name : ltc_names) table.columns.push_back(schema.ltc_prefix + name);
    for (const auto& name : icd_names) table.columns.push_back(schema.icd_prefix + name);
    table.columns.push_back(schema.icd_codes);

    table.rows.reserve(spells.size());
    for (const auto& spell : spells) {
        std::vector<std::string> row;
        row.reserve(table.columns.size());
        row.push_back(spell.patient_id);
        row.push_back(spell.spell_id);
        row.push_back(format_double(spell.admission_time));
        row.push_back(format_double(spell.discharge_time));
        row.push_back(format_double(spell.los));
        row.push_back(spell.gender);
        row.push_back(std::to_string(spell.n_episodes));
        row.push_back(std::to_string(spell.n_consultants));
        row.push_back(std::to_string(spell.n_wards));
        row.push_back(std::to_string(spell.cci));
        row.push_back(std::to_string(spell.wimd_rank));
        row.push_back(std::string(to_string(spell.intervention)));
        row.push_back(std::to_string(spell.copd_admissions_last_year));
        row.push_back(spell.cluster_label ? std::to_string(*spell.cluster_label) : "");
        for (const auto& name : ltc_names) {
            auto it = spell.ltc_flags.find(name);
            row.push_back(it != spell.ltc_flags.end() && it->second ? "1" : "0");
        }
        for (const auto& name : icd_names) {
            auto it = spell.icd_category_counts.find(name);
            row.push_back(std::to_string(it != spell.icd_category_counts.end() ? it->second : 0));
        }
        row.push_back(join_codes(spell.icd_codes));
        table.rows.push_back(std::move(row));
    }
    write_delimited(target, table, "wardsim-spells v1", schema.delimiter);
}

std::vector<SpellRecord> engineer_features(std::vector<SpellRecord> spells,
                                           const std::map<std::string, std::string>& icd_map) {
    // Per-patient admission history, ordered by admission time (input order
    // breaks ties, which keeps the operation idempotent).
    std::map<std::string, std::vector<std::size_t>> by_patient;
    for (std::size_t i = 0; i < spells.size(); ++i) {
        by_patient[spells[i].patient_id].push_back(i);
    }

    for (auto& [patient, indices] : by_patient) {
        (void)patient;
        std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
            return spells[a].admission_time < spells[b].admission_time;
        });
        for (std::size_t pos = 0; pos < indices.size(); ++pos) {
            const double t = spells[indices[pos]].admission_time;
            int count = 0;
            for (std::size_t prior = 0; prior < pos; ++prior) {
                const double earlier = spells[indices[prior]].admission_time;
                if (earlier > t - kWindowDays && earlier <= t) ++count;
            }
            spells[indices[pos]].copd_admissions_last_year = count;
        }
    }

    for (auto& spell : spells) {
        if (spell.icd_codes.empty()) continue;
        std::map<std::string, int> counts;
        for (const auto& code : spell.icd_codes) {
            auto it = icd_map.find(code);
            const std::string& category =
                it != icd_map.end() ? it->second : std::string(kUnmappedIcdCategory);
            ++counts[category];
        }
        spell.icd_category_counts = std::move(counts);
    }
    return spells;
}

std::map<std::string, std::string> load_icd_map(const std::filesystem::path& path,
                                                char delimiter) {
    Table table = read_delimited(path, delimiter);
    auto code = table.column_index("code");
    auto category = table.column_index("category");
    if (!code) throw schema_error("missing mandatory column: code");
    if (!category) throw schema_error("missing mandatory column: category");

    std::map<std::string, std::string> map;
    for (const auto& row : table.rows) {
        map[row[*code]] = row[*category];
    }
    return map;
}

} // namespace wardsim
