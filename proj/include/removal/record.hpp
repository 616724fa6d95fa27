#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "removal/int128.hpp"
#include "removal/rational.hpp"

namespace removal {

/// Seeded, reproducible result row.  Replaying command+seed reproduces the
/// JSON bit-for-bit apart from wall_millis; reals are serialized with 17
/// significant digits, rationals stay exact as "num/den" strings.
class ExperimentRecord {
public:
    ExperimentRecord(std::string command, std::uint64_t seed);

    void param(const std::string& key, const std::string& value);
    void param_int(const std::string& key, std::uint64_t value);
    void out_int(const std::string& key, std::uint64_t value);
    void out_int128(const std::string& key, u128 value);
    void out_rational(const std::string& key, const Rational& value);
    void out_real(const std::string& key, double value);
    void out_bool(const std::string& key, bool value);
    void out_text(const std::string& key, const std::string& value);

    void set_wall_millis(std::uint64_t ms) { wall_millis_ = ms; }

    std::string to_json() const;  // stable key order
    std::string summary() const;  // the one-line stdout report

    // Writes <command>.json (and <command>.csv when csv rows were added)
    // into out_dir; returns the JSON path.
    std::string write(const std::string& out_dir) const;

    void csv_header(const std::vector<std::string>& columns);
    void csv_row(const std::vector<std::string>& cells);
    bool has_csv() const { return !csv_columns_.empty(); }
    std::string csv_text() const;

    static std::string format_real(double v);  // %.17g

private:
    std::string command_;
    std::uint64_t seed_;
    std::uint64_t wall_millis_ = 0;
    std::vector<std::pair<std::string, std::string>> params_;   // raw JSON values
    std::vector<std::pair<std::string, std::string>> outputs_;  // raw JSON values
    std::vector<std::string> csv_columns_;
    std::vector<std::vector<std::string>> csv_rows_;
};

// flag > REMOVAL_LAB_OUT > "out"
std::string resolve_out_dir(const std::string& flag_value);

}  // namespace removal
