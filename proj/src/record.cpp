#include "removal/record.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "removal/errors.hpp"

namespace removal {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

ExperimentRecord::ExperimentRecord(std::string command, std::uint64_t seed)
    : command_(std::move(command)), seed_(seed) {}

void ExperimentRecord::param(const std::string& key, const std::string& value) {
    params_.emplace_back(key, quoted(value));
}

void ExperimentRecord::param_int(const std::string& key, std::uint64_t value) {
    params_.emplace_back(key, std::to_string(value));
}

void ExperimentRecord::out_int(const std::string& key, std::uint64_t value) {
    outputs_.emplace_back(key, std::to_string(value));
}

void ExperimentRecord::out_int128(const std::string& key, u128 value) {
    if (value <= static_cast<u128>(UINT64_MAX))
        out_int(key, static_cast<std::uint64_t>(value));
    else
        outputs_.emplace_back(key, quoted(to_string(value)));
}

void ExperimentRecord::out_rational(const std::string& key, const Rational& value) {
    outputs_.emplace_back(key, quoted(value.str()));
}

std::string ExperimentRecord::format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ExperimentRecord::out_real(const std::string& key, double value) {
    outputs_.emplace_back(key, format_real(value));
}

void ExperimentRecord::out_bool(const std::string& key, bool value) {
    outputs_.emplace_back(key, value ? "true" : "false");
}

void ExperimentRecord::out_text(const std::string& key, const std::string& value) {
    outputs_.emplace_back(key, quoted(value));
}

std::string ExperimentRecord::to_json() const {
    std::string j = "{\n";
    j += "  \"command\": " + quoted(command_) + ",\n";
    j += "  \"seed\": " + std::to_string(seed_) + ",\n";
    j += "  \"params\": {";
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) j += ",";
        j += "\n    " + quoted(params_[i].first) + ": " + params_[i].second;
    }
    j += params_.empty() ? "},\n" : "\n  },\n";
    j += "  \"outputs\": {";
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
        if (i) j += ",";
        j += "\n    " + quoted(outputs_[i].first) + ": " + outputs_[i].second;
    }
    j += outputs_.empty() ? "},\n" : "\n  },\n";
    j += "  \"wall_millis\": " + std::to_string(wall_millis_) + "\n";
    j += "}\n";
    return j;
}

std::string ExperimentRecord::summary() const {
    std::string s = command_ + ": ";
    for (std::size_t i = 0; i < outputs_.size() && i < 6; ++i) {
        if (i) s += " ";
        s += outputs_[i].first + "=" + outputs_[i].second;
    }
    if (outputs_.size() > 6) s += " ...";
    return s;
}

void ExperimentRecord::csv_header(const std::vector<std::string>& columns) {
    csv_columns_ = columns;
}

void ExperimentRecord::csv_row(const std::vector<std::string>& cells) {
    csv_rows_.push_back(cells);
}

std::string ExperimentRecord::csv_text() const {
    std::string out;
    for (std::size_t i = 0; i < csv_columns_.size(); ++i) {
        if (i) out += ",";
        out += csv_columns_[i];
    }
    out += "\n";
    for (const auto& row : csv_rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

std::string ExperimentRecord::write(const std::string& out_dir) const {
    std::filesystem::create_directories(out_dir);
    std::string json_path = out_dir + "/" + command_ + ".json";
    {
        std::ofstream f(json_path);
        if (!f) throw ValidationError("cannot write " + json_path);
        f << to_json();
    }
    if (has_csv()) {
        std::string csv_path = out_dir + "/" + command_ + ".csv";
        std::ofstream f(csv_path);
        if (!f) throw ValidationError("cannot write " + csv_path);
        f << csv_text();
    }
    return json_path;
}

std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("REMOVAL_LAB_OUT"); env && *env) return env;
    return "out";
}

}  // namespace removal
