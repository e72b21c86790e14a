#pragma once

#include <map>
#include <string>
#include <vector>

namespace stabreg {

// Uniform result container: a verdict, key/value metadata, free-form text
// sections, and one optional table. Rendering is deterministic; the only
// non-reproducible field is wall_time_ms, which render() emits last so that
// reports are byte-identical modulo that line.
class Report {
public:
    explicit Report(std::string kind) : kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

    bool passed() const { return passed_; }
    void set_passed(bool v) { passed_ = v; }

    void meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }
    void line(const std::string& text) { lines_.push_back(text); }

    void table_header(std::vector<std::string> cols) { header_ = std::move(cols); }
    void table_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    void set_wall_time_ms(double ms) { wall_ms_ = ms; }

    std::string render_text() const;
    std::string render_table() const;   // tab-separated, header first

private:
    std::string kind_;
    bool passed_ = true;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> lines_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    double wall_ms_ = -1.0;
};

inline const char* kVersion = "0.1.0";

} // namespace stabreg
