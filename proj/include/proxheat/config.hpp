#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Minimal key-value config format shared by scenario files and material
// databases:
//
//   # comment
//   key = value
//   [section]
//   other_key = 1.5e3
//
// Sections may repeat (used for material databases). Parse errors and
// unknown keys are reported with file/line identification.

namespace proxheat {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigEntry {
    std::string value;
    int line = 0;
};

struct ConfigSection {
    std::string name; // empty for the top-level section
    int line = 0;
    std::vector<std::pair<std::string, ConfigEntry>> entries;

    bool has(const std::string& key) const;
    const ConfigEntry* find(const std::string& key) const;
};

struct ParsedConfig {
    std::string source; // file name or label, used in error messages
    std::vector<ConfigSection> sections; // sections[0] is the top level

    const ConfigSection* find_section(const std::string& name) const;
    std::vector<const ConfigSection*> find_all(const std::string& name) const;
};

ParsedConfig parse_config_text(const std::string& text, const std::string& source);
ParsedConfig parse_config_file(const std::string& path);

/// Typed accessor over one section that records which keys were consumed,
/// so unconsumed (unknown) keys can be rejected with their line numbers.
class SectionReader {
  public:
    SectionReader(const ParsedConfig& cfg, const ConfigSection& section);

    std::optional<double> get_number(const std::string& key);
    std::optional<std::string> get_string(const std::string& key);
    double require_number(const std::string& key);
    std::string require_string(const std::string& key);

    /// Throws ConfigError listing any keys never requested.
    void reject_unknown() const;

    const std::string& source() const { return source_; }
    int section_line() const { return section_line_; }
    const std::string& section_name() const { return name_; }

  private:
    std::string source_;
    std::string name_;
    int section_line_;
    const ConfigSection& section_;
    std::map<std::string, bool> consumed_;
};

} // namespace proxheat
