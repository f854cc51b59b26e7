#include "proxheat/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace proxheat {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

bool ConfigSection::has(const std::string& key) const { return find(key) != nullptr; }

const ConfigEntry* ConfigSection::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

const ConfigSection* ParsedConfig::find_section(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<const ConfigSection*> ParsedConfig::find_all(const std::string& name) const {
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections)
        if (s.name == name) out.push_back(&s);
    return out;
}

ParsedConfig parse_config_text(const std::string& text, const std::string& source) {
    ParsedConfig cfg;
    cfg.source = source;
    cfg.sections.push_back(ConfigSection{"", 0, {}});

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(source, lineno, "unterminated section header '" + line + "'");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) fail(source, lineno, "empty section name");
            cfg.sections.push_back(ConfigSection{name, lineno, {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(source, lineno, "expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(source, lineno, "missing key before '='");
        if (value.empty()) fail(source, lineno, "missing value for key '" + key + "'");
        ConfigSection& sec = cfg.sections.back();
        if (sec.has(key))
            fail(source, lineno, "duplicate key '" + key + "'" +
                                     (sec.name.empty() ? "" : " in [" + sec.name + "]"));
        sec.entries.emplace_back(key, ConfigEntry{value, lineno});
    }
    return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

SectionReader::SectionReader(const ParsedConfig& cfg, const ConfigSection& section)
    : source_(cfg.source), name_(section.name), section_line_(section.line), section_(section) {}

std::optional<std::string> SectionReader::get_string(const std::string& key) {
    consumed_[key] = true;
    const ConfigEntry* e = section_.find(key);
    if (!e) return std::nullopt;
    return e->value;
}

std::optional<double> SectionReader::get_number(const std::string& key) {
    consumed_[key] = true;
    const ConfigEntry* e = section_.find(key);
    if (!e) return std::nullopt;
    const std::string& v = e->value;
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        fail(source_, e->line, "key '" + key + "': expected a number, got '" + v + "'");
    return x;
}

std::string SectionReader::require_string(const std::string& key) {
    auto v = get_string(key);
    if (!v)
        fail(source_, section_line_, "missing required key '" + key + "'" +
                                         (name_.empty() ? "" : " in [" + name_ + "]"));
    return *v;
}

double SectionReader::require_number(const std::string& key) {
    auto v = get_number(key);
    if (!v)
        fail(source_, section_line_, "missing required key '" + key + "'" +
                                         (name_.empty() ? "" : " in [" + name_ + "]"));
    return *v;
}

void SectionReader::reject_unknown() const {
    for (const auto& [key, entry] : section_.entries) {
        if (!consumed_.count(key))
            fail(source_, entry.line, "unknown key '" + key + "'" +
                                          (name_.empty() ? "" : " in [" + name_ + "]"));
    }
}

} // namespace proxheat
