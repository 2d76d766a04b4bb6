#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandlim {

// Configuration problem with a location: the 1-based line for text configs
// (0 when unknown, e.g. missing keys or JSON input) and the dotted field name.
struct ConfigError : std::runtime_error {
    int line;
    std::string field;
    ConfigError(const std::string& msg, int line_, std::string field_)
        : std::runtime_error(msg), line(line_), field(std::move(field_)) {}
};

// Flat dotted-key -> string view of a config. Two accepted syntaxes:
// a line-oriented "a.b.c = value" format with # comments, and JSON (nested
// objects flatten to dotted keys, arrays of scalars join with commas). The
// format is sniffed from the first non-space character.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_text(const std::string& text);
    static Config from_json_text(const std::string& text);

    bool has(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double def) const;
    long get_int(const std::string& key) const;
    long get_int_or(const std::string& key, long def) const;
    bool get_bool_or(const std::string& key, bool def) const;
    std::vector<double> get_list(const std::string& key) const;

    int line_of(const std::string& key) const;
    std::map<std::string, std::string> entries() const;

private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> kv_;
};

// Numeric grid shorthand: "1,2,4" literal; "pow2:a:b" for 2^a..2^b;
// "dyadic:a:b" for {2^-b, ..., 2^-a} (ascending).
std::vector<double> parse_number_list(const std::string& spec);

} // namespace bandlim
