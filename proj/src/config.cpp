#include "bandlim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bandlim {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_') return false;
    }
    return k.front() != '.' && k.back() != '.';
}

// Flattens nested JSON objects into dotted keys. Scalar arrays become
// comma-joined strings so that get_list() sees the same shape as text configs.
void flatten_json(const nlohmann::json& j, const std::string& prefix,
                  std::map<std::string, std::string>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            flatten_json(it.value(), key, out);
        }
        return;
    }
    if (j.is_array()) {
        std::string joined;
        for (size_t i = 0; i < j.size(); ++i) {
            const auto& e = j[i];
            if (e.is_object() || e.is_array())
                throw ConfigError("arrays may only contain scalars", 0, prefix);
            if (i) joined += ",";
            joined += e.is_string() ? e.get<std::string>() : e.dump();
        }
        out[prefix] = joined;
        return;
    }
    if (j.is_string())
        out[prefix] = j.get<std::string>();
    else
        out[prefix] = j.dump();
}

} // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path, 0, "");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return from_json_text(text);
    return from_text(text);
}

Config Config::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("JSON parse failure: ") + e.what(), 0, "");
    }
    if (!j.is_object()) throw ConfigError("top-level JSON value must be an object", 0, "");
    std::map<std::string, std::string> flat;
    flatten_json(j, "", flat);
    Config cfg;
    for (const auto& [k, v] : flat) {
        if (!valid_key(k)) throw ConfigError("invalid key '" + k + "'", 0, k);
        cfg.kv_[k] = Entry{v, 0};
    }
    return cfg;
}

Config Config::from_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        // Inline comments start at an unquoted '#'; values here never contain '#'.
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno, "");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key))
            throw ConfigError("invalid key '" + key + "'", lineno, key);
        if (value.empty())
            throw ConfigError("empty value for '" + key + "'", lineno, key);
        if (cfg.kv_.count(key))
            throw ConfigError("duplicate key '" + key + "'", lineno, key);
        cfg.kv_[key] = Entry{value, lineno};
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return kv_.count(key) != 0; }

void Config::set(const std::string& key, const std::string& value) {
    kv_[key] = Entry{value, 0};
}

std::string Config::get_string(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key '" + key + "'", 0, key);
    return it->second.value;
}

std::string Config::get_string_or(const std::string& key, const std::string& def) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? def : it->second.value;
}

double Config::get_double(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key '" + key + "'", 0, key);
    const std::string& s = it->second.value;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
        throw ConfigError("expected a finite number, got '" + s + "'", it->second.line, key);
    return v;
}

double Config::get_double_or(const std::string& key, double def) const {
    return has(key) ? get_double(key) : def;
}

long Config::get_int(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key '" + key + "'", 0, key);
    const std::string& s = it->second.value;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("expected an integer, got '" + s + "'", it->second.line, key);
    return v;
}

long Config::get_int_or(const std::string& key, long def) const {
    return has(key) ? get_int(key) : def;
}

bool Config::get_bool_or(const std::string& key, bool def) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return def;
    const std::string& s = it->second.value;
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("expected a boolean, got '" + s + "'", it->second.line, key);
}

std::vector<double> Config::get_list(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key '" + key + "'", 0, key);
    try {
        return parse_number_list(it->second.value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), it->second.line, key);
    }
}

int Config::line_of(const std::string& key) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? 0 : it->second.line;
}

std::map<std::string, std::string> Config::entries() const {
    std::map<std::string, std::string> out;
    for (const auto& [k, e] : kv_) out[k] = e.value;
    return out;
}

std::vector<double> parse_number_list(const std::string& spec) {
    auto parse_range = [&](const std::string& body, const char* tag) {
        size_t colon = body.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument(std::string(tag) + " range needs the form " + tag + ":a:b");
        char* end = nullptr;
        long a = std::strtol(body.c_str(), &end, 10);
        if (end != body.c_str() + colon) throw std::invalid_argument("bad range bound in '" + body + "'");
        std::string rest = body.substr(colon + 1);
        long b = std::strtol(rest.c_str(), &end, 10);
        if (end == rest.c_str() || *end != '\0')
            throw std::invalid_argument("bad range bound in '" + body + "'");
        if (a > b || b - a > 60) throw std::invalid_argument("range a:b needs a <= b and b-a <= 60");
        return std::pair<long, long>{a, b};
    };
    if (spec.rfind("pow2:", 0) == 0) {
        auto [a, b] = parse_range(spec.substr(5), "pow2");
        std::vector<double> out;
        for (long e = a; e <= b; ++e) out.push_back(std::ldexp(1.0, static_cast<int>(e)));
        return out;
    }
    if (spec.rfind("dyadic:", 0) == 0) {
        auto [a, b] = parse_range(spec.substr(7), "dyadic");
        std::vector<double> out;
        for (long e = b; e >= a; --e) out.push_back(std::ldexp(1.0, static_cast<int>(-e)));
        return out;
    }
    std::vector<double> out;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw std::invalid_argument("empty element in list '" + spec + "'");
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
            throw std::invalid_argument("bad number '" + tok + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

} // namespace bandlim
