#ifndef MOTKIT_CONFIG_HPP
#define MOTKIT_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace mot {

// Flat key-value configuration ("section.key = value"). Values are stored as
// strings; typed getters fall back to the built-in default table, which
// carries the published threshold values (tau_s=0.2, tau_a=0.6, T=8, M=100,
// K=0.3F, tau_i=0.2F, tau_t=2F).
class RunConfig {
public:
    RunConfig();

    // Parse a config file; later sources override earlier ones.
    void load_file(const std::string& path);
    // Apply a single "key=value" override (command-line flag form).
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;

    // Fully resolved configuration (defaults merged with overrides), sorted by key.
    std::string dump() const;

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, std::string> defaults_;
};

}  // namespace mot

#endif
