#pragma once

#include <map>
#include <string>

namespace misfit {

/// Flat key-value configuration: one `key = value` per line, `#` comments.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_str(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double def) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long def) const;

    void set(const std::string& key, const std::string& value);

    const std::map<std::string, std::string>& entries() const { return entries_; }
    std::string to_string() const;

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace misfit
