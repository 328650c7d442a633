#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "misfit/config.hpp"

namespace misfit {

/// FNV-1a 64-bit hash of a file's bytes.
std::uint64_t file_checksum(const std::string& path);

/// Reproducibility record written atomically at the end of every run.
struct RunManifest {
    std::string command;
    Config config;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::vector<std::pair<std::string, std::uint64_t>> outputs;  // (path, checksum)

    void add_output(const std::string& path);
    /// Write key = value text to `path` via a temp file + rename.
    void write(const std::string& path) const;
};

}  // namespace misfit
