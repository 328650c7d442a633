#include "misfit/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "misfit/errors.hpp"

namespace misfit {

std::uint64_t file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("file_checksum: cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            h ^= std::uint64_t(static_cast<unsigned char>(buf[i]));
            h *= 1099511628211ull;
        }
    }
    return h;
}

void RunManifest::add_output(const std::string& path) {
    outputs.emplace_back(path, file_checksum(path));
}

void RunManifest::write(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("manifest: cannot open " + tmp);
        out << "command = " << command << "\n";
        out << "seed = " << seed << "\n";
        out << "wall_seconds = " << wall_seconds << "\n";
        for (const auto& [k, v] : config.entries())
            out << "config." << k << " = " << v << "\n";
        for (const auto& [p, sum] : outputs) {
            out << "output = " << p << "\n";
            out << "checksum." << p << " = " << sum << "\n";
        }
        if (!out) throw IoError("manifest: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("manifest: rename to " + path + " failed");
}

}  // namespace misfit
