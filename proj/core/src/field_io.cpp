#include "misfit/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "misfit/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field format is little-endian; big-endian hosts unsupported");

namespace misfit {

namespace {
constexpr std::size_t kHeaderBytes = 32;
}

void write_field(const ScalarField& f, const std::string& path) {
    std::ostringstream hdr;
    hdr << "MCF1 " << f.grid.dim << " " << f.grid.n[0] << " " << f.grid.n[1];
    if (f.grid.dim == 3) hdr << " " << f.grid.n[2];
    std::string h = hdr.str();
    if (h.size() + 1 > kHeaderBytes) throw IoError("field header overflow for " + path);
    h.append(kHeaderBytes - 1 - h.size(), ' ');
    h.push_back('\n');

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open field file for writing: " + path);
    out.write(h.data(), std::streamsize(h.size()));
    out.write(reinterpret_cast<const char*>(f.values.data()),
              std::streamsize(f.values.size() * sizeof(double)));
    if (!out) throw IoError("write failure: " + path);
}

ScalarField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open field file: " + path);
    char hdr[kHeaderBytes];
    in.read(hdr, kHeaderBytes);
    if (!in || hdr[kHeaderBytes - 1] != '\n')
        throw IoError("bad field header in " + path);
    std::istringstream hs(std::string(hdr, kHeaderBytes));
    std::string magic;
    int dim = 0;
    std::array<int, 3> n{0, 0, 1};
    hs >> magic >> dim >> n[0] >> n[1];
    if (dim == 3) hs >> n[2];
    if (magic != "MCF1" || !hs) throw IoError("bad field header in " + path);
    GridSpec g(dim, n);
    ScalarField f(g);
    in.read(reinterpret_cast<char*>(f.values.data()),
            std::streamsize(f.values.size() * sizeof(double)));
    if (!in) throw IoError("truncated field data in " + path);
    return f;
}

}  // namespace misfit
