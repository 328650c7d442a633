#pragma once

#include <string>

#include "misfit/grid.hpp"

namespace misfit {

/// Field file format: a 32-byte space-padded ASCII header line
/// "MCF1 dim nx ny [nz]\n" followed by little-endian 64-bit floats,
/// row-major.
void write_field(const ScalarField& f, const std::string& path);
ScalarField read_field(const std::string& path);

}  // namespace misfit
