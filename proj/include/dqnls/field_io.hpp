#pragma once

#include <filesystem>

#include "dqnls/grid.hpp"

namespace dqnls {

// Binary field format, little-endian:
//   magic "DQF1", u32 version = 1, u64 n, f64 L, f64 t, u8 side (0 = position,
//   1 = frequency), then n pairs of f64 (re, im).
void dump_field(const ComplexField& f, double t, const std::filesystem::path& path);

struct LoadedField {
  ComplexField field;
  double t = 0.0;
};

// Throws std::runtime_error on magic/version mismatch or when the payload size
// disagrees with the header (message names expected vs actual byte counts).
LoadedField load_field(const std::filesystem::path& path);

}  // namespace dqnls
