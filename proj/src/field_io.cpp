#include "dqnls/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dqnls {

static_assert(std::endian::native == std::endian::little,
              "field format is little-endian; big-endian hosts need byte swaps");

namespace {

constexpr char magic[4] = {'D', 'Q', 'F', '1'};
constexpr std::uint32_t format_version = 1;

template <typename T>
void put(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is, const char* what) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error(std::string("load_field: truncated ") + what);
  return v;
}

}  // namespace

void dump_field(const ComplexField& f, double t, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("dump_field: cannot open " + path.string());
  os.write(magic, 4);
  put(os, format_version);
  put(os, static_cast<std::uint64_t>(f.grid.n));
  put(os, f.grid.half_width);
  put(os, t);
  put(os, static_cast<std::uint8_t>(f.side == Side::position ? 0 : 1));
  for (const cplx& v : f.values) {
    put(os, v.real());
    put(os, v.imag());
  }
  if (!os) throw std::runtime_error("dump_field: write failed for " + path.string());
}

LoadedField load_field(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_field: cannot open " + path.string());
  char m[4];
  is.read(m, 4);
  if (!is || std::memcmp(m, magic, 4) != 0)
    throw std::runtime_error("load_field: bad magic (expected DQF1)");
  const auto version = get<std::uint32_t>(is, "version");
  if (version != format_version)
    throw std::runtime_error("load_field: incompatible version " + std::to_string(version) +
                             " (expected " + std::to_string(format_version) + ")");
  const auto n = get<std::uint64_t>(is, "size");
  const auto L = get<double>(is, "half width");
  const auto t = get<double>(is, "time");
  const auto side = get<std::uint8_t>(is, "side");
  if (side > 1) throw std::runtime_error("load_field: bad side tag");

  LoadedField out;
  out.t = t;
  out.field.grid = make_grid(n, L);
  out.field.side = side == 0 ? Side::position : Side::frequency;
  out.field.values.resize(n);
  const std::streamsize want = static_cast<std::streamsize>(n) * 16;
  is.read(reinterpret_cast<char*>(out.field.values.data()), want);
  if (is.gcount() != want)
    throw std::runtime_error("load_field: payload truncated (expected " +
                             std::to_string(want) + " bytes, got " +
                             std::to_string(is.gcount()) + ")");
  return out;
}

}  // namespace dqnls
