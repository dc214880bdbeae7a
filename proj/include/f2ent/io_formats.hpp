#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "f2ent/spin_sector.hpp"
#include "f2ent/toy_model.hpp"
#include "f2ent/wavefunction.hpp"

namespace f2ent {

inline constexpr std::string_view kVersion = "0.1.0";

/// FNV-1a over the raw config text; stamped into every output so results can
/// be traced back to the exact inputs that produced them.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string version_stamp(std::uint64_t config_hash) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "# f2ent %s config_fnv1a=%016llx",
                std::string(kVersion).c_str(),
                static_cast<unsigned long long>(config_hash));
  return buf;
}

namespace detail {

inline std::ofstream open_text(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void write_exact(std::ofstream& out, const void* p, std::size_t n) {
  out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

inline void read_exact(std::ifstream& in, void* p, std::size_t n) {
  in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (!in) throw std::runtime_error("truncated binary file");
}

}  // namespace detail

inline void write_toy_csv(const std::filesystem::path& path,
                          const std::vector<ToySweepRow>& rows,
                          std::uint64_t config_hash) {
  auto out = detail::open_text(path);
  out << version_stamp(config_hash) << '\n';
  out << "alpha,le_norm,vne_norm,le,vne\n";
  for (const auto& r : rows)
    out << detail::fmt(r.alpha) << ',' << detail::fmt(r.le_norm) << ','
        << detail::fmt(r.vne_norm) << ',' << detail::fmt(r.le) << ','
        << detail::fmt(r.vne) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

/// One snapshot of the entanglement record of a scattering run.
struct SeriesRow {
  double t_fs = 0.0;
  double le = 0.0;
  double vne = 0.0;
  double le_norm = 0.0;
  double vne_norm = 0.0;
  SpinConfig spin = SpinConfig::same_spin;
  double ek_mev = 0.0;
};

inline void write_series_csv(const std::filesystem::path& path,
                             const std::vector<SeriesRow>& rows,
                             std::uint64_t config_hash) {
  auto out = detail::open_text(path);
  out << version_stamp(config_hash) << '\n';
  out << "t_fs,le,vne,le_norm,vne_norm,spin,ek_mev\n";
  for (const auto& r : rows)
    out << detail::fmt(r.t_fs) << ',' << detail::fmt(r.le) << ','
        << detail::fmt(r.vne) << ',' << detail::fmt(r.le_norm) << ','
        << detail::fmt(r.vne_norm) << ',' << to_string(r.spin) << ','
        << detail::fmt(r.ek_mev) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

/// Wall-clock cost of the two entanglement measures at one snapshot.
struct TimingRow {
  double t_fs = 0.0;
  double le_seconds = 0.0;
  double vne_seconds = 0.0;
};

inline void write_timing_csv(const std::filesystem::path& path,
                             const std::vector<TimingRow>& rows,
                             std::uint64_t config_hash) {
  auto out = detail::open_text(path);
  out << version_stamp(config_hash) << '\n';
  out << "t_fs,le_seconds,vne_seconds\n";
  for (const auto& r : rows)
    out << detail::fmt(r.t_fs) << ',' << detail::fmt(r.le_seconds) << ','
        << detail::fmt(r.vne_seconds) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

/// OMG1: two-fermion coefficient matrix. Little-endian layout:
/// "OMG1", u32 dim, 8 reserved zero bytes, then dim*dim (re, im) f64 pairs
/// in row-major order.
inline void save_omega(const std::filesystem::path& path, const MatrixXcd& omega) {
  if (omega.rows() != omega.cols() || omega.rows() < 1)
    throw std::invalid_argument("coefficient matrix must be square");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write("OMG1", 4);
  const std::uint32_t dim = static_cast<std::uint32_t>(omega.rows());
  detail::write_exact(out, &dim, sizeof dim);
  const char zeros[8] = {};
  detail::write_exact(out, zeros, sizeof zeros);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j) {
      const double re = omega(i, j).real(), im = omega(i, j).imag();
      detail::write_exact(out, &re, sizeof re);
      detail::write_exact(out, &im, sizeof im);
    }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline MatrixXcd load_omega(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  detail::read_exact(in, magic, 4);
  if (std::string_view(magic, 4) != "OMG1")
    throw std::runtime_error(path.string() + " is not an OMG1 file");
  std::uint32_t dim = 0;
  detail::read_exact(in, &dim, sizeof dim);
  if (dim < 1 || dim > (1u << 16))
    throw std::runtime_error("implausible matrix dimension in " + path.string());
  char zeros[8];
  detail::read_exact(in, zeros, sizeof zeros);
  MatrixXcd omega(dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j) {
      double re = 0.0, im = 0.0;
      detail::read_exact(in, &re, sizeof re);
      detail::read_exact(in, &im, sizeof im);
      omega(i, j) = Complex(re, im);
    }
  return omega;
}

/// WF2P: two-particle amplitude checkpoint. Little-endian layout:
/// "WF2P", u32 nx, u32 ny, f64 dx, f64 dy, f64 time_fs, then M*M (re, im)
/// f64 pairs with the first site index varying slowest.
inline void save_wave2p(const std::filesystem::path& path, const WaveFn2P& psi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write("WF2P", 4);
  const std::uint32_t nx = static_cast<std::uint32_t>(psi.grid.nx);
  const std::uint32_t ny = static_cast<std::uint32_t>(psi.grid.ny);
  detail::write_exact(out, &nx, sizeof nx);
  detail::write_exact(out, &ny, sizeof ny);
  detail::write_exact(out, &psi.grid.dx, sizeof psi.grid.dx);
  detail::write_exact(out, &psi.grid.dy, sizeof psi.grid.dy);
  detail::write_exact(out, &psi.time_fs, sizeof psi.time_fs);
  const Eigen::Index m = psi.amp.rows();
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      const double re = psi.amp(a, b).real(), im = psi.amp(a, b).imag();
      detail::write_exact(out, &re, sizeof re);
      detail::write_exact(out, &im, sizeof im);
    }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline WaveFn2P load_wave2p(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  detail::read_exact(in, magic, 4);
  if (std::string_view(magic, 4) != "WF2P")
    throw std::runtime_error(path.string() + " is not a WF2P file");
  std::uint32_t nx = 0, ny = 0;
  detail::read_exact(in, &nx, sizeof nx);
  detail::read_exact(in, &ny, sizeof ny);
  WaveFn2P psi;
  psi.grid.nx = static_cast<int>(nx);
  psi.grid.ny = static_cast<int>(ny);
  detail::read_exact(in, &psi.grid.dx, sizeof psi.grid.dx);
  detail::read_exact(in, &psi.grid.dy, sizeof psi.grid.dy);
  detail::read_exact(in, &psi.time_fs, sizeof psi.time_fs);
  psi.grid.validate();
  const Eigen::Index m = static_cast<Eigen::Index>(psi.grid.size());
  psi.amp.resize(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      double re = 0.0, im = 0.0;
      detail::read_exact(in, &re, sizeof re);
      detail::read_exact(in, &im, sizeof im);
      psi.amp(a, b) = Complex(re, im);
    }
  return psi;
}

}  // namespace f2ent
