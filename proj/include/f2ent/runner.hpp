#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <vector>

#include "f2ent/analysis.hpp"
#include "f2ent/initial_states.hpp"
#include "f2ent/io_formats.hpp"
#include "f2ent/propagator.hpp"
#include "f2ent/run_config.hpp"
#include "f2ent/runner_threads.hpp"
#include "f2ent/spin_sector.hpp"

namespace f2ent {

/// Command-line level knobs shared by all run modes.
struct RunOptions {
  std::filesystem::path out_dir = ".";
  int threads = 1;
  int snapshots = 0;  ///< >0 re-derives the snapshot stride from the step count
};

namespace detail {

inline void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir))
    throw ConfigError("cannot create output directory " + dir.string());
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

inline void apply_thread_count(int threads) {
  const int n = threads > 0 ? threads : 1;
  init_fft_threads(n);
  set_blas_threads(n);
}

inline std::filesystem::path run_toy_sweep(const ToySweepSettings& settings,
                                           const RunOptions& opts,
                                           std::uint64_t config_hash) {
  settings.validate();
  detail::prepare_out_dir(opts.out_dir);
  const std::vector<ToySweepRow> rows =
      sweep_alpha(settings.n_pairs, settings.alpha_points);
  const auto path = opts.out_dir / "toy_sweep.csv";
  write_toy_csv(path, rows, config_hash);
  return path;
}

namespace detail {

inline int effective_stride(const ScatteringConfig& sim, int snapshots_override) {
  if (snapshots_override <= 0) return sim.snapshot_stride;
  return std::max(1, sim.n_steps / snapshots_override);
}

inline WaveFn2P starting_state(const ScatterRunSettings& settings, double& t_offset,
                               int& steps_remaining) {
  const ScatteringConfig& sim = settings.sim;
  t_offset = 0.0;
  steps_remaining = sim.n_steps;
  if (settings.resume_from.empty()) {
    const WaveFn1P packet = gaussian_packet(sim.grid, sim.units, sim.packet);
    const WaveFn1P bound = ho_ground_state(sim.grid, sim.units, sim.trap.hbar_omega,
                                           sim.trap.cx, sim.trap.cy);
    return product_initial(packet, bound);
  }
  WaveFn2P psi = load_wave2p(settings.resume_from);
  if (!(psi.grid == sim.grid))
    throw ConfigError("checkpoint grid does not match the configured grid");
  t_offset = psi.time_fs;
  const int steps_done = static_cast<int>(std::llround(psi.time_fs / sim.dt));
  steps_remaining = std::max(0, sim.n_steps - steps_done);
  psi.time_fs = 0.0;
  return psi;
}

}  // namespace detail

/// Propagates the configured collision and records the entanglement of every
/// requested spin arrangement at each snapshot. Writes series.csv (and
/// optional checkpoints / final coefficient dumps) into out_dir.
inline std::filesystem::path run_scatter(const ScatterRunSettings& settings,
                                         const RunOptions& opts,
                                         std::uint64_t config_hash) {
  settings.validate();
  detail::prepare_out_dir(opts.out_dir);
  apply_thread_count(opts.threads);

  ScatteringConfig sim = settings.sim;
  sim.snapshot_stride = detail::effective_stride(settings.sim, opts.snapshots);
  if (settings.checkpoint_every > 0 &&
      settings.checkpoint_every % sim.snapshot_stride != 0)
    throw ConfigError("checkpoint_every must be a multiple of the snapshot stride");

  double t_offset = 0.0;
  int steps_remaining = 0;
  WaveFn2P psi = detail::starting_state(settings, t_offset, steps_remaining);
  sim.n_steps = steps_remaining;

  const int n_pairs = static_cast<int>(sim.grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SeriesRow> rows;

  const Snapshot2PCallback on_snapshot = [&](const WaveFn2P& snap, int step) {
    const double t = t_offset + snap.time_fs;
    const SpatialBlocks blocks = split_exchange(snap);
    for (SpinConfig spin : settings.spins) {
      SeriesRow row;
      row.t_fs = t;
      row.spin = spin;
      row.ek_mev = sim.packet.ek_mev;
      if (settings.with_vne) {
        const SpinEntropies e = spin_entropies(blocks, spin);
        row.le = e.le;
        row.vne = e.vne;
        row.vne_norm = normalized_vne(e.vne, n_pairs);
      } else {
        row.le = spin_linear_entropy(blocks, spin);
        row.vne = nan;
        row.vne_norm = nan;
      }
      row.le_norm = normalized_le(row.le, n_pairs);
      rows.push_back(row);
      std::cerr << "t=" << row.t_fs << " fs " << to_string(spin) << " le=" << row.le
                << " vne=" << row.vne << '\n';
    }
    if (settings.checkpoint_every > 0 && step > 0 &&
        step % settings.checkpoint_every == 0) {
      WaveFn2P stamped = snap;
      stamped.time_fs = t;
      save_wave2p(opts.out_dir / ("checkpoint_" + std::to_string(std::llround(t)) +
                                  "fs.wf2p"),
                  stamped);
    }
    if (settings.dump_omega == "final" && step == sim.n_steps)
      for (SpinConfig spin : settings.spins)
        save_omega(opts.out_dir / (std::string("omega_") + to_string(spin) + ".omg1"),
                   build_spin_omega(blocks, spin).m);
  };

  propagate(std::move(psi), sim, on_snapshot);
  const auto path = opts.out_dir / "series.csv";
  write_series_csv(path, rows, config_hash);
  return path;
}

/// Runs the collision once for the exchange-antisymmetric arrangement and
/// times both entanglement measures at every snapshot. Writes series.csv and
/// timing.csv into out_dir.
inline std::filesystem::path run_compare(const ScatterRunSettings& settings,
                                         const RunOptions& opts,
                                         std::uint64_t config_hash) {
  settings.validate();
  detail::prepare_out_dir(opts.out_dir);
  apply_thread_count(opts.threads);

  ScatteringConfig sim = settings.sim;
  sim.snapshot_stride = detail::effective_stride(settings.sim, opts.snapshots);

  double t_offset = 0.0;
  int steps_remaining = 0;
  WaveFn2P psi = detail::starting_state(settings, t_offset, steps_remaining);
  sim.n_steps = steps_remaining;

  const int n_pairs = static_cast<int>(sim.grid.size());
  std::vector<SeriesRow> rows;
  std::vector<TimingRow> timings;

  const Snapshot2PCallback on_snapshot = [&](const WaveFn2P& snap, int) {
    const SpatialBlocks blocks = split_exchange(snap);

    const auto t0 = std::chrono::steady_clock::now();
    const double le = spin_linear_entropy(blocks, SpinConfig::same_spin);
    const double le_seconds = detail::seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const SpinEntropies both = spin_entropies(blocks, SpinConfig::same_spin);
    const double vne_seconds = detail::seconds_since(t1);

    SeriesRow row;
    row.t_fs = t_offset + snap.time_fs;
    row.le = le;
    row.vne = both.vne;
    row.le_norm = normalized_le(le, n_pairs);
    row.vne_norm = normalized_vne(both.vne, n_pairs);
    row.spin = SpinConfig::same_spin;
    row.ek_mev = sim.packet.ek_mev;
    rows.push_back(row);
    timings.push_back({row.t_fs, le_seconds, vne_seconds});
    std::cerr << "t=" << row.t_fs << " fs le=" << row.le << " (" << le_seconds
              << " s) vne=" << row.vne << " (" << vne_seconds << " s)\n";
  };

  propagate(std::move(psi), sim, on_snapshot);
  write_series_csv(opts.out_dir / "series.csv", rows, config_hash);
  const auto path = opts.out_dir / "timing.csv";
  write_timing_csv(path, timings, config_hash);
  return path;
}

}  // namespace f2ent
