#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dgc/problem.hpp"

namespace dgc {

/// Dense (time index, node) array over a contiguous range of time indices.
class TimeGridArray {
 public:
  TimeGridArray() = default;
  TimeGridArray(int k_min, int k_max, int n_nodes)
      : k_min_(k_min),
        k_max_(k_max),
        n_(n_nodes),
        v_(static_cast<std::size_t>(k_max - k_min + 1) * n_nodes, 0.0) {}

  std::span<double> row(int k) {
    return {v_.data() + static_cast<std::size_t>(k - k_min_) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const double> row(int k) const {
    return {v_.data() + static_cast<std::size_t>(k - k_min_) * n_, static_cast<std::size_t>(n_)};
  }

  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }
  int n_nodes() const { return n_; }
  int n_rows() const { return k_max_ - k_min_ + 1; }
  const std::vector<double>& raw() const { return v_; }
  std::vector<double>& raw() { return v_; }

 private:
  int k_min_ = 0;
  int k_max_ = -1;
  int n_ = 0;
  std::vector<double> v_;
};

/// History datum on (-h, 0): rows k = -m_delay .. -1.
using History = TimeGridArray;

/// Control field on (0, T): rows k = 0 .. M, masked to the control window.
using ControlField = TimeGridArray;

/// Forward solution including the history segment: rows k = -m_delay .. M.
struct Trajectory {
  TimeGridArray values;
  Grid grid;
  BcKind bc_kind = BcKind::DirichletBoth;

  std::span<const double> row(int k) const { return values.row(k); }

  /// One row per time step with a grid-metadata header.
  void write_csv(std::ostream& os) const;

  /// Compact dump: magic "DGC1", then N, M, m_delay as little-endian u32,
  /// then all rows (k = -m_delay..M) as little-endian float64.
  void write_binary(std::ostream& os) const;
};

/// Reads back the binary dump format (grid metadata beyond N/M/m_delay is
/// not stored and is left at defaults).
Trajectory read_trajectory_binary(std::istream& is);

/// Backward (adjoint) solution: rows w(k), k = 0..M, with the terminal datum
/// in row M. `half` holds the intermediate states of the transposed one-step
/// maps (k = 0..M-1); the exact duality pairings are built from them.
struct AdjointTrajectory {
  TimeGridArray w;
  TimeGridArray half;
  Grid grid;
  BcKind bc_kind = BcKind::DirichletBoth;

  std::span<const double> row(int k) const { return w.row(k); }

  void write_csv(std::ostream& os) const;
};

/// The delayed-state slice z(t, s, .) = y(t + s, .), s in [-h, 0]:
/// m_delay + 1 rows of the trajectory ending at time t.
struct HistoryView {
  double t = 0.0;
  std::vector<std::span<const double>> rows;
};

/// Extracts z(t, ., .) for an on-grid time t. Throws OffGridTime otherwise.
HistoryView history_view(const Trajectory& traj, double t);

}  // namespace dgc
