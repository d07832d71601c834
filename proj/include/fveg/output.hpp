#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "fveg/grid.hpp"
#include "fveg/state.hpp"

namespace fveg {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plot-ready snapshot: a header line (time nx ny dx g) followed by one row
/// per cell (x1 x2 h H b v1 v2), 17 significant digits throughout.
void write_snapshot(const std::filesystem::path& file, const CartesianGrid& g,
                    const Bathymetry& bathy, const ConservedState& u,
                    double eps_h);

struct Snapshot {
  double time = 0.0;
  int nx = 0, ny = 0;
  double dx = 0.0, g = 0.0;
  std::vector<std::array<double, 7>> rows;  // x1 x2 h H b v1 v2
};

Snapshot read_snapshot(const std::filesystem::path& file);

/// Gage series collector: one (t, H - H0) row per sample, one file per gage.
/// Values are bilinear in the four surrounding cell centers.
class GageRecorder {
 public:
  GageRecorder() = default;
  GageRecorder(std::vector<std::array<double, 2>> positions,
               double reference_surface)
      : pos_(std::move(positions)), h0_(reference_surface) {
    series_.resize(pos_.size());
  }

  void sample(const CartesianGrid& g, const Bathymetry& bathy,
              const ConservedState& u, double t);
  void write(const std::filesystem::path& dir) const;
  std::size_t count() const { return pos_.size(); }

 private:
  std::vector<std::array<double, 2>> pos_;
  double h0_ = 0.0;
  std::vector<std::vector<std::array<double, 2>>> series_;
};

/// Per-step history rows (t, volume, min_h) as delimited text.
void write_history(const std::filesystem::path& file,
                   const std::vector<std::array<double, 3>>& rows);

}  // namespace fveg
