#include "fveg/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fveg {

namespace {

std::FILE* open_for_write(const std::filesystem::path& file) {
  std::FILE* f = std::fopen(file.string().c_str(), "w");
  if (!f) throw IoError("cannot open '" + file.string() + "' for writing");
  return f;
}

}  // namespace

void write_snapshot(const std::filesystem::path& file, const CartesianGrid& g,
                    const Bathymetry& bathy, const ConservedState& u,
                    double eps_h) {
  std::FILE* f = open_for_write(file);
  std::fprintf(f, "%.17g %d %d %.17g %.17g\n", u.time, g.nx, g.ny, g.dx,
               bathy.gravity);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double h = u.h(i, j);
      const double b = bathy.b_cell(i, j);
      const double v1 = (h >= eps_h) ? u.hv1(i, j) / h : 0.0;
      const double v2 = (h >= eps_h) ? u.hv2(i, j) / h : 0.0;
      std::fprintf(f, "%.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                   g.cell_center_x(i), g.cell_center_y(j), h, h + b, b, v1,
                   v2);
    }
  if (std::fclose(f) != 0) throw IoError("write failed: " + file.string());
}

Snapshot read_snapshot(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open '" + file.string() + "'");
  Snapshot s;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty snapshot " + file.string());
  {
    std::istringstream hs(line);
    if (!(hs >> s.time >> s.nx >> s.ny >> s.dx >> s.g))
      throw IoError("bad snapshot header in " + file.string());
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::array<double, 7> row{};
    for (double& v : row)
      if (!(rs >> v)) throw IoError("bad snapshot row in " + file.string());
    s.rows.push_back(row);
  }
  return s;
}

void GageRecorder::sample(const CartesianGrid& g, const Bathymetry& bathy,
                          const ConservedState& u, double t) {
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    const double fx = (pos_[k][0] - g.origin[0]) / g.dx - 0.5;
    const double fy = (pos_[k][1] - g.origin[1]) / g.dx - 0.5;
    int i = static_cast<int>(std::floor(fx));
    int j = static_cast<int>(std::floor(fy));
    i = std::clamp(i, 0, g.nx - 2);
    j = std::clamp(j, 0, g.ny - 2);
    const double ax = std::clamp(fx - i, 0.0, 1.0);
    const double ay = std::clamp(fy - j, 0.0, 1.0);
    auto surface = [&](int ii, int jj) {
      return u.h(ii, jj) + bathy.b_cell(ii, jj);
    };
    const double H = (1 - ax) * (1 - ay) * surface(i, j) +
                     ax * (1 - ay) * surface(i + 1, j) +
                     (1 - ax) * ay * surface(i, j + 1) +
                     ax * ay * surface(i + 1, j + 1);
    series_[k].push_back({t, H - h0_});
  }
}

void GageRecorder::write(const std::filesystem::path& dir) const {
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    std::FILE* f = open_for_write(dir / ("gage_" + std::to_string(k + 1) +
                                         ".dat"));
    for (const auto& row : series_[k])
      std::fprintf(f, "%.17g %.17g\n", row[0], row[1]);
    if (std::fclose(f) != 0) throw IoError("write failed in " + dir.string());
  }
}

void write_history(const std::filesystem::path& file,
                   const std::vector<std::array<double, 3>>& rows) {
  std::FILE* f = open_for_write(file);
  for (const auto& r : rows)
    std::fprintf(f, "%.17g %.17g %.17g\n", r[0], r[1], r[2]);
  if (std::fclose(f) != 0) throw IoError("write failed: " + file.string());
}

}  // namespace fveg
