#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcorr/sphere_avg.hpp"

namespace qcorr {

/// Rectangular numeric table plus the effective configuration that produced
/// it; the configuration is echoed into every output file.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

/// Locale-independent, 17 significant digits.
std::string format_double(double v);

/// '#'-prefixed meta lines, then a header row, then data rows.
std::string to_csv(const Table& table);
std::string to_json(const Table& table);

struct FigureOptions {
  QuadratureSpec quad{};
  /// Points along the sweep axis (or per axis for the 2-d figures);
  /// 0 picks the figure's default.
  int grid_points = 0;
};

/// Data tables behind the line and surface plots:
///   1: double-sphere averaged mutual information vs kappa for the
///      single-axis and isotropic families
///   2: average figure of merit vs average gain, parametric in kappa
///   3: relative class gaps of gain and figure of merit vs kappa
///   4: pure-state averages vs the Schmidt coefficient
///   5: optimized-protocol averages over the (kappa, b) plane
///   6: standard-minus-optimized average figure of merit over (kappa, b)
Table figure_table(int id, const FigureOptions& opts = {});

}  // namespace qcorr
