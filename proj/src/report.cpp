#include "qcorr/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qcorr/bloch.hpp"
#include "qcorr/mutual_info.hpp"
#include "qcorr/rsp.hpp"

namespace qcorr {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

void echo_quad(Table& t, const QuadratureSpec& q) {
  t.meta.emplace_back("quad_theta", std::to_string(q.n_theta));
  t.meta.emplace_back("quad_phi", std::to_string(q.n_phi));
}

Table figure_mi_vs_kappa(const FigureOptions& opts) {
  const int n = opts.grid_points > 0 ? opts.grid_points : 21;
  Table t;
  t.columns = {"kappa", "avg_mi_classical", "avg_mi_isotropic"};
  for (double k : linspace(0.0, 1.0, n))
    t.rows.push_back({k, avg_mi_classical(k), avg_mi_isotropic(k)});
  return t;
}

std::vector<double> interior_kappa_grid(int n) {
  // Default matches 0.025 .. 0.975 in steps of 0.025.
  if (n <= 0) n = 39;
  return linspace(0.025, 0.975, n);
}

Table figure_f_vs_gain(const FigureOptions& opts) {
  Table t;
  t.columns = {"kappa", "avg_F_isotropic", "avg_gain_isotropic", "avg_F_classical",
               "avg_gain_classical"};
  for (double k : interior_kappa_grid(opts.grid_points))
    t.rows.push_back(
        {k, avg_f_isotropic(k), avg_gain_isotropic(k), avg_f_classical(k), avg_gain_classical(k)});
  return t;
}

Table figure_class_gaps(const FigureOptions& opts) {
  Table t;
  t.columns = {"kappa", "delta_gain", "delta_F"};
  for (double k : interior_kappa_grid(opts.grid_points)) {
    const double dg = (avg_gain_classical(k) - avg_gain_isotropic(k)) / avg_gain_isotropic(k);
    const double df = (avg_f_classical(k) - avg_f_isotropic(k)) / avg_f_isotropic(k);
    t.rows.push_back({k, dg, df});
  }
  return t;
}

Table figure_pure_states(const FigureOptions& opts) {
  const int n = opts.grid_points > 0 ? opts.grid_points : 51;
  Table t;
  t.columns = {"lambda", "avg_F", "avg_gain_useful"};
  for (double lam : linspace(0.0, 1.0, n)) {
    const auto avg = average_over_relevant(TwoQubitState::pure_schmidt(lam), opts.quad);
    t.rows.push_back({lam, avg.f_u, avg.gain});
  }
  echo_quad(t, opts.quad);
  return t;
}

Table figure_kappa_b_plane(int id, const FigureOptions& opts) {
  const int n = opts.grid_points > 0 ? opts.grid_points : 20;
  Table t;
  if (id == 5)
    t.columns = {"kappa", "b", "avg_F_opt", "avg_gain_useful"};
  else
    t.columns = {"kappa", "b", "delta_avg_F"};
  for (int i = 0; i < n; ++i) {
    const double kappa = (i + 0.5) * kSqrt3 / n;
    for (int j = 0; j < n; ++j) {
      const double b = (j + 0.5) / n;
      const auto state = TwoQubitState::isotropic_with_b(kappa, b, /*force=*/true);
      if (!state.is_physical()) continue;
      const auto avg = average_over_relevant(state, opts.quad);
      if (id == 5)
        t.rows.push_back({kappa, b, avg.f_opt, avg.gain});
      else
        t.rows.push_back({kappa, b, avg.f_u - avg.f_opt});
    }
  }
  echo_quad(t, opts.quad);
  return t;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.meta) out << "# " << key << " = " << value << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& table) {
  std::ostringstream out;
  out << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < table.meta.size(); ++i)
    out << (i ? ", " : "") << "\"" << table.meta[i].first << "\": \"" << table.meta[i].second
        << "\"";
  out << "},\n  \"columns\": [";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? ", " : "") << "\"" << table.columns[c] << "\"";
  out << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "    [";
    for (std::size_t c = 0; c < table.rows[r].size(); ++c)
      out << (c ? ", " : "") << format_double(table.rows[r][c]);
    out << "]" << (r + 1 < table.rows.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

Table figure_table(int id, const FigureOptions& opts) {
  Table t;
  switch (id) {
    case 1:
      t = figure_mi_vs_kappa(opts);
      break;
    case 2:
      t = figure_f_vs_gain(opts);
      break;
    case 3:
      t = figure_class_gaps(opts);
      break;
    case 4:
      t = figure_pure_states(opts);
      break;
    case 5:
    case 6:
      t = figure_kappa_b_plane(id, opts);
      break;
    default:
      throw InvalidInput("figure_table: id must be in 1..6");
  }
  t.meta.emplace_back("figure", std::to_string(id));
  t.meta.emplace_back("rows", std::to_string(t.rows.size()));
  if (opts.grid_points > 0) t.meta.emplace_back("grid_points", std::to_string(opts.grid_points));
  return t;
}

}  // namespace qcorr
