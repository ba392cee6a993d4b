// Parameter scans over memory states and temperatures, with deterministic
// CSV/JSON emission. Scan points run on a bounded worker pool; rows are
// ordered by grid index, so output bytes do not depend on thread count.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ticap/jaynes_cummings.hpp"
#include "ticap/states.hpp"
#include "ticap/tic.hpp"

namespace ticap {

enum class ScanMode { heatmap, scatter, jc_times, single };
enum class OutputFormat { csv, json };

struct ScanSpec {
  ScanMode mode = ScanMode::single;
  /// Temperatures as temp_ratio = kB T / delta_E; 0 means lambda = 0 and
  /// +infinity means lambda = 1.
  std::vector<double> temperatures;
  /// Heatmap: grid points per Bloch axis. Scatter: sampled states per
  /// temperature.
  int bloch_resolution = 101;
  std::optional<QubitState> source;
  std::string output_path;  // empty writes to stdout
  OutputFormat format = OutputFormat::csv;
  unsigned long long seed = 20240817ULL;
  std::vector<double> efficiencies;  // jc-times targets, ascending in (0, 1]
  int threads = 0;                   // 0 picks hardware concurrency

  /// Per-mode defaults for fields left empty.
  static ScanSpec defaults(ScanMode mode);
};

/// Rectangular dataset of preformatted cells (12 significant digits).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Capacity and resource monotones on the x >= 0 half-disk of the X-Z
/// Bloch section, r = (1+z)/2, alpha = x/2. Points outside the ball are
/// omitted. Columns: temp_ratio, x, z, tic, free_energy, negentropy,
/// coherence.
Table scan_heatmap(const ScanSpec& spec);

/// Seeded uniform Bloch-ball samples per temperature with capacity and
/// resource monotones, followed by per-temperature Pearson and Spearman
/// correlation rows of tic against each resource. Columns: temp_ratio, r,
/// abs_alpha, tic, free_energy, negentropy, coherence, row_type.
Table scan_scatter(const ScanSpec& spec);

/// Time to reach each efficiency target per temperature. Columns:
/// temp_ratio, efficiency, tau_star ("none" when the target is not reached
/// on the horizon).
Table scan_jc_times(const ScanSpec& spec);

/// Full capacity report for one state at one temperature.
struct SingleReport {
  double temp_ratio = 0.0;
  double lambda = 0.0;
  QubitState source{1.0, 0.0};
  TICResult result;
  double free_energy_bits = 0.0;
  double negentropy_bits = 0.0;
  double coherence_bits = 0.0;
  double s_lo = 0.0;
  double s_hi = 0.0;

  Table to_table() const;
  void write_human(std::ostream& out) const;
};

SingleReport single(const ScanSpec& spec);

/// Deterministic emission. CSV: UTF-8, comma separators, '\n' endings,
/// header row. JSON: numbers carried as decimal strings of the same
/// 12-significant-digit precision.
void write_table_csv(const Table& table, std::ostream& out);
void write_table_json(const Table& table, std::ostream& out);
void write_table(const Table& table, const ScanSpec& spec);

/// Format with 12 significant digits; infinities map to "inf"/"-inf".
std::string format_cell(double value);

/// Run the scan for `spec` and write per spec.format/output_path.
void run_scan(const ScanSpec& spec);

}  // namespace ticap
