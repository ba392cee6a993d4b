#include "ticap/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ticap/accessible_set.hpp"
#include "ticap/entropy.hpp"

namespace ticap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int worker_count(const ScanSpec& spec) {
  if (spec.threads > 0) {
    return spec.threads;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on a bounded pool. Tasks write results
// into index-addressed slots, so output order never depends on scheduling.
// The first task exception is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (count == 0) {
    return;
  }
  threads = std::min<std::size_t>(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

struct ResourceRow {
  double tic_bits;
  double free_energy_bits;
  double negentropy_bits;
  double coherence_bits;
};

ResourceRow resources_for(const QubitState& state, const ThermalContext& ctx) {
  ResourceRow row;
  row.tic_bits = tic(state, ctx).capacity;
  row.free_energy_bits = free_energy(state, ctx);
  row.negentropy_bits = negentropy(state);
  row.coherence_bits = relative_entropy_of_coherence(state);
  return row;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> ranks_of(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) {
      ++j;
    }
    const double avg = 0.5 * (i + j);
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = avg;
    }
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks_of(x), ranks_of(y));
}

ThermalContext context_for_temp(double temp_ratio) {
  return ThermalContext::from_temp_ratio(temp_ratio);
}

// Uniform Bloch-ball points by rejection from the cube.
std::vector<QubitState> sample_states(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<QubitState> states;
  states.reserve(count);
  while (static_cast<int>(states.size()) < count) {
    const double bx = uni(rng);
    const double by = uni(rng);
    const double bz = uni(rng);
    if (bx * bx + by * by + bz * bz > 1.0) {
      continue;
    }
    const double r = 0.5 * (1.0 + bz);
    Complex alpha(0.5 * bx, 0.5 * by);
    const double limit = std::sqrt(std::max(0.0, r * (1.0 - r)));
    if (std::abs(alpha) > limit) {
      alpha *= limit / std::abs(alpha);
    }
    states.emplace_back(r, alpha);
  }
  return states;
}

void validate_common(const ScanSpec& spec) {
  if (spec.temperatures.empty()) {
    throw std::invalid_argument("scan: temperature list is empty");
  }
  if (spec.bloch_resolution < 2) {
    throw std::invalid_argument("scan: resolution must be >= 2");
  }
  for (double t : spec.temperatures) {
    if (std::isnan(t) || t < 0.0) {
      throw std::invalid_argument("scan: temperatures must be >= 0");
    }
  }
}

}  // namespace

std::string format_cell(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

ScanSpec ScanSpec::defaults(ScanMode mode) {
  ScanSpec spec;
  spec.mode = mode;
  switch (mode) {
    case ScanMode::heatmap:
      spec.temperatures = {0.0, 0.1, 1.0, 1.5, 2.0, kInf};
      spec.bloch_resolution = 101;
      break;
    case ScanMode::scatter:
      spec.temperatures = {0.1, 1.0, 2.0, kInf};
      spec.bloch_resolution = 2000;
      break;
    case ScanMode::jc_times:
      spec.temperatures = {0.05, 0.1, 0.2, 0.3, 0.4,  0.5, 0.65,
                           0.8,  1.0, 1.2, 1.5, 1.75, 2.0};
      spec.efficiencies = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999};
      spec.source = QubitState(0.0, Complex(0.0, 0.0));
      break;
    case ScanMode::single:
      spec.temperatures = {1.0};
      break;
  }
  return spec;
}

Table scan_heatmap(const ScanSpec& spec) {
  validate_common(spec);
  const int res = spec.bloch_resolution;

  struct Point {
    double temp;
    double x;
    double z;
  };
  std::vector<Point> points;
  for (double temp : spec.temperatures) {
    for (int ix = 0; ix < res; ++ix) {
      const double x = static_cast<double>(ix) / (res - 1);
      for (int iz = 0; iz < res; ++iz) {
        const double z = -1.0 + 2.0 * static_cast<double>(iz) / (res - 1);
        if (x * x + z * z > 1.0 + 1e-12) {
          continue;
        }
        points.push_back({temp, x, z});
      }
    }
  }

  Table table;
  table.columns = {"temp_ratio", "x",          "z",        "tic",
                   "free_energy", "negentropy", "coherence"};
  table.rows.resize(points.size());

  parallel_for(points.size(), worker_count(spec), [&](std::size_t i) {
    const Point& p = points[i];
    const ThermalContext ctx = context_for_temp(p.temp);
    const double r = 0.5 * (1.0 + p.z);
    const double limit = std::sqrt(std::max(0.0, r * (1.0 - r)));
    const double a = std::min(0.5 * p.x, limit);
    const QubitState state(r, Complex(a, 0.0));
    const ResourceRow res_row = resources_for(state, ctx);
    table.rows[i] = {format_cell(p.temp),
                     format_cell(p.x),
                     format_cell(p.z),
                     format_cell(res_row.tic_bits),
                     format_cell(res_row.free_energy_bits),
                     format_cell(res_row.negentropy_bits),
                     format_cell(res_row.coherence_bits)};
  });
  return table;
}

Table scan_scatter(const ScanSpec& spec) {
  validate_common(spec);
  const int n = spec.bloch_resolution;

  // Draw every sample up front so the stream is independent of threading.
  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<QubitState>> samples;
  samples.reserve(spec.temperatures.size());
  for (std::size_t t = 0; t < spec.temperatures.size(); ++t) {
    samples.push_back(sample_states(rng, n));
  }

  Table table;
  table.columns = {"temp_ratio", "r",          "abs_alpha", "tic",
                   "free_energy", "negentropy", "coherence", "row_type"};

  std::vector<std::vector<ResourceRow>> results(spec.temperatures.size());
  for (auto& block : results) {
    block.resize(n);
  }
  const std::size_t total = spec.temperatures.size() * n;
  parallel_for(total, worker_count(spec), [&](std::size_t i) {
    const std::size_t t = i / n;
    const std::size_t k = i % n;
    const ThermalContext ctx = context_for_temp(spec.temperatures[t]);
    results[t][k] = resources_for(samples[t][k], ctx);
  });

  for (std::size_t t = 0; t < spec.temperatures.size(); ++t) {
    const std::string temp_str = format_cell(spec.temperatures[t]);
    std::vector<double> tics(n), fes(n), negs(n), cohs(n);
    for (int k = 0; k < n; ++k) {
      const ResourceRow& r = results[t][k];
      tics[k] = r.tic_bits;
      fes[k] = r.free_energy_bits;
      negs[k] = r.negentropy_bits;
      cohs[k] = r.coherence_bits;
      table.rows.push_back({temp_str,
                            format_cell(samples[t][k].r()),
                            format_cell(samples[t][k].coherence_magnitude()),
                            format_cell(r.tic_bits),
                            format_cell(r.free_energy_bits),
                            format_cell(r.negentropy_bits),
                            format_cell(r.coherence_bits),
                            "sample"});
    }
    table.rows.push_back({temp_str, "", "", "",
                          format_cell(pearson(tics, fes)),
                          format_cell(pearson(tics, negs)),
                          format_cell(pearson(tics, cohs)), "pearson"});
    table.rows.push_back({temp_str, "", "", "",
                          format_cell(spearman(tics, fes)),
                          format_cell(spearman(tics, negs)),
                          format_cell(spearman(tics, cohs)), "spearman"});
  }
  return table;
}

Table scan_jc_times(const ScanSpec& spec) {
  validate_common(spec);
  if (spec.efficiencies.empty()) {
    throw std::invalid_argument("jc-times: efficiency list is empty");
  }
  if (!std::is_sorted(spec.efficiencies.begin(), spec.efficiencies.end())) {
    throw std::invalid_argument("jc-times: efficiencies must be ascending");
  }
  for (double e : spec.efficiencies) {
    if (!(e > 0.0 && e <= 1.0)) {
      throw std::invalid_argument("jc-times: efficiencies must be in (0, 1]");
    }
  }
  for (double t : spec.temperatures) {
    if (std::isinf(t)) {
      throw std::invalid_argument(
          "jc-times: infinite temperature has no normalizable bath");
    }
  }
  if (!spec.source) {
    throw std::invalid_argument("jc-times: source state is required");
  }
  const QubitState source = *spec.source;

  const std::size_t n_temp = spec.temperatures.size();
  const std::size_t n_eff = spec.efficiencies.size();
  std::vector<std::vector<std::optional<double>>> stars(n_temp);

  parallel_for(n_temp, worker_count(spec), [&](std::size_t t) {
    const ThermalContext ctx = context_for_temp(spec.temperatures[t]);
    const JCConfig cfg = JCConfig::defaults(ctx.lambda());
    const double cap = tic(source, ctx).capacity;

    // One achieved-capacity sweep serves every efficiency target.
    const double step = cfg.tau_max / cfg.tau_steps;
    std::vector<double> achieved(cfg.tau_steps + 1);
    for (int k = 0; k <= cfg.tau_steps; ++k) {
      achieved[k] = achieved_capacity(source, k * step, ctx, cfg);
    }

    stars[t].resize(n_eff);
    for (std::size_t e = 0; e < n_eff; ++e) {
      const double target = spec.efficiencies[e] * cap;
      std::optional<double> star;
      for (int k = 0; k <= cfg.tau_steps; ++k) {
        if (achieved[k] < target - 1e-12) {
          continue;
        }
        if (k == 0) {
          star = 0.0;
          break;
        }
        double lo = (k - 1) * step;
        double hi = k * step;
        while (hi - lo > 1e-6) {
          const double mid = 0.5 * (lo + hi);
          if (achieved_capacity(source, mid, ctx, cfg) >= target - 1e-12) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        star = hi;
        break;
      }
      stars[t][e] = star;
    }
  });

  Table table;
  table.columns = {"temp_ratio", "efficiency", "tau_star"};
  for (std::size_t t = 0; t < n_temp; ++t) {
    for (std::size_t e = 0; e < n_eff; ++e) {
      table.rows.push_back(
          {format_cell(spec.temperatures[t]), format_cell(spec.efficiencies[e]),
           stars[t][e] ? format_cell(*stars[t][e]) : "none"});
    }
  }
  return table;
}

SingleReport single(const ScanSpec& spec) {
  validate_common(spec);
  if (!spec.source) {
    throw std::invalid_argument("single: source state is required");
  }
  const ThermalContext ctx = context_for_temp(spec.temperatures.front());
  const QubitState source = *spec.source;

  SingleReport report;
  report.temp_ratio = spec.temperatures.front();
  report.lambda = ctx.lambda();
  report.source = source;
  report.result = tic(source, ctx);
  report.free_energy_bits = free_energy(source, ctx);
  report.negentropy_bits = negentropy(source);
  report.coherence_bits = relative_entropy_of_coherence(source);
  const AccessibleSet aset(source, ctx);
  report.s_lo = aset.s_lo();
  report.s_hi = aset.s_hi();
  return report;
}

Table SingleReport::to_table() const {
  Table table;
  table.columns = {"key", "value"};
  auto push = [&](const std::string& key, double v) {
    table.rows.push_back({key, format_cell(v)});
  };
  push("temp_ratio", temp_ratio);
  push("lambda", lambda);
  push("source_r", source.r());
  push("source_re_alpha", source.alpha().real());
  push("source_im_alpha", source.alpha().imag());
  push("capacity", result.capacity);
  push("s_tilde", result.s_tilde);
  push("q_star", result.q_star);
  push("s_lo", s_lo);
  push("s_hi", s_hi);
  push("free_energy", free_energy_bits);
  push("negentropy", negentropy_bits);
  push("coherence", coherence_bits);
  for (std::size_t k = 0; k < result.code.entries().size(); ++k) {
    const auto& entry = result.code.entries()[k];
    const QubitState cw = QubitState::from_density_matrix(entry.state);
    const std::string prefix = "codeword" + std::to_string(k) + "_";
    push(prefix + "weight", entry.weight);
    push(prefix + "r", cw.r());
    push(prefix + "re_alpha", cw.alpha().real());
    push(prefix + "im_alpha", cw.alpha().imag());
  }
  return table;
}

void SingleReport::write_human(std::ostream& out) const {
  out << "temp_ratio        " << format_cell(temp_ratio) << "  (lambda "
      << format_cell(lambda) << ")\n";
  out << "source            eta[" << format_cell(source.r()) << ", "
      << format_cell(source.alpha().real()) << " + "
      << format_cell(source.alpha().imag()) << "i]\n";
  out << "capacity          " << format_cell(result.capacity) << " bits\n";
  out << "s_tilde           " << format_cell(result.s_tilde) << "\n";
  out << "q_star            " << format_cell(result.q_star) << "\n";
  out << "population range  [" << format_cell(s_lo) << ", " << format_cell(s_hi)
      << "]\n";
  out << "free energy       " << format_cell(free_energy_bits) << " bits\n";
  out << "negentropy        " << format_cell(negentropy_bits) << " bits\n";
  out << "coherence         " << format_cell(coherence_bits) << " bits\n";
  out << "optimal code:\n";
  for (const auto& entry : result.code.entries()) {
    const QubitState cw = QubitState::from_density_matrix(entry.state);
    out << "  weight " << format_cell(entry.weight) << "  eta["
        << format_cell(cw.r()) << ", " << format_cell(cw.alpha().real())
        << " + " << format_cell(cw.alpha().imag()) << "i]\n";
  }
}

void write_table_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << table.columns[c];
    out << (c + 1 < table.columns.size() ? "," : "\n");
  }
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      out << (c + 1 < row.size() ? "," : "\n");
    }
  }
}

void write_table_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;
  out << doc.dump(1) << "\n";
}

void write_table(const Table& table, const ScanSpec& spec) {
  const auto emit = [&](std::ostream& out) {
    if (spec.format == OutputFormat::csv) {
      write_table_csv(table, out);
    } else {
      write_table_json(table, out);
    }
  };
  if (spec.output_path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open output file: " +
                                 spec.output_path);
  }
  emit(out);
  out.flush();
  if (!out) {
    throw std::ios_base::failure("write failed: " + spec.output_path);
  }
}

void run_scan(const ScanSpec& spec) {
  switch (spec.mode) {
    case ScanMode::heatmap:
      write_table(scan_heatmap(spec), spec);
      return;
    case ScanMode::scatter:
      write_table(scan_scatter(spec), spec);
      return;
    case ScanMode::jc_times:
      write_table(scan_jc_times(spec), spec);
      return;
    case ScanMode::single: {
      const SingleReport report = single(spec);
      report.write_human(std::cout);
      if (!spec.output_path.empty()) {
        write_table(report.to_table(), spec);
      }
      return;
    }
  }
  throw std::logic_error("run_scan: unknown mode");
}

}  // namespace ticap
