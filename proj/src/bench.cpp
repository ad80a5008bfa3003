#include "hvbox/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hvbox/decompose.hpp"
#include "hvbox/hvimprove.hpp"
#include "hvbox/io.hpp"

namespace hvbox {

namespace {

constexpr double kVerifyRelTol = 1e-9;

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

BenchRow run_cell(std::size_t n, std::size_t m, FrontShape shape, double alpha,
                  std::uint64_t seed, bool verify, std::vector<std::string>& violations) {
  const ParetoFront front = generate_front({n, m, seed, shape});
  DecomposeConfig config;
  config.alpha = alpha;

  const auto start = std::chrono::steady_clock::now();
  const Decomposition decomp = decompose(front, config);
  const auto stop = std::chrono::steady_clock::now();

  BenchRow row;
  row.n_points = n;
  row.dim = m;
  row.shape = shape;
  row.alpha = alpha;
  row.seed = seed;
  row.accepted = decomp.diagnostics().accepted;
  row.iterations = decomp.diagnostics().iterations;
  row.max_depth = decomp.diagnostics().max_depth;
  row.depth_bound = depth_bound(n, m);
  row.nondominated_volume = nondominated_volume(decomp);
  row.h_all = decomp.h_all();
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  std::ostringstream cell;
  cell << "N=" << n << " M=" << m << " shape=" << to_string(shape)
       << " alpha=" << format_shortest(alpha) << " seed=" << seed << ": ";
  if (alpha > 0.0) {
    row.k_bound = count_bound(alpha);
    if (static_cast<double>(row.accepted) > 2.0 / alpha) {
      violations.push_back(cell.str() + "K=" + std::to_string(row.accepted) + " exceeds 2/alpha");
    }
  }
  if (row.max_depth > row.depth_bound) {
    violations.push_back(cell.str() + "max_depth=" + std::to_string(row.max_depth) +
                         " exceeds " + std::to_string(row.depth_bound));
  }
  if (row.accepted > row.iterations) {
    violations.push_back(cell.str() + "accepted exceeds iterations");
  }

  if (verify) {
    DecomposeConfig exact_config = config;
    exact_config.alpha = 0.0;
    const Decomposition exact = decompose(front, exact_config);
    row.exact_volume = nondominated_volume(exact);
    row.oracle_volume = exact.h_all() - hv_inclusion_exclusion(front.points(), exact.bounds().upper());
    row.missed_volume = *row.exact_volume - row.nondominated_volume;
    if (!close_rel(*row.exact_volume, *row.oracle_volume, kVerifyRelTol)) {
      violations.push_back(cell.str() + "exact volume " + format_shortest(*row.exact_volume) +
                           " disagrees with oracle " + format_shortest(*row.oracle_volume));
    }
  }
  return row;
}

}  // namespace

void validate(const BenchSpec& spec) {
  if (spec.n_points.empty() || spec.dims.empty() || spec.alphas.empty() || spec.shapes.empty()) {
    throw std::invalid_argument("bench sweep needs at least one N, M, alpha and shape");
  }
  if (spec.seeds == 0) throw std::invalid_argument("--seeds must be at least 1");
  for (std::size_t n : spec.n_points) {
    if (n == 0) throw std::invalid_argument("N must be at least 1");
    if (spec.verify && n > kOracleLimit) {
      throw std::invalid_argument("oracle limit: --verify supports N <= " +
                                  std::to_string(kOracleLimit));
    }
  }
  for (std::size_t m : spec.dims) {
    if (m == 0) throw std::invalid_argument("M must be at least 1");
  }
  for (double alpha : spec.alphas) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in [0,1)");
  }
}

BenchResult run_bench(const BenchSpec& spec) {
  validate(spec);
  BenchResult result;
  for (std::size_t n : spec.n_points) {
    for (std::size_t m : spec.dims) {
      for (FrontShape shape : spec.shapes) {
        for (double alpha : spec.alphas) {
          for (std::size_t s = 0; s < spec.seeds; ++s) {
            result.rows.push_back(
                run_cell(n, m, shape, alpha, spec.seed_base + s, spec.verify, result.violations));
          }
        }
      }
    }
  }
  return result;
}

std::string format_bench_table(const BenchResult& result, bool verify) {
  std::ostringstream out;
  out << "n\tm\tshape\talpha\tseed\taccepted\tk_bound\titerations\tmax_depth\tdepth_bound"
         "\tnondominated_volume\th_all\twall_ms";
  if (verify) out << "\texact_volume\toracle_volume\tmissed_volume";
  out << '\n';
  for (const BenchRow& row : result.rows) {
    out << row.n_points << '\t' << row.dim << '\t' << to_string(row.shape) << '\t'
        << format_shortest(row.alpha) << '\t' << row.seed << '\t' << row.accepted << '\t'
        << (row.k_bound ? std::to_string(*row.k_bound) : std::string("inf")) << '\t'
        << row.iterations << '\t' << row.max_depth << '\t' << row.depth_bound << '\t'
        << format_shortest(row.nondominated_volume) << '\t' << format_shortest(row.h_all) << '\t'
        << format_shortest(std::round(row.wall_ms * 1000.0) / 1000.0);
    if (verify) {
      out << '\t' << format_shortest(row.exact_volume.value_or(NAN)) << '\t'
          << format_shortest(row.oracle_volume.value_or(NAN)) << '\t'
          << format_shortest(row.missed_volume.value_or(NAN));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hvbox
