// Command-line front end: decompose, hvi, bench.
//
// Exit codes: 0 success, 2 usage or validation error, 3 invariant violation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvbox/hvbox.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct DecomposeFlags {
  double alpha = 1e-3;
  bool exact = false;
  std::string reference;
  std::string ideal;

  void attach(CLI::App& cmd) {
    auto* alpha_opt = cmd.add_option("--alpha", alpha, "relative volume tolerance in [0,1)");
    cmd.add_flag("--exact", exact, "same as --alpha 0")->excludes(alpha_opt);
    cmd.add_option("--ref", reference, "reference point r1,...,rM (reference-clipped mode)");
    cmd.add_option("--ideal", ideal, "ideal point replacing the lower sentinels");
  }

  [[nodiscard]] hvbox::DecomposeConfig config() const {
    hvbox::DecomposeConfig c;
    c.alpha = exact ? 0.0 : alpha;
    if (!reference.empty()) c.reference = hvbox::parse_point_list(reference);
    if (!ideal.empty()) c.ideal = hvbox::parse_point_list(ideal);
    return c;
  }
};

hvbox::Decomposition decompose_file(const std::string& path, const DecomposeFlags& flags) {
  const std::vector<hvbox::Point> raw = hvbox::read_point_file(path);
  if (raw.empty()) throw std::invalid_argument("empty front");
  const hvbox::ParetoFront front = hvbox::pareto_filter(raw);
  if (front.size() != raw.size()) {
    std::cerr << "note: dropped " << raw.size() - front.size()
              << " dominated or duplicate point(s)\n";
  }
  return hvbox::decompose(front, flags.config());
}

void report(const hvbox::Decomposition& decomp) {
  const auto& d = decomp.diagnostics();
  std::cerr << "boxes=" << d.accepted << " iterations=" << d.iterations
            << " max_depth=" << d.max_depth << " pruned(dominated/resolution/volume)="
            << d.pruned_dominated << '/' << d.pruned_resolution << '/' << d.pruned_volume << '\n';
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    items.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::string format_hvi(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate hypervolume box decomposition"};
  app.require_subcommand(1);

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose the non-dominated space of a front");
  std::string decompose_input;
  DecomposeFlags decompose_flags;
  decompose_cmd->add_option("input", decompose_input, "point file (CSV)")->required();
  decompose_flags.attach(*decompose_cmd);

  // hvi
  auto* hvi_cmd = app.add_subcommand("hvi", "hypervolume improvement of candidate points");
  std::string hvi_doc;
  std::string hvi_front;
  std::string hvi_candidates;
  DecomposeFlags hvi_flags;
  auto* doc_opt = hvi_cmd->add_option("--doc", hvi_doc, "decomposition document from 'decompose'");
  auto* front_opt = hvi_cmd->add_option("--front", hvi_front, "point file to decompose first");
  doc_opt->excludes(front_opt);
  hvi_cmd->add_option("--candidates", hvi_candidates, "candidate point file (CSV)")->required();
  hvi_flags.attach(*hvi_cmd);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "diagnostics sweep over random fronts");
  std::string bench_n = "50";
  std::string bench_m = "4";
  std::string bench_alpha = "0.001";
  std::string bench_shape = "sphere_like";
  hvbox::BenchSpec bench_spec;
  bench_cmd->add_option("--n", bench_n, "comma-separated front sizes");
  bench_cmd->add_option("--m", bench_m, "comma-separated objective counts");
  bench_cmd->add_option("--alpha", bench_alpha, "comma-separated tolerances");
  bench_cmd->add_option("--shape", bench_shape,
                        "comma-separated shapes: sphere_like, linear, random_antichain");
  bench_cmd->add_option("--seeds", bench_spec.seeds, "number of seeds per cell");
  bench_cmd->add_option("--seed-base", bench_spec.seed_base, "first seed");
  bench_cmd->add_flag("--verify", bench_spec.verify, "check exact decompositions against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decompose_cmd) {
      const hvbox::Decomposition decomp = decompose_file(decompose_input, decompose_flags);
      std::cout << hvbox::serialize_decomposition(decomp);
      report(decomp);
      return 0;
    }

    if (*hvi_cmd) {
      if (hvi_doc.empty() == hvi_front.empty()) {
        throw std::invalid_argument("exactly one of --doc or --front is required");
      }
      const hvbox::Decomposition decomp = hvi_doc.empty()
                                              ? decompose_file(hvi_front, hvi_flags)
                                              : hvbox::read_decomposition_file(hvi_doc);
      const std::vector<hvbox::Point> candidates = hvbox::read_point_file(hvi_candidates);
      const auto values = hvbox::hvi_batch_flagged(decomp, candidates);
      std::cout << "index\thvi\tbelow_bound\n";
      for (std::size_t q = 0; q < values.size(); ++q) {
        std::cout << q << '\t' << format_hvi(values[q].value) << '\t'
                  << (values[q].below_bound ? 1 : 0) << '\n';
        if (values[q].below_bound) {
          std::cerr << "warning: candidate " << q
                    << " lies below the lower bound; its improvement is undercounted\n";
        }
      }
      return 0;
    }

    if (*bench_cmd) {
      bench_spec.n_points.clear();
      bench_spec.dims.clear();
      bench_spec.alphas.clear();
      bench_spec.shapes.clear();
      for (const auto& s : split_list(bench_n)) bench_spec.n_points.push_back(std::stoul(s));
      for (const auto& s : split_list(bench_m)) bench_spec.dims.push_back(std::stoul(s));
      for (double a : hvbox::parse_point_list(bench_alpha)) bench_spec.alphas.push_back(a);
      for (const auto& s : split_list(bench_shape)) {
        bench_spec.shapes.push_back(hvbox::parse_front_shape(s));
      }
      const hvbox::BenchResult result = hvbox::run_bench(bench_spec);
      std::cout << hvbox::format_bench_table(result, bench_spec.verify);
      for (const auto& v : result.violations) std::cerr << "violation: " << v << '\n';
      return result.violations.empty() ? 0 : kExitInvariant;
    }
  } catch (const hvbox::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: value out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
