#pragma once

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "collinear/enumerate.hpp"
#include "collinear/generator.hpp"
#include "collinear/io.hpp"
#include "collinear/oracle.hpp"
#include "collinear/point_set.hpp"

namespace collinear {

// Exit codes: 0 success, 1 usage/parse/validation error, 2 differential
// mismatch (the check or bench cross-verification failed).
struct RunConfig {
  std::string input_path;  // file of "x y" lines, or "-" for stdin
  std::string gen_spec;    // generator spec; exactly one of input_path/gen_spec
  std::string algo = "layered";
  unsigned workers = 1;
  std::size_t min_size = 3;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool check = false;
  bool bench = false;
  bool sigma_shuffle = false;
};

namespace detail {

// Keeps the sigma permutation stream independent of the generator stream.
inline constexpr std::uint64_t kSigmaSeedSalt = 0x734f8a1bce93d27bull;

inline void write_set_line(std::ostream& out, const CollinearSet& set) {
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    if (i) out << ' ';
    out << set.members[i];
  }
  out << '\n';
}

inline void write_text(std::ostream& out, const EnumerationResult& result) {
  for (const CollinearSet& set : result.sets) write_set_line(out, set);
  out << "n=" << result.stats.n << " m=" << result.stats.m << " sets=" << result.sets.size()
      << " algo=" << result.stats.strategy << " ms=" << std::fixed << std::setprecision(3)
      << result.stats.wall_ms << '\n';
  out.unsetf(std::ios::floatfield);
}

inline void write_json(std::ostream& out, const PointSet& ps, const EnumerationResult& result) {
  nlohmann::json j;
  auto& points = j["points"] = nlohmann::json::array();
  for (const Point& p : ps.points()) points.push_back({p.x, p.y});
  auto& sets = j["sets"] = nlohmann::json::array();
  for (const CollinearSet& set : result.sets) sets.push_back(set.members);
  j["stats"] = {{"n", result.stats.n},
                {"m", result.stats.m},
                {"sets", result.sets.size()},
                {"algo", result.stats.strategy},
                {"workers", result.stats.workers},
                {"ms", result.stats.wall_ms},
                {"max_pieces", result.stats.max_pieces}};
  out << j.dump() << '\n';
}

// Prints the symmetric difference of two canonical set lists.
inline void write_set_diff(std::ostream& err, const std::string& got_label,
                           const std::vector<CollinearSet>& got,
                           const std::string& want_label,
                           const std::vector<CollinearSet>& want) {
  const auto one_sided = [&](const std::vector<CollinearSet>& a,
                             const std::vector<CollinearSet>& b, const std::string& label) {
    for (const CollinearSet& set : a) {
      if (std::find(b.begin(), b.end(), set) != b.end()) continue;
      err << "only in " << label << ":";
      for (const std::size_t i : set.members) err << ' ' << i;
      err << '\n';
    }
  };
  one_sided(got, want, got_label);
  one_sided(want, got, want_label);
}

inline EnumerationResult dispatch(const std::string& algo, const PointSet& ps,
                                  const SigmaOrder& sigma, std::size_t min_size,
                                  unsigned workers) {
  if (algo == "baseline") return enumerate_baseline(ps, sigma, min_size);
  if (algo == "layered") return enumerate_layered(ps, sigma, min_size);
  if (algo == "parallel") return enumerate_parallel(ps, sigma, min_size, workers);
  return brute_force(ps, min_size);
}

inline int run_bench(const PointSet& ps, const SigmaOrder& sigma, const RunConfig& cfg,
                     std::ostream& out, std::ostream& err) {
  struct Row {
    std::string algo;
    std::string workers;
    EnumerationResult result;
  };
  std::vector<Row> rows;
  rows.push_back({"baseline", "-", enumerate_baseline(ps, sigma, cfg.min_size)});
  rows.push_back({"layered", "-", enumerate_layered(ps, sigma, cfg.min_size)});
  std::vector<unsigned> counts{1, 2, 4};
  if (std::find(counts.begin(), counts.end(), cfg.workers) == counts.end())
    counts.push_back(cfg.workers);
  for (const unsigned w : counts)
    rows.push_back({"parallel", std::to_string(w), enumerate_parallel(ps, sigma, cfg.min_size, w)});
  if (cfg.check && ps.size() <= kOracleCap)
    rows.push_back({"oracle", "-", brute_force(ps, cfg.min_size)});

  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].result.sets == rows[0].result.sets) continue;
    err << "bench: " << rows[i].algo << " disagrees with " << rows[0].algo << "\n";
    write_set_diff(err, rows[i].algo, rows[i].result.sets, rows[0].algo, rows[0].result.sets);
    return 2;
  }

  out << "n=" << ps.size() << " m=" << rows[1].result.stats.m << " sets="
      << rows[0].result.sets.size() << '\n';
  out << std::left << std::setw(10) << "algo" << std::setw(9) << "workers" << std::right
      << std::setw(12) << "ms" << '\n';
  for (const Row& row : rows)
    out << std::left << std::setw(10) << row.algo << std::setw(9) << row.workers << std::right
        << std::setw(12) << std::fixed << std::setprecision(3) << row.result.stats.wall_ms << '\n';
  out.unsetf(std::ios::floatfield);
  return 0;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> algos{"baseline", "layered", "parallel", "oracle"};
  if (std::find(algos.begin(), algos.end(), cfg.algo) == algos.end()) {
    err << "error: unknown algo '" << cfg.algo << "'\n";
    return 1;
  }
  if (cfg.format != "text" && cfg.format != "json") {
    err << "error: unknown format '" << cfg.format << "'\n";
    return 1;
  }
  if (cfg.workers < 1 || cfg.min_size < 3) {
    err << "error: workers must be >= 1 and min-size >= 3\n";
    return 1;
  }
  if (cfg.gen_spec.empty() == cfg.input_path.empty()) {
    err << "error: provide exactly one of an input file or --gen\n";
    return 1;
  }
  if (!cfg.gen_spec.empty() && !cfg.seed_set) {
    err << "error: --gen requires --seed\n";
    return 1;
  }

  try {
    PointSet points = [&] {
      if (!cfg.gen_spec.empty()) return generate(cfg.gen_spec, cfg.seed);
      if (cfg.input_path == "-") return parse_points(in);
      std::ifstream file(cfg.input_path);
      if (!file) throw std::runtime_error("cannot open '" + cfg.input_path + "'");
      return parse_points(file);
    }();

    const SigmaOrder sigma =
        cfg.sigma_shuffle
            ? SigmaOrder::shuffled(points.size(), cfg.seed ^ detail::kSigmaSeedSalt)
            : SigmaOrder::identity(points.size());

    if (cfg.bench) return detail::run_bench(points, sigma, cfg, out, err);

    const EnumerationResult result =
        detail::dispatch(cfg.algo, points, sigma, cfg.min_size, cfg.workers);

    if (cfg.check && cfg.algo != "oracle") {
      if (points.size() <= kOracleCap) {
        const EnumerationResult truth = brute_force(points, cfg.min_size);
        if (result.sets != truth.sets) {
          err << "check: " << cfg.algo << " disagrees with the oracle\n";
          detail::write_set_diff(err, cfg.algo, result.sets, "oracle", truth.sets);
          return 2;
        }
      } else {
        err << "check: n=" << points.size() << " exceeds the oracle cap " << kOracleCap
            << ", skipped\n";
      }
    }

    if (cfg.format == "json")
      detail::write_json(out, points, result);
    else
      detail::write_text(out, result);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace collinear
