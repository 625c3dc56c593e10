#include "ggentropy/gof.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ggentropy/distributions.hpp"
#include "ggentropy/entropy.hpp"
#include "ggentropy/errors.hpp"
#include "ggentropy/parallel.hpp"
#include "ggentropy/summation.hpp"
#include "ggentropy/version.hpp"

namespace ggentropy {

namespace {

constexpr double alpha_match_tol = 1e-12;

// Type-1 empirical quantile: Q(p) = x_(ceil(p R)) on sorted values.
double order_quantile(const std::vector<double>& sorted, double p) {
  const std::size_t r = sorted.size();
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(r)));
  rank = std::clamp<std::size_t>(rank, 1, r);
  return sorted[rank - 1];
}

std::size_t find_alpha(const std::vector<double>& alphas, double alpha) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (std::abs(alphas[i] - alpha) <= alpha_match_tol) return i;
  }
  throw TableLookupError("alpha " + std::to_string(alpha) +
                         " is not present in the critical-value table");
}

}  // namespace

std::string tail_name(Tail tail) {
  switch (tail) {
    case Tail::left: return "left";
    case Tail::right: return "right";
    case Tail::two_sided: return "two-sided";
  }
  return "left";
}

Tail tail_from_name(const std::string& name) {
  if (name == "left") return Tail::left;
  if (name == "right") return Tail::right;
  if (name == "two-sided" || name == "two_sided") return Tail::two_sided;
  throw ConfigError("unknown tail '" + name + "'");
}

double CriticalValueTable::left_quantile(double alpha) const {
  return left[find_alpha(alphas, alpha)];
}

double CriticalValueTable::right_quantile(double alpha) const {
  return right[find_alpha(alphas, alpha)];
}

bool CriticalValueTable::has_alpha(double alpha) const {
  return std::any_of(alphas.begin(), alphas.end(), [alpha](double a) {
    return std::abs(a - alpha) <= alpha_match_tol;
  });
}

double sample_moment(const Sample& sample, double s) {
  if (!(s > 0.0)) throw DomainError("sample_moment requires s > 0");
  CompensatedSum acc;
  for (std::size_t i = 0; i < sample.n(); ++i) {
    acc.add(std::pow(sample.row_norm(i), s));
  }
  return acc.value() / static_cast<double>(sample.n());
}

double test_statistic(const Sample& sample, double s, int k, int threads) {
  if (!(s > 0.0)) throw DomainError("test_statistic requires s > 0");
  const double entropy = knn_entropy(sample, k, threads).value;
  const double moment = sample_moment(sample, s);
  return entropy -
         max_entropy_bound(static_cast<int>(sample.dim()), s, moment);
}

CriticalValueTable critical_values(int dim, double shape, std::size_t n, int k,
                                   std::vector<double> alphas,
                                   std::size_t replicates,
                                   const RandomStream& stream, int threads) {
  if (replicates < 100) {
    throw ConfigError("critical_values requires at least 100 replicates");
  }
  if (alphas.empty()) {
    throw ConfigError("critical_values requires at least one alpha");
  }
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) {
      throw ConfigError("alpha levels must lie in (0, 1)");
    }
  }
  if (n < static_cast<std::size_t>(k) + 1) {
    throw ConfigError("critical_values requires N >= k + 1");
  }
  std::sort(alphas.begin(), alphas.end());

  const GGParams null_params = GGParams::canonical(dim, shape);
  std::vector<double> stats(replicates);
  parallel_for(replicates, threads, [&](std::size_t j) {
    const Sample sample = sample_gg(null_params, n, stream.substream(j));
    // Replicates parallelize across workers; the per-point knn search
    // stays serial inside each replicate.
    stats[j] = test_statistic(sample, shape, k, 1);
  });
  std::sort(stats.begin(), stats.end());

  CriticalValueTable table;
  table.dim = dim;
  table.shape = shape;
  table.n = n;
  table.k = k;
  table.replicates = replicates;
  table.master_seed = stream.master_seed;
  table.stream_id = stream.stream_id;
  table.alphas = alphas;
  table.left.reserve(alphas.size());
  table.right.reserve(alphas.size());
  for (double a : alphas) {
    table.left.push_back(order_quantile(stats, a));
    table.right.push_back(order_quantile(stats, 1.0 - a));
  }
  return table;
}

namespace {

TestOutcome decide(const Sample& sample, double s, int k, double alpha,
                   const CriticalValueTable& table, Tail tail, int threads,
                   bool fresh_mc) {
  if (table.dim != static_cast<int>(sample.dim()) ||
      std::abs(table.shape - s) > alpha_match_tol ||
      table.n != sample.n() || table.k != k) {
    throw TableLookupError(
        "critical-value table key (m=" + std::to_string(table.dim) +
        ", s=" + std::to_string(table.shape) + ", N=" +
        std::to_string(table.n) + ", k=" + std::to_string(table.k) +
        ") does not match the data/test parameters");
  }

  TestOutcome outcome;
  outcome.n = sample.n();
  outcome.k = k;
  outcome.dim = static_cast<int>(sample.dim());
  outcome.shape = s;
  outcome.alpha = alpha;
  outcome.tail = tail;
  outcome.table_replicates = table.replicates;
  outcome.table_master_seed = table.master_seed;
  outcome.table_stream_id = table.stream_id;
  outcome.fresh_mc = fresh_mc;
  outcome.statistic = test_statistic(sample, s, k, threads);

  switch (tail) {
    case Tail::left:
      outcome.critical_left = table.left_quantile(alpha);
      outcome.reject = outcome.statistic <= outcome.critical_left;
      break;
    case Tail::right:
      outcome.critical_right = table.right_quantile(alpha);
      outcome.reject = outcome.statistic >= outcome.critical_right;
      break;
    case Tail::two_sided:
      outcome.critical_left = table.left_quantile(0.5 * alpha);
      outcome.critical_right = table.right_quantile(0.5 * alpha);
      outcome.reject = outcome.statistic <= outcome.critical_left ||
                       outcome.statistic >= outcome.critical_right;
      break;
  }
  return outcome;
}

}  // namespace

TestOutcome run_test(const Sample& sample, double s, int k, double alpha,
                     const CriticalValueTable& table, Tail tail, int threads) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  require_no_duplicate_rows(sample);
  return decide(sample, s, k, alpha, table, tail, threads, false);
}

TestOutcome run_test_fresh_mc(const Sample& sample, double s, int k,
                              double alpha, std::size_t replicates,
                              const RandomStream& stream, Tail tail,
                              int threads) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  require_no_duplicate_rows(sample);
  const std::vector<double> alphas =
      tail == Tail::two_sided ? std::vector<double>{0.5 * alpha}
                              : std::vector<double>{alpha};
  const CriticalValueTable table =
      critical_values(static_cast<int>(sample.dim()), s, sample.n(), k, alphas,
                      replicates, stream, threads);
  return decide(sample, s, k, alpha, table, tail, threads, true);
}

std::string critical_value_table_to_json(const CriticalValueTable& table) {
  nlohmann::ordered_json j;
  j["schema"] = "ggentropy.critical-values.v1";
  j["library_version"] = std::string(library_version);
  j["dim"] = table.dim;
  j["shape"] = table.shape;
  j["n"] = table.n;
  j["k"] = table.k;
  j["replicates"] = table.replicates;
  j["master_seed"] = table.master_seed;
  j["stream_id"] = table.stream_id;
  j["alphas"] = table.alphas;
  j["left"] = table.left;
  j["right"] = table.right;
  return j.dump(2) + "\n";
}

CriticalValueTable critical_value_table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid critical-value table JSON: ") +
                     e.what());
  }
  if (j.value("schema", "") != "ggentropy.critical-values.v1") {
    throw ParseError("unrecognized critical-value table schema");
  }
  CriticalValueTable table;
  try {
    table.dim = j.at("dim").get<int>();
    table.shape = j.at("shape").get<double>();
    table.n = j.at("n").get<std::size_t>();
    table.k = j.at("k").get<int>();
    table.replicates = j.at("replicates").get<std::size_t>();
    table.master_seed = j.at("master_seed").get<std::uint64_t>();
    table.stream_id = j.at("stream_id").get<std::uint64_t>();
    table.alphas = j.at("alphas").get<std::vector<double>>();
    table.left = j.at("left").get<std::vector<double>>();
    table.right = j.at("right").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("incomplete critical-value table: ") +
                     e.what());
  }
  if (table.alphas.size() != table.left.size() ||
      table.alphas.size() != table.right.size()) {
    throw ParseError("critical-value table arrays have mismatched lengths");
  }
  return table;
}

void save_critical_value_table(const CriticalValueTable& table,
                               const std::string& path) {
  if (table.replicates < 1000) {
    throw ConfigError("persisted tables require at least 1000 replicates");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << critical_value_table_to_json(table);
  if (!out) throw ParseError("failed writing '" + path + "'");
}

CriticalValueTable load_critical_value_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return critical_value_table_from_json(buffer.str());
}

std::string test_outcome_to_json(const TestOutcome& outcome) {
  nlohmann::ordered_json j;
  j["schema"] = "ggentropy.test-outcome.v1";
  j["library_version"] = std::string(library_version);
  j["statistic"] = outcome.statistic;
  j["n"] = outcome.n;
  j["k"] = outcome.k;
  j["dim"] = outcome.dim;
  j["shape"] = outcome.shape;
  j["alpha"] = outcome.alpha;
  j["tail"] = tail_name(outcome.tail);
  if (outcome.tail == Tail::left || outcome.tail == Tail::two_sided) {
    j["critical_left"] = outcome.critical_left;
  }
  if (outcome.tail == Tail::right || outcome.tail == Tail::two_sided) {
    j["critical_right"] = outcome.critical_right;
  }
  j["reject"] = outcome.reject;
  j["critical_values"] = {
      {"source", outcome.fresh_mc ? "fresh-mc" : "table"},
      {"replicates", outcome.table_replicates},
      {"master_seed", outcome.table_master_seed},
      {"stream_id", outcome.table_stream_id},
  };
  return j.dump(2) + "\n";
}

}  // namespace ggentropy
