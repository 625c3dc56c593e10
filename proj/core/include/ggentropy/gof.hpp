#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggentropy/random.hpp"
#include "ggentropy/sample.hpp"

namespace ggentropy {

// Rejection region side. Under a false null the statistic converges to a
// strictly negative constant, so the powered default is the left tail;
// right and two-sided remain selectable.
enum class Tail { left, right, two_sided };

std::string tail_name(Tail tail);
Tail tail_from_name(const std::string& name);

// Empirical null quantiles of T for one (m, s, N, k), both tails, at the
// requested significance levels. Regeneration from the same stream is
// bit-identical.
struct CriticalValueTable {
  int dim = 0;
  double shape = 0.0;  // s
  std::size_t n = 0;
  int k = 0;
  std::size_t replicates = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
  std::vector<double> alphas;        // sorted ascending
  std::vector<double> left;          // alpha-quantiles (lower tail)
  std::vector<double> right;         // (1-alpha)-quantiles (upper tail)

  double left_quantile(double alpha) const;
  double right_quantile(double alpha) const;
  bool has_alpha(double alpha) const;
};

struct TestOutcome {
  double statistic = 0.0;
  std::size_t n = 0;
  int k = 0;
  int dim = 0;
  double shape = 0.0;
  double alpha = 0.0;
  Tail tail = Tail::left;
  double critical_left = 0.0;   // populated for left / two-sided
  double critical_right = 0.0;  // populated for right / two-sided
  bool reject = false;
  // Provenance of the critical values used for the decision.
  std::size_t table_replicates = 0;
  std::uint64_t table_master_seed = 0;
  std::uint64_t table_stream_id = 0;
  bool fresh_mc = false;
};

// (1/N) sum ||X_i||^s.
double sample_moment(const Sample& sample, double s);

// T_{N,k} = H_hat_{N,k} - (m/s) log sample_moment - (m/s) log c1(m, s).
double test_statistic(const Sample& sample, double s, int k, int threads = 0);

// Simulates `replicates` draws of T under the null (canonical GG(m, s),
// which by scale invariance covers every rate) and returns empirical
// quantiles for each alpha and both tails. Replicate j draws from
// stream.substream(j), so results are independent of thread scheduling.
CriticalValueTable critical_values(int dim, double shape, std::size_t n, int k,
                                   std::vector<double> alphas,
                                   std::size_t replicates,
                                   const RandomStream& stream,
                                   int threads = 0);

// Decision against a precomputed table; the table key (m, s, N, k) must
// match the data exactly and the requested alpha (alpha/2 for two-sided)
// must be present.
TestOutcome run_test(const Sample& sample, double s, int k, double alpha,
                     const CriticalValueTable& table, Tail tail = Tail::left,
                     int threads = 0);

// Decision with critical values simulated inline from `stream`.
TestOutcome run_test_fresh_mc(const Sample& sample, double s, int k,
                              double alpha, std::size_t replicates,
                              const RandomStream& stream,
                              Tail tail = Tail::left, int threads = 0);

// JSON persistence. Saved tables must hold at least 1000 replicates.
std::string critical_value_table_to_json(const CriticalValueTable& table);
CriticalValueTable critical_value_table_from_json(const std::string& text);
void save_critical_value_table(const CriticalValueTable& table,
                               const std::string& path);
CriticalValueTable load_critical_value_table(const std::string& path);

std::string test_outcome_to_json(const TestOutcome& outcome);

}  // namespace ggentropy
