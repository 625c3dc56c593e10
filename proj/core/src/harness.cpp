#include "ggentropy/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ggentropy/distributions.hpp"
#include "ggentropy/errors.hpp"
#include "ggentropy/gof.hpp"
#include "ggentropy/io.hpp"
#include "ggentropy/normality.hpp"
#include "ggentropy/parallel.hpp"
#include "ggentropy/random.hpp"
#include "ggentropy/version.hpp"

namespace ggentropy {

namespace {

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;  // unbiased
};

MeanVar mean_var(const std::vector<double>& values) {
  MeanVar result;
  const double n = static_cast<double>(values.size());
  for (double v : values) result.mean += v;
  result.mean /= n;
  if (values.size() > 1) {
    for (double v : values) {
      result.var += (v - result.mean) * (v - result.mean);
    }
    result.var /= n - 1.0;
  }
  return result;
}

// One simulated statistic: data drawn from `data_s` / `data_nu`, the
// statistic evaluated at shape `test_s`.
struct StatItem {
  double test_s = 0.0;
  std::optional<double> data_s;
  std::optional<double> data_nu;
  std::size_t n = 0;
  int k = 0;
  std::size_t repetition = 0;
};

std::vector<double> simulate_statistics(const ExperimentConfig& config,
                                        const std::vector<StatItem>& items) {
  std::vector<double> values(items.size());
  const RandomStream root{config.master_seed, config_hash(config)};
  parallel_for(items.size(), config.threads, [&](std::size_t idx) {
    const StatItem& item = items[idx];
    const RandomStream stream = root.substream(idx);
    Sample sample =
        item.data_nu
            ? sample_st(STParams{config.dim, *item.data_nu}, item.n, stream)
            : sample_gg(GGParams::canonical(config.dim, *item.data_s), item.n,
                        stream);
    values[idx] = test_statistic(sample, item.test_s, item.k, 1);
  });
  return values;
}

void check_grid(const ExperimentConfig& config, bool need_s, bool need_s0,
                bool need_s1, bool need_nu, bool need_k) {
  if (config.dim < 1) throw ConfigError("experiment requires dim >= 1");
  if (config.n_schedule.empty()) {
    throw ConfigError("experiment requires a nonempty N schedule");
  }
  if (need_s && config.s_values.empty()) {
    throw ConfigError("experiment requires s values");
  }
  if (need_s0 && config.s0_values.empty()) {
    throw ConfigError("experiment requires s0 values");
  }
  if (need_s1 && config.s1_values.empty()) {
    throw ConfigError("experiment requires s1 values");
  }
  if (need_nu && config.nu_values.empty()) {
    throw ConfigError("experiment requires nu values");
  }
  if (need_k && config.k_values.empty()) {
    throw ConfigError("experiment requires k values");
  }
  if (config.repetitions < 1) {
    throw ConfigError("experiment requires repetitions >= 1");
  }
}

// consistency / misspec / student-t share the simulate-and-aggregate
// shape; they differ only in how the (test shape, data law) grid is built.
std::vector<ExperimentRow> run_statistic_experiment(
    const ExperimentConfig& config) {
  std::vector<StatItem> items;
  const auto add_grid_point = [&](double test_s, std::optional<double> data_s,
                                  std::optional<double> data_nu) {
    for (int k : config.k_values) {
      for (std::size_t n : config.n_schedule) {
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
          items.push_back(StatItem{test_s, data_s, data_nu, n, k, rep});
        }
      }
    }
  };

  if (config.experiment == "consistency") {
    check_grid(config, true, false, false, false, true);
    for (double s : config.s_values) add_grid_point(s, s, std::nullopt);
  } else if (config.experiment == "misspec") {
    check_grid(config, false, true, true, false, true);
    for (double s0 : config.s0_values) {
      for (double s1 : config.s1_values) add_grid_point(s0, s1, std::nullopt);
    }
  } else if (config.experiment == "student-t") {
    check_grid(config, false, true, false, true, true);
    for (double s0 : config.s0_values) {
      for (double nu : config.nu_values) {
        add_grid_point(s0, std::nullopt, nu);
      }
    }
  }

  const std::vector<double> values = simulate_statistics(config, items);

  std::vector<ExperimentRow> rows;
  std::size_t idx = 0;
  while (idx < items.size()) {
    // items arrive grouped: one (grid point, N) block of M repetitions.
    std::vector<double> block;
    const StatItem& head = items[idx];
    for (std::size_t rep = 0; rep < config.repetitions; ++rep, ++idx) {
      block.push_back(values[idx]);
      ExperimentRow row;
      row.experiment = config.experiment;
      row.dim = config.dim;
      row.s0 = head.test_s;
      row.s1 = head.data_s;
      row.nu = head.data_nu;
      row.n = head.n;
      row.k = head.k;
      row.repetition = rep;
      row.value = values[idx - rep + rep];
      row.value = block.back();
      rows.push_back(row);
    }
    const MeanVar agg = mean_var(block);
    ExperimentRow row;
    row.experiment = config.experiment;
    row.dim = config.dim;
    row.s0 = head.test_s;
    row.s1 = head.data_s;
    row.nu = head.data_nu;
    row.n = head.n;
    row.k = head.k;
    row.t_mean = agg.mean;
    row.t_var = agg.var;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ExperimentRow> run_normality_experiment(
    const ExperimentConfig& config) {
  check_grid(config, true, false, false, false, true);
  const RandomStream root{config.master_seed, config_hash(config)};

  std::vector<ExperimentRow> rows;
  std::size_t grid_index = 0;
  for (double s : config.s_values) {
    for (int k : config.k_values) {
      for (std::size_t n : config.n_schedule) {
        const std::vector<double> p_values = normality_of_t(
            config.dim, s, n, k, config.t_replicates, config.repetitions,
            root.substream(grid_index), config.threads);
        for (std::size_t rep = 0; rep < p_values.size(); ++rep) {
          ExperimentRow row;
          row.experiment = config.experiment;
          row.dim = config.dim;
          row.s0 = s;
          row.s1 = s;
          row.n = n;
          row.k = k;
          row.repetition = rep;
          row.value = p_values[rep];
          rows.push_back(row);
        }
        const MeanVar agg = mean_var(p_values);
        ExperimentRow row;
        row.experiment = config.experiment;
        row.dim = config.dim;
        row.s0 = s;
        row.s1 = s;
        row.n = n;
        row.k = k;
        row.t_mean = agg.mean;
        row.t_var = agg.var;
        rows.push_back(row);
        ++grid_index;
      }
    }
  }
  return rows;
}

std::vector<ExperimentRow> run_empirical_pdf_experiment(
    const ExperimentConfig& config) {
  check_grid(config, true, false, false, false, false);
  if (config.bins < 3) throw ConfigError("empirical-pdf requires bins >= 3");
  if (!(config.hist_halfwidth > 0.0)) {
    throw ConfigError("empirical-pdf requires hist_halfwidth > 0");
  }
  const RandomStream root{config.master_seed, config_hash(config)};

  std::vector<ExperimentRow> rows;
  std::size_t grid_index = 0;
  for (double s : config.s_values) {
    for (std::size_t n : config.n_schedule) {
      // Paper's sampler realizes tau = 1/2; sigma^2 = beta(m, s) is
      // exactly its per-coordinate variance, so the standardized sample
      // has unit coordinate variance.
      Sample sample = sample_gg(GGParams{config.dim, s, 0.5}, n,
                                root.substream(grid_index));
      if (config.standardize) {
        sample.scale(1.0 / std::sqrt(gg_variance_scale(config.dim, s)));
      }
      const double width = 2.0 * config.hist_halfwidth /
                           static_cast<double>(config.bins);
      std::vector<std::size_t> counts(config.bins, 0);
      for (std::size_t i = 0; i < sample.n(); ++i) {
        const double x = sample.at(i, 0);  // first coordinate marginal
        const double offset = (x + config.hist_halfwidth) / width;
        if (offset >= 0.0 &&
            offset < static_cast<double>(config.bins)) {
          ++counts[static_cast<std::size_t>(offset)];
        }
      }
      for (std::size_t b = 0; b < config.bins; ++b) {
        ExperimentRow row;
        row.experiment = config.experiment;
        row.dim = config.dim;
        row.s0 = s;
        row.s1 = s;
        row.n = n;
        row.x = -config.hist_halfwidth + (static_cast<double>(b) + 0.5) * width;
        row.value = static_cast<double>(counts[b]) /
                    (static_cast<double>(sample.n()) * width);
        rows.push_back(row);
      }
      ++grid_index;
    }
  }
  return rows;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

template <typename T>
std::string join_integers(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "consistency" || config.experiment == "misspec" ||
      config.experiment == "student-t") {
    return run_statistic_experiment(config);
  }
  if (config.experiment == "normality") {
    return run_normality_experiment(config);
  }
  if (config.experiment == "empirical-pdf") {
    return run_empirical_pdf_experiment(config);
  }
  throw ConfigError("unknown experiment '" + config.experiment + "'");
}

std::string config_canonical(const ExperimentConfig& config) {
  std::string out;
  out += "experiment=" + config.experiment;
  out += ";m=" + std::to_string(config.dim);
  out += ";s=" + join_doubles(config.s_values);
  out += ";s0=" + join_doubles(config.s0_values);
  out += ";s1=" + join_doubles(config.s1_values);
  out += ";nu=" + join_doubles(config.nu_values);
  out += ";N=" + join_integers(config.n_schedule);
  out += ";k=" + join_integers(config.k_values);
  out += ";repetitions=" + std::to_string(config.repetitions);
  out += ";t_replicates=" + std::to_string(config.t_replicates);
  out += ";bins=" + std::to_string(config.bins);
  out += ";hist_halfwidth=" + format_double(config.hist_halfwidth);
  out += ";standardize=" + std::string(config.standardize ? "1" : "0");
  return out;
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  const std::string canonical = config_canonical(config);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string experiment_csv(const ExperimentConfig& config,
                           const std::vector<ExperimentRow>& rows) {
  std::string out;
  out += "# ggentropy " + std::string(library_version) + "\n";
  out += "# seed=" + std::to_string(config.master_seed) +
         " config_hash=" + std::to_string(config_hash(config)) + "\n";
  out += "# " + config_canonical(config) + "\n";
  out += "experiment,m,s0,s1,nu,N,k,repetition,x,value,t_mean,t_var\n";
  const auto opt_double = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const ExperimentRow& row : rows) {
    out += row.experiment;
    out += ',' + std::to_string(row.dim);
    out += ',' + opt_double(row.s0);
    out += ',' + opt_double(row.s1);
    out += ',' + opt_double(row.nu);
    out += ',' + std::to_string(row.n);
    out += ',' + (row.k ? std::to_string(*row.k) : std::string());
    out += ',' + (row.repetition ? std::to_string(*row.repetition)
                                 : std::string());
    out += ',' + opt_double(row.x);
    out += ',' + opt_double(row.value);
    out += ',' + opt_double(row.t_mean);
    out += ',' + opt_double(row.t_var);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    values.push_back(std::stod(token));
  }
  return values;
}

}  // namespace

void apply_config_line(ExperimentConfig& config, const std::string& key,
                       const std::string& value) {
  try {
    if (key == "experiment") {
      config.experiment = value;
    } else if (key == "m" || key == "dim") {
      config.dim = std::stoi(value);
    } else if (key == "s") {
      config.s_values = parse_double_list(value);
    } else if (key == "s0") {
      config.s0_values = parse_double_list(value);
    } else if (key == "s1") {
      config.s1_values = parse_double_list(value);
    } else if (key == "nu") {
      config.nu_values = parse_double_list(value);
    } else if (key == "N" || key == "n") {
      config.n_schedule.clear();
      for (double v : parse_double_list(value)) {
        config.n_schedule.push_back(static_cast<std::size_t>(v));
      }
    } else if (key == "k") {
      config.k_values.clear();
      for (double v : parse_double_list(value)) {
        config.k_values.push_back(static_cast<int>(v));
      }
    } else if (key == "repetitions" || key == "M") {
      config.repetitions = static_cast<std::size_t>(std::stoull(value));
    } else if (key == "t_replicates") {
      config.t_replicates = static_cast<std::size_t>(std::stoull(value));
    } else if (key == "bins") {
      config.bins = static_cast<std::size_t>(std::stoull(value));
    } else if (key == "hist_halfwidth") {
      config.hist_halfwidth = std::stod(value);
    } else if (key == "standardize") {
      config.standardize = value == "1" || value == "true";
    } else if (key == "seed") {
      config.master_seed = std::stoull(value);
    } else if (key == "threads") {
      config.threads = std::stoi(value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid value '" + value + "' for config key '" + key +
                      "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("out-of-range value '" + value + "' for config key '" +
                      key + "'");
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  ExperimentConfig config;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    line.erase(line.begin(),
               std::find_if(line.begin(), line.end(), not_space));
    line.erase(std::find_if(line.rbegin(), line.rend(), not_space).base(),
               line.end());
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_number) +
                       ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), not_space).base(),
              key.end());
    value.erase(value.begin(),
                std::find_if(value.begin(), value.end(), not_space));
    apply_config_line(config, key, value);
  }
  return config;
}

}  // namespace ggentropy
