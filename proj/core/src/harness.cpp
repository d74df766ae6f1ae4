#include "moldsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "moldsched/baselines.hpp"
#include "moldsched/cmax_bound.hpp"
#include "moldsched/io.hpp"
#include "moldsched/lp_bound.hpp"
#include "moldsched/rng.hpp"

namespace moldsched {

std::string workload_tag(const WorkloadModel& workload) {
  std::string tag = workload.seq == SeqModel::Uniform1to10 ? "uniform" : "mixed";
  tag += '-';
  switch (workload.par) {
    case ParModel::Highly: tag += "high"; break;
    case ParModel::Weakly: tag += "weak"; break;
    case ParModel::MixedByClass: tag += "mixed"; break;
  }
  return tag;
}

WorkloadModel parse_workload_tag(const std::string& tag) {
  const auto dash = tag.find('-');
  if (dash == std::string::npos)
    throw std::invalid_argument("workload tag must look like 'uniform-weak': " + tag);
  const std::string seq = tag.substr(0, dash);
  const std::string par = tag.substr(dash + 1);
  WorkloadModel workload;
  if (seq == "uniform")
    workload.seq = SeqModel::Uniform1to10;
  else if (seq == "mixed")
    workload.seq = SeqModel::MixedGaussian;
  else
    throw std::invalid_argument("unknown sequential model: " + seq);
  if (par == "high")
    workload.par = ParModel::Highly;
  else if (par == "weak")
    workload.par = ParModel::Weakly;
  else if (par == "mixed")
    workload.par = ParModel::MixedByClass;
  else
    throw std::invalid_argument("unknown parallelism model: " + par);
  return workload;
}

std::vector<std::string> algorithm_names() {
  return {"bicriteria", "gang", "seq-lptf", "list-shelf", "list-wlptf", "list-saf"};
}

Schedule run_algorithm(const std::string& name, const Instance& instance,
                       const BicriteriaOptions& options) {
  if (name == "bicriteria") return schedule_bicriteria(instance, options);
  if (name == "gang") return schedule_gang(instance);
  if (name == "seq-lptf") return schedule_sequential_lptf(instance);
  if (name == "list-shelf") return schedule_list_variant(instance, ListOrder::ShelfOrder);
  if (name == "list-wlptf") return schedule_list_variant(instance, ListOrder::WeightedLPTF);
  if (name == "list-saf") return schedule_list_variant(instance, ListOrder::SmallestAreaFirst);
  throw std::invalid_argument("unknown algorithm: " + name);
}

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.workloads = {
      parse_workload_tag("uniform-weak"),
      parse_workload_tag("uniform-high"),
      parse_workload_tag("mixed-mixed"),
      parse_workload_tag("uniform-mixed"),
  };
  config.algorithms = algorithm_names();
  return config;
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

ExperimentConfig read_config(std::istream& in) {
  ExperimentConfig config = default_config();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": expected 'key = value'";
      throw std::runtime_error(msg.str());
    }
    auto trim = [](std::string text) {
      const auto begin = text.find_first_not_of(" \t\r");
      const auto end = text.find_last_not_of(" \t\r");
      if (begin == std::string::npos) return std::string();
      return text.substr(begin, end - begin + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "m") {
        config.m = std::stoi(value);
      } else if (key == "tasks") {
        config.task_counts.clear();
        for (const auto& token : split_tokens(value)) config.task_counts.push_back(std::stoi(token));
      } else if (key == "runs") {
        config.runs_per_point = std::stoi(value);
      } else if (key == "workloads") {
        config.workloads.clear();
        for (const auto& token : split_tokens(value))
          config.workloads.push_back(parse_workload_tag(token));
      } else if (key == "algorithms") {
        config.algorithms = split_tokens(value);
        for (const auto& name : config.algorithms) {
          const auto known = algorithm_names();
          if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown algorithm: " + name);
        }
      } else if (key == "base_seed") {
        config.base_seed = std::stoull(value);
      } else if (key == "shuffles") {
        config.shuffle_rounds = std::stoi(value);
      } else if (key == "min_seq_time") {
        config.min_seq_time = std::stod(value);
      } else {
        throw std::invalid_argument("unknown key: " + key);
      }
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": " << e.what();
      throw std::runtime_error(msg.str());
    }
  }
  if (config.m < 1 || config.runs_per_point < 1 || config.task_counts.empty() ||
      config.workloads.empty() || config.algorithms.empty())
    throw std::runtime_error("config: m, runs, tasks, workloads, algorithms must be nonempty");
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_config(in);
}

std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& workload, int n, int run) {
  // FNV-1a folds the tag; splitmix64 whitens each component in turn.
  std::uint64_t tag_hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : workload) {
    tag_hash ^= c;
    tag_hash *= 0x100000001b3ULL;
  }
  std::uint64_t state = base_seed;
  (void)splitmix64(state);
  state ^= tag_hash;
  (void)splitmix64(state);
  state ^= static_cast<std::uint64_t>(n);
  (void)splitmix64(state);
  state ^= static_cast<std::uint64_t>(run);
  return splitmix64(state);
}

namespace {

struct Point {
  WorkloadModel workload;
  int n = 0;
  int run = 0;
};

std::vector<ResultRow> run_point(const ExperimentConfig& config, const Point& point) {
  const std::string tag = workload_tag(point.workload);
  const std::uint64_t seed = derive_seed(config.base_seed, tag, point.n, point.run);

  WorkloadSpec spec;
  spec.n = point.n;
  spec.m = config.m;
  spec.seq_model = point.workload.seq;
  spec.par_model = point.workload.par;
  spec.seed = seed;
  spec.min_seq_time = config.min_seq_time;

  std::vector<ResultRow> rows;
  ResultRow base;
  base.workload = tag;
  base.n = point.n;
  base.run = point.run;
  base.seed = seed;

  Instance instance;
  try {
    instance = gen_instance(spec).instance;
    base.cmax_bound = cmax_lower_bound(instance).value;
    base.minsum_bound = minsum_lower_bound(instance);
  } catch (const std::exception& e) {
    base.status = std::string("bounds: ") + e.what();
    for (const auto& name : config.algorithms) {
      ResultRow row = base;
      row.algorithm = name;
      rows.push_back(std::move(row));
    }
    return rows;
  }

  BicriteriaOptions options;
  options.shuffle_rounds = config.shuffle_rounds;
  options.seed = seed;

  for (const auto& name : config.algorithms) {
    ResultRow row = base;
    row.algorithm = name;
    try {
      const auto start = std::chrono::steady_clock::now();
      const Schedule schedule = run_algorithm(name, instance, options);
      const auto stop = std::chrono::steady_clock::now();
      row.runtime_seconds = std::chrono::duration<double>(stop - start).count();
      const auto obj = objectives_unchecked(instance, schedule);
      row.makespan = obj.makespan;
      row.minsum = obj.minsum;
    } catch (const std::exception& e) {
      row.status = e.what();
      std::replace(row.status.begin(), row.status.end(), ',', ';');
      std::replace(row.status.begin(), row.status.end(), '\n', ' ');
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config, int jobs) {
  std::vector<Point> points;
  for (const auto& workload : config.workloads)
    for (int n : config.task_counts)
      for (int run = 0; run < config.runs_per_point; ++run) points.push_back({workload, n, run});

  std::vector<std::vector<ResultRow>> per_point(points.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) per_point[i] = run_point(config, points[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= points.size()) return;
        per_point[i] = run_point(config, points[i]);
      }
    };
    std::vector<std::thread> threads;
    const int count = std::min<int>(jobs, static_cast<int>(points.size()));
    threads.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }

  std::vector<ResultRow> rows;
  for (auto& chunk : per_point)
    for (auto& row : chunk) rows.push_back(std::move(row));
  // Canonical order, independent of scheduling of the workers.
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.workload != b.workload) return a.workload < b.workload;
    if (a.n != b.n) return a.n < b.n;
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    return a.run < b.run;
  });
  return rows;
}

std::vector<RatioPoint> summarize(const std::vector<ResultRow>& rows) {
  struct Accumulator {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double sum_obj = 0.0;
    double sum_bound = 0.0;
    bool any = false;
  };
  std::map<std::tuple<std::string, int, std::string, std::string>, Accumulator> acc;

  for (const auto& row : rows) {
    if (row.status != "ok")
      throw std::invalid_argument("summarize: row with error status for " + row.workload);
    for (const std::string criterion : {"makespan", "minsum"}) {
      const double objective = criterion == "makespan" ? row.makespan : row.minsum;
      const double bound = criterion == "makespan" ? row.cmax_bound : row.minsum_bound;
      if (!(bound > 0.0))
        throw std::invalid_argument("summarize: nonpositive bound for " + row.workload);
      auto& slot = acc[{row.workload, row.n, row.algorithm, criterion}];
      const double ratio = objective / bound;
      if (!slot.any) {
        slot.min_ratio = slot.max_ratio = ratio;
        slot.any = true;
      } else {
        slot.min_ratio = std::min(slot.min_ratio, ratio);
        slot.max_ratio = std::max(slot.max_ratio, ratio);
      }
      slot.sum_obj += objective;
      slot.sum_bound += bound;
    }
  }

  std::vector<RatioPoint> summary;
  summary.reserve(acc.size());
  for (const auto& [key, slot] : acc) {
    RatioPoint point;
    point.workload = std::get<0>(key);
    point.n = std::get<1>(key);
    point.algorithm = std::get<2>(key);
    point.criterion = std::get<3>(key);
    point.min_ratio = slot.min_ratio;
    point.max_ratio = slot.max_ratio;
    point.avg_ratio = slot.sum_obj / slot.sum_bound;
    summary.push_back(std::move(point));
  }
  return summary;
}

namespace {
constexpr const char* kResultsHeader =
    "workload,n,algorithm,run,seed,makespan,minsum,cmax_bound,minsum_bound,"
    "runtime_seconds,status";
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultsHeader << '\n';
  for (const auto& row : rows) {
    out << row.workload << ',' << row.n << ',' << row.algorithm << ',' << row.run << ','
        << row.seed << ',' << format_double(row.makespan) << ',' << format_double(row.minsum)
        << ',' << format_double(row.cmax_bound) << ',' << format_double(row.minsum_bound) << ','
        << format_double(row.runtime_seconds) << ',' << row.status << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader)
    throw std::runtime_error("results csv: bad header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t begin = 0;
    for (;;) {
      const auto comma = line.find(',', begin);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(begin));
        break;
      }
      fields.push_back(line.substr(begin, comma - begin));
      begin = comma + 1;
    }
    if (fields.size() != 11) throw std::runtime_error("results csv: bad field count");
    ResultRow row;
    row.workload = fields[0];
    row.n = std::stoi(fields[1]);
    row.algorithm = fields[2];
    row.run = std::stoi(fields[3]);
    row.seed = std::stoull(fields[4]);
    row.makespan = std::stod(fields[5]);
    row.minsum = std::stod(fields[6]);
    row.cmax_bound = std::stod(fields[7]);
    row.minsum_bound = std::stod(fields[8]);
    row.runtime_seconds = std::stod(fields[9]);
    row.status = fields[10];
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<RatioPoint>& summary) {
  out << "workload,n,algorithm,criterion,min_ratio,max_ratio,avg_ratio\n";
  for (const auto& point : summary) {
    out << point.workload << ',' << point.n << ',' << point.algorithm << ',' << point.criterion
        << ',' << format_double(point.min_ratio) << ',' << format_double(point.max_ratio) << ','
        << format_double(point.avg_ratio) << '\n';
  }
}

void emit_outputs(const std::string& out_dir, const std::vector<ResultRow>& rows,
                  const std::vector<RatioPoint>& summary, bool gnuplot_script) {
  namespace fs = std::filesystem;
  const fs::path root(out_dir);
  std::error_code ec;
  fs::create_directories(root / "plots", ec);
  if (ec) throw std::runtime_error("cannot create " + (root / "plots").string() + ": " + ec.message());

  auto open = [](const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
  };

  {
    auto out = open(root / "results.csv");
    write_results_csv(out, rows);
  }
  {
    auto out = open(root / "summary.csv");
    write_summary_csv(out, summary);
  }

  // One plot-data file per (workload, criterion): x = n, then min/avg/max
  // per algorithm in a fixed order.
  std::vector<std::string> workloads;
  std::vector<int> ns;
  std::vector<std::string> algorithms;
  for (const auto& point : summary) {
    if (std::find(workloads.begin(), workloads.end(), point.workload) == workloads.end())
      workloads.push_back(point.workload);
    if (std::find(ns.begin(), ns.end(), point.n) == ns.end()) ns.push_back(point.n);
    if (std::find(algorithms.begin(), algorithms.end(), point.algorithm) == algorithms.end())
      algorithms.push_back(point.algorithm);
  }
  std::sort(workloads.begin(), workloads.end());
  std::sort(ns.begin(), ns.end());
  std::sort(algorithms.begin(), algorithms.end());

  auto find_point = [&summary](const std::string& workload, int n, const std::string& algorithm,
                               const std::string& criterion) -> const RatioPoint* {
    for (const auto& point : summary)
      if (point.workload == workload && point.n == n && point.algorithm == algorithm &&
          point.criterion == criterion)
        return &point;
    return nullptr;
  };

  std::vector<std::string> plot_files;
  for (const auto& workload : workloads) {
    for (const std::string criterion : {"makespan", "minsum"}) {
      const std::string name = workload + "_" + criterion + ".dat";
      auto out = open(root / "plots" / name);
      out << "# performance ratios vs lower bound: " << workload << ", " << criterion << '\n';
      out << "# n";
      for (const auto& algorithm : algorithms)
        out << ' ' << algorithm << "_min " << algorithm << "_avg " << algorithm << "_max";
      out << '\n';
      for (int n : ns) {
        out << n;
        for (const auto& algorithm : algorithms) {
          const auto* point = find_point(workload, n, algorithm, criterion);
          if (point)
            out << ' ' << format_double(point->min_ratio) << ' ' << format_double(point->avg_ratio)
                << ' ' << format_double(point->max_ratio);
          else
            out << " nan nan nan";
        }
        out << '\n';
      }
      plot_files.push_back(name);
    }
  }

  if (gnuplot_script) {
    auto out = open(root / "plots" / "render.gp");
    out << "# gnuplot script: ratio curves per workload and criterion\n";
    out << "set terminal pngcairo size 900,600\nset key outside\nset xlabel 'tasks'\n";
    for (const auto& name : plot_files) {
      const std::string base = name.substr(0, name.size() - 4);
      out << "set output '" << base << ".png'\nset ylabel 'ratio'\nplot";
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        const std::size_t col = 2 + 3 * a;  // avg column of algorithm a
        out << (a == 0 ? " " : ", ") << '\'' << name << "' using 1:" << col + 1
            << " with linespoints title '" << algorithms[a] << '\'';
      }
      out << '\n';
    }
  }
}

}  // namespace moldsched
