// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qosd/harness.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "qosd/error.h"
#include "qosd/exec.h"
#include "qosd/rng.h"
#include "qosd/shortest_path.h"

namespace qosd {
namespace {

std::string Trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> Words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename T>
T ParseNumber(const std::string& text, int line) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw QosdError(ErrorKind::kParse, "line " + std::to_string(line) +
                                           ": bad number '" + text + "'");
  }
  return value;
}

bool ParseFlag(const std::string& text, int line) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw QosdError(ErrorKind::kParse, "line " + std::to_string(line) +
                                         ": expected 0/1, got '" + text + "'");
}

std::string FormatSeconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

std::string SourceModel(const InstanceSpec& spec) {
  if (spec.source == SourceKind::kInstanceFile) return "instance";
  return std::string(WeightRecipeName(spec.recipe));
}

}  // namespace

QosdInstance BuildInstance(const InstanceSpec& spec, Weight threshold,
                           uint64_t seed, const LoadedGraph* preloaded) {
  if (spec.source == SourceKind::kInstanceFile) {
    return ReadInstanceFile(spec.path);
  }
  LoadedGraph loaded;
  if (!preloaded) {
    if (spec.source == SourceKind::kEr) {
      loaded.graph =
          GenerateErdosRenyi(spec.nodes, spec.rho, MixSeed({seed, 1}));
      for (int i = 0; i < spec.nodes; ++i) loaded.original_ids.push_back(i);
    } else {
      loaded = LoadEdgeListFile(spec.path, spec.directed);
    }
    preloaded = &loaded;
  }
  std::vector<WeightFunction> weights =
      BuildWeights(preloaded->graph, spec.recipe, threshold,
                   spec.weight_options, MixSeed({seed, 2}));
  std::vector<NodePair> pairs;
  if (!spec.pairs_path.empty()) {
    std::ifstream in(spec.pairs_path);
    if (!in) {
      throw QosdError(ErrorKind::kParse, "cannot open " + spec.pairs_path);
    }
    pairs = ReadPairs(in, *preloaded);
  } else {
    pairs = SamplePairs(preloaded->graph, spec.pair_count, MixSeed({seed, 3}));
  }
  return QosdInstance(preloaded->graph, std::move(weights), std::move(pairs),
                      threshold);
}

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != "qosd-config v1") {
    throw QosdError(ErrorKind::kParse, "expected header 'qosd-config v1'");
  }
  ExperimentConfig c;
  InstanceSpec& s = c.instance;
  int number = 1;
  const std::map<std::string, std::function<void(const std::string&)>> setters =
      {
          {"source",
           [&](const std::string& v) {
             if (v == "er") {
               s.source = SourceKind::kEr;
             } else if (v == "edges") {
               s.source = SourceKind::kEdgeList;
             } else if (v == "instance") {
               s.source = SourceKind::kInstanceFile;
             } else {
               throw QosdError(ErrorKind::kParse,
                               "line " + std::to_string(number) +
                                   ": unknown source '" + v + "'");
             }
           }},
          {"nodes",
           [&](const std::string& v) {
             s.nodes = ParseNumber<int>(v, number);
           }},
          {"rho",
           [&](const std::string& v) {
             s.rho = ParseNumber<double>(v, number);
           }},
          {"path", [&](const std::string& v) { s.path = v; }},
          {"directed",
           [&](const std::string& v) { s.directed = ParseFlag(v, number); }},
          {"pairs_file", [&](const std::string& v) { s.pairs_path = v; }},
          {"pairs",
           [&](const std::string& v) {
             s.pair_count = ParseNumber<int>(v, number);
           }},
          {"model",
           [&](const std::string& v) {
             const auto r = ParseWeightRecipe(v);
             if (!r) {
               throw QosdError(ErrorKind::kParse,
                               "line " + std::to_string(number) +
                                   ": unknown weight model '" + v + "'");
             }
             s.recipe = *r;
           }},
          {"beta",
           [&](const std::string& v) {
             s.weight_options.linear_beta = ParseNumber<Weight>(v, number);
           }},
          {"max_cap",
           [&](const std::string& v) {
             const int cap = ParseNumber<int>(v, number);
             s.weight_options.max_cap =
                 cap > 0 ? std::optional<int>(cap) : std::nullopt;
           }},
          {"thresholds",
           [&](const std::string& v) {
             c.thresholds.clear();
             for (const std::string& w : Words(v)) {
               c.thresholds.push_back(ParseNumber<Weight>(w, number));
             }
           }},
          {"algorithms",
           [&](const std::string& v) {
             c.algorithms.clear();
             for (const std::string& w : Words(v)) {
               const auto a = ParseAlgorithm(w);
               if (!a) {
                 throw QosdError(ErrorKind::kParse,
                                 "line " + std::to_string(number) +
                                     ": unknown algorithm '" + w + "'");
               }
               c.algorithms.push_back(*a);
             }
           }},
          {"repetitions",
           [&](const std::string& v) {
             c.repetitions = ParseNumber<int>(v, number);
           }},
          {"seed",
           [&](const std::string& v) {
             c.master_seed = ParseNumber<uint64_t>(v, number);
           }},
          {"time_limit",
           [&](const std::string& v) {
             c.time_limit_s = ParseNumber<double>(v, number);
           }},
          {"oracle",
           [&](const std::string& v) { c.with_oracle = ParseFlag(v, number); }},
          {"threads",
           [&](const std::string& v) {
             c.threads = ParseNumber<int>(v, number);
           }},
          {"parallel_runs",
           [&](const std::string& v) {
             c.parallel_runs = ParseNumber<int>(v, number);
           }},
          {"output", [&](const std::string& v) { c.output = v; }},
          {"max_outer_iterations",
           [&](const std::string& v) {
             c.params.iterative.max_outer_iterations =
                 ParseNumber<int64_t>(v, number);
           }},
          {"sa.q",
           [&](const std::string& v) {
             c.params.sa.q = ParseNumber<int>(v, number);
           }},
          {"sa.alpha",
           [&](const std::string& v) {
             c.params.sa.alpha = ParseNumber<double>(v, number);
           }},
          {"sa.epsilon",
           [&](const std::string& v) {
             c.params.sa.epsilon = ParseNumber<double>(v, number);
           }},
          {"sa.delta",
           [&](const std::string& v) {
             c.params.sa.delta = ParseNumber<double>(v, number);
           }},
          {"sa.samples",
           [&](const std::string& v) {
             c.params.sa.samples_per_round = ParseNumber<int64_t>(v, number);
           }},
          {"sa.mode",
           [&](const std::string& v) {
             if (v == "practical") {
               c.params.sa.mode = SampleMode::kPractical;
             } else if (v == "theoretical") {
               c.params.sa.mode = SampleMode::kTheoretical;
             } else {
               throw QosdError(ErrorKind::kParse,
                               "line " + std::to_string(number) +
                                   ": unknown sample mode '" + v + "'");
             }
           }},
          {"lr.delta",
           [&](const std::string& v) {
             c.params.lr.delta = ParseNumber<double>(v, number);
           }},
          {"lr.eta",
           [&](const std::string& v) {
             const double eta = ParseNumber<double>(v, number);
             c.params.lr.eta_override =
                 eta > 0.0 ? std::optional<double>(eta) : std::nullopt;
           }},
          {"lr.retries",
           [&](const std::string& v) {
             c.params.lr.max_retries = ParseNumber<int>(v, number);
           }},
  };
  while (std::getline(in, line)) {
    ++number;
    const std::string t = Trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    const size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw QosdError(ErrorKind::kParse, "line " + std::to_string(number) +
                                             ": expected key = value");
    }
    const std::string key = Trim(t.substr(0, eq));
    const std::string value = Trim(t.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw QosdError(ErrorKind::kParse, "line " + std::to_string(number) +
                                             ": unknown key '" + key + "'");
    }
    it->second(value);
  }
  if (c.repetitions < 1) {
    throw QosdError(ErrorKind::kParse, "repetitions must be >= 1");
  }
  if (c.thresholds.empty() || c.algorithms.empty()) {
    throw QosdError(ErrorKind::kParse,
                    "thresholds and algorithms are required");
  }
  if (s.source != SourceKind::kEr && s.path.empty()) {
    throw QosdError(ErrorKind::kParse, "path is required for this source");
  }
  return c;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QosdError(ErrorKind::kParse, "cannot open " + path);
  return ParseExperimentConfig(in);
}

uint64_t DeriveRunSeed(uint64_t master, Weight threshold, int repetition,
                       uint64_t stream) {
  return MixSeed({master, static_cast<uint64_t>(threshold),
                  static_cast<uint64_t>(repetition), stream});
}

std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config) {
  std::optional<LoadedGraph> shared;
  if (config.instance.source == SourceKind::kEdgeList) {
    shared = LoadEdgeListFile(config.instance.path, config.instance.directed);
  }

  struct Cell {
    Weight threshold;
    int repetition;
    std::optional<QosdInstance> instance;
    std::string failure;
    std::optional<int64_t> opt;
  };
  std::vector<Cell> cells;
  for (const Weight t : config.thresholds) {
    for (int rep = 0; rep < config.repetitions; ++rep) {
      Cell cell{t, rep, std::nullopt, "", std::nullopt};
      try {
        cell.instance.emplace(BuildInstance(
            config.instance, t,
            DeriveRunSeed(config.master_seed, t, rep, kInstanceStream),
            shared ? &*shared : nullptr));
      } catch (const QosdError& e) {
        cell.failure = ErrorKindName(e.kind());
      }
      cells.push_back(std::move(cell));
    }
  }

  std::vector<Algorithm> order;
  if (config.with_oracle) order.push_back(Algorithm::kOracle);
  for (const Algorithm a : config.algorithms) {
    if (a != Algorithm::kOracle || !config.with_oracle) order.push_back(a);
  }

  std::vector<ExperimentRow> rows(cells.size() * order.size());
  auto run_one = [&](int64_t index) {
    const Cell& cell = cells[index / order.size()];
    const Algorithm algorithm = order[index % order.size()];
    ExperimentRow& row = rows[index];
    row.algorithm = std::string(AlgorithmName(algorithm));
    row.model = SourceModel(config.instance);
    row.threshold = cell.threshold;
    row.seed = DeriveRunSeed(config.master_seed, cell.threshold,
                             cell.repetition, static_cast<uint64_t>(algorithm));
    if (!cell.instance) {
      row.extras["status"] = cell.failure;
      return;
    }
    const QosdInstance& inst = *cell.instance;
    row.n = inst.node_count();
    row.m = inst.edge_count();
    row.threshold = inst.threshold();
    row.k = inst.pair_count();
    ExecContext ctx;
    ctx.threads = config.threads;
    ctx.deadline = Deadline::After(config.time_limit_s);
    const auto start = std::chrono::steady_clock::now();
    try {
      RunReport report = Solve(inst, algorithm, config.params, row.seed, ctx);
      row.norm = report.norm;
      row.outer_iterations = report.outer_iterations;
      row.inner_iterations = report.inner_iterations;
      row.extras = report.extras;
      // Independent of the solver's own certification.
      row.feasible = IsFeasibleSolution(inst, report.budget);
      row.budget = std::move(report.budget);
      row.extras["status"] = "ok";
    } catch (const QosdError& e) {
      row.extras["status"] = ErrorKindName(e.kind());
    }
    row.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
  };

  // The oracle column first, so every row of a cell can carry opt=.
  const int64_t total = static_cast<int64_t>(rows.size());
  ExecContext outer;
  outer.threads = std::max(1, config.parallel_runs);
  if (config.with_oracle) {
    ParallelFor(static_cast<int64_t>(cells.size()), outer, [&](int64_t c) {
      run_one(c * static_cast<int64_t>(order.size()));
    });
    for (size_t c = 0; c < cells.size(); ++c) {
      const ExperimentRow& row = rows[c * order.size()];
      if (row.extras.at("status") == "ok") cells[c].opt = row.norm;
    }
  }
  ParallelFor(total, outer, [&](int64_t i) {
    if (config.with_oracle && i % static_cast<int64_t>(order.size()) == 0) {
      return;
    }
    run_one(i);
  });
  for (int64_t i = 0; i < total; ++i) {
    const Cell& cell = cells[i / order.size()];
    if (cell.opt) rows[i].extras["opt"] = std::to_string(*cell.opt);
  }
  return rows;
}

std::string FormatExtras(const std::map<std::string, std::string>& extras) {
  std::string out;
  for (const auto& [key, value] : extras) {
    if (!out.empty()) out += ';';
    out += key + '=' + value;
  }
  return out;
}

void WriteCsv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ExperimentRow& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.model << ','
        << r.threshold << ',' << r.k << ',' << r.seed << ',' << r.norm << ','
        << r.outer_iterations << ',' << r.inner_iterations << ','
        << FormatSeconds(r.wall_time_s) << ',' << (r.feasible ? 1 : 0) << ','
        << FormatExtras(r.extras) << '\n';
  }
}

}  // namespace qosd
