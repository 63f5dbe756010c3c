// Command-line front end: formulas, extremal constructions, packing checks,
// the exact solver, grid sweeps, the argmax-shape survey, and the induction
// audit. Exit codes: 0 success, 2 search budget exhausted, 1 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/harness.hpp"
#include "turan/jsonio.hpp"
#include "turan/packing.hpp"
#include "turan/solver.hpp"

using namespace turan;
using nlohmann::json;

namespace {

PartSizes parse_parts(const std::string& csv) {
  std::vector<int> sizes;
  for (const auto& tok : detail::split(csv, ','))
    sizes.push_back(std::stoi(tok));
  return PartSizes(sizes);
}

// "1,4;2,3" with 1-based part ids
BlockPartition parse_partition(const std::string& text, const PartSizes& ns) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : detail::split(text, ';')) {
    std::vector<int> ids;
    for (const auto& tok : detail::split(blk, ','))
      ids.push_back(std::stoi(tok) - 1);
    blocks.push_back(ids);
  }
  return BlockPartition::over(blocks, ns);
}

MultipartiteGraph read_graph(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidParameter, "cannot open " + path);
    ss << in.rdbuf();
  }
  return parse_graph(ss.str());
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(output_path);
    if (!out) fail(ErrorKind::InvalidParameter, "cannot write " + output_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipartite Turan numbers for disjoint cliques"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output, format = "json";
  int workers = 1;
  unsigned long long seed = 1;
  bool resume = false;
  app.add_option("--output", output,
                 "write the main result here instead of stdout");
  app.add_option("--format", format, "output format where both exist")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", workers, "worker threads for sweeps");
  app.add_option("--seed", seed,
                 "seed for the randomized property suites (accepted here for "
                 "interface parity; the test binaries consume it)");
  app.add_flag("--resume", resume, "resume a sweep from its output files");

  std::string parts_csv, partition_text, graph_path = "-", witness_out;
  int t = 3, k = 1;
  SearchBudget budget;
  double max_seconds = 0;

  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  formula->require_subcommand(1);
  auto add_parts = [&](CLI::App* cmd, bool need_t, bool need_k) {
    cmd->add_option("--parts", parts_csv, "comma-separated part sizes")
        ->required();
    if (need_t) cmd->add_option("--t", t, "clique order t");
    if (need_k) cmd->add_option("--k", k, "number of disjoint copies k");
  };
  auto* f_g = formula->add_subcommand("g", "4-part kK3 extremal value");
  add_parts(f_g, false, true);
  auto* f_bet = formula->add_subcommand("bet", "K_t-free extremal value");
  add_parts(f_bet, true, false);
  auto* f_conj =
      formula->add_subcommand("conj", "conjectured kK_t extremal value");
  add_parts(f_conj, true, true);
  auto* f_match = formula->add_subcommand("matching", "kK_2 extremal value");
  add_parts(f_match, false, true);

  auto* construct = app.add_subcommand("construct", "emit an extremal graph");
  construct->require_subcommand(1);
  std::map<std::string, CLI::App*> builders;
  for (const char* kind : {"g1", "g2", "conj", "bipartite", "complete"}) {
    auto* c = construct->add_subcommand(kind);
    c->add_option("--parts", parts_csv)->required();
    c->add_option("--t", t);
    c->add_option("--k", k);
    c->add_option("--partition", partition_text,
                  "blocks of 1-based part ids, e.g. 1,4;2,3 (sorted order)");
    builders[kind] = c;
  }

  auto* check = app.add_subcommand("check-packing", "decide kK_t containment");
  check->add_option("graph", graph_path, "graph file ('-' for stdin)");
  check->add_option("--k", k)->required();
  check->add_option("--t", t)->required();

  auto* analyze = app.add_subcommand("analyze", "rich-edge structure report");
  analyze->add_option("graph", graph_path);
  analyze->add_option("--k", k)->required();

  auto* solve = app.add_subcommand("solve", "exact extremal number");
  solve->add_option("--parts", parts_csv)->required();
  solve->add_option("--t", t);
  solve->add_option("--k", k);
  solve->add_option("--max-nodes", budget.max_nodes);
  solve->add_option("--max-seconds", max_seconds);
  unsigned long long incumbent = 0;
  auto* inc_opt = solve->add_option("--initial-incumbent", incumbent,
                                    "known-feasible edge count to seed pruning");
  solve->add_option("--vertex-cap", budget.vertex_cap);
  solve->add_option("--witness-out", witness_out,
                    "write the witness graph here");

  auto* sweep = app.add_subcommand("sweep", "verify a whole grid");
  std::vector<int> r_values{4};
  int t_min = 3, t_max = 3, k_min = 1, k_max = 1;
  int min_size = 1, max_size = 12, max_total = 14;
  std::string witnesses_path;
  sweep->add_option("--r", r_values, "part counts to sweep");
  sweep->add_option("--t-min", t_min);
  sweep->add_option("--t-max", t_max);
  sweep->add_option("--k-min", k_min);
  sweep->add_option("--k-max", k_max);
  sweep->add_option("--min-size", min_size);
  sweep->add_option("--max-size", max_size);
  sweep->add_option("--max-total", max_total);
  sweep->add_option("--max-nodes", budget.max_nodes);
  sweep->add_option("--max-seconds", max_seconds, "per-point wall clock limit");
  sweep->add_option("--vertex-cap", budget.vertex_cap);
  sweep->add_option("--witnesses", witnesses_path,
                    "witness JSONL path (default: <output>.jsonl)");

  auto* survey = app.add_subcommand("survey-shapes", "argmax-shape census");
  int srv_r = 5, min_entry = 1, max_entry = 20;
  survey->add_option("--r", srv_r);
  survey->add_option("--t", t);
  survey->add_option("--k", k);
  survey->add_option("--min-entry", min_entry);
  survey->add_option("--max-entry", max_entry);

  auto* audit = app.add_subcommand("audit", "progressive-induction audit");
  audit->add_option("graph", graph_path);
  audit->add_option("--k", k)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (max_seconds > 0) budget.max_seconds = max_seconds;

    if (f_g->parsed()) {
      FormulaResult r = g_value(parse_parts(parts_csv), k);
      emit(formula_json(r, to_string(r.term)).dump(2), output);
    } else if (f_bet->parsed()) {
      emit(formula_json(bet_value(parse_parts(parts_csv), t), "partition")
               .dump(2),
           output);
    } else if (f_conj->parsed()) {
      emit(formula_json(conj_value(parse_parts(parts_csv), t, k), "partition")
               .dump(2),
           output);
    } else if (f_match->parsed()) {
      FormulaResult r;
      r.value = matching_extremal_value(parse_parts(parts_csv), k);
      emit(formula_json(r, "closed-form").dump(2), output);
    } else if (construct->parsed()) {
      const PartSizes ns = parse_parts(parts_csv);
      const PartSizes sorted = ns.sorted();
      std::optional<BlockPartition> part;
      if (!partition_text.empty())
        part = parse_partition(partition_text, sorted);

      std::string kind;
      std::optional<MultipartiteGraph> g;
      json sidecar;
      if (builders["g1"]->parsed()) {
        kind = "g1";
        g = build_g1(ns, k);
        sidecar["partition"] = json::array({{1, 4}, {2, 3}});
      } else if (builders["g2"]->parsed()) {
        kind = "g2";
        g = build_g2(ns, k);
        sidecar["partition"] = json::array({{1}, {2, 3, 4}});
      } else if (builders["conj"]->parsed()) {
        kind = "conj";
        g = build_conjectured(ns, t, k, part);
        BlockPartition used = part ? *part : *conj_value(sorted, t, k).partition;
        sidecar["partition"] = partition_json(used);
      } else if (builders["bipartite"]->parsed()) {
        kind = "bipartite";
        BlockPartition used =
            part ? *part : optimal_bipartition(sorted).partition;
        g = build_bipartite_along(ns, used);
        sidecar["partition"] = partition_json(used);
      } else {
        kind = "complete";
        g = build_complete(ns);
        sidecar["partition"] = nullptr;
      }
      sidecar["kind"] = kind;
      sidecar["ns"] = g->parts().sizes();
      sidecar["k"] = k;
      sidecar["expected_edges"] = g->edge_count();
      emit(serialize_graph(*g), output);
      if (output.empty()) {
        std::cerr << sidecar.dump(2) << '\n';
      } else {
        std::ofstream side(output + ".json");
        side << sidecar.dump(2) << '\n';
      }
    } else if (check->parsed()) {
      MultipartiteGraph g = read_graph(graph_path);
      auto witness = find_clique_packing(g, k, t);
      if (!witness) {
        std::cout << "FREE\n";
      } else {
        std::cout << "NOT-FREE\n";
        for (const auto& c : witness->cliques) {
          std::cout << "clique:";
          for (int v : c) std::cout << ' ' << v;
          std::cout << '\n';
        }
      }
    } else if (analyze->parsed()) {
      MultipartiteGraph g = read_graph(graph_path);
      emit(rich_report_json(g, rich_edges(g, k)).dump(2), output);
    } else if (solve->parsed()) {
      if (inc_opt->count() > 0) budget.initial_incumbent = incumbent;
      ExtremalRecord rec = verify_point(parse_parts(parts_csv), t, k, budget);
      emit(record_json(rec).dump(2), output);
      if (!witness_out.empty() && rec.witness)
        emit(serialize_graph(*rec.witness), witness_out);
      if (rec.status == RecordStatus::BudgetExceeded) return 2;
    } else if (sweep->parsed()) {
      SweepSpec spec;
      spec.r_values = r_values;
      spec.t_min = t_min;
      spec.t_max = t_max;
      spec.k_min = k_min;
      spec.k_max = k_max;
      spec.min_size = min_size;
      spec.max_size = max_size;
      spec.max_total = max_total;
      spec.budget = budget;
      spec.workers = workers;
      spec.resume = resume;
      spec.csv_path = output;
      if (spec.csv_path.empty())
        fail(ErrorKind::InvalidParameter, "sweep requires --output CSV path");
      spec.jsonl_path =
          witnesses_path.empty() ? spec.csv_path + ".jsonl" : witnesses_path;
      SweepReport rep = run_sweep(spec);
      std::cout << "points: " << rep.records.size()
                << "  reloaded: " << rep.reloaded
                << "  deviations: " << rep.deviations.size() << '\n';
      for (std::size_t i : rep.deviations) {
        const ExtremalRecord& r = rep.records[i];
        const char* tag =
            r.status == RecordStatus::ExceedsFormula ? "FINDING" : "deviation";
        std::cout << tag << ' ' << r.ns.to_string() << " t=" << r.t
                  << " k=" << r.k << ' ' << status_token(r) << '\n';
      }
      if (rep.any_budget_exceeded) return 2;
    } else if (survey->parsed()) {
      ShapeCensus census = shape_survey(srv_r, t, k, min_entry, max_entry);
      if (format == "csv") {
        std::string csv = "shape,witness_sizes,count\n";
        for (const auto& [shape, entry] : census) {
          std::string sh, ws;
          for (std::size_t i = 0; i < shape.size(); ++i)
            sh += (i ? "+" : "") + std::to_string(shape[i]);
          for (std::size_t i = 0; i < entry.witness_sizes.size(); ++i)
            ws += (i ? "-" : "") + std::to_string(entry.witness_sizes[i]);
          csv += sh + ',' + ws + ',' + std::to_string(entry.count) + '\n';
        }
        emit(csv, output);
      } else {
        emit(census_json(census).dump(2), output);
      }
    } else if (audit->parsed()) {
      MultipartiteGraph g = read_graph(graph_path);
      emit(audit_json(audit_induction(g, k)).dump(2), output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
