#pragma once

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "turan/solver.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// sweep

struct SweepSpec {
  std::vector<int> r_values{4};
  int t_min = 3, t_max = 3;
  int k_min = 1, k_max = 1;
  int min_size = 1, max_size = 12;
  int max_total = 14;  // cap on the vertex total of each grid point
  SearchBudget budget;
  std::string csv_path;    // empty: keep results in memory only
  std::string jsonl_path;  // witness stream; empty: skip
  bool resume = false;
  int workers = 1;
};

struct SweepPoint {
  std::vector<int> sizes;  // non-ascending
  int t = 3, k = 1;
};

struct SweepReport {
  std::vector<ExtremalRecord> records;     // grid order
  std::vector<std::size_t> deviations;     // indices with status != matches
  std::size_t reloaded = 0;
  bool any_budget_exceeded = false;
};

// non-ascending size vectors with r entries in [lo, hi] and sum <= max_total,
// in lexicographically ascending order
inline std::vector<std::vector<int>> non_ascending_vectors(int r, int lo,
                                                           int hi,
                                                           long long max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // each entry is capped by its predecessor, so vectors emerge non-ascending
  auto rec = [&](auto&& self, int depth, int cap, long long used) -> void {
    if (depth == r) {
      out.push_back(cur);
      return;
    }
    const int tail = r - depth - 1;
    for (int s = lo; s <= std::min(cap, hi); ++s) {
      if (used + s + static_cast<long long>(tail) * lo > max_total) break;
      cur.push_back(s);
      self(self, depth + 1, s, used + s);
      cur.pop_back();
    }
  };
  if (r >= 1 && lo >= 1) rec(rec, 0, hi, 0);
  return out;
}

inline std::vector<SweepPoint> sweep_grid(const SweepSpec& spec) {
  std::vector<SweepPoint> pts;
  for (int r : spec.r_values)
    for (const auto& sizes :
         non_ascending_vectors(r, spec.min_size, spec.max_size, spec.max_total))
      for (int t = spec.t_min; t <= spec.t_max; ++t)
        for (int k = spec.k_min; k <= spec.k_max; ++k)
          pts.push_back({sizes, t, k});
  return pts;
}

namespace detail {

inline std::string sizes_token(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(sizes[i]);
  }
  return s;
}

inline std::string point_key(const std::vector<int>& sizes, int t, int k) {
  return sizes_token(sizes) + "|" + std::to_string(t) + "|" + std::to_string(k);
}

constexpr const char* kCsvHeader =
    "ns,t,k,exact,lower_bound,g,bet,conj,matching,status,nodes,elapsed_ms";

inline std::string opt_field(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

inline std::string csv_row(const ExtremalRecord& r) {
  std::string row = sizes_token(r.ns.sizes());
  row += ',' + std::to_string(r.t);
  row += ',' + std::to_string(r.k);
  row += ',' + opt_field(r.exact);
  row += ',' + std::to_string(r.best_bound);
  row += ',' + opt_field(r.formula_g);
  row += ',' + opt_field(r.formula_bet);
  row += ',' + opt_field(r.formula_conj);
  row += ',' + opt_field(r.formula_matching);
  row += ',' + status_token(r);
  row += ',' + std::to_string(r.nodes_explored);
  row += ',' + std::to_string(static_cast<long long>(r.elapsed_seconds * 1000));
  return row;
}

inline std::string jsonl_row(const ExtremalRecord& r) {
  nlohmann::json j;
  j["ns"] = r.ns.sizes();
  j["t"] = r.t;
  j["k"] = r.k;
  if (r.exact)
    j["exact"] = *r.exact;
  else
    j["exact"] = nullptr;
  j["lower_bound"] = r.best_bound;
  j["witness"] = r.witness ? serialize_graph(*r.witness) : std::string();
  return j.dump();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct ResumedRow {
  std::string csv;
  std::string jsonl;
  ExtremalRecord record;
};

inline ExtremalRecord record_from_csv(const std::vector<std::string>& f,
                                      const std::string& witness_text) {
  auto parse_sizes = [](const std::string& tok) {
    std::vector<int> sizes;
    for (const auto& part : split(tok, '-')) sizes.push_back(std::stoi(part));
    return sizes;
  };
  auto opt_u64 = [](const std::string& s) -> std::optional<std::uint64_t> {
    if (s.empty()) return std::nullopt;
    return std::stoull(s);
  };
  ExtremalRecord r{PartSizes(parse_sizes(f[0])), std::stoi(f[1]),
                   std::stoi(f[2])};
  r.exact = opt_u64(f[3]);
  r.best_bound = std::stoull(f[4]);
  r.formula_g = opt_u64(f[5]);
  r.formula_bet = opt_u64(f[6]);
  r.formula_conj = opt_u64(f[7]);
  r.formula_matching = opt_u64(f[8]);
  const std::string& st = f[9];
  if (st == "budget-exceeded") {
    r.status = RecordStatus::BudgetExceeded;
  } else if (st == "none") {
    r.status = RecordStatus::NoApplicableFormula;
  } else {
    auto parts = split(st, ':');
    if (parts.size() < 2) throw std::invalid_argument("bad status " + st);
    r.status_formula = parts[1];
    if (parts[0] == "matches") {
      r.status = RecordStatus::MatchesFormula;
    } else if (parts[0] == "exceeds") {
      r.status = RecordStatus::ExceedsFormula;
      r.gap = std::stoll(parts.at(2));
    } else if (parts[0] == "below") {
      r.status = RecordStatus::BelowFormula;
      r.gap = std::stoll(parts.at(2));
    } else {
      throw std::invalid_argument("bad status " + st);
    }
  }
  r.nodes_explored = std::stoull(f[10]);
  r.elapsed_seconds = static_cast<double>(std::stoll(f[11])) / 1000.0;
  if (!witness_text.empty()) r.witness = parse_graph(witness_text);
  return r;
}

// Loads previously written rows keyed by point. A trailing row that fails to
// parse is treated as truncation from an interrupted run and dropped; a bad
// row elsewhere is corruption and raises Parse.
inline std::map<std::string, ResumedRow> load_resume(
    const std::string& csv_path, const std::string& jsonl_path) {
  std::map<std::string, ResumedRow> out;
  std::ifstream csv(csv_path);
  if (!csv) return out;

  std::map<std::string, std::string> witness_lines;
  std::map<std::string, std::string> witness_text;
  if (!jsonl_path.empty()) {
    std::ifstream jl(jsonl_path);
    std::string line;
    while (std::getline(jl, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;  // truncated tail
      std::vector<int> sizes = j.value("ns", std::vector<int>{});
      const std::string key =
          point_key(sizes, j.value("t", 0), j.value("k", 0));
      witness_lines[key] = line;
      witness_text[key] = j.value("witness", std::string());
    }
  }

  std::string line;
  std::getline(csv, line);  // header
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    rows.emplace_back(line, split(line, ','));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [text, fields] = rows[i];
    auto reject = [&](const std::string& why) -> bool {
      if (i + 1 == rows.size()) return true;  // truncated tail: drop
      fail(ErrorKind::Parse, "resume row " + std::to_string(i + 2) + " (" +
                                 (fields.empty() ? text : fields[0]) +
                                 "): " + why);
    };
    if (fields.size() != 12) {
      if (reject("expected 12 columns")) continue;
    }
    const std::string key = fields[0] + "|" + fields[1] + "|" + fields[2];
    try {
      ExtremalRecord rec = record_from_csv(fields, witness_text[key]);
      auto wl = witness_lines.find(key);
      out.insert_or_assign(
          key, ResumedRow{text,
                          wl == witness_lines.end() ? jsonl_row(rec) : wl->second,
                          std::move(rec)});
    } catch (const std::exception& e) {
      if (reject(e.what())) continue;
    }
  }
  return out;
}

}  // namespace detail

// One record per grid point, computed by a worker pool and written to the
// CSV/JSONL sinks in grid order (workers may finish out of order; the writer
// buffers). With resume=true, rows already on disk are re-emitted verbatim
// and only missing points are solved.
inline SweepReport run_sweep(const SweepSpec& spec) {
  if (spec.workers < 1)
    fail(ErrorKind::InvalidParameter, "workers must be at least 1");
  const auto points = sweep_grid(spec);

  std::map<std::string, detail::ResumedRow> resumed;
  if (spec.resume && !spec.csv_path.empty())
    resumed = detail::load_resume(spec.csv_path, spec.jsonl_path);

  std::ofstream csv, jsonl;
  if (!spec.csv_path.empty()) {
    csv.open(spec.csv_path, std::ios::trunc);
    if (!csv)
      fail(ErrorKind::InvalidParameter,
           "cannot write sweep output " + spec.csv_path);
    csv << detail::kCsvHeader << '\n' << std::flush;
  }
  if (!spec.jsonl_path.empty()) {
    jsonl.open(spec.jsonl_path, std::ios::trunc);
    if (!jsonl)
      fail(ErrorKind::InvalidParameter,
           "cannot write witness output " + spec.jsonl_path);
  }

  struct Slot {
    std::string csv, jsonl;
    ExtremalRecord record;
    bool reloaded = false;
  };
  std::vector<std::optional<Slot>> done(points.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;

  auto work = [&] {
    while (!abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      const auto& pt = points[i];
      Slot slot{"", "", ExtremalRecord{PartSizes(pt.sizes), pt.t, pt.k}};
      try {
        const std::string key = detail::point_key(pt.sizes, pt.t, pt.k);
        if (auto it = resumed.find(key); it != resumed.end()) {
          slot = Slot{it->second.csv, it->second.jsonl, it->second.record, true};
        } else {
          ExtremalRecord rec =
              verify_point(PartSizes(pt.sizes), pt.t, pt.k, spec.budget);
          slot.csv = detail::csv_row(rec);
          slot.jsonl = detail::jsonl_row(rec);
          slot.record = std::move(rec);
        }
      } catch (...) {
        std::lock_guard lk(mu);
        if (!first_error) first_error = std::current_exception();
        abort.store(true);
        cv.notify_all();
        return;
      }
      std::lock_guard lk(mu);
      done[i] = std::move(slot);
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const std::size_t nworkers = std::min<std::size_t>(
      static_cast<std::size_t>(spec.workers), std::max<std::size_t>(points.size(), 1));
  for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(work);

  SweepReport report;
  {
    std::unique_lock lk(mu);
    for (std::size_t i = 0; i < points.size(); ++i) {
      cv.wait(lk, [&] { return done[i].has_value() || abort.load(); });
      if (abort.load() && !done[i].has_value()) break;
      Slot slot = *std::move(done[i]);
      done[i].reset();
      if (csv.is_open()) csv << slot.csv << '\n' << std::flush;
      if (jsonl.is_open()) jsonl << slot.jsonl << '\n' << std::flush;
      if (slot.record.status != RecordStatus::MatchesFormula)
        report.deviations.push_back(report.records.size());
      report.any_budget_exceeded |=
          slot.record.status == RecordStatus::BudgetExceeded;
      report.reloaded += slot.reloaded ? 1 : 0;
      report.records.push_back(std::move(slot.record));
    }
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return report;
}

// ---------------------------------------------------------------------------
// argmax-shape survey

struct ShapeCensusEntry {
  std::vector<int> witness_sizes;  // first size vector realizing the shape
  std::uint64_t count = 0;
};

// key: 1-based part ids of the argmax block containing part 1
using ShapeCensus = std::map<std::vector<int>, ShapeCensusEntry>;

// For every non-ascending size vector with entries in [min_entry, max_entry],
// bucket conj_value's argmax partition by the shape of the block containing
// part 1.
inline ShapeCensus shape_survey(int r, int t, int k, int min_entry,
                                int max_entry) {
  if (r < t - 1) fail(ErrorKind::InvalidParameter, "need r >= t-1");
  ShapeCensus census;
  for (const auto& sizes :
       non_ascending_vectors(r, min_entry, max_entry,
                             static_cast<long long>(r) * max_entry)) {
    const PartSizes ns(sizes);
    const FormulaResult res = conj_value(ns, t, k);
    const auto& blocks = res.partition->blocks;
    std::vector<int> shape = blocks[res.partition->block_of(0)];
    for (int& p : shape) ++p;  // 1-based
    auto& entry = census[shape];
    if (entry.count == 0) entry.witness_sizes = sizes;
    ++entry.count;
  }
  return census;
}

// ---------------------------------------------------------------------------
// induction audit (4-part graphs)

struct ThresholdCheck {
  int vertex = 0;
  int part = 0;          // 0-based part id
  int degree = 0;
  std::uint64_t required = 0;
  std::string rule;      // A1/A2/B1/B2/C
  bool ok = true;
};

struct InductionCheck {
  std::vector<int> removed;      // T: one vertex or one edge
  std::uint64_t e_incident = 0;  // e(T; G)
  std::int64_t gap = 0;          // g(ns) - g(ns')
  bool holds = true;             // e(T; G) >= gap
  bool applicable = true;        // false if removal would empty a part
};

struct InductionAudit {
  std::uint64_t delta = 0;  // max{0, e(G) - g}
  std::vector<ThresholdCheck> thresholds;
  std::vector<InductionCheck> checks;
};

// Reports the progressive-induction quantities for a 4-partite graph: the
// excess over g, the per-vertex degree thresholds, and e(T; G) against the
// g-difference for every single vertex and every edge. Everything is
// reported, nothing asserted: the thresholds are proof-internal assumptions.
inline InductionAudit audit_induction(const MultipartiteGraph& g, int k) {
  if (g.part_count() != 4)
    fail(ErrorKind::InvalidParameter, "audit needs exactly 4 parts");
  InductionAudit audit;
  audit.delta = delta_excess(g.edge_count(), g.parts(), k);

  // rank parts by size, non-ascending (stable)
  const auto perm = g.parts().sort_permutation();
  std::vector<int> rank(4);
  for (int i = 0; i < 4; ++i) rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  const auto sorted = g.parts().sorted_view();
  const std::uint64_t n1 = static_cast<std::uint64_t>(sorted[0]), n2 = static_cast<std::uint64_t>(sorted[1]),
                      n3 = static_cast<std::uint64_t>(sorted[2]), n4 = static_cast<std::uint64_t>(sorted[3]);

  for (int v = 0; v < g.vertex_count(); ++v) {
    const int p = g.part_of(v);
    ThresholdCheck c;
    c.vertex = v;
    c.part = p;
    c.degree = g.degree(v);
    switch (rank[static_cast<std::size_t>(p)]) {
      case 0:
        if (n1 > n2) {
          c.rule = "A1";
          c.required = n2 + n3 + static_cast<std::uint64_t>(k) - 1;
        } else {
          c.rule = "A2";
          c.required = n1 + n4;
        }
        break;
      case 1:
      case 2: {
        const auto ni = static_cast<std::uint64_t>(g.part_size(p));
        if (ni > n4 && n1 < n2 + n3) {
          c.rule = "B1";
          c.required = n1 + n4;
        } else {
          c.rule = "B2";
          c.required = n2 + n3;
        }
        break;
      }
      default:
        c.rule = "C";
        c.required = n2 + n3;
    }
    c.ok = static_cast<std::uint64_t>(c.degree) >= c.required;
    audit.thresholds.push_back(std::move(c));
  }

  auto check_removal = [&](std::vector<int> T) {
    InductionCheck c;
    c.removed = T;
    std::vector<int> reduced = g.parts().sizes();
    bool ok = true;
    for (int v : T) {
      if (--reduced[static_cast<std::size_t>(g.part_of(v))] == 0) ok = false;
    }
    Bitset tb = Bitset::from_indices(g.vertex_count(), T);
    c.e_incident = g.edges_incident(tb);
    if (!ok) {
      c.applicable = false;
      audit.checks.push_back(std::move(c));
      return;
    }
    c.gap = induction_gap(g.parts(), PartSizes(reduced), k);
    c.holds = static_cast<std::int64_t>(c.e_incident) >= c.gap;
    audit.checks.push_back(std::move(c));
  };

  for (int v = 0; v < g.vertex_count(); ++v) check_removal({v});
  g.for_each_edge([&](int x, int y) { check_removal({x, y}); });
  return audit;
}

}  // namespace turan
