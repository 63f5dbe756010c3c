#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

struct SearchBudget {
  std::uint64_t max_nodes = 4'000'000'000ULL;
  double max_seconds = std::numeric_limits<double>::infinity();
  // A known-feasible edge count (e.g. from a construction or an earlier
  // run). Seeding with an unattainable value is rejected at the end of the
  // search because no witness graph can back it.
  std::optional<std::uint64_t> initial_incumbent;
  int vertex_cap = 14;
};

enum class RecordStatus {
  MatchesFormula,
  ExceedsFormula,
  BelowFormula,
  NoApplicableFormula,
  BudgetExceeded,
};

struct ExtremalRecord {
  PartSizes ns;  // sorted non-ascending
  int t = 3;
  int k = 1;
  std::optional<std::uint64_t> exact;  // empty when the budget ran out
  std::uint64_t best_bound = 0;        // best feasible value found (== exact when solved)
  std::optional<MultipartiteGraph> witness;
  std::optional<std::uint64_t> formula_g, formula_bet, formula_conj,
      formula_matching;
  RecordStatus status = RecordStatus::NoApplicableFormula;
  std::string status_formula;  // which formula status refers to
  std::int64_t gap = 0;        // exact - formula (for exceeds/below)
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0;
};

inline std::string status_token(const ExtremalRecord& r) {
  switch (r.status) {
    case RecordStatus::MatchesFormula: return "matches:" + r.status_formula;
    case RecordStatus::ExceedsFormula:
      return "exceeds:" + r.status_formula + ":+" + std::to_string(r.gap);
    case RecordStatus::BelowFormula:
      return "below:" + r.status_formula + ":" + std::to_string(r.gap);
    case RecordStatus::BudgetExceeded: return "budget-exceeded";
    default: return "none";
  }
}

namespace detail {

// Branch and bound over the cross-part edge slots of the complete host, in
// row-major order. Within-part symmetry is broken by requiring the
// adjacency rows of same-part vertices to be lexicographically
// non-increasing; the comparison runs over the prefix of columns whose
// entries are already decided, so violations prune as early as possible.
struct EdgeSolver {
  int n = 0, t = 3, k = 1;
  std::vector<int> part_of;
  std::vector<std::pair<int, int>> slots;
  std::vector<std::uint64_t> rows, known;
  std::uint64_t full_mask = 0;

  std::uint64_t best = 0;
  std::vector<std::uint64_t> best_rows;
  bool improved = false;

  std::uint64_t nodes = 0, max_nodes = 0;
  bool exceeded = false;
  bool has_deadline = false;
  std::chrono::steady_clock::time_point deadline;

  explicit EdgeSolver(const MultipartiteGraph& host) {
    n = host.vertex_count();
    part_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) part_of[static_cast<std::size_t>(v)] = host.part_of(v);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (part_of[static_cast<std::size_t>(x)] != part_of[static_cast<std::size_t>(y)]) slots.emplace_back(x, y);
    rows.assign(static_cast<std::size_t>(n), 0);
    known.assign(static_cast<std::size_t>(n), 0);
    full_mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    // intra-part entries (and the diagonal) are structurally zero
    std::vector<std::uint64_t> part_word(part_of.empty() ? 0 : static_cast<std::size_t>(host.part_count()), 0);
    for (int v = 0; v < n; ++v) part_word[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])] |= bit(v);
    for (int v = 0; v < n; ++v) known[static_cast<std::size_t>(v)] = part_word[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])];
  }

  // rows[u-1] >=lex rows[u] over the decided prefix (ascending columns)
  bool pair_ok(int u) const {
    const std::uint64_t both = known[static_cast<std::size_t>(u - 1)] & known[static_cast<std::size_t>(u)];
    const std::uint64_t unknown = full_mask & ~both;
    const std::uint64_t prefix =
        unknown ? (std::uint64_t{1} << std::countr_zero(unknown)) - 1
                : full_mask;
    const std::uint64_t diff =
        (rows[static_cast<std::size_t>(u - 1)] ^ rows[static_cast<std::size_t>(u)]) & prefix;
    if (!diff) return true;
    return rows[static_cast<std::size_t>(u - 1)] & (diff & (~diff + 1));
  }

  bool orderly_ok(int x, int y) const {
    if (x > 0 && part_of[static_cast<std::size_t>(x - 1)] == part_of[static_cast<std::size_t>(x)] && !pair_ok(x))
      return false;
    if (y > 0 && part_of[static_cast<std::size_t>(y - 1)] == part_of[static_cast<std::size_t>(y)] && !pair_ok(y))
      return false;
    return true;
  }

  void run(std::uint64_t seed_value, std::vector<std::uint64_t> seed_rows) {
    best = seed_value;
    best_rows = std::move(seed_rows);
    rec(0, 0);
  }

  void rec(int depth, std::uint64_t cur) {
    if (exceeded) return;
    if (++nodes >= max_nodes) {
      exceeded = true;
      return;
    }
    if (has_deadline && (nodes & 4095) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      exceeded = true;
      return;
    }
    if (depth == static_cast<int>(slots.size())) {
      if (cur > best) {
        best = cur;
        best_rows = rows;
        improved = true;
      }
      return;
    }
    if (cur + (slots.size() - static_cast<std::size_t>(depth)) <= best) return;

    const auto [x, y] = slots[static_cast<std::size_t>(depth)];
    known[static_cast<std::size_t>(x)] |= bit(y);
    known[static_cast<std::size_t>(y)] |= bit(x);

    // include
    rows[static_cast<std::size_t>(x)] |= bit(y);
    rows[static_cast<std::size_t>(y)] |= bit(x);
    if (orderly_ok(x, y)) {
      const CliqueView view{n, rows.data()};
      if (!edge_creates_packing(view, x, y, k, t)) rec(depth + 1, cur + 1);
    }
    rows[static_cast<std::size_t>(x)] &= ~bit(y);
    rows[static_cast<std::size_t>(y)] &= ~bit(x);

    // exclude
    if (orderly_ok(x, y)) rec(depth + 1, cur);

    known[static_cast<std::size_t>(x)] &= ~bit(y);
    known[static_cast<std::size_t>(y)] &= ~bit(x);
  }
};

inline MultipartiteGraph graph_from_rows(const PartSizes& ns,
                                         const std::vector<std::uint64_t>& rows) {
  MultipartiteGraph g{ns};
  for (int v = 0; v < g.vertex_count(); ++v)
    for (std::uint64_t m = rows[static_cast<std::size_t>(v)] & ~((std::uint64_t{2} << v) - 1); m;
         m &= m - 1)
      g.add_edge(v, std::countr_zero(m));
  return g;
}

}  // namespace detail

// Exact ex(K_ns, kK_t) by exhaustive branch and bound. The search space is
// canonical: sizes are sorted non-ascending (the value is invariant under
// permuting ns) and the incumbent is seeded with the best applicable
// construction.
inline ExtremalRecord exact_extremal(const PartSizes& ns, int t, int k,
                                     const SearchBudget& budget = {}) {
  if (t < 2) fail(ErrorKind::InvalidParameter, "t must be at least 2");
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  if (budget.max_nodes == 0 || budget.max_seconds <= 0)
    fail(ErrorKind::InvalidParameter, "budget limits must be positive");
  if (budget.vertex_cap > 64)
    fail(ErrorKind::InvalidParameter, "vertex cap beyond 64 is unsupported");
  if (ns.total() > budget.vertex_cap)
    fail(ErrorKind::CapExceeded,
         "host with " + std::to_string(ns.total()) +
             " vertices exceeds the cap of " + std::to_string(budget.vertex_cap));

  const auto start = std::chrono::steady_clock::now();
  ExtremalRecord rec{ns.sorted(), t, k};
  const PartSizes& sorted = rec.ns;
  MultipartiteGraph host = build_complete(sorted);

  auto finish = [&](std::optional<std::uint64_t> exact, std::uint64_t bound,
                    std::optional<MultipartiteGraph> witness,
                    std::uint64_t nodes) {
    rec.exact = exact;
    rec.best_bound = bound;
    rec.witness = std::move(witness);
    rec.nodes_explored = nodes;
    rec.status = exact ? RecordStatus::NoApplicableFormula
                       : RecordStatus::BudgetExceeded;
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
  };

  // the host itself being kK_t-free settles the point
  if (is_kkt_free(host, k, t))
    return finish(host.edge_count(), host.edge_count(), std::move(host), 0);

  // incumbent: best applicable construction
  std::uint64_t inc_value = 0;
  MultipartiteGraph inc_graph{sorted};  // edgeless fallback
  auto offer = [&](MultipartiteGraph g) {
    if (g.edge_count() > inc_value) {
      inc_value = g.edge_count();
      inc_graph = std::move(g);
    }
  };
  if (t == 3 && sorted.r() == 4 && sorted.size(3) >= k - 1) {
    offer(build_g1(sorted, k));
    offer(build_g2(sorted, k));
  }
  if (t >= 3 && sorted.r() >= t - 1) {
    try {
      offer(build_conjectured(sorted, t, k));
    } catch (const Error&) {
      // Z does not fit; skip the seed
    }
  }
  if (t == 2 && sorted.size(sorted.r() - 1) >= k - 1) {
    // all edges at k-1 vertices of the smallest part: a vertex cover of
    // size k-1 keeps every matching below k
    MultipartiteGraph star{sorted};
    const int p = sorted.r() - 1;
    for (int i = 0; i < k - 1; ++i) {
      const int z = star.part_offset(p) + i;
      for (int v = 0; v < star.vertex_count(); ++v)
        if (star.part_of(v) != p) star.add_edge(z, v);
    }
    offer(std::move(star));
  }

  const std::uint64_t seed =
      std::max(inc_value, budget.initial_incumbent.value_or(0));

  detail::EdgeSolver solver(host);
  solver.t = t;
  solver.k = k;
  solver.max_nodes = budget.max_nodes;
  if (std::isfinite(budget.max_seconds)) {
    solver.has_deadline = true;
    solver.deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(budget.max_seconds));
  }
  solver.run(seed, inc_graph.adjacency_words());

  const bool witness_backed = solver.improved || solver.best == inc_value;
  if (!witness_backed)
    fail(ErrorKind::InvalidParameter,
         "initial_incumbent " + std::to_string(seed) +
             " is not attained by any witness; seed only with feasible values");

  MultipartiteGraph witness = detail::graph_from_rows(sorted, solver.best_rows);
  if (solver.exceeded)
    return finish(std::nullopt, solver.best, std::move(witness), solver.nodes);
  return finish(solver.best, solver.best, std::move(witness), solver.nodes);
}

// exact_extremal plus every applicable closed form and a comparison status.
// Precedence when several formulas apply: matching (t=2), bet (k=1),
// g (4 parts, t=3), conj.
inline ExtremalRecord verify_point(const PartSizes& ns, int t, int k,
                                   const SearchBudget& budget = {}) {
  ExtremalRecord rec = exact_extremal(ns, t, k, budget);
  const PartSizes& s = rec.ns;
  if (s.r() == 4 && t == 3) rec.formula_g = g_value(s, k).value;
  if (k == 1) rec.formula_bet = bet_value(s, t).value;
  if (t >= 3 && s.r() >= t - 1) rec.formula_conj = conj_value(s, t, k).value;
  if (t == 2) rec.formula_matching = matching_extremal_value(s, k);

  if (rec.status == RecordStatus::BudgetExceeded) return rec;

  std::optional<std::uint64_t> formula;
  if (rec.formula_matching) {
    formula = rec.formula_matching;
    rec.status_formula = "matching";
  } else if (rec.formula_bet) {
    formula = rec.formula_bet;
    rec.status_formula = "bet";
  } else if (rec.formula_g) {
    formula = rec.formula_g;
    rec.status_formula = "g";
  } else if (rec.formula_conj) {
    formula = rec.formula_conj;
    rec.status_formula = "conj";
  }
  if (!formula) {
    rec.status = RecordStatus::NoApplicableFormula;
    return rec;
  }
  rec.gap = static_cast<std::int64_t>(*rec.exact) -
            static_cast<std::int64_t>(*formula);
  rec.status = rec.gap == 0  ? RecordStatus::MatchesFormula
               : rec.gap > 0 ? RecordStatus::ExceedsFormula
                             : RecordStatus::BelowFormula;
  return rec;
}

}  // namespace turan
