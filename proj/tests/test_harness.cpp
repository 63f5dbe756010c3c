#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "turan/constructions.hpp"
#include "turan/harness.hpp"

using namespace turan;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// drop the trailing diagnostics columns (nodes, elapsed_ms) from each row
std::string strip_diagnostics(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    auto cut = line.rfind(',');
    cut = line.rfind(',', cut - 1);
    out += line.substr(0, cut) + "\n";
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST(SizeVectors, EnumerationIsCanonical) {
  auto v = non_ascending_vectors(3, 1, 3, 9);
  EXPECT_EQ(v.size(), 10u);  // multisets of size 3 from {1,2,3}
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  for (const auto& s : v)
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), std::greater<int>()));
  EXPECT_EQ(v.front(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(v.back(), (std::vector<int>{3, 3, 3}));

  // total cap binds
  auto w = non_ascending_vectors(2, 1, 5, 4);
  for (const auto& s : w) EXPECT_LE(s[0] + s[1], 4);
  EXPECT_EQ(w.size(), 4u);  // 1-1 2-1 2-2 3-1
}

TEST(Sweep, SmallGridStatuses) {
  SweepSpec spec;
  spec.r_values = {3, 4};
  spec.t_min = spec.t_max = 3;
  spec.k_min = spec.k_max = 1;
  spec.min_size = 1;
  spec.max_size = 3;
  spec.max_total = 7;
  SweepReport rep = run_sweep(spec);
  EXPECT_FALSE(rep.records.empty());
  EXPECT_FALSE(rep.any_budget_exceeded);
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.status, RecordStatus::MatchesFormula);
    EXPECT_EQ(r.status_formula, "bet");
  }
  EXPECT_TRUE(rep.deviations.empty());
}

TEST(Sweep, EmptyGrid) {
  SweepSpec spec;
  spec.r_values = {};
  SweepReport rep = run_sweep(spec);
  EXPECT_TRUE(rep.records.empty());
  EXPECT_TRUE(rep.deviations.empty());
}

TEST(Sweep, ParallelDeterminism) {
  SweepSpec spec;
  spec.r_values = {4};
  spec.k_min = 1;
  spec.k_max = 2;
  spec.max_size = 2;
  spec.max_total = 8;
  spec.csv_path = temp_file("sweep_w1.csv").string();
  spec.jsonl_path = temp_file("sweep_w1.jsonl").string();
  SweepReport one = run_sweep(spec);

  SweepSpec par = spec;
  par.workers = 4;
  par.csv_path = temp_file("sweep_w4.csv").string();
  par.jsonl_path = temp_file("sweep_w4.jsonl").string();
  SweepReport four = run_sweep(par);

  ASSERT_EQ(one.records.size(), four.records.size());
  EXPECT_EQ(strip_diagnostics(slurp(spec.csv_path)),
            strip_diagnostics(slurp(par.csv_path)));
  EXPECT_EQ(slurp(spec.jsonl_path), slurp(par.jsonl_path));
}

TEST(Sweep, ResumeEquivalence) {
  SweepSpec spec;
  spec.r_values = {3};
  spec.t_min = spec.t_max = 3;
  spec.k_min = 1;
  spec.k_max = 2;
  spec.max_size = 3;
  spec.max_total = 8;
  spec.csv_path = temp_file("sweep_full.csv").string();
  spec.jsonl_path = temp_file("sweep_full.jsonl").string();
  SweepReport full = run_sweep(spec);
  ASSERT_GE(full.records.size(), 8u);
  const std::string full_csv = slurp(spec.csv_path);
  const std::string full_jsonl = slurp(spec.jsonl_path);

  // simulate an interrupted run: keep only the first 5 rows (+ header)
  std::string partial_csv, partial_jsonl;
  {
    std::istringstream in(full_csv);
    std::string line;
    for (int i = 0; i <= 5 && std::getline(in, line); ++i)
      partial_csv += line + "\n";
    std::istringstream jn(full_jsonl);
    for (int i = 0; i < 5 && std::getline(jn, line); ++i)
      partial_jsonl += line + "\n";
  }
  SweepSpec resumed = spec;
  resumed.csv_path = temp_file("sweep_resume.csv").string();
  resumed.jsonl_path = temp_file("sweep_resume.jsonl").string();
  std::ofstream(resumed.csv_path) << partial_csv;
  std::ofstream(resumed.jsonl_path) << partial_jsonl;
  resumed.resume = true;
  SweepReport rep = run_sweep(resumed);
  EXPECT_EQ(rep.reloaded, 5u);

  // identical content; reloaded rows identical including diagnostics
  EXPECT_EQ(strip_diagnostics(slurp(resumed.csv_path)),
            strip_diagnostics(full_csv));
  EXPECT_EQ(slurp(resumed.jsonl_path), full_jsonl);

  // a truncated final row is recomputed, not fatal
  SweepSpec trunc = spec;
  trunc.csv_path = temp_file("sweep_trunc.csv").string();
  trunc.jsonl_path = temp_file("sweep_trunc.jsonl").string();
  std::ofstream(trunc.csv_path) << partial_csv.substr(0, partial_csv.size() - 7);
  std::ofstream(trunc.jsonl_path) << partial_jsonl;
  trunc.resume = true;
  SweepReport rep2 = run_sweep(trunc);
  EXPECT_EQ(rep2.reloaded, 4u);
  EXPECT_EQ(strip_diagnostics(slurp(trunc.csv_path)),
            strip_diagnostics(full_csv));
}

TEST(Sweep, CorruptResumeRowFails) {
  SweepSpec spec;
  spec.r_values = {3};
  spec.max_size = 2;
  spec.max_total = 6;
  spec.csv_path = temp_file("sweep_corrupt.csv").string();
  spec.resume = true;
  std::ofstream(spec.csv_path)
      << detail::kCsvHeader << "\n"
      << "definitely,not,a,row\n"
      << "1-1-1,3,1,2,2,,2,2,,matches:bet,10,0\n";
  try {
    run_sweep(spec);
    FAIL() << "expected parse failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("definitely"), std::string::npos);
  }
}

TEST(Sweep, BudgetExceededPropagates) {
  SweepSpec spec;
  spec.r_values = {3};
  spec.min_size = 3;
  spec.max_size = 3;
  spec.max_total = 9;
  spec.budget.max_nodes = 40;
  SweepReport rep = run_sweep(spec);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_TRUE(rep.any_budget_exceeded);
  EXPECT_EQ(rep.records[0].status, RecordStatus::BudgetExceeded);
  EXPECT_FALSE(rep.records[0].exact.has_value());
}

TEST(ShapeSurvey, SingleVectorCensus) {
  ShapeCensus census = shape_survey(5, 3, 2, 2, 2);  // only (2,2,2,2,2)
  ASSERT_EQ(census.size(), 1u);
  const auto& [shape, entry] = *census.begin();
  EXPECT_EQ(entry.count, 1u);
  EXPECT_EQ(entry.witness_sizes, (std::vector<int>{2, 2, 2, 2, 2}));
  // balanced sizes: the block holding part 1 has 2 or 3 parts
  EXPECT_TRUE(shape.size() == 2 || shape.size() == 3);
}

TEST(ShapeSurvey, CensusSoundness) {
  ShapeCensus census = shape_survey(5, 3, 2, 1, 6);
  EXPECT_GE(census.size(), 3u);
  for (const auto& [shape, entry] : census) {
    const PartSizes ns(entry.witness_sizes);
    FormulaResult res = conj_value(ns, 3, 2);
    std::vector<int> got = res.partition->blocks[res.partition->block_of(0)];
    for (int& p : got) ++p;
    EXPECT_EQ(got, shape);
  }
}

TEST(Audit, G1MeetsA1Exactly) {
  MultipartiteGraph g1 = build_g1(PartSizes{5, 4, 3, 2}, 2);
  InductionAudit a = audit_induction(g1, 2);
  EXPECT_EQ(a.delta, 0u);
  for (const auto& th : a.thresholds) {
    if (th.part == 0) {
      EXPECT_EQ(th.rule, "A1");
      EXPECT_EQ(th.required, 8u);  // n2+n3+k-1
      EXPECT_EQ(th.degree, 8);
      EXPECT_TRUE(th.ok);
    }
  }
  // every applicable check satisfies eq-(3) on the extremal graph
  for (const auto& c : a.checks)
    if (c.applicable) EXPECT_TRUE(c.holds);
}

TEST(Audit, EdgelessAndComplete) {
  InductionAudit empty =
      audit_induction(MultipartiteGraph{PartSizes{3, 2, 2, 2}}, 2);
  EXPECT_EQ(empty.delta, 0u);
  for (const auto& c : empty.checks) EXPECT_EQ(c.e_incident, 0u);

  InductionAudit full =
      audit_induction(build_complete(PartSizes{2, 2, 2, 2}), 1);
  EXPECT_EQ(full.delta, 8u);

  EXPECT_THROW(audit_induction(MultipartiteGraph{PartSizes{2, 2, 2}}, 1), Error);
}

TEST(Audit, SingletonPartsAreInapplicable) {
  MultipartiteGraph g = build_complete(PartSizes{2, 1, 1, 1});
  InductionAudit a = audit_induction(g, 1);
  int inapplicable = 0;
  for (const auto& c : a.checks)
    if (!c.applicable) ++inapplicable;
  EXPECT_GT(inapplicable, 0);
}
