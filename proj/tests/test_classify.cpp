// test_classify.cpp

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "antican/classify.hpp"
#include "antican/errors.hpp"
#include "testutil.hpp"

using namespace antican;
using namespace antican::testing;

TEST_CASE("reference table parses and round-trips") {
  const auto& table = reference_table();
  REQUIRE(table.size() == 40);
  // the bundled file carries the same table
  std::ifstream in(std::string(ANTICAN_DATA_DIR) + "/expected_table.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  auto file_rows = parse_table(buf.str());
  REQUIRE(file_rows.size() == 40);
  for (size_t i = 0; i < 40; ++i) CHECK(file_rows[i].key() == table[i].key());
  // keys are pairwise distinct
  std::set<std::string> keys;
  for (const TableRow& r : table) keys.insert(r.key());
  CHECK(keys.size() == 40);
  // round trip through the serializer
  auto again = parse_table(serialize_table(table));
  REQUIRE(again.size() == 40);
  for (size_t i = 0; i < 40; ++i) CHECK(again[i].key() == table[i].key());
}

TEST_CASE("rows 23/24 and 15/20 differ exactly in the relation exponents") {
  const auto& t = reference_table();
  auto strip_rel = [](std::string key) {
    auto a = key.find("|rel=");
    auto b = key.find("|m=");
    return key.substr(0, a) + key.substr(b);
  };
  CHECK(strip_rel(t[22].key()) == strip_rel(t[23].key()));
  CHECK(t[22].key() != t[23].key());
  CHECK(strip_rel(t[14].key()) == strip_rel(t[19].key()));
  CHECK(t[14].key() != t[19].key());
}

TEST_CASE("excluded cases have empty candidate streams") {
  for (CaseId c : {CaseId::iii, CaseId::v, CaseId::vii, CaseId::viii}) {
    int count = 0;
    enumerate_case(CaseSpec{c}, [&](DefiningData&&) { ++count; });
    CHECK(count == 0);
  }
}

TEST_CASE("the quadric survives the filter pipeline as table row 1") {
  GateStats st;
  auto out = filter_pipeline(quadric(), st);
  REQUIRE(out.has_value());
  Grading g = grading(*out);
  CHECK(distinctness_key(*out, g) == reference_table()[0].key());
}

TEST_CASE("a candidate with an interior lineality lattice point is rejected") {
  // stretch the row-1 instance until the trapezoid captures (0, 1)
  DefiningData dd = quadric();
  dd.d = {{0, 1, 0, 0, -1}, {0, 0, 3, 0, -3}};
  GateStats st;
  auto out = filter_pipeline(dd, st);
  CHECK(!out.has_value());
  CHECK(st.not_terminal == 1);
}

TEST_CASE("independent slow enumeration of a sub-case box") {
  // case iv, l21 in {4,5}: re-enumerate from the raw inequalities with a
  // deliberately different loop order and compare candidate multisets
  std::set<std::string> fast;
  for (auto shard : {4, 5})
    generate_shard("iv.l21_45", shard, [&](DefiningData&& dd) {
      fast.insert(serialize_defining_data(dd));
    });
  std::set<std::string> slow;
  for (long long l21 = 4; l21 <= 5; ++l21)
    for (long long d121 = l21 - 1; d121 >= 0; --d121)
      for (long long d221 = l21 - 1; d221 >= 0; --d221)
        for (long long l11 = 30; l11 >= l21; --l11) {
          if (Rat(l11) >= Rat(3 * l21, l21 - 3)) continue;
          for (long long d111 = -200; d111 <= 200; ++d111) {
            if (!(Rat(-l11 * d121, l21) - l11 < Rat(d111) && Rat(d111) < Rat(-l11 * d121, l21)))
              continue;
            for (long long d211 = -200; d211 <= 200; ++d211) {
              if (!(Rat(-l11 * d221, l21) - l11 < Rat(d211) && Rat(d211) < Rat(-l11 * d221, l21)))
                continue;
              DefiningData dd;
              dd.r = 2;
              dd.s = 2;
              dd.m = 0;
              dd.n = {3, 1, 1};
              dd.L = {{1, 1, 1}, {l11}, {l21}};
              dd.d = {{0, 1, 0, d111, d121}, {0, 0, 1, d211, d221}};
              dd.dprime = {{}, {}};
              slow.insert(serialize_defining_data(dd));
            }
          }
        }
  CHECK(fast == slow);
}

TEST_CASE("run_classification on case iv alone is deterministic and resumable") {
  namespace fs = std::filesystem;
  RunConfig cfg;
  cfg.cases = {CaseId::iv};
  cfg.workers = 2;
  RunResult a = run_classification(cfg);
  CHECK(a.rows.size() == 2);  // the two (1,1,1)-block rows of the table
  std::set<std::string> keys;
  for (const ClassRow& r : a.rows) keys.insert(r.inv.key);
  CHECK(keys.count(reference_table()[26].key()));
  CHECK(keys.count(reference_table()[27].key()));

  // rerun with a different worker count: identical output
  cfg.workers = 1;
  RunResult b = run_classification(cfg);
  REQUIRE(b.rows.size() == a.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].inv.key == b.rows[i].inv.key);
    CHECK(a.rows[i].data == b.rows[i].data);
  }

  // checkpointed run, then resume: identical output, no recomputation errors
  fs::path dir = fs::temp_directory_path() / "antican_ckpt_test";
  fs::remove_all(dir);
  cfg.checkpoint_dir = dir.string();
  cfg.workers = 2;
  RunResult c1 = run_classification(cfg);
  REQUIRE(fs::exists(dir));
  RunResult c2 = run_classification(cfg);  // resume from complete checkpoints
  REQUIRE(c2.rows.size() == c1.rows.size());
  for (size_t i = 0; i < c1.rows.size(); ++i) CHECK(c1.rows[i].data == c2.rows[i].data);
  CHECK(c1.stats.generated == c2.stats.generated);

  // corrupt one checkpoint file: the next run must refuse it
  bool corrupted = false;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ofstream out(e.path());
    out << "{ broken";
    corrupted = true;
    break;
  }
  REQUIRE(corrupted);
  CHECK_THROWS_AS(run_classification(cfg), CheckpointCorrupt);
  fs::remove_all(dir);
}

TEST_CASE("diff_table reports missing rows and field diffs") {
  RunConfig cfg;
  cfg.cases = {CaseId::iv};
  cfg.workers = 2;
  RunResult r = run_classification(cfg);
  DiffReport rep = diff_table(r.rows, reference_table());
  CHECK(rep.matched == 2);
  CHECK(rep.missing == 38);
  CHECK(rep.extra == 0);
  // a doctored table row shows up as a field-level diff
  std::vector<TableRow> doctored = reference_table();
  doctored[26].gorenstein_index = 7;
  std::vector<ClassRow> rows = r.rows;
  DiffReport rep2 = diff_table(rows, doctored);
  bool found = false;
  for (const RowDiff& rd : rep2.per_row)
    if (rd.table_no == 27 && !rd.matched && !rd.field_diffs.empty()) found = true;
  CHECK(found);
}

TEST_CASE("csv and json outputs are well-formed") {
  RunConfig cfg;
  cfg.cases = {CaseId::iv};
  cfg.workers = 2;
  RunResult r = run_classification(cfg);
  diff_table(r.rows, reference_table());
  std::string csv = rows_to_csv(r.rows);
  CHECK(csv.find("no,relations,class_group,degree_matrix,antican_cube,gorenstein_index") == 0);
  CHECK(csv.find("125/4") != std::string::npos);
  std::string json = rows_to_json(r.rows);
  CHECK(json.find("\"antican_cube\"") != std::string::npos);
  std::string stats = stats_to_json(r);
  CHECK(stats.find("per_record") != std::string::npos);
}
