// antican.cpp
// Command-line frontend: check, invariants, acomplex, classify, diff.
// Input is defining-data JSON; output is machine-readable JSON (rationals as
// "p/q" strings). Exit status is zero iff the requested computation
// completed; verdict content never changes the exit status.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "antican/acomplex.hpp"
#include "antican/classify.hpp"
#include "antican/errors.hpp"
#include "antican/invariants.hpp"

using namespace antican;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

ordered_json vec_json(const VecI& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

ordered_json vecq_json(const VecQ& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

ordered_json polytope_json(const Polytope& p, bool with_lattice) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (const VecQ& v : p.verts()) verts.push_back(vecq_json(v));
  j["vertices"] = verts;
  j["dim"] = polytope_dim(p);
  if (with_lattice) {
    ordered_json pts = ordered_json::array();
    for (const VecI& q : lattice_points(p)) pts.push_back(vec_json(q));
    j["lattice_points"] = pts;
  }
  return j;
}

ordered_json kclass_json(const KClass& c) {
  ordered_json j;
  j["free"] = vec_json(c.free_part);
  j["torsion"] = vec_json(c.tors);
  return j;
}

ordered_json verdict_json(const SingularityVerdict& v) {
  ordered_json j;
  j["log_terminal"] = v.log_terminal;
  j["canonical"] = v.canonical;
  j["terminal"] = v.terminal;
  if (v.eps) {
    j["eps"] = rat_str(*v.eps);
    j["eps_log_terminal"] = *v.eps_log_terminal;
  }
  if (v.witness_point) j["witness_point"] = vec_json(*v.witness_point);
  if (v.witness_cone) j["witness_cone"] = *v.witness_cone;
  return j;
}

ordered_json cone_json(const ElemBigCone& ec) {
  ordered_json j;
  j["columns"] = ec.cols;
  j["l"] = vec_json(ec.lvals);
  j["ell_rho"] = vec_json(ec.ell_rho);
  j["ell"] = ec.ell.str();
  j["v_sigma"] = vec_json(ec.v_sigma);
  j["c"] = ec.c.str();
  if (ec.v_prime) j["v_prime"] = vecq_json(*ec.v_prime);
  return j;
}

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(1) << "\n";
  else
    spit(out_path, j.dump(1));
}

int cmd_check(const std::string& input, const std::string& eps_str, const std::string& out_path) {
  DefiningData dd = parse_defining_data(slurp(input));
  Grading g = grading(dd);
  if (!is_fano(dd, g)) throw NotFano();
  std::optional<Rat> eps;
  if (!eps_str.empty()) eps = rat_parse(eps_str);
  SingularityVerdict v = classify(dd, g, eps);
  ordered_json j;
  j["fano"] = true;
  j["verdict"] = verdict_json(v);
  ordered_json cones = ordered_json::array();
  for (const ElemBigCone& ec : elementary_big_cones(dd, g)) cones.push_back(cone_json(ec));
  j["elementary_big_cones"] = cones;
  emit(j, out_path);
  return 0;
}

int cmd_invariants(const std::string& input, const std::string& out_path) {
  DefiningData dd = parse_defining_data(slurp(input));
  Grading g = grading(dd);
  InvariantSet inv = compute_invariants(dd, g);
  ordered_json j;
  ordered_json tors = ordered_json::array();
  for (const Int& d : inv.cl.torsion) tors.push_back(d.str());
  j["class_group"] = ordered_json{{"free_rank", inv.cl.free_rank}, {"torsion", tors}};
  ordered_json degs = ordered_json::array();
  for (const KClass& w : g.deg) degs.push_back(kclass_json(w));
  j["degrees"] = degs;
  j["kappa"] = kclass_json(g.kappa);
  if (inv.antican_cube_defined) {
    j["antican_cube"] = rat_str(inv.antican_cube);
    j["gorenstein_index"] = inv.gorenstein_index.str();
  }
  j["relations"] = cox_presentation(dd).text();
  j["key"] = inv.key;
  emit(j, out_path);
  return 0;
}

int cmd_acomplex(const std::string& input, bool with_lattice, const std::string& eps_str,
                 const std::string& out_path) {
  DefiningData dd = parse_defining_data(slurp(input));
  Grading g = grading(dd);
  ACComplex ac = build_complex(dd, g);
  ordered_json j;
  j["lineality"] = polytope_json(ac.lineality, with_lattice);
  ordered_json leaves = ordered_json::array();
  for (const Polytope& leaf : ac.leaves) leaves.push_back(polytope_json(leaf, with_lattice));
  j["leaves"] = leaves;
  ordered_json vps = ordered_json::array();
  for (const VecQ& v : ac.vprime_points) vps.push_back(vecq_json(v));
  j["v_prime_points"] = vps;
  std::optional<Rat> eps;
  if (!eps_str.empty()) eps = rat_parse(eps_str);
  j["verdict"] = verdict_json(classify(dd, g, eps));
  emit(j, out_path);
  return 0;
}

int cmd_classify(const std::string& cases_str, int workers, const std::string& checkpoint,
                 const std::string& seed_table, const std::string& out_prefix) {
  RunConfig cfg;
  cfg.workers = workers;
  cfg.checkpoint_dir = checkpoint;
  if (!cases_str.empty()) {
    cfg.cases.clear();
    std::stringstream ss(cases_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto c = case_from_name(tok);
      if (!c) throw Error("unknown case '" + tok + "'");
      cfg.cases.push_back(*c);
    }
  }
  RunResult res = run_classification(cfg);
  std::vector<TableRow> expected =
      seed_table.empty() ? reference_table() : parse_table(slurp(seed_table));
  DiffReport rep = diff_table(res.rows, expected);
  std::cerr << "classification: " << res.rows.size() << " classes, " << rep.summary() << "\n";
  std::string prefix = out_prefix.empty() ? "classification" : out_prefix;
  spit(prefix + ".json", rows_to_json(res.rows));
  spit(prefix + ".csv", rows_to_csv(res.rows));
  spit(prefix + "_stats.json", stats_to_json(res));
  return 0;
}

int cmd_diff(const std::string& result_path, const std::string& seed_table,
             const std::string& out_path) {
  // result rows arrive as classification JSON; rebuild rows from the
  // embedded defining data
  ordered_json rj = ordered_json::parse(slurp(result_path));
  std::vector<ClassRow> rows;
  for (const auto& e : rj) {
    ClassRow row;
    row.data = parse_defining_data(e.at("data").dump());
    Grading g = grading(row.data);
    row.inv = compute_invariants(row.data, g);
    row.presentation = cox_presentation(row.data);
    rows.push_back(std::move(row));
  }
  std::vector<TableRow> expected =
      seed_table.empty() ? reference_table() : parse_table(slurp(seed_table));
  DiffReport rep = diff_table(rows, expected);
  ordered_json j;
  j["summary"] = rep.summary();
  j["matched"] = rep.matched;
  j["missing"] = rep.missing;
  j["extra"] = rep.extra;
  ordered_json per = ordered_json::array();
  for (const RowDiff& rd : rep.per_row) {
    ordered_json e;
    e["table_no"] = rd.table_no;
    e["matched"] = rd.matched;
    if (!rd.field_diffs.empty()) e["field_diffs"] = rd.field_diffs;
    per.push_back(std::move(e));
  }
  j["rows"] = per;
  emit(j, out_path);
  std::cerr << rep.summary() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral engine for Fano varieties with torus action of complexity one"};
  app.require_subcommand(1);

  std::string input, output, eps, cases, checkpoint, seed_table, out_prefix, result_path;
  bool with_lattice = false;
  int workers = 0;

  auto* check = app.add_subcommand("check", "singularity verdicts and elementary big cones");
  check->add_option("input", input, "defining data JSON file")->required();
  check->add_option("--eps", eps, "epsilon for the eps-log-terminal verdict (p/q)");
  check->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* inv = app.add_subcommand("invariants", "class group, degrees, (-K)^3, Gorenstein index");
  inv->add_option("input", input, "defining data JSON file")->required();
  inv->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* acx = app.add_subcommand("acomplex", "anticanonical complex vertices and verdicts");
  acx->add_option("input", input, "defining data JSON file")->required();
  acx->add_flag("--lattice-points", with_lattice, "dump all lattice points per leaf");
  acx->add_option("--eps", eps, "epsilon for the eps-log-terminal verdict (p/q)");
  acx->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* cls = app.add_subcommand("classify", "run the bounded enumeration");
  cls->add_option("--cases", cases, "comma-separated case list (default: all eight)");
  cls->add_option("-j,--workers", workers, "worker threads (default: ANTICAN_WORKERS or cores)");
  cls->add_option("--checkpoint", checkpoint, "checkpoint directory (resumable)");
  cls->add_option("--seed-table", seed_table, "reference table JSON (default: embedded copy)");
  cls->add_option("-o,--output", out_prefix, "output prefix (default: classification)");

  auto* dif = app.add_subcommand("diff", "compare a classification run against the table");
  dif->add_option("result", result_path, "classification JSON")->required();
  dif->add_option("--seed-table", seed_table, "reference table JSON (default: embedded copy)");
  dif->add_option("-o,--output", output, "write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(input, eps, output);
    if (inv->parsed()) return cmd_invariants(input, output);
    if (acx->parsed()) return cmd_acomplex(input, with_lattice, eps, output);
    if (cls->parsed()) return cmd_classify(cases, workers, checkpoint, seed_table, out_prefix);
    if (dif->parsed()) return cmd_diff(result_path, seed_table, output);
  } catch (const ParseError& e) {
    std::cerr << ordered_json{{"error", "parse"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const NotFano& e) {
    std::cerr << ordered_json{{"error", "not_fano"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << ordered_json{{"error", "failed"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
