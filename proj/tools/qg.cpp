// qg — command-line front end for the quantum-graph spectral library.
//
// Subcommands:
//   spectrum   eigenvalues + error estimates for a graph file
//   surgery    apply an ordered JSON list of transformations to a graph
//   bounds     evaluate every applicable closed-form bound against the
//              computed spectrum
//   check      run every graph-level theorem check that applies to the
//              given graph
//   suite      randomized theorem-by-theorem verification suite
//   oracle     exact interval / cycle / path spectra (solver ground truth)
//
// Exit codes: 0 success (no Fail verdicts), 1 any Fail verdict,
// 2 usage or configuration error.  Identical invocations produce
// byte-identical payloads (17-significant-digit numeric formatting, no
// timestamps).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qg/bounds.hpp"
#include "qg/check.hpp"
#include "qg/errors.hpp"
#include "qg/graph.hpp"
#include "qg/jsonio.hpp"
#include "qg/oracle.hpp"
#include "qg/solve.hpp"
#include "qg/suite.hpp"
#include "qg/surgery.hpp"

namespace {

using qg::json;

// ---------------------------------------------------------------------------
// plumbing
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qg::fail(qg::Err::ConfigInvalid, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) qg::fail(qg::Err::ConfigInvalid, "cannot open file: " + out_path);
  out << payload;
}

qg::MetricGraph load_graph(const std::string& path) {
  return qg::parse_graph_string(read_file(path));
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv")
    qg::fail(qg::Err::ConfigInvalid,
             "--format must be json or csv, got: " + format);
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

int run_spectrum(const std::string& graph_path, int k_max, int mesh,
                 const std::string& format, const std::string& out_path) {
  auto g = load_graph(graph_path);
  qg::SolveOptions opts;
  opts.elements_per_edge = mesh;
  qg::Spectrum s = qg::solve_spectrum(g, k_max, opts);
  if (format == "json") {
    write_output(out_path, qg::spectrum_to_json(s).dump(2) + "\n");
    return 0;
  }
  std::ostringstream csv;
  csv << "k,eigenvalue,error_estimate\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    csv << (i + 1) << ',' << qg::fmt17(s.eigenvalues[i]) << ','
        << qg::fmt17(s.error_estimates[i]) << '\n';
  write_output(out_path, csv.str());
  return 0;
}

// ---------------------------------------------------------------------------
// surgery
// ---------------------------------------------------------------------------

int run_surgery(const std::string& graph_path, const std::string& ops_path,
                const std::string& out_path) {
  auto g = load_graph(graph_path);
  json ops = json::parse(read_file(ops_path));
  if (!ops.is_array())
    qg::fail(qg::Err::ConfigInvalid, "--ops file must hold a JSON array");
  auto result = qg::apply_surgery_script(g, ops);
  write_output(out_path, qg::graph_to_json(result).dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

const char* verdict_name(qg::VerdictStatus s) {
  switch (s) {
    case qg::VerdictStatus::Pass: return "Pass";
    case qg::VerdictStatus::Fail: return "Fail";
    default: return "Inconclusive";
  }
}

int run_bounds(const std::string& graph_path, int k_max, int mesh,
               const std::string& format, const std::string& out_path) {
  auto g = load_graph(graph_path);
  qg::SolveOptions opts;
  opts.elements_per_edge = mesh;
  qg::Spectrum s = qg::solve_spectrum(g, k_max, opts);

  struct Row {
    qg::BoundResult bound;
    double spectrum_value = 0.0;
    bool checked = false;
    qg::Verdict verdict;
  };
  std::vector<Row> rows;
  bool any_fail = false;
  for (const auto& b : qg::all_bounds(g, k_max)) {
    Row row;
    row.bound = b;
    row.spectrum_value = s.eigenvalues[static_cast<std::size_t>(b.k - 1)];
    if (b.applicable) {
      double err = s.error_estimates[static_cast<std::size_t>(b.k - 1)];
      double budget =
          err + 1e-9 * (1.0 + std::abs(row.spectrum_value));
      row.checked = true;
      row.verdict = b.side == qg::BoundSide::Lower
                        ? qg::check_le(b.value, row.spectrum_value, budget,
                                       b.bound_id)
                        : qg::check_le(row.spectrum_value, b.value, budget,
                                       b.bound_id);
      any_fail = any_fail || row.verdict.status == qg::VerdictStatus::Fail;
    }
    rows.push_back(std::move(row));
  }

  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json j;
      j["bound_id"] = r.bound.bound_id;
      j["k"] = r.bound.k;
      j["side"] = r.bound.side == qg::BoundSide::Lower ? "lower" : "upper";
      j["spectrum_value"] = r.spectrum_value;
      if (r.checked) {
        j["value"] = r.bound.value;
        j["margin"] = r.verdict.margin;
        j["error_budget"] = r.verdict.error_budget;
        j["verdict"] = verdict_name(r.verdict.status);
      } else {
        j["verdict"] = "Inapplicable";
        j["reason"] = r.bound.reason;
      }
      out.push_back(std::move(j));
    }
    write_output(out_path, out.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "bound_id,k,side,value,spectrum_value,margin,verdict\n";
    for (const auto& r : rows) {
      csv << r.bound.bound_id << ',' << r.bound.k << ','
          << (r.bound.side == qg::BoundSide::Lower ? "lower" : "upper") << ',';
      if (r.checked)
        csv << qg::fmt17(r.bound.value) << ',' << qg::fmt17(r.spectrum_value)
            << ',' << qg::fmt17(r.verdict.margin) << ','
            << verdict_name(r.verdict.status) << '\n';
      else
        csv << ',' << qg::fmt17(r.spectrum_value) << ",,Inapplicable\n";
    }
    write_output(out_path, csv.str());
  }
  return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// check — every graph-level comparison that applies to the given graph
// ---------------------------------------------------------------------------

int run_check(const std::string& graph_path, int k_max, int mesh,
              const std::string& format, const std::string& out_path) {
  auto g = load_graph(graph_path);
  qg::SolveOptions opts;
  opts.elements_per_edge = mesh;

  struct Group {
    std::string id;
    std::vector<qg::Verdict> verdicts;
  };
  std::vector<Group> groups;
  auto add = [&](std::string id, std::vector<qg::Verdict> v) {
    groups.push_back({std::move(id), std::move(v)});
  };

  add("bounds", qg::check_bounds(g, k_max, opts));
  add("scaling-identity",
      qg::check_scaling(g, "", 2.0, qg::ScalingMode::Graph, k_max, opts));
  add("bipartite-relation", qg::check_bipartite_relation(g, k_max, opts));

  bool all_anti = true;
  bool sign_pos = true, sign_neg = true;
  for (const auto& v : g.vertices()) {
    all_anti = all_anti && v.condition.kind == qg::ConditionKind::AntiStandard;
    double s = v.condition.family_strength();
    sign_pos = sign_pos && s > 0;
    sign_neg = sign_neg && s < 0;
  }
  if (all_anti)
    add("counting-sandwich", qg::check_counting_sandwich(g, k_max, opts));
  if (g.all_in_family(qg::ConditionFamily::DeltaLike) ||
      (g.all_in_family(qg::ConditionFamily::DeltaPrimeLike) &&
       (sign_pos || sign_neg)))
    add("flower-chain", qg::check_flower_chain(g, k_max, opts));
  if (qg::is_tree(g)) {
    add("tree-relation", qg::check_tree_relation(g, k_max, opts));
    add("pendant-diameter", {qg::check_pendant_diameter(g)});
  }

  bool any_fail = false;
  for (const auto& grp : groups)
    for (const auto& v : grp.verdicts)
      any_fail = any_fail || v.status == qg::VerdictStatus::Fail;

  if (format == "json") {
    json out = json::array();
    for (const auto& grp : groups) {
      json j;
      j["check"] = grp.id;
      j["verdicts"] = json::array();
      for (const auto& v : grp.verdicts) {
        json vj;
        vj["status"] = verdict_name(v.status);
        vj["margin"] = v.margin;
        vj["error_budget"] = v.error_budget;
        vj["detail"] = v.detail;
        j["verdicts"].push_back(std::move(vj));
      }
      out.push_back(std::move(j));
    }
    write_output(out_path, out.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "check,status,margin,error_budget,detail\n";
    for (const auto& grp : groups)
      for (const auto& v : grp.verdicts)
        csv << grp.id << ',' << verdict_name(v.status) << ','
            << qg::fmt17(v.margin) << ',' << qg::fmt17(v.error_budget) << ','
            << '"' << v.detail << '"' << '\n';
    write_output(out_path, csv.str());
  }
  return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

int run_suite_cmd(std::uint64_t seed, int instances, int k_max, int mesh,
                  const std::vector<std::string>& select,
                  const std::string& format, const std::string& out_path) {
  qg::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.instances = instances;
  cfg.k_max = k_max;
  cfg.mesh = mesh;
  cfg.selection = select;
  qg::SuiteResult result = qg::run_suite(cfg, &std::cerr);
  if (format == "json")
    write_output(out_path, qg::suite_report_json(result).dump(2) + "\n");
  else
    write_output(out_path, qg::suite_report_csv(result));
  return qg::suite_exit_code(result);
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

qg::EndpointCondition parse_endpoint(const std::string& text,
                                     const std::string& flag) {
  if (text == "dirichlet") return qg::EndpointCondition::dirichlet();
  if (text == "neumann") return qg::EndpointCondition::neumann();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = text.substr(0, colon);
    double value = 0.0;
    try {
      value = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      qg::fail(qg::Err::ConfigInvalid, flag + ": bad coefficient in " + text);
    }
    if (kind == "delta") return qg::EndpointCondition::robin_delta(value);
    if (kind == "deltaprime")
      return qg::EndpointCondition::robin_delta_prime(value);
  }
  qg::fail(qg::Err::ConfigInvalid,
           flag + " must be dirichlet, neumann, delta:VALUE, or "
                  "deltaprime:VALUE, got: " +
               text);
}

int run_oracle(const std::string& kind, double length, const std::string& left,
               const std::string& right, const std::string& path_kind,
               int k_max, const std::string& format,
               const std::string& out_path) {
  std::vector<double> eigenvalues;
  json meta;
  meta["kind"] = kind;
  meta["length"] = length;
  if (kind == "interval") {
    auto lc = parse_endpoint(left, "--left");
    auto rc = parse_endpoint(right, "--right");
    eigenvalues = qg::interval_secular_spectrum(length, lc, rc, k_max);
    meta["left"] = left;
    meta["right"] = right;
  } else if (kind == "cycle") {
    eigenvalues = qg::cycle_spectrum_closed_form(length, k_max);
  } else if (kind == "path") {
    qg::PathKind pk;
    if (path_kind == "standard")
      pk = qg::PathKind::Standard;
    else if (path_kind == "anti")
      pk = qg::PathKind::AntiStandard;
    else
      qg::fail(qg::Err::ConfigInvalid,
               "--path-kind must be standard or anti, got: " + path_kind);
    eigenvalues = qg::path_spectrum_closed_form(length, pk, k_max);
    meta["path_kind"] = path_kind;
  } else {
    qg::fail(qg::Err::ConfigInvalid,
             "--kind must be interval, cycle, or path, got: " + kind);
  }

  if (format == "json") {
    meta["eigenvalues"] = eigenvalues;
    write_output(out_path, meta.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "k,eigenvalue\n";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
      csv << (i + 1) << ',' << qg::fmt17(eigenvalues[i]) << '\n';
    write_output(out_path, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-graph spectra, surgery, bounds, and theorem checks"};
  app.require_subcommand(1);

  std::string graph_path, ops_path, out_path;
  std::string format = "json";
  int k_max = 10;
  int mesh = 64;

  auto add_common = [&](CLI::App* cmd, bool with_graph) {
    if (with_graph)
      cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    cmd->add_option("--out", out_path, "output file (default standard output)");
    cmd->add_option("--format", format, "output format: json or csv");
  };

  auto* spectrum = app.add_subcommand("spectrum", "compute eigenvalues");
  add_common(spectrum, true);
  spectrum->add_option("--kmax", k_max, "number of eigenvalues");
  spectrum->add_option("--mesh", mesh, "elements per edge");

  auto* surgery = app.add_subcommand("surgery", "apply a surgery script");
  add_common(surgery, true);
  surgery->add_option("--ops", ops_path, "surgery script JSON file")
      ->required();

  auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
  add_common(bounds, true);
  bounds->add_option("--kmax", k_max, "number of eigenvalues");
  bounds->add_option("--mesh", mesh, "elements per edge");

  auto* check = app.add_subcommand("check", "graph-level theorem checks");
  add_common(check, true);
  check->add_option("--kmax", k_max, "number of eigenvalues");
  check->add_option("--mesh", mesh, "elements per edge");

  std::uint64_t seed = 1;
  int instances = 100;
  int suite_kmax = 12;
  int suite_mesh = 40;
  std::vector<std::string> select;
  auto* suite = app.add_subcommand("suite", "randomized verification suite");
  add_common(suite, false);
  suite->add_option("--seed", seed, "master seed");
  suite->add_option("--instances", instances, "instances per theorem");
  suite->add_option("--kmax", suite_kmax, "eigenvalues per comparison");
  suite->add_option("--mesh", suite_mesh, "elements per edge");
  suite->add_option("--select", select,
                    "theorem ids to run (default: all)")
      ->delimiter(',');

  std::string kind = "interval", left = "neumann", right = "neumann",
              path_kind = "standard";
  double length = 1.0;
  auto* oracle = app.add_subcommand("oracle", "exact reference spectra");
  add_common(oracle, false);
  oracle->add_option("--kind", kind, "interval, cycle, or path");
  oracle->add_option("--length", length, "total length");
  oracle->add_option("--left", left, "interval left endpoint condition");
  oracle->add_option("--right", right, "interval right endpoint condition");
  oracle->add_option("--path-kind", path_kind, "standard or anti");
  oracle->add_option("--kmax", k_max, "number of eigenvalues");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    require_format(format);
    if (spectrum->parsed())
      return run_spectrum(graph_path, k_max, mesh, format, out_path);
    if (surgery->parsed()) {
      if (format != "json")
        qg::fail(qg::Err::ConfigInvalid,
                 "--format: surgery emits a graph, which is json only");
      return run_surgery(graph_path, ops_path, out_path);
    }
    if (bounds->parsed())
      return run_bounds(graph_path, k_max, mesh, format, out_path);
    if (check->parsed())
      return run_check(graph_path, k_max, mesh, format, out_path);
    if (suite->parsed())
      return run_suite_cmd(seed, instances, suite_kmax, suite_mesh, select,
                           format, out_path);
    if (oracle->parsed())
      return run_oracle(kind, length, left, right, path_kind, k_max, format,
                        out_path);
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
