#include "premod/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "premod/classify.hpp"

namespace premod {

namespace {

CyclotomicNumber parse_dim_token(const std::string& tok) {
  using C = CyclotomicNumber;
  if (tok == "phi") return C::golden_ratio();
  if (tok == "phi^2" || tok == "phi2") return C::golden_ratio() * C::golden_ratio();
  if (tok == "2phi") return C::golden_ratio() * 2;
  if (tok == "sqrt2") return C::sqrt2();
  if (tok == "sqrt3") return C::sqrt3();
  if (tok == "2sqrt3") return C::sqrt3() * 2;
  if (tok == "sqrt5") return C::sqrt5();
  if (tok == "1+sqrt5") return C(1) + C::sqrt5();
  return C(parse_rational(tok));
}

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open " << path << "\n";
    return 2;
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    err << path << ": " << e.what() << "\n";
    return 2;
  }
  PremodularDatum D;
  bool synthesized = false;
  try {
    D = datum_from_json(j, &synthesized);
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return 2;
  }
  auto violations = check_datum(D);
  if (format == "json") {
    json report{{"file", path},
                {"s_provenance", synthesized ? "synthesized via balancing" : "given"},
                {"violations", json::array()},
                {"clean", violations.empty()}};
    for (const auto& v : violations)
      report["violations"].push_back(json{{"tag", v.tag}, {"detail", v.detail}});
    auto center = muger_center(D);
    report["center"] = json{{"indices", center.indices},
                            {"tannakian", center.tannakian},
                            {"group", center.group_label.value_or("")}};
    report["degeneracy"] = to_string(degeneracy_class(D));
    out << canonical_dump(report);
  } else {
    out << "S matrix: " << (synthesized ? "synthesized via balancing" : "given") << "\n";
    for (const auto& v : violations) out << "violation [" << v.tag << "] " << v.detail << "\n";
    auto center = muger_center(D);
    out << "center: {";
    for (size_t i = 0; i < center.indices.size(); ++i)
      out << (i ? "," : "") << center.indices[i];
    out << "}";
    if (center.group_label) out << " = Rep(" << *center.group_label << ")";
    out << (center.tannakian ? " (Tannakian)" : "") << "\n";
    out << "degeneracy: " << to_string(degeneracy_class(D)) << "\n";
    out << (violations.empty() ? "clean\n" : "violations found\n");
  }
  return violations.empty() ? 0 : 1;
}

int cmd_classify(const std::string& out_path, const std::string& format, int max_order,
                 long node_budget, std::ostream& out, std::ostream& err) {
  std::vector<FiniteGroup> catalog;
  try {
    catalog = bundled_groups(max_order);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  ClassifyOptions opt;
  opt.max_order = max_order;
  opt.node_budget = node_budget;
  ClassificationReport report = classify_rank5(catalog, opt);
  std::string payload = format == "text" ? report_to_text(report)
                                         : canonical_dump(report_to_json(report));
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return 2;
    }
    f << payload;
    if (!f) {
      err << "write failed: " << out_path << "\n";
      return 2;
    }
    out << report_to_text(report);
  } else {
    out << payload;
  }
  return 0;
}

int cmd_census(int k, int max_order, std::ostream& out, std::ostream& err) {
  std::vector<FiniteGroup> catalog;
  try {
    catalog = bundled_groups(max_order);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  for (const auto& G : census(catalog, k, max_order))
    out << G.name << "\t" << G.order() << "\n";
  return 0;
}

int cmd_group_info(const std::string& label, std::ostream& out, std::ostream& err) {
  FiniteGroup G;
  try {
    G = named_group(label);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  auto T = character_table(G);
  out << "group " << G.name << ": order " << G.order() << ", "
      << T.degrees.size() << " classes, degrees (";
  for (size_t i = 0; i < T.degrees.size(); ++i) out << (i ? "," : "") << T.degrees[i];
  out << ")\n";
  out << "class sizes (";
  for (size_t i = 0; i < T.class_sizes.size(); ++i) out << (i ? "," : "") << T.class_sizes[i];
  out << ")\n";
  return 0;
}

int cmd_solve(int rank, const std::string& dims_csv, const std::string& dual_csv,
              const std::vector<std::string>& constraints, long node_budget, std::ostream& out,
              std::ostream& err) {
  FusionSearch spec;
  spec.rank = rank;
  spec.node_budget = node_budget;
  try {
    std::stringstream ss(dims_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.dims.push_back(parse_dim_token(tok));
    if (dual_csv.empty()) {
      spec.dual.resize(rank);
      for (int i = 0; i < rank; ++i) spec.dual[i] = i;
    } else {
      std::stringstream ds(dual_csv);
      while (std::getline(ds, tok, ',')) spec.dual.push_back(std::stoi(tok));
    }
    for (const auto& c : constraints) {
      // a,b,c=v
      auto eq = c.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("constraint needs '=': " + c);
      std::array<int, 3> key{};
      std::stringstream ks(c.substr(0, eq));
      for (int i = 0; i < 3; ++i) {
        if (!std::getline(ks, tok, ',')) throw std::invalid_argument("bad constraint: " + c);
        key[i] = std::stoi(tok);
      }
      spec.assignments[key] = std::stoi(c.substr(eq + 1));
    }
    if (static_cast<int>(spec.dims.size()) != rank ||
        static_cast<int>(spec.dual.size()) != rank)
      throw std::invalid_argument("dims/dual must have `rank` entries");
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    auto rings = enumerate_fusion_rings(spec);
    out << "found " << rings.size() << " fusion ring(s)\n";
    int idx = 0;
    for (const auto& R : rings) {
      out << "ring " << ++idx << ": " << canonical_dump(to_json(R));
    }
    return 0;
  } catch (const SearchSpaceExceeded& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for rank-5 premodular data"};
  app.require_subcommand(1);

  std::string datum_path, format = "text", classify_format = "json", out_path;
  int max_order = 60;
  long node_budget = 4000000;

  auto* validate_cmd = app.add_subcommand("validate", "check a premodular datum file");
  validate_cmd->add_option("file", datum_path, "datum JSON file")->required();
  validate_cmd->add_option("--format", format, "text|json");

  auto* classify_cmd =
      app.add_subcommand("classify", "replay the rank-5 classification and write the report");
  classify_cmd->add_option("--out", out_path, "report output path");
  classify_cmd->add_option("--format", classify_format, "json|text");
  classify_cmd->add_option("--max-order", max_order, "catalog order cutoff");
  classify_cmd->add_option("--node-budget", node_budget, "fusion search node budget");

  int census_k = 0, census_max = 60;
  auto* census_cmd = app.add_subcommand("census", "groups with a given number of classes");
  census_cmd->add_option("k", census_k, "number of conjugacy classes")->required();
  census_cmd->add_option("max_order", census_max, "order cutoff")->required();

  std::string label;
  auto* info_cmd = app.add_subcommand("group-info", "order, classes and character degrees");
  info_cmd->add_option("label", label, "group label, e.g. Q8")->required();

  int rank = 0;
  std::string dims_csv, dual_csv;
  std::vector<std::string> constraints;
  auto* solve_cmd = app.add_subcommand("solve", "enumerate fusion rings for given dimensions");
  solve_cmd->add_option("--rank", rank, "rank")->required();
  solve_cmd->add_option("--dims", dims_csv, "comma-separated dimensions, e.g. 1,1,2,1,1")
      ->required();
  solve_cmd->add_option("--dual", dual_csv, "duality involution, e.g. 0,1,2,4,3");
  solve_cmd->add_option("--constraint", constraints, "partial assignment a,b,c=v");
  solve_cmd->add_option("--node-budget", node_budget, "search node budget");

  std::vector<const char*> argv;
  argv.push_back("premodctl");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(datum_path, format, out, err);
    if (*classify_cmd)
      return cmd_classify(out_path, classify_format == "text" ? "text" : "json", max_order,
                          node_budget, out, err);
    if (*census_cmd) return cmd_census(census_k, census_max, out, err);
    if (*info_cmd) return cmd_group_info(label, out, err);
    if (*solve_cmd) return cmd_solve(rank, dims_csv, dual_csv, constraints, node_budget, out, err);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace premod
