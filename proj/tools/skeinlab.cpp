// Command-line front end for skeinlab.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeinlab/acceptance.hpp"
#include "skeinlab/annulus.hpp"
#include "skeinlab/eigen.hpp"
#include "skeinlab/io.hpp"
#include "skeinlab/skein_eval.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;
using nlohmann::ordered_json;

namespace {

Characteristic parse_char(int c) {
  if (c == 0) return Characteristic::zero;
  if (c == 2) return Characteristic::two;
  throw CLI::ValidationError("--char", "characteristic must be 0 or 2");
}

ordered_json plan_json(const ExpansionPlan& p) {
  ordered_json j;
  j["target"] = p.target.to_string();
  if (p.trivial()) {
    j["terms"] = ordered_json::array();
    j["scale"] = "1";
    return j;
  }
  j["rho"] = p.rho.to_string();
  auto terms = ordered_json::array();
  for (const auto& [a, r] : p.terms) terms.push_back({{"r", r}, {"a", a.to_string()}});
  j["terms"] = terms;
  auto roots = ordered_json::array();
  for (const auto& mu : p.roots) roots.push_back(mu.to_string());
  j["roots"] = roots;
  j["scale"] = p.scale.to_string();
  j["total_scale"] = p.total_scale().to_string();
  if (p.inner) j["inner"] = plan_json(*p.inner);
  return j;
}

int emit(const VerificationReport& r, const std::string& format, bool timing) {
  if (format == "json") std::cout << r.to_json(timing).dump(2) << "\n";
  else std::cout << r.to_text(timing);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic Homfly and Kauffman skein computations"};
  app.require_subcommand(1);
  int status = 0;

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled link diagrams");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_subcommand("list", "List corpus names with metadata")->callback([&] {
    for (const auto& d : corpus::all()) {
      auto v = d.validate();
      std::cout << d.name() << "  components=" << v.components << " crossings=" << d.num_crossings()
                << " writhe=" << v.writhe << "\n";
    }
  });
  std::string show_name;
  auto* show = corpus_cmd->add_subcommand("show", "Print a link as JSON");
  show->add_option("link", show_name, "corpus:<name> or a JSON file")->required();
  show->callback([&] { std::cout << diagram_to_json_text(load_link(show_name)); });

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "Diagram operations");
  diagram_cmd->require_subcommand(1);
  std::string diag_link;
  auto* validate = diagram_cmd->add_subcommand("validate", "Check diagram invariants");
  validate->add_option("link", diag_link)->required();
  validate->callback([&] {
    auto d = load_link(diag_link);
    auto v = d.validate();
    ordered_json j;
    j["name"] = d.name();
    j["valid"] = v.valid;
    j["components"] = v.components;
    j["writhe"] = v.writhe;
    j["self_writhe"] = v.self_writhe;
    j["issues"] = v.issues;
    std::cout << j.dump(2) << "\n";
    status = v.valid ? 0 : 1;
  });
  int lr_comp = 1, lr_r = 0;
  auto* lr = diagram_cmd->add_subcommand("lr", "Doubled component with r meridians, as JSON");
  lr->add_option("link", diag_link)->required();
  lr->add_option("--component", lr_comp, "1-based component")->check(CLI::PositiveNumber);
  lr->add_option("--r", lr_r, "number of meridians")->check(CLI::NonNegativeNumber);
  lr->callback([&] { std::cout << diagram_to_json_text(build_Lr(load_link(diag_link), lr_comp - 1, lr_r).diagram); });

  // eigen
  auto* eigen_cmd = app.add_subcommand("eigen", "Meridian eigenvalues");
  eigen_cmd->require_subcommand(1);
  std::string part_a = "0", part_b = "0";
  int ch = 0;
  auto* ec = eigen_cmd->add_subcommand("c", "Kauffman eigenvalue c_lambda");
  ec->add_option("--partition", part_a)->required();
  ec->add_option("--char", ch, "0 or 2");
  ec->callback([&] { std::cout << c_of(Partition::parse(part_a), parse_char(ch)).to_string() << "\n"; });
  auto* es = eigen_cmd->add_subcommand("s", "Homfly eigenvalue s_{lambda,mu}");
  es->add_option("--lambda", part_a)->required();
  es->add_option("--mu", part_b)->required();
  es->add_option("--char", ch, "0 or 2");
  es->callback([&] {
    std::cout << s_of(Partition::parse(part_a), Partition::parse(part_b), parse_char(ch)).to_string() << "\n";
  });
  auto* ea = eigen_cmd->add_subcommand("adjoint", "Adjoint meridian eigenvalue on Q_{lambda,mu}");
  ea->add_option("--lambda", part_a)->required();
  ea->add_option("--mu", part_b)->required();
  ea->add_option("--char", ch, "0 or 2");
  ea->callback([&] {
    std::cout << adjoint_eigenvalue(Partition::parse(part_a), Partition::parse(part_b), parse_char(ch)).to_string()
              << "\n";
  });
  int max_size = 4;
  bool check_distinct_flag = false;
  auto* et = eigen_cmd->add_subcommand("table", "c_lambda for all |lambda| <= N");
  et->add_option("--max-size", max_size)->check(CLI::NonNegativeNumber);
  et->add_flag("--check-distinct", check_distinct_flag, "compare all values in characteristic 2");
  et->add_option("--char", ch, "0 or 2");
  et->callback([&] {
    EigenTable table;
    for (const auto& p : enumerate_partitions(max_size))
      std::cout << p.to_string() << "\t" << table.c(p, parse_char(ch)).to_string() << "\n";
    if (check_distinct_flag) {
      auto r = check_distinct(max_size, &table);
      std::cout << "distinct mod 2: " << (r.distinct ? "yes" : "no") << " (" << r.partitions << " partitions, "
                << r.comparisons << " comparisons)\n";
      if (r.collision)
        std::cout << "collision: " << r.collision->first.to_string() << " " << r.collision->second.to_string() << "\n";
      status = r.distinct ? 0 : 1;
    }
  });
  auto* ex = eigen_cmd->add_subcommand("x", "Polynomial X(t) for lambda over rho");
  ex->add_option("--partition", part_a)->required();
  ex->add_option("--rho", part_b)->required();
  ex->callback([&] {
    XPoly x = x_poly(Partition::parse(part_a), Partition::parse(part_b));
    for (std::size_t r = 0; r < x.coeffs().size(); ++r)
      std::cout << "t^" << r << "\t" << x.coeffs()[r].to_string() << "\n";
  });

  // skein
  auto* skein_cmd = app.add_subcommand("skein", "Evaluate link polynomials");
  skein_cmd->require_subcommand(1);
  std::string skein_link;
  EvalConfig cfg;
  auto add_eval = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = skein_cmd->add_subcommand(name, help);
    sub->add_option("link", skein_link, "corpus:<name> or a JSON file")->required();
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing budget per evaluated term")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--char", ch, "0 or 2");
    sub->add_option("--parallelism", cfg.parallelism)->check(CLI::PositiveNumber);
    sub->callback([&, fn] {
      cfg.characteristic = parse_char(ch);
      std::cout << fn(load_link(skein_link), cfg).to_string() << "\n";
    });
  };
  add_eval("homfly", "Framed Homfly polynomial", [](const LinkDiagram& d, const EvalConfig& c) { return homfly(d, c); });
  add_eval("kauffman", "Framed Kauffman (Dubrovnik) polynomial",
           [](const LinkDiagram& d, const EvalConfig& c) { return kauffman(d, c); });
  add_eval("adjoint", "Adjoint Homfly polynomial",
           [](const LinkDiagram& d, const EvalConfig& c) { return adjoint_homfly(d, c); });
  int probe_crossing = 1;
  std::string probe_flavor = "homfly";
  auto* probe = skein_cmd->add_subcommand("probe", "Check the skein relation at one crossing");
  probe->add_option("link", skein_link)->required();
  probe->add_option("--crossing", probe_crossing, "1-based crossing")->check(CLI::PositiveNumber);
  probe->add_option("--flavor", probe_flavor)->check(CLI::IsMember({"homfly", "kauffman"}));
  probe->callback([&] {
    auto r = skein_relation_probe(load_link(skein_link), static_cast<std::size_t>(probe_crossing - 1),
                                  probe_flavor == "homfly" ? Flavor::homfly : Flavor::kauffman, cfg);
    ordered_json j;
    j["flavor"] = to_string(r.flavor);
    j["crossing"] = probe_crossing;
    j["sign"] = r.sign;
    j["original"] = r.original.to_string();
    j["switched"] = r.switched.to_string();
    j["smoothing0"] = r.smoothing0.to_string();
    if (r.flavor == Flavor::kauffman) j["smoothing_inf"] = r.smoothing_inf.to_string();
    j["holds"] = r.holds;
    std::cout << j.dump(2) << "\n";
    status = r.holds ? 0 : 1;
  });

  // expand
  std::string expand_part = "2";
  std::optional<std::string> expand_rho;
  auto* expand = app.add_subcommand("expand", "Longitude-meridian expansion of y_lambda, as JSON");
  expand->add_option("--partition", expand_part)->required();
  expand->add_option("--rho", expand_rho);
  expand->callback([&] {
    std::optional<Partition> rho;
    if (expand_rho) rho = Partition::parse(*expand_rho);
    std::cout << plan_json(expand_ylambda(Partition::parse(expand_part), rho)).dump(2) << "\n";
  });

  // branching
  std::string branch_rho = "1";
  auto* branching = app.add_subcommand("branching", "Structure of R_rho R_1 in the Homfly annulus");
  branching->add_option("--rho", branch_rho)->required();
  branching->callback([&] {
    HsrReport h = hsr_structure_check(Partition::parse(branch_rho));
    ordered_json j;
    j["rho"] = h.rho.to_string();
    j["product"] = to_string(h.product);
    auto n = ordered_json::array();
    for (const auto& [key, c] : h.n) n.push_back({{"alpha", key.first.to_string()}, {"beta", key.second.to_string()}, {"n", c}});
    j["n"] = n;
    j["diagonal_ok"] = h.diagonal_ok;
    j["paired"] = h.paired;
    j["nonnegative"] = h.nonnegative;
    j["binary"] = h.binary;
    j["pass"] = h.passed() && h.binary;
    if (!h.failure.empty()) j["failure"] = h.failure;
    std::cout << j.dump(2) << "\n";
    status = h.passed() && h.binary ? 0 : 1;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the mod-2 relation");
  verify_cmd->require_subcommand(1);
  std::string verify_link, format = "text", verify_part = "2";
  int verify_comp = 1;
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", timing, "include timings in the report");
  };
  auto* vr = verify_cmd->add_subcommand("rudolph", "Adjoint Homfly against barred Kauffman");
  vr->add_option("link", verify_link)->required();
  vr->add_option("--max-crossings", cfg.max_crossings)->check(CLI::NonNegativeNumber);
  add_common(vr);
  vr->callback([&] { status = emit(verify_rudolph(load_link(verify_link), cfg), format, timing); });
  auto* vm = verify_cmd->add_subcommand("main", "Satellite relation for y_lambda on one component");
  vm->add_option("link", verify_link)->required();
  vm->add_option("--component", verify_comp, "1-based component")->check(CLI::PositiveNumber);
  vm->add_option("--partition", verify_part)->required();
  vm->add_option("--max-crossings", cfg.max_crossings)->check(CLI::NonNegativeNumber);
  add_common(vm);
  vm->callback([&] {
    status = emit(verify_main(load_link(verify_link), verify_comp - 1, Partition::parse(verify_part), cfg), format,
                  timing);
  });
  auto* ve = verify_cmd->add_subcommand("eigen-consistency", "Meridians around the unknot against eigenvalues");
  add_common(ve);
  ve->callback([&] {
    VerifyContext ctx(cfg);
    status = emit(eigen_consistency(ctx), format, timing);
  });

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "Acceptance suite");
  acc->require_subcommand(1);
  bool extended = false;
  std::string report_path;
  auto* run = acc->add_subcommand("run", "Run all criteria and print a pass/fail table");
  run->add_flag("--extended", extended, "include the hopf_plus satellite case");
  run->add_option("--report", report_path, "write the JSON report here");
  run->add_flag("--progress", timing, "print timings to stderr");
  run->callback([&] {
    AcceptanceOptions opts;
    opts.extended = extended;
    if (timing) opts.progress = &std::cerr;
    AcceptanceReport rep = run_acceptance(opts);
    std::cout << rep.table();
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      out << rep.to_json().dump(2) << "\n";
    }
    status = rep.pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return app.exit(e);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
