// homcat: batch verification of factor categories, cotorsion pairs, Hovey
// triples, localization triples, one-sided triangulated structures and the
// homotopy category they generate, over a workspace file.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "homcat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact checks for stable categories, Hovey triples and homotopy categories"};
  app.require_subcommand(1);

  std::string workspace_path;
  std::string triple, modulo, witnesses = "frobenius", mode = "both";
  bool machine = false, enumerate_full = false, fault_invert = false;
  std::size_t dim_cap = 10;
  unsigned seed = 0;

  const std::vector<std::string> commands{
      "hom",           "stable-hom",        "ext1",
      "precover",      "preenvelope",       "check-cotorsion",
      "check-hovey",   "build-localization", "check-localization",
      "fix-triangles", "check-rt",          "check-prt",
      "check-stabilizing", "check-prepartial", "check-pretriangulated",
      "ho-hom",        "weq",               "universal",
      "report-all"};

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::vector<std::string>> positional;
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("workspace", workspace_path, "workspace file")->required();
    sub->add_option("args", positional[name], "command arguments");
    sub->add_flag("--machine", machine, "machine-readable (JSON) output");
    sub->add_flag("--enumerate-full", enumerate_full, "full GF(2) diagram enumeration");
    sub->add_option("--dim-cap", dim_cap, "enumeration dimension cap");
    sub->add_option("--seed", seed, "seed for sampled checks");
    sub->add_option("--triple", triple, "hovey triple to use");
    sub->add_option("--modulo", modulo, "subcategory for stable-hom");
    sub->add_option("--witnesses", witnesses, "witness provider for check-cotorsion");
    sub->add_option("--mode", mode, "check-prepartial mode: direct | via-flip | both");
    sub->add_flag("--fault-invert", fault_invert, "universal: inject a non-inverting functor");
    subs[name] = sub;
  }

  CLI11_PARSE(app, argc, argv);

  std::string cmd;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd = name;

  try {
    homcat::Workspace ws = homcat::parse_workspace_file(workspace_path);
    homcat::CommandOptions opt;
    opt.budget.enumerate_full = enumerate_full;
    opt.budget.dim_cap = dim_cap;
    opt.budget.seed = seed;
    opt.machine = machine;
    opt.triple = triple;
    opt.modulo = modulo;
    opt.witnesses = witnesses;
    opt.mode = mode;
    opt.fault_invert = fault_invert;
    homcat::Report rep = homcat::run_command(ws, cmd, positional[cmd], opt);
    std::cout << (machine ? homcat::emit_machine(rep) : homcat::emit_text(rep));
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
