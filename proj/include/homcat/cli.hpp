#pragma once

// Command dispatch over a parsed workspace. Every command produces a Report;
// the binary turns pass/fail into the exit status. report-all runs the full
// pipeline for every declared Hovey triple in dependency order.

#include <string>
#include <vector>

#include "homcat/homotopy.hpp"
#include "homcat/workspace.hpp"

namespace homcat {

struct CommandOptions {
  InstanceBudget budget;
  bool machine = false;
  std::string triple;               // named Hovey triple; default = first declared
  std::string modulo;               // subcategory for stable-hom
  std::string witnesses = "frobenius";
  bool fault_invert = false;        // universal: inject the non-inverting functor
  std::string mode = "both";        // check-prepartial: direct | via-flip | both
};

namespace cli_detail {

struct TripleContext {
  HoveyTripleData hovey;
  LocalizationTripleData triple;
  TriangleStructure ts;

  TripleContext(Workspace& ws, const HoveyDecl& decl)
      : hovey(ws.make_triple(decl)),
        triple(build_localization_triple(*ws.cat, hovey, ws.registry)),
        ts(*ws.cat, hovey, triple, ws.registry) {}
};

inline const HoveyDecl& pick_triple(const Workspace& ws, const CommandOptions& opt) {
  if (!opt.triple.empty()) return ws.hovey_by_name(opt.triple);
  if (ws.hovey_decls.empty()) throw std::runtime_error("unresolved-name: no hovey triple declared");
  return ws.hovey_decls.front();
}

inline std::string mat_lines(const ModuleMorphism& m) { return m.to_string(); }

// Prefer the declared workspace name for an object when its data matches.
inline std::string disp(const Workspace& ws, const Module& m) {
  for (const auto& [n, mod] : ws.modules)
    if (mod == m) return n;
  return m.display_name();
}

inline Report cmd_hom(Workspace& ws, const std::vector<std::string>& args) {
  Report rep;
  rep.command = "hom";
  const Module& a = ws.module_by_name(args.at(0));
  const Module& b = ws.module_by_name(args.at(1));
  const HomSpace& hs = ws.cat->hom(a, b);
  CheckRecord& r = rep.add("dim Hom(" + args[0] + ", " + args[1] + ") = " +
                               std::to_string(hs.dimension),
                           true);
  for (const ModuleMorphism& m : hs.basis) r.witnesses.push_back(mat_lines(m));
  return rep;
}

inline Report cmd_stable_hom(Workspace& ws, const std::vector<std::string>& args,
                             const CommandOptions& opt) {
  Report rep;
  rep.command = "stable-hom";
  if (opt.modulo.empty()) throw std::runtime_error("stable-hom needs --modulo SUBCATEGORY");
  StableCat st(*ws.cat, ws.subcat_by_name(opt.modulo));
  const Module& a = ws.module_by_name(args.at(0));
  const Module& b = ws.module_by_name(args.at(1));
  const FactorHom& fh = st.factor_hom(a, b);
  CheckRecord& r = rep.add("dim Hom_{/" + opt.modulo + "}(" + args[0] + ", " + args[1] + ") = " +
                               std::to_string(fh.dimension),
                           true);
  for (const ModuleMorphism& m : fh.coset_reps) r.witnesses.push_back(mat_lines(m));
  r.caveats.push_back("ideal dimension " + std::to_string(fh.ideal_dim));
  return rep;
}

inline Report cmd_ext1(Workspace& ws, const std::vector<std::string>& args) {
  Report rep;
  rep.command = "ext1";
  const Module& c = ws.module_by_name(args.at(0));
  const Module& a = ws.module_by_name(args.at(1));
  Ext1Space e = ext1(*ws.cat, c, a);
  CheckRecord& r = rep.add("dim Ext^1(" + args[0] + ", " + args[1] + ") = " +
                               std::to_string(e.dimension),
                           true);
  for (const Conflation& rep_c : e.representatives) r.witnesses.push_back(rep_c.to_string());
  return rep;
}

inline Report cmd_precover(Workspace& ws, const std::vector<std::string>& args, bool cover) {
  Report rep;
  rep.command = cover ? "precover" : "preenvelope";
  Subcategory g = ws.subcat_by_name(args.at(0));
  const Module& a = ws.module_by_name(args.at(1));
  ModuleMorphism m = cover ? precover(*ws.cat, g, a) : preenvelope(*ws.cat, g, a);
  CheckRecord& r =
      rep.add(rep.command + " of " + args[1] + " from " + args[0] + ": " +
                  (cover ? m.source() : m.target()).display_name(),
              true);
  r.witnesses.push_back(mat_lines(m));
  bool post = is_relative_monic(*ws.cat, m, g, cover ? RelSide::epic : RelSide::monic);
  rep.add("approximation property verified", post);
  return rep;
}

inline Report cmd_check_cotorsion(Workspace& ws, const std::vector<std::string>& args,
                                  const CommandOptions& opt) {
  Subcategory left = ws.subcat_by_name(args.at(0));
  Subcategory right = ws.subcat_by_name(args.at(1));
  WitnessProvider prov = opt.witnesses == "trivial" ? WitnessProvider::trivial()
                                                    : WitnessProvider::frobenius_provider();
  if (opt.witnesses.rfind("table ", 0) == 0) {
    auto it = ws.witness_tables.find(opt.witnesses.substr(6));
    if (it == ws.witness_tables.end())
      throw std::runtime_error("unresolved-name: witness table '" + opt.witnesses + "'");
    prov = WitnessProvider::user(it->second);
  }
  return check_cotorsion_pair(*ws.cat, CotorsionPairData{left, right, prov}, ws.registry);
}

inline Report cmd_fix_triangles(Workspace& ws, TripleContext& ctx) {
  Report rep;
  rep.command = "fix-triangles(" + ctx.hovey.name + ")";
  for (const Module& a : ws.registry) {
    if (is_in_add(*ws.cat, ctx.triple.c_class, a)) {
      const FixedRightTriangle& t = ctx.ts.fix_right(a);
      CheckRecord& r = rep.add("fixed right triangle at " + disp(ws, a) + ": " + disp(ws, a) +
                                   " >-> " + disp(ws, t.x_obj()) + " ->> " +
                                   disp(ws, t.u_obj()),
                               true);
      r.witnesses.push_back("i: " + mat_lines(t.i));
      r.witnesses.push_back("p: " + mat_lines(t.p));
    }
    if (is_in_add(*ws.cat, ctx.triple.d_class, a)) {
      const FixedLeftTriangle& t = ctx.ts.fix_left(a);
      CheckRecord& r = rep.add("fixed left triangle at " + disp(ws, a) + ": " +
                                   disp(ws, t.u_obj()) + " >-> " + disp(ws, t.x_obj()) +
                                   " ->> " + disp(ws, a),
                               true);
      r.witnesses.push_back("iota: " + mat_lines(t.iota));
      r.witnesses.push_back("pi: " + mat_lines(t.pi));
    }
  }
  rep.records.push_back(CheckRecord{
      "fixed-triangle choices come from the declared witness provider (" +
          std::string(ctx.hovey.pair1.witnesses.kind_name()) + ")",
      CheckStatus::vacuous,
      {},
      {"recorded for reproducibility"}});
  return rep;
}

inline Report cmd_ho_hom(Workspace& ws, const std::vector<std::string>& args,
                         TripleContext& ctx) {
  Report rep;
  rep.command = "ho-hom(" + ctx.hovey.name + ")";
  HomotopyCategory ho(ctx.ts);
  const Module& a = ws.module_by_name(args.at(0));
  const Module& b = ws.module_by_name(args.at(1));
  const FactorHom& fh = ho.ho_hom(a, b);
  CheckRecord& r = rep.add("dim Hom_Ho(" + args[0] + ", " + args[1] + ") = " +
                               std::to_string(fh.dimension),
                           true);
  r.caveats.push_back("computed between RQ(" + args[0] + ") = " + disp(ws, ho.rq(a)) +
                      " and RQ(" + args[1] + ") = " + disp(ws, ho.rq(b)));
  for (const ModuleMorphism& m : fh.coset_reps) r.witnesses.push_back(mat_lines(m));
  return rep;
}

inline Report cmd_weq(Workspace& ws, const std::vector<std::string>& args, TripleContext& ctx) {
  Report rep;
  rep.command = "weq(" + ctx.hovey.name + ")";
  HomotopyCategory ho(ctx.ts);
  const Module& a = ws.module_by_name(args.at(0));
  const Module& b = ws.module_by_name(args.at(1));
  const HomSpace& hs = ws.cat->hom(a, b);
  if (hs.dimension == 0) {
    rep.vacuous("no nonzero morphisms " + args[0] + " -> " + args[1]);
    return rep;
  }
  for (std::size_t i = 0; i < hs.dimension; ++i) {
    bool in_s = ho.is_weak_equivalence(hs.basis[i]);
    CheckRecord& r = rep.add("basis morphism #" + std::to_string(i) + (in_s
                                                                           ? " is a weak equivalence"
                                                                           : " is not a weak equivalence"),
                             true);
    r.witnesses.push_back(mat_lines(hs.basis[i]));
  }
  return rep;
}

inline Report cmd_universal(Workspace& ws, TripleContext& ctx, bool fault) {
  HomotopyCategory ho(ctx.ts);
  // The canonical stabilization functor is the identity on objects into the
  // factor category modulo the triple's X. The fault variant retargets the
  // same table at the plain category (modulo the zero subcategory), which
  // fails to invert the weak equivalences.
  Subcategory target_x = fault ? Subcategory::add("0", {Module::zero(ws.cat->algebra())})
                               : ctx.triple.x_class;
  StableCat target(*ws.cat, target_x);
  FunctorTable f = gamma_functor_table(*ws.cat, target, ho);
  return universal_factorization(*ws.cat, ho, f);
}

inline Report cmd_ho_suite(Workspace& ws, TripleContext& ctx) {
  Report rep;
  rep.command = "homotopy-category(" + ctx.hovey.name + ")";
  HomotopyCategory ho(ctx.ts);
  rep.absorb(ho.check_equivalence_embedding(), "");
  bool gamma_inverts = true;
  for (const Module& a : ws.registry) {
    gamma_inverts = gamma_inverts && ho.is_ho_iso(ho.gamma_r(a)) && ho.is_ho_iso(ho.gamma_jq(a));
  }
  rep.add("gamma inverts every tabled replacement morphism", gamma_inverts);
  for (const Module& a : ws.registry)
    for (const Module& b : ws.registry) {
      const FactorHom& fh = ho.ho_hom(a, b);
      rep.add("dim Hom_Ho(" + a.display_name() + ", " + b.display_name() + ") = " +
                  std::to_string(fh.dimension),
              true);
    }
  return rep;
}

}  // namespace cli_detail

inline Report run_command(Workspace& ws, const std::string& cmd,
                          const std::vector<std::string>& args, const CommandOptions& opt) {
  using namespace cli_detail;
  if (cmd == "hom") return cmd_hom(ws, args);
  if (cmd == "stable-hom") return cmd_stable_hom(ws, args, opt);
  if (cmd == "ext1") return cmd_ext1(ws, args);
  if (cmd == "precover") return cmd_precover(ws, args, true);
  if (cmd == "preenvelope") return cmd_precover(ws, args, false);
  if (cmd == "check-cotorsion") return cmd_check_cotorsion(ws, args, opt);
  if (cmd == "check-hovey") {
    const HoveyDecl& d = args.empty() ? pick_triple(ws, opt) : ws.hovey_by_name(args[0]);
    return check_hovey_triple(*ws.cat, ws.make_triple(d), ws.registry);
  }
  if (cmd == "build-localization" || cmd == "check-localization" || cmd == "fix-triangles" ||
      cmd == "check-rt" || cmd == "check-prt" || cmd == "check-stabilizing" ||
      cmd == "check-prepartial" || cmd == "check-pretriangulated" || cmd == "ho-hom" ||
      cmd == "weq" || cmd == "universal") {
    const HoveyDecl& d = (cmd == "ho-hom" || cmd == "weq")
                             ? pick_triple(ws, opt)
                             : (args.empty() ? pick_triple(ws, opt) : ws.hovey_by_name(args[0]));
    TripleContext ctx(ws, d);
    if (cmd == "build-localization") {
      Report rep;
      rep.command = "build-localization(" + d.name + ")";
      for (const auto& [key, seq] : ctx.triple.q_table)
        rep.add("Q(" + disp(ws, seq.inner) + ") = " + disp(ws, seq.middle) +
                    ", kernel end " + disp(ws, seq.outer),
                true);
      for (const auto& [key, seq] : ctx.triple.r_table)
        rep.add("R(" + disp(ws, seq.outer) + ") = " + disp(ws, seq.middle) +
                    ", cokernel end " + disp(ws, seq.inner),
                true);
      return rep;
    }
    if (cmd == "check-localization")
      return check_localization_triple(*ws.cat, ctx.triple, ws.registry);
    if (cmd == "fix-triangles") return cmd_fix_triangles(ws, ctx);
    if (cmd == "check-rt") return verify_rt_axioms(ctx.ts, opt.budget);
    if (cmd == "check-prt") return verify_prt_axioms(ctx.ts, opt.budget);
    if (cmd == "check-stabilizing") {
      Report rep;
      rep.command = "check-stabilizing(" + d.name + ")";
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::right, true, "C", opt.budget),
                 "G = C: ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::left, true, "F", opt.budget),
                 "G = F: ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::right, false, "C&F", opt.budget),
                 "G = C&F: ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::left, false, "C&F", opt.budget),
                 "G = C&F: ");
      return rep;
    }
    if (cmd == "check-prepartial") {
      Report rep;
      rep.command = "check-prepartial(" + d.name + ")";
      if (opt.mode == "direct" || opt.mode == "both")
        rep.absorb(check_pre_partial_conditions(ctx.ts, PrePartialMode::direct, opt.budget),
                   "direct: ");
      if (opt.mode == "via-flip" || opt.mode == "both")
        rep.absorb(check_pre_partial_conditions(ctx.ts, PrePartialMode::via_flip, opt.budget),
                   "via-flip: ");
      return rep;
    }
    if (cmd == "check-pretriangulated") {
      Report rep;
      rep.command = "check-pretriangulated(" + d.name + ")";
      rep.absorb(check_adjunction(ctx.ts, opt.budget), "adjunction: ");
      rep.absorb(verify_pretriangulated(ctx.ts, opt.budget), "");
      return rep;
    }
    if (cmd == "ho-hom") return cmd_ho_hom(ws, args, ctx);
    if (cmd == "weq") return cmd_weq(ws, args, ctx);
    if (cmd == "universal") return cmd_universal(ws, ctx, opt.fault_invert);
  }
  if (cmd == "report-all") {
    Report rep;
    rep.command = "report-all";
    for (const HoveyDecl& d : ws.hovey_decls) {
      Report hov = check_hovey_triple(*ws.cat, ws.make_triple(d), ws.registry);
      rep.absorb(hov, d.name + ": ");
      if (!hov.ok()) continue;  // downstream structure needs a verified triple
      TripleContext ctx(ws, d);
      rep.absorb(check_localization_triple(*ws.cat, ctx.triple, ws.registry), d.name + ": ");
      rep.absorb(cmd_fix_triangles(ws, ctx), d.name + ": ");
      rep.absorb(verify_rt_axioms(ctx.ts, opt.budget), d.name + ": ");
      rep.absorb(verify_prt_axioms(ctx.ts, opt.budget), d.name + ": ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::right, true, "C", opt.budget),
                 d.name + ": G = C: ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::right, false, "C&F", opt.budget),
                 d.name + ": G = C&F: ");
      rep.absorb(check_stabilizing(ctx.ts, StabilizingSide::left, false, "C&F", opt.budget),
                 d.name + ": G = C&F: ");
      rep.absorb(check_pre_partial_conditions(ctx.ts, PrePartialMode::direct, opt.budget),
                 d.name + ": direct: ");
      rep.absorb(check_pre_partial_conditions(ctx.ts, PrePartialMode::via_flip, opt.budget),
                 d.name + ": via-flip: ");
      rep.absorb(check_adjunction(ctx.ts, opt.budget), d.name + ": ");
      rep.absorb(verify_pretriangulated(ctx.ts, opt.budget), d.name + ": ");
      rep.absorb(cmd_ho_suite(ws, ctx), d.name + ": ");
      rep.absorb(cmd_universal(ws, ctx, false), d.name + ": ");
    }
    std::vector<Conflation> pool;
    for (const Module& a : ws.registry)
      for (const Module& b : ws.registry)
        for (const Conflation& c : ext1(*ws.cat, a, b).representatives) pool.push_back(c);
    rep.absorb(exactness_axiom_suite(*ws.cat, pool, ws.registry), "");
    return rep;
  }
  throw std::runtime_error("unknown-command: '" + cmd + "'");
}

}  // namespace homcat
