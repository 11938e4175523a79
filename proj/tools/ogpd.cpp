// Command-line front end. Exit status: 0 when the requested check passes,
// 1 when a mathematical check fails, 2 on bad input.

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ogpd/beta.hpp"
#include "ogpd/expansion.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/homology.hpp"
#include "ogpd/json_io.hpp"
#include "ogpd/lcat.hpp"
#include "ogpd/random.hpp"

using namespace ogpd;

namespace {

struct Options {
  std::string file;
  std::string module;
  std::string target;
  bool json = false;
  std::size_t degrees = 2;
  std::size_t max_degree = 2;
  std::uint64_t seed = 0;
  RandomOgParams gen;
  std::string fixture;
};

struct Outcome {
  Json report;
  std::string text;
  int status = 0;
};

struct Loaded {
  WorkspaceDocument doc;
  OrderedGroupoid g;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = load_workspace(path);
  l.g = OrderedGroupoid::build(l.doc.groupoid);
  return l;
}

GModule pick_module(const Loaded& in, const LCat& l, const std::string& name, const char* flag) {
  if (!name.empty()) {
    auto it = in.doc.modules.find(name);
    if (it == in.doc.modules.end()) throw InputError(std::string("no module named '") + name + "' (" + flag + ")");
    return module_from_json(it->second, in.g, l, "/modules/" + name);
  }
  if (!in.doc.modules.empty()) return module_from_json(in.doc.modules.begin()->second, in.g, l);
  return constant_module(l, FgAbGroup::free(1));
}

std::vector<std::string> names(const OrderedGroupoid& g, const std::vector<ArrowId>& v) {
  std::vector<std::string> out;
  for (ArrowId a : v) out.push_back(g.name(a));
  return out;
}

// Validated groupoid or an outcome reporting why not.
bool require_valid(const OrderedGroupoid& g, Outcome& out) {
  const ValidationReport rep = g.validate();
  if (rep.ok()) return true;
  out.report = validation_to_json(rep);
  out.text = "not a valid ordered groupoid: " + rep.violations.front().axiom + "\n";
  out.status = 1;
  return false;
}

Json directedness_json(const OrderedGroupoid& g, const DirectednessResult& d) {
  Json j = {{"principally_directed", d.directed}, {"beta_transitive", d.beta_transitive}};
  j["counterexample"] = d.counterexample ? Json(names(g, {(*d.counterexample)[0], (*d.counterexample)[1],
                                                          (*d.counterexample)[2]}))
                                         : Json(nullptr);
  j["non_directed_ideal"] = d.non_directed_ideal ? Json(g.name(*d.non_directed_ideal)) : Json(nullptr);
  return j;
}

std::string triple_text(const Json& c) {
  return "(" + c[0].get<std::string>() + ", " + c[1].get<std::string>() + ", " + c[2].get<std::string>() + ")";
}

Outcome run_validate(const Options& o) {
  Loaded in = load(o.file);
  const ValidationReport rep = in.g.validate();
  Outcome out{validation_to_json(rep), "", rep.ok() ? 0 : 1};
  if (rep.ok()) {
    out.text = "valid ordered groupoid\n";
  } else {
    for (const auto& v : rep.violations) {
      out.text += v.axiom + " violated at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) out.text += (i ? ", " : "") + v.witness[i];
      out.text += ")" + (v.detail.empty() ? std::string() : ": " + v.detail) + "\n";
    }
  }
  return out;
}

Outcome run_beta(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  // Only the order is consulted, so invalid groupoids are reported on too.
  const OrderedGroupoid& g = in.g;
  const bool valid = g.validate().ok();
  const DirectednessResult d = principally_directed(g);
  out.report = directedness_json(g, d);
  out.report["schema"] = 1;
  out.report["valid"] = valid;
  if (!valid) out.text = "warning: not a valid ordered groupoid\n";
  Json related = Json::array();
  for (ArrowId a = 0; a < g.size(); ++a)
    for (ArrowId b = a + 1; b < g.size(); ++b)
      if (auto w = beta_witness(g, a, b)) related.push_back({g.name(a), g.name(b), g.name(*w)});
  out.report["related"] = related;
  out.text += std::string("principally directed: ") + (d.directed ? "yes" : "no") + "\n";
  out.text += std::string("beta transitive: ") + (d.beta_transitive ? "yes" : "no") + "\n";
  if (d.counterexample) out.text += "counterexample: " + triple_text(out.report["counterexample"]) + "\n";
  out.text += std::to_string(related.size()) + " related pairs of distinct arrows\n";
  return out;
}

Outcome run_quotient(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  const DirectednessResult d = principally_directed(in.g);
  if (!d.directed) {
    out.report = directedness_json(in.g, d);
    out.report["schema"] = 1;
    out.text = "quotient undefined: not principally directed; counterexample " +
               triple_text(out.report["counterexample"]) + "\n";
    out.status = 1;
    return out;
  }
  if (!require_valid(in.g, out)) return out;
  const QuotientGroupoid q = quotient(in.g);
  const WelldefinednessReport wd = check_quotient_welldefined(in.g, q);
  out.report = groupoid_to_json(q.groupoid);
  Json classes = Json::object();
  for (std::size_t k = 0; k < q.classes.size(); ++k) classes[q.groupoid.name(k)] = names(in.g, q.classes[k]);
  out.report["classes"] = classes;
  out.report["welldefined"] = {{"checked", wd.checked}, {"ok", wd.ok()}, {"mismatches", wd.mismatches}};
  out.text = std::to_string(q.groupoid.identities().size()) + " objects, " + std::to_string(q.groupoid.size()) +
             " arrows\n";
  for (auto it = classes.begin(); it != classes.end(); ++it) {
    out.text += "  " + it.key() + ":";
    for (const auto& m : it.value()) out.text += " " + m.get<std::string>();
    out.text += "\n";
  }
  out.text += "composition independent of choices (" + std::to_string(wd.checked) + " choices): " +
              (wd.ok() ? "yes" : "no") + "\n";
  if (!wd.ok()) out.status = 1;
  return out;
}

Outcome run_lcat(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  if (!require_valid(in.g, out)) return out;
  const LCat l = LCat::build(in.g);
  const FiniteCategory& c = l.category();
  Json objects = Json::array(), morphisms = Json::array(), compose = Json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) objects.push_back(c.object_name(x));
  for (MorphismId m = 0; m < c.morphism_count(); ++m)
    morphisms.push_back({{"id", c.morphism(m).name},
                         {"dom", c.object_name(c.dom(m))},
                         {"cod", c.object_name(c.cod(m))}});
  for (MorphismId a = 0; a < c.morphism_count(); ++a)
    for (MorphismId b = 0; b < c.morphism_count(); ++b)
      if (auto ab = c.compose(a, b)) compose.push_back({c.morphism(a).name, c.morphism(b).name, c.morphism(*ab).name});
  out.report = {{"schema", 1}, {"objects", objects}, {"morphisms", morphisms}, {"compose", compose},
                {"left_cancellative", !c.left_cancellation_failure().has_value()}};
  out.text = std::to_string(c.object_count()) + " objects, " + std::to_string(c.morphism_count()) + " morphisms:";
  for (const auto& m : morphisms) out.text += " " + m["id"].get<std::string>();
  out.text += "\n";
  return out;
}

Outcome run_colim(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  if (!require_valid(in.g, out)) return out;
  const LCat l = LCat::build(in.g);
  const GModule a = pick_module(in, l, o.module, "--module");
  const Colimit c = colim_category(a);
  Json comps = Json::array();
  for (const auto& k : c.components) comps.push_back(canonical_to_json(k.canonical()));
  out.report = {{"schema", 1}, {"colimit", canonical_to_json(c.group.canonical())}, {"components", comps}};
  out.text = "colimit over L(G): " + c.group.canonical().to_string() + "\n";
  if (!is_principally_directed(in.g)) {
    out.report["quotient"] = nullptr;
    out.text += "not principally directed; no induced quotient module\n";
    return out;
  }
  const BetaSetting s = BetaSetting::make(in.g);
  const EColimit la = colim_E(s, a);
  Json classes = Json::object();
  for (ObjectId x = 0; x < s.qcat.category().object_count(); ++x)
    classes[s.quotient.groupoid.name(s.qcat.identity_of(x))] = canonical_to_json(la.module.groups[x].canonical());
  out.report["quotient"] = {{"classes", classes},
                            {"action_ok", la.report.ok()},
                            {"failures", la.report.failures},
                            {"checks",
                             {{"lower_bound", la.report.lower_bound_checks},
                              {"preimage", la.report.preimage_checks},
                              {"representative", la.report.representative_checks}}}};
  for (auto it = classes.begin(); it != classes.end(); ++it) {
    CanonicalForm f;
    f.rank = it.value()["rank"].get<std::size_t>();
    for (const auto& t : it.value()["torsion"]) f.torsion.push_back(integer_from_json(t, ""));
    out.text += "colimit over the identities of class " + it.key() + ": " + f.to_string() + "\n";
  }
  out.text += std::string("induced quotient action well defined: ") + (la.report.ok() ? "yes" : "no") + "\n";
  if (!la.report.ok()) out.status = 1;
  return out;
}

Outcome run_homology(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  if (!require_valid(in.g, out)) return out;
  const LCat l = LCat::build(in.g);
  const GModule a = pick_module(in, l, o.module, "--module");
  const ChainComplex cx = nerve_complex(a, o.max_degree + 1);
  for (const auto& w : cx.warnings) std::cerr << "warning: " << w << "\n";
  Json degrees = Json::array();
  bool h0 = true;
  for (std::size_t n = 0; n <= o.max_degree; ++n) {
    const CanonicalForm h = homology(cx, n).canonical();
    if (n == 0) h0 = h == colim_category(a).group.canonical();
    degrees.push_back({{"degree", n}, {"group", canonical_to_json(h)}});
    out.text += "H_" + std::to_string(n) + " = " + h.to_string() + "\n";
  }
  const std::string dd = cx.check_boundary_squared();
  out.report = {{"schema", 1},          {"degrees", degrees},          {"h0_matches_colim", h0},
                {"boundary_ok", dd.empty()}, {"warnings", cx.warnings}};
  out.text += std::string("H_0 equals the colimit: ") + (h0 ? "yes" : "no") + "\n";
  if (!h0 || !dd.empty()) out.status = 1;
  return out;
}

// Shared preamble of the checks that need the quotient.
bool setting_or_failure(const Loaded& in, Outcome& out, std::optional<BetaSetting>& s) {
  if (!require_valid(in.g, out)) return false;
  const DirectednessResult d = principally_directed(in.g);
  if (!d.directed) {
    out.report = directedness_json(in.g, d);
    out.report["schema"] = 1;
    out.text = "not principally directed; counterexample " + triple_text(out.report["counterexample"]) + "\n";
    out.status = 1;
    return false;
  }
  s = BetaSetting::make(in.g);
  return true;
}

Outcome run_check_adjunction(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  std::optional<BetaSetting> s;
  if (!setting_or_failure(in, out, s)) return out;
  const GModule a = pick_module(in, s->lcat, o.module, "--module");
  // The quotient module is the induced one of --target (default: of A).
  const GModule t = o.target.empty() ? a : pick_module(in, s->lcat, o.target, "--target");
  const GModule b = colim_E(*s, t).module;
  const AdjunctionReport r = check_adjunction(*s, a, b);
  out.report = {{"schema", 1},
                {"left_homs", r.left_homs},
                {"right_homs", r.right_homs},
                {"rho_natural", r.rho_natural},
                {"tau_natural", r.tau_natural},
                {"tau_after_rho", r.tau_after_rho},
                {"rho_after_tau", r.rho_after_tau},
                {"ok", r.ok()}};
  out.text = "|Hom(A, B expanded)| = " + std::to_string(r.left_homs) + ", |Hom(colim_E A, B)| = " +
             std::to_string(r.right_homs) + "\nrho and tau mutually inverse: " +
             (r.tau_after_rho && r.rho_after_tau ? "yes" : "no") + "\n";
  out.status = r.ok() ? 0 : 1;
  return out;
}

Outcome run_check_colim(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  std::optional<BetaSetting> s;
  if (!setting_or_failure(in, out, s)) return out;
  const GModule a = pick_module(in, s->lcat, o.module, "--module");
  const ColimCompositionReport r = check_colim_composition(*s, a);
  out.report = {{"schema", 1},
                {"iterated", canonical_to_json(r.iterated)},
                {"direct", canonical_to_json(r.direct)},
                {"forms_equal", r.forms_equal},
                {"comparison_welldefined", r.comparison_welldefined},
                {"inverse_welldefined", r.inverse_welldefined},
                {"mutually_inverse", r.mutually_inverse},
                {"ok", r.ok()}};
  out.text = "colimit of the induced quotient module: " + r.iterated.to_string() +
             "\ncolimit over L(G): " + r.direct.to_string() + "\ncomparison is an isomorphism: " +
             (r.ok() ? "yes" : "no") + "\n";
  out.status = r.ok() ? 0 : 1;
  return out;
}

Outcome run_check_theorem(const Options& o) {
  Loaded in = load(o.file);
  Outcome out;
  std::optional<BetaSetting> s;
  if (!setting_or_failure(in, out, s)) return out;
  const GModule a = pick_module(in, s->lcat, o.module, "--module");
  const TheoremReport r = check_theorem(*s, a, o.degrees);
  out.report = theorem_to_json(r);
  for (const auto& d : r.degrees)
    out.text += "degree " + std::to_string(d.degree) + ": " + d.left.to_string() + " | " + d.right.to_string() +
                (d.equal ? "  equal\n" : "  DIFFERENT\n");
  out.text += std::string("H_0 equals the colimit: ") + (r.h0_matches_colim ? "yes" : "no") + "\n";
  out.status = r.ok() ? 0 : 1;
  return out;
}

Outcome run_gen(const Options& o) {
  WorkspaceDocument doc;
  doc.groupoid = random_groupoid_spec(o.seed, o.gen);
  doc.seed = static_cast<long long>(o.seed);
  const OrderedGroupoid g = generate_random_og(o.seed, o.gen);
  const LCat l = LCat::build(g);
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  doc.modules["random"] = module_to_json(random_module(g, l, rng), g, l);
  Outcome out;
  out.report = workspace_to_json(doc);
  out.text = canonical_text(out.report);
  return out;
}

Outcome run_fixture(const Options& o) {
  Outcome out;
  try {
    out.report = workspace_to_json(fixture_document(o.fixture));
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
  out.text = canonical_text(out.report);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered groupoids, their quotients, modules and homology"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> action;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "workspace or groupoid JSON document")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto with_module = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "module name in the document (default: first, or constant Z)");
  };

  auto* validate = app.add_subcommand("validate", "check the ordered groupoid axioms");
  with_file(validate);
  validate->callback([&] { action = run_validate; });

  auto* beta = app.add_subcommand("beta", "common-lower-bound relation and principal directedness");
  with_file(beta);
  beta->callback([&] { action = run_beta; });

  auto* quot = app.add_subcommand("quotient", "quotient groupoid by the common-lower-bound relation");
  with_file(quot);
  quot->callback([&] { action = run_quotient; });

  auto* lcat = app.add_subcommand("lcat", "the left-cancellative category of the groupoid");
  with_file(lcat);
  lcat->callback([&] { action = run_lcat; });

  auto* colim = app.add_subcommand("colim", "colimits of a module");
  with_file(colim);
  with_module(colim);
  colim->callback([&] { action = run_colim; });

  auto* hom = app.add_subcommand("homology", "nerve homology of a module");
  with_file(hom);
  with_module(hom);
  hom->add_option("--max-degree", o.max_degree, "highest degree computed")->check(CLI::Range(0, 3));
  hom->callback([&] { action = run_homology; });

  auto* check = app.add_subcommand("check", "verify a theorem on a document");
  check->require_subcommand(1);
  auto* adj = check->add_subcommand("adjunction", "expansion and colimit are adjoint on enumerated hom-sets");
  with_file(adj);
  with_module(adj);
  adj->add_option("--target", o.target, "module whose induced quotient module is the right-hand side");
  adj->callback([&] { action = run_check_adjunction; });
  auto* cc = check->add_subcommand("colim-composition", "iterated colimit equals the colimit over L(G)");
  with_file(cc);
  with_module(cc);
  cc->callback([&] { action = run_check_colim; });
  auto* thm = check->add_subcommand("theorem", "homology of G and of its quotient agree");
  with_file(thm);
  with_module(thm);
  thm->add_option("--degrees", o.degrees, "highest degree compared")->check(CLI::Range(0, 3));
  thm->callback([&] { action = run_check_theorem; });

  auto* gen = app.add_subcommand("gen", "random ordered groupoid with a random module");
  gen->add_option("--seed", o.seed, "generator seed")->required();
  gen->add_option("--identities", o.gen.max_identities, "maximum number of base identities");
  gen->add_option("--order", o.gen.max_order, "maximum vertex group order");
  gen->add_option("--pair", o.gen.max_pair, "maximum pair-groupoid factor");
  gen->add_flag("--directed", o.gen.directed, "principally directed output");
  gen->add_flag("--json", o.json, "machine-readable output");
  gen->callback([&] { action = run_gen; });

  auto* fix = app.add_subcommand("fixture", "print a built-in fixture document");
  fix->add_option("name", o.fixture, "chain2, z2group, clifford, nontransitive or bowtie")->required();
  fix->add_flag("--json", o.json, "machine-readable output");
  fix->callback([&] { action = run_fixture; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Outcome out = action(o);
    if (o.json)
      std::cout << canonical_text(out.report);
    else
      std::cout << out.text;
    return out.status;
  } catch (const InputError& e) {
    if (o.json)
      std::cout << canonical_text({{"error", "input"}, {"message", e.what()}, {"pointer", e.pointer()}});
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    // Unsupported input, e.g. hom-set enumeration over an infinite group.
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    if (o.json) std::cout << canonical_text({{"error", "math"}, {"message", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
