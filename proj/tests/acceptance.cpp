// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ogpd/beta.hpp"
#include "ogpd/expansion.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/homology.hpp"
#include "ogpd/json_io.hpp"
#include "ogpd/random.hpp"
#include "support/oracles.hpp"

using namespace ogpd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures without stopping at the first one.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures.empty();
    std::ostringstream ss;
    ss << summary << "; " << checks << " checks";
    if (!failures.empty()) {
      ss << ", " << failures.size() << " failed: " << failures.front();
      if (failures.size() > 1) ss << " (+" << failures.size() - 1 << " more)";
    }
    o.detail = ss.str();
    return o;
  }
};

const std::vector<std::string> kFixtureSet = {"chain2", "z2group", "clifford", "nontransitive"};

OrderedGroupoid fixture(const std::string& name) { return OrderedGroupoid::build(fixture_spec(name)); }

GModule fixture_module(const BetaSetting& s, const std::string& name, const std::string& module) {
  return module_from_json(fixture_document(name).modules.at(module), s.g, s.lcat, "/modules/" + module);
}

// Z/3 with s and t acting by -1: a finite module on the clifford fixture.
GModule clifford_z3(const BetaSetting& s) {
  const Json j = Json::parse(R"J({"groups": {"1": {"torsion": [3]}, "f": {"torsion": [3]}},
                                   "poset_maps": {"1>f": [[1]]}, "arrow_maps": {"s": [[-1]], "t": [[-1]]}})J");
  return module_from_json(j, s.g, s.lcat);
}

const RandomOgParams kDirected{3, 3, 2, true};

std::string seed_label(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// Degree-0 homology against colim_category, across every homology call.
Tally h0_tally;

void record_h0(const CanonicalForm& h0, const GModule& m, const std::string& where) {
  h0_tally.expect(h0 == colim_category(m).group.canonical(), where);
}

Outcome axioms() {
  Tally t;
  for (const auto& name : kFixtureSet) {
    const ValidationReport r = fixture(name).validate();
    std::string axioms;
    for (const auto& v : r.violations)
      if (axioms.find(v.axiom) == std::string::npos) axioms += (axioms.empty() ? "" : ",") + v.axiom;
    t.expect(r.ok(), name + " violates " + axioms);
  }
  struct Mutation {
    std::function<void(GroupoidSpec&)> edit;
    std::string axiom;
    std::vector<std::string> witness;
  };
  auto del = [](std::string lo, std::string hi) {
    return [=](GroupoidSpec& s) { std::erase(s.order, std::pair<std::string, std::string>{lo, hi}); };
  };
  auto set = [](std::string a, std::string b, std::string ab) {
    return [=](GroupoidSpec& s) {
      std::erase_if(s.compose, [&](const auto& c) { return c[0] == a && c[1] == b; });
      s.compose.push_back({a, b, ab});
    };
  };
  const std::vector<Mutation> mutations = {
      {del("t", "s"), "OG3", {"s", "f"}},        {del("f", "1"), "OG2", {"t", "s", "t", "s"}},
      {set("1", "1", "s"), "identity", {"1"}},   {set("1", "s", "1"), "identity", {"s"}},
      {set("s", "1", "1"), "identity", {"s"}},   {set("s", "s", "s"), "inverse", {"s"}},
      {set("f", "f", "t"), "identity", {"f"}},   {set("f", "t", "f"), "identity", {"t"}},
      {set("t", "f", "f"), "identity", {"t"}},   {set("t", "t", "t"), "inverse", {"t"}},
  };
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < mutations.size(); ++i) {
    GroupoidSpec s = fixture_spec("clifford");
    mutations[i].edit(s);
    const ValidationReport r = OrderedGroupoid::build(s).validate();
    bool found = false;
    for (const auto& v : r.violations)
      if (v.axiom == mutations[i].axiom) {
        found = v.witness == mutations[i].witness;
        break;
      }
    t.expect(!r.ok() && found, "mutation " + std::to_string(i) + " not rejected with the expected witness");
    rejected += !r.ok() && found;
  }
  return t.outcome(std::to_string(rejected) + "/10 mutations rejected with witness");
}

Outcome ideals_vs_transitivity() {
  Tally t;
  for (const auto& name : kFixtureSet) {
    const DirectednessResult r = principally_directed(fixture(name));
    t.expect(r.directed == r.beta_transitive, name);
  }
  std::size_t negative = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DirectednessResult r = principally_directed(generate_random_og(seed, {seed % 2 ? 5u : 3u, 3, 2, false}));
    t.expect(r.directed == r.beta_transitive, seed_label(seed));
    negative += !r.directed;
  }
  t.expect(negative > 0 && negative < 200, "random instances do not cover both verdicts");
  return t.outcome("4 fixtures + 200 random, " + std::to_string(negative) + " not directed");
}

Outcome counterexample() {
  Tally t;
  const OrderedGroupoid g = fixture("nontransitive");
  bool e_directed = true;
  for (ArrowId e : g.identities()) e_directed = e_directed && g.is_directed(g.principal_ideal(e));
  t.expect(e_directed, "identities of nontransitive not principally directed");
  const DirectednessResult r = principally_directed(g);
  t.expect(!r.directed, "nontransitive reported principally directed");
  std::string chain = "none";
  if (r.counterexample) {
    const auto [a, m, b] = *r.counterexample;
    chain = "(" + g.name(a) + ", " + g.name(m) + ", " + g.name(b) + ")";
    t.expect(g.name(a) == "s_A" && g.name(m) == "s" && g.name(b) == "s_B", "counterexample " + chain);
  } else {
    t.expect(false, "no counterexample");
  }
  return t.outcome("counterexample " + chain);
}

Outcome quotient_welldefined() {
  Tally t;
  std::size_t tuples = 0;
  auto one = [&](const OrderedGroupoid& g, const std::string& label) {
    const QuotientGroupoid q = quotient(g);
    const WelldefinednessReport w = check_quotient_welldefined(g, q);
    tuples += w.checked;
    t.expect(w.ok(), label + ": " + (w.ok() ? "" : w.mismatches.front()));
    t.expect(q.groupoid.validate().ok(), label + ": quotient is not a groupoid");
  };
  for (const char* name : {"chain2", "z2group", "clifford"}) one(fixture(name), name);
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) one(generate_random_og(seed, kDirected), seed_label(seed));
  return t.outcome("3 fixtures + 100 random, " + std::to_string(tuples) + " choice tuples");
}

Outcome left_cancellative() {
  Tally t;
  std::size_t triples = 0;
  auto one = [&](const OrderedGroupoid& g, const std::string& label) {
    const LCat l = LCat::build(g);
    const FiniteCategory& c = l.category();
    t.expect(c.check_laws().empty(), label + ": " + c.check_laws());
    const std::size_t n = c.morphism_count();
    for (MorphismId m = 0; m < n; ++m)
      for (MorphismId a = 0; a < n; ++a)
        for (MorphismId b = a + 1; b < n; ++b) {
          const auto ma = c.compose(m, a), mb = c.compose(m, b);
          if (!ma || !mb) continue;
          ++triples;
          if (*ma == *mb) t.expect(false, label + ": m a = m b with a != b");
        }
  };
  for (const char* name : {"chain2", "z2group", "clifford"}) one(fixture(name), name);
  for (std::uint64_t seed = 2000; seed < 2100; ++seed) one(generate_random_og(seed), seed_label(seed));
  return t.outcome("3 fixtures + 100 random, " + std::to_string(triples) + " triples");
}

Outcome action_welldefined() {
  Tally t;
  std::size_t lower = 0, pre = 0, rep = 0;
  auto one = [&](const BetaSetting& s, const GModule& a, const std::string& label) {
    const EColimit c = colim_E(s, a);
    lower += c.report.lower_bound_checks;
    pre += c.report.preimage_checks;
    rep += c.report.representative_checks;
    t.expect(c.report.ok(), label + ": " +
                                (c.report.failures.empty() ? c.report.functoriality : c.report.failures.front()));
  };
  const BetaSetting f3 = BetaSetting::make(fixture("clifford"));
  one(f3, clifford_z3(f3), "clifford");
  std::mt19937_64 rng(6);
  for (std::uint64_t seed = 3000; seed < 3100; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, kDirected));
    one(s, random_module(s.g, s.lcat, rng), seed_label(seed));
  }
  t.expect(lower > 0 && pre > 0 && rep > 0, "one of the three independence checks never ran");
  return t.outcome("clifford + 100 random; " + std::to_string(lower) + " lower-bound, " + std::to_string(pre) +
                   " preimage, " + std::to_string(rep) + " representative checks");
}

Outcome adjunction() {
  Tally t;
  std::size_t homs = 0;
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 4000; seed < 4050; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, {3, 3, 2, true}));
    const GModule a = random_module(s.g, s.lcat, rng, {8, false, 2});
    const GModule b = random_module(s.quotient.groupoid, s.qcat, rng, {8, false, 2});
    const AdjunctionReport r = check_adjunction(s, a, b, 64);
    homs += r.left_homs;
    t.expect(r.ok(), seed_label(seed) + ": |Hom(A,B up)| = " + std::to_string(r.left_homs) +
                         ", |Hom(colim A,B)| = " + std::to_string(r.right_homs));
  }
  return t.outcome("50 random, " + std::to_string(homs) + " maps through both bijections");
}

Outcome epimorphisms() {
  Tally t;
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 5000; seed < 5050; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, kDirected));
    const RandomSurjection e = random_surjection(s.quotient.groupoid, s.qcat, rng);
    t.expect(componentwise_surjective(e.source, e.target, e.map), seed_label(seed) + ": input not surjective");
    const GModule src = expand(s, e.source), tgt = expand(s, e.target);
    const GMap up = expand_map(s, e.map);
    t.expect(check_naturality(src, tgt, up).empty(), seed_label(seed) + ": expanded map not natural");
    t.expect(componentwise_surjective(src, tgt, up), seed_label(seed) + ": expanded map not surjective");
  }
  return t.outcome("50 random surjections");
}

Outcome colim_composition() {
  Tally t;
  auto one = [&](const BetaSetting& s, const GModule& a, const std::string& label) {
    const ColimCompositionReport r = check_colim_composition(s, a);
    t.expect(r.ok(), label + ": " + r.iterated.to_string() + " vs " + r.direct.to_string());
  };
  for (const auto& [name, module] : std::vector<std::pair<std::string, std::string>>{
           {"chain2", "mixed"}, {"z2group", "sign"}, {"clifford", "sign"}}) {
    const BetaSetting s = BetaSetting::make(fixture(name));
    one(s, fixture_module(s, name, module), name);
  }
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 6000; seed < 6100; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, kDirected));
    one(s, random_module(s.g, s.lcat, rng, {8, seed % 3 == 0, 2}), seed_label(seed));
  }
  return t.outcome("3 fixtures + 100 random");
}

Outcome exactness() {
  Tally t;
  std::mt19937_64 rng(10);
  for (std::uint64_t seed = 7000; seed < 7050; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, kDirected));
    const ShortExactSequence x = random_short_exact(s.g, s.lcat, rng);
    const EColimit l = colim_E(s, x.left), m = colim_E(s, x.middle), r = colim_E(s, x.right);
    const GMap f = colim_E_map(s, l, m, x.first), g = colim_E_map(s, m, r, x.second);
    bool ok = check_naturality(l.module, m.module, f).empty() && check_naturality(m.module, r.module, g).empty();
    for (ObjectId o = 0; ok && o < s.qcat.category().object_count(); ++o) {
      const AbHom fo{l.module.groups[o], m.module.groups[o], f.components[o]};
      const AbHom go{m.module.groups[o], r.module.groups[o], g.components[o]};
      ok = is_injective(fo) && is_surjective(go) && homology_at(fo, go).is_trivial();
    }
    t.expect(ok, seed_label(seed));
  }
  return t.outcome("50 random short exact sequences");
}

Outcome theorem() {
  Tally t;
  auto one = [&](const BetaSetting& s, const GModule& a, const std::string& label) {
    const TheoremReport r = check_theorem(s, a, 2);
    for (const auto& d : r.degrees)
      t.expect(d.equal, label + " degree " + std::to_string(d.degree) + ": " + d.left.to_string() + " vs " +
                            d.right.to_string());
    record_h0(r.degrees[0].left, a, label + " (left)");
    record_h0(r.degrees[0].right, colim_E(s, a).module, label + " (right)");
  };
  for (const auto& [name, module] : std::vector<std::pair<std::string, std::string>>{
           {"chain2", "constant"}, {"z2group", "sign"}, {"clifford", "sign"}}) {
    const BetaSetting s = BetaSetting::make(fixture(name));
    one(s, fixture_module(s, name, module), name);
  }
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 8000; seed < 8025; ++seed) {
    const BetaSetting s = BetaSetting::make(generate_random_og(seed, {2, 3, 2, true}));
    one(s, random_module(s.g, s.lcat, rng, {6, false, 1}), seed_label(seed));
  }
  return t.outcome("3 fixtures + 25 random, degrees 0..2");
}

Outcome linear_algebra() {
  Tally t;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> entry(-20, 20), dim(1, 12);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t r = dim(rng), c = dim(rng);
    ZMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const std::string bad = verify_smith_form(m, smith_normal_form(m));
    t.expect(bad.empty(), "matrix " + std::to_string(k) + ": " + bad);
  }
  for (int k = 0; k < 100; ++k) {
    const oracle::RandomComplex cx = oracle::random_complex(rng, 512);
    const AbHom f{cx.a.presented, cx.b.presented, cx.f}, g{cx.b.presented, cx.c.presented, cx.g};
    const CanonicalForm got = homology_at(f, g).canonical(), want = oracle::brute_force_homology(cx);
    t.expect(got == want, "complex " + std::to_string(k) + ": " + got.to_string() + " vs " + want.to_string());
  }
  return t.outcome("1000 Smith forms, 100 brute-force complexes");
}

Outcome cyclic_groups() {
  Tally t;
  for (int m = 1; m <= 6; ++m) {
    const OrderedGroupoid g = oracle::cyclic_group(m);
    const LCat l = LCat::build(g);
    std::vector<std::pair<std::string, std::pair<FgAbGroup, ZMatrix>>> coeffs = {
        {"Z", {FgAbGroup::free(1), ZMatrix{{1}}}}, {"Z/2", {FgAbGroup::cyclic(2), ZMatrix{{1}}}}};
    if (m % 2 == 0) coeffs.push_back({"sign", {FgAbGroup::free(1), ZMatrix{{-1}}}});
    for (const auto& [what, data] : coeffs) {
      const GModule mod = oracle::cyclic_module(g, l, data.first, data.second);
      const ChainComplex cx = nerve_complex(mod, 4);
      for (int n = 0; n <= 3; ++n) {
        const CanonicalForm got = homology(cx, n).canonical();
        const CanonicalForm want = oracle::cyclic_group_homology(data.first, data.second, m, n);
        t.expect(got == want, "Z/" + std::to_string(m) + " " + what + " H" + std::to_string(n) + ": " +
                                  got.to_string() + " vs " + want.to_string());
        if (n == 0) record_h0(got, mod, "Z/" + std::to_string(m) + " " + what);
      }
    }
  }
  return t.outcome("m = 1..6, degrees 0..3");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom validation", axioms},
      {2, "ideal directedness vs beta transitivity", ideals_vs_transitivity},
      {3, "non-transitive counterexample", counterexample},
      {4, "quotient well-definedness", quotient_welldefined},
      {5, "left cancellativity of L(G)", left_cancellative},
      {6, "induced action well-definedness", action_welldefined},
      {7, "adjunction", adjunction},
      {8, "epimorphism preservation", epimorphisms},
      {9, "composition of colimits", colim_composition},
      {10, "exactness of colim over E", exactness},
      {11, "H0 equals the colimit", nullptr},
      {12, "homology of L(G) vs G/beta", theorem},
      {13, "linear algebra kernel", linear_algebra},
      {14, "cyclic group homology", cyclic_groups},
  };
  std::vector<Outcome> outcomes(criteria.size());
  std::vector<double> seconds(criteria.size());
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!criteria[i].run) continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcomes[i] = criteria[i].run();
    } catch (const std::exception& e) {
      outcomes[i] = {false, std::string("exception: ") + e.what()};
    }
    seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  // Filled in by the homology criteria above.
  outcomes[10] = h0_tally.outcome("every degree-0 homology computed in criteria 12 and 14");

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome& o = outcomes[i];
    failed += !o.pass;
    std::cout << "criterion " << criteria[i].number << " " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].name << ": " << o.detail;
    if (criteria[i].run) std::cout << " [" << static_cast<long>(seconds[i] * 1000) << " ms]";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
