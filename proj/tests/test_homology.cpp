#include <doctest.h>

#include <random>

#include "ogpd/fixtures.hpp"
#include "ogpd/homology.hpp"
#include "ogpd/json_io.hpp"
#include "ogpd/random.hpp"
#include "support/oracles.hpp"

using namespace ogpd;

namespace {

BetaSetting setting(const std::string& name) {
  return BetaSetting::make(OrderedGroupoid::build(fixture_spec(name)));
}

GModule fixture_module(const BetaSetting& s, const std::string& fixture, const std::string& module) {
  return module_from_json(fixture_document(fixture).modules.at(module), s.g, s.lcat, "/modules/" + module);
}

CanonicalForm form(std::size_t rank, std::vector<long> torsion) {
  CanonicalForm f;
  f.rank = rank;
  for (long t : torsion) f.torsion.push_back(t);
  return f;
}

}  // namespace

TEST_CASE("chains of the nerve") {
  const BetaSetting z2 = setting("z2group");
  const ChainComplex c = nerve_complex(fixture_module(z2, "z2group", "trivial"), 3);
  REQUIRE(c.top_degree() == 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(c.groups[n].canonical() == form(1, {}));
    CHECK(c.chains[n].size() == 1);
  }
  CHECK(c.objects.size() == 1);
  CHECK(c.chains[3][0].size() == 3);
  CHECK(c.check_boundary_squared().empty());

  const BetaSetting c2 = setting("chain2");
  const ChainComplex d = nerve_complex(fixture_module(c2, "chain2", "constant"), 2);
  CHECK(d.groups[0].canonical() == form(2, {}));
  CHECK(d.groups[1].canonical() == form(1, {}));
  CHECK(d.groups[2].is_trivial());
  CHECK(d.boundary[1].rows() == 1);
  CHECK(d.boundary[1].cols() == 2);
  CHECK(d.check_boundary_squared().empty());
}

TEST_CASE("homology of small fixtures") {
  const BetaSetting c2 = setting("chain2");
  const GModule constant = fixture_module(c2, "chain2", "constant");
  CHECK(homology(constant, 0).canonical() == form(1, {}));
  CHECK(homology(constant, 1).is_trivial());

  const BetaSetting z2 = setting("z2group");
  const GModule trivial = fixture_module(z2, "z2group", "trivial");
  CHECK(homology(trivial, 0).canonical() == form(1, {}));
  CHECK(homology(trivial, 1).canonical() == form(0, {2}));
  CHECK(homology(trivial, 2).is_trivial());
  const GModule sign = fixture_module(z2, "z2group", "sign");
  CHECK(homology(sign, 0).canonical() == form(0, {2}));
  CHECK(homology(sign, 1).is_trivial());
  CHECK(homology(sign, 2).canonical() == form(0, {2}));

  // The bowtie poset is a circle.
  const OrderedGroupoid bow = OrderedGroupoid::build(fixture_spec("bowtie"));
  const LCat lb = LCat::build(bow);
  const GModule cb = constant_module(lb, FgAbGroup::free(1));
  CHECK(homology(cb, 0).canonical() == form(1, {}));
  CHECK(homology(cb, 1).canonical() == form(1, {}));
  CHECK(homology(cb, 2).is_trivial());
}

TEST_CASE("asking above the built range is an error") {
  const BetaSetting z2 = setting("z2group");
  const ChainComplex c = nerve_complex(fixture_module(z2, "z2group", "trivial"), 2);
  CHECK_NOTHROW(homology(c, 1));
  CHECK_THROWS(homology(c, 2));
}

TEST_CASE("cyclic groups against the periodic resolution") {
  for (int m = 2; m <= 6; ++m) {
    const OrderedGroupoid g = oracle::cyclic_group(m);
    const LCat l = LCat::build(g);
    struct Coeff {
      std::string what;
      FgAbGroup group;
      ZMatrix t;
    };
    std::vector<Coeff> coeffs = {{"Z", FgAbGroup::free(1), ZMatrix{{1}}},
                                 {"Z/2", FgAbGroup::cyclic(2), ZMatrix{{1}}},
                                 {"Z/m", FgAbGroup::cyclic(m), ZMatrix{{1}}}};
    if (m % 2 == 0) coeffs.push_back({"sign", FgAbGroup::free(1), ZMatrix{{-1}}});
    // Z/m acting on Z^m by cyclic permutation.
    ZMatrix perm(m, m);
    for (int i = 0; i < m; ++i) perm(i, (i + 1) % m) = 1;
    if (m <= 4) coeffs.push_back({"regular", FgAbGroup::free(m), perm});
    for (const auto& c : coeffs) {
      const GModule mod = oracle::cyclic_module(g, l, c.group, c.t);
      REQUIRE(mod.check_functoriality().empty());
      const ChainComplex cx = nerve_complex(mod, 4);
      CHECK(cx.check_boundary_squared().empty());
      for (int n = 0; n <= 3; ++n) {
        INFO("m=" << m << " " << c.what << " degree " << n);
        CHECK(homology(cx, n).canonical() == oracle::cyclic_group_homology(c.group, c.t, m, n));
      }
    }
  }
}

TEST_CASE("degree zero is the colimit") {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    INFO("seed " << seed);
    const OrderedGroupoid g = generate_random_og(seed, {3, 3, 2, false});
    const LCat l = LCat::build(g);
    const GModule a = random_module(g, l, rng, {8, seed % 2 == 0, 2});
    CHECK(homology(a, 0).canonical() == colim_category(a).group.canonical());
  }
}

TEST_CASE("homology of L(G) and of G/beta agree") {
  SUBCASE("fixtures") {
    for (const auto& [fixture, module] : std::vector<std::pair<std::string, std::string>>{
             {"chain2", "constant"}, {"chain2", "mixed"}, {"z2group", "sign"}, {"clifford", "sign"},
             {"clifford", "trivial"}}) {
      INFO(fixture << " " << module);
      const BetaSetting s = setting(fixture);
      const TheoremReport r = check_theorem(s, fixture_module(s, fixture, module), 2);
      CHECK(r.ok());
      CHECK(r.h0_matches_colim);
      CHECK(r.degrees.size() == 3);
    }
    const BetaSetting cl = setting("clifford");
    const TheoremReport r = check_theorem(cl, fixture_module(cl, "clifford", "sign"), 2);
    CHECK(r.degrees[0].left == form(0, {2}));
    CHECK(r.degrees[1].left == form(0, {}));
    CHECK(r.degrees[2].left == form(0, {2}));
    const BetaSetting c2 = setting("chain2");
    const TheoremReport r1 = check_theorem(c2, fixture_module(c2, "chain2", "constant"), 2);
    CHECK(r1.degrees[0].right == form(1, {}));
    CHECK(r1.degrees[1].right == form(0, {}));
    CHECK(r1.degrees[2].right == form(0, {}));
  }
  SUBCASE("random") {
    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      INFO("seed " << seed);
      const BetaSetting s = BetaSetting::make(generate_random_og(seed, {2, 3, 2, true}));
      const GModule a = random_module(s.g, s.lcat, rng, {6, false, 1});
      CHECK(check_theorem(s, a, 2).ok());
    }
  }
}

TEST_CASE("a broken boundary is detected") {
  const BetaSetting z2 = setting("z2group");
  ChainComplex c = nerve_complex(fixture_module(z2, "z2group", "trivial"), 3);
  c.boundary[1](0, 0) += 1;
  CHECK_FALSE(c.check_boundary_squared().empty());
}
