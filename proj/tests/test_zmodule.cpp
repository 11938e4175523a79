#include <doctest.h>

#include <random>

#include "ogpd/abgroup.hpp"
#include "support/oracles.hpp"

using namespace ogpd;

namespace {

ZMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  ZMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

CanonicalForm form(std::size_t rank, std::vector<long> torsion) {
  CanonicalForm f;
  f.rank = rank;
  for (long t : torsion) f.torsion.push_back(t);
  return f;
}

}  // namespace

TEST_CASE("smith form of small matrices") {
  const SmithForm id = smith_normal_form(ZMatrix::identity(3));
  CHECK(id.S == ZMatrix::identity(3));
  CHECK(id.rank == 3);

  const ZMatrix m{{4, 2}, {2, 2}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.S == ZMatrix({{2, 0}, {0, 2}}));
  CHECK(verify_smith_form(m, s).empty());

  const SmithForm z = smith_normal_form(ZMatrix(2, 3));
  CHECK(z.S == ZMatrix(2, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("smith form postconditions on random matrices") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = rng() % 7 + 1, c = rng() % 7 + 1;
    const ZMatrix m = random_matrix(rng, r, c, 20);
    const SmithForm s = smith_normal_form(m);
    INFO(m.to_string());
    CHECK(verify_smith_form(m, s).empty());
  }
}

TEST_CASE("a broken certificate is rejected") {
  const ZMatrix m{{4, 2}, {2, 2}};
  SmithForm s = smith_normal_form(m);
  s.U(0, 0) += 1;
  CHECK_FALSE(verify_smith_form(m, s).empty());
}

TEST_CASE("determinant") {
  CHECK(determinant(ZMatrix{{4, 2}, {2, 2}}) == 4);
  CHECK(determinant(ZMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(ZMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("canonical forms of presentations") {
  CHECK(FgAbGroup::free(2).canonical() == form(2, {}));
  CHECK(FgAbGroup(1, ZMatrix{{2}}).canonical() == form(0, {2}));
  CHECK(FgAbGroup(2, ZMatrix{{2, 0}, {0, 0}}).canonical() == form(1, {2}));
  CHECK(FgAbGroup(2, ZMatrix{{2, 0}, {0, 3}}).canonical() == form(0, {6}));
  CHECK(FgAbGroup(1, ZMatrix{{1}}).is_trivial());
  CHECK(FgAbGroup::from_invariants(1, {Integer(2), Integer(4)}).canonical().to_string() == "Z + Z/2 + Z/4");
}

TEST_CASE("canonical form is invariant under unimodular changes") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const std::size_t r = rng() % 4 + 1, c = rng() % 4 + 1;
    const ZMatrix rel = random_matrix(rng, r, c, 9);
    const auto [u, u_inv] = oracle::random_unimodular(rng, r);
    const auto [v, v_inv] = oracle::random_unimodular(rng, c);
    CHECK(FgAbGroup(c, rel).canonical() == FgAbGroup(c, u * rel * v).canonical());
  }
}

TEST_CASE("element normal forms separate cosets") {
  const FgAbGroup g(2, ZMatrix{{2, 4}, {0, 6}});
  CHECK(g.order() == Integer(12));
  const auto elems = g.elements();
  CHECK(elems.size() == 12);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) CHECK_FALSE(g.equal(elems[i], elems[j]));
  CHECK(g.is_zero({Integer(2), Integer(4)}));
  CHECK_FALSE(g.is_zero({Integer(1), Integer(0)}));
}

TEST_CASE("well-defined homomorphisms") {
  const FgAbGroup z2 = FgAbGroup::cyclic(2), z4 = FgAbGroup::cyclic(4);
  CHECK(hom_welldefined(z2, z4, ZMatrix(1, 1)));
  CHECK_FALSE(hom_welldefined(z2, z4, ZMatrix{{1}}));
  CHECK(hom_welldefined(z2, z4, ZMatrix{{2}}));
  CHECK_THROWS_AS(make_hom(z2, z4, ZMatrix{{1}}), MathError);
}

TEST_CASE("homology at a node") {
  const FgAbGroup z = FgAbGroup::free(1);
  CHECK(homology_at(zero_hom(z, z), zero_hom(z, z)).canonical() == form(1, {}));
  const AbHom twice{z, z, ZMatrix{{2}}};
  // 0 -> Z --2--> Z -> 0
  CHECK(homology_at(zero_hom(FgAbGroup::trivial(), z), twice).is_trivial());
  CHECK(homology_at(twice, zero_hom(z, FgAbGroup::trivial())).canonical() == form(0, {2}));
  CHECK_THROWS_AS(homology_at(twice, twice), MathError);
}

TEST_CASE("homology agrees with element-level brute force") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 30; ++k) {
    const oracle::RandomComplex cx = oracle::random_complex(rng, 256);
    const AbHom f{cx.a.presented, cx.b.presented, cx.f};
    const AbHom g{cx.b.presented, cx.c.presented, cx.g};
    REQUIRE(f.is_well_defined());
    REQUIRE(g.is_well_defined());
    CHECK(homology_at(f, g).canonical() == oracle::brute_force_homology(cx));
  }
}

TEST_CASE("kernel and cokernel") {
  const FgAbGroup z = FgAbGroup::free(1), z6 = FgAbGroup::cyclic(6);
  const AbHom red{z, z6, ZMatrix{{1}}};
  CHECK(kernel(red).source.canonical() == form(1, {}));
  CHECK(is_surjective(red));
  CHECK_FALSE(is_injective(red));
  const AbHom three{z6, z6, ZMatrix{{3}}};
  CHECK(kernel(three).source.canonical() == form(0, {3}));
  CHECK(cokernel(three).canonical() == form(0, {3}));
  CHECK(is_isomorphism(AbHom{z6, z6, ZMatrix{{5}}}));
}

TEST_CASE("direct sums") {
  CHECK(direct_sum({}).sum.is_trivial());
  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  CHECK(direct_sum({z2, z2}).sum.canonical() == form(0, {2, 2}));
  const DirectSum ds = direct_sum({FgAbGroup::free(1), z2, FgAbGroup(2, ZMatrix{{3, 3}})});
  CHECK(ds.sum.canonical() == form(2, {6}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const AbHom c = compose(ds.injections[j], ds.projections[i]);
      CHECK(hom_equal(c, i == j ? identity_hom(c.source) : zero_hom(c.source, c.target)));
    }
}

TEST_CASE("maps induced on a quotient") {
  const FgAbGroup z2 = FgAbGroup::free(2), z = FgAbGroup::free(1);
  const AbHom sum{z2, z, ZMatrix{{1}, {1}}};
  CHECK(hom_equal(induced_on_cokernel(sum, ZMatrix(0, 2)), sum));
  const AbHom ind = induced_on_cokernel(sum, ZMatrix{{1, -1}});
  CHECK(ind.source.canonical() == form(1, {}));
  CHECK(ind.apply({Integer(1), Integer(0)}) == ZVector{Integer(1)});
  CHECK(ind.apply({Integer(1), Integer(1)}) == ZVector{Integer(2)});
  const AbHom first{z2, z, ZMatrix{{1}, {0}}};
  CHECK_THROWS_AS(induced_on_cokernel(first, ZMatrix{{1, -1}}), MathError);
}

TEST_CASE("hom-set enumeration") {
  CHECK(enumerate_homs(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4)).size() == 2);
  CHECK(enumerate_homs(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)).size() == 2);
  CHECK(enumerate_homs(FgAbGroup::free(1), FgAbGroup::cyclic(3)).size() == 3);
  CHECK(enumerate_homs(FgAbGroup::free(2), FgAbGroup::cyclic(2)).size() == 4);
  const FgAbGroup v(2, ZMatrix{{2, 2}, {0, 4}});
  const auto homs = enumerate_homs(v, v);
  for (const auto& h : homs) CHECK(hom_welldefined(v, v, h));
  // End(Z/2 + Z/4) has 2 * 2 * 2 * 4 elements.
  CHECK(homs.size() == 32);
}
