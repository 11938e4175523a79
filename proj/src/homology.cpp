#include "ogpd/homology.hpp"

#include <cstdlib>
#include <map>

namespace ogpd {

std::size_t chain_rank_threshold() {
  if (const char* env = std::getenv("OG_MAX_CHAIN_RANK")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 10000;
}

AbHom ChainComplex::differential(std::size_t n) const {
  if (n == 0) return {groups[0], FgAbGroup::trivial(), boundary[0]};
  return {groups[n], groups[n - 1], boundary[n]};
}

std::string ChainComplex::check_boundary_squared() const {
  for (std::size_t n = 2; n < groups.size(); ++n)
    if (!groups[n - 2].rows_are_zero(boundary[n] * boundary[n - 1]))
      return "boundary squared is non-zero in degree " + std::to_string(n);
  return {};
}

ChainComplex nerve_complex(const GModule& m, std::size_t top_degree) {
  const FiniteCategory& c = *m.base;
  ChainComplex cx;
  std::vector<MorphismId> non_identity;
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) non_identity.push_back(f);

  cx.chains.resize(top_degree + 1);
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    cx.objects.push_back(o);
    cx.chains[0].push_back({});
  }
  for (MorphismId f : non_identity) cx.chains.size() > 1 ? cx.chains[1].push_back({f}) : void();
  for (std::size_t n = 2; n <= top_degree; ++n)
    for (const auto& prev : cx.chains[n - 1])
      for (MorphismId f : non_identity)
        if (c.dom(f) == c.cod(prev.back())) {
          auto next = prev;
          next.push_back(f);
          cx.chains[n].push_back(std::move(next));
        }

  auto source_object = [&](std::size_t n, std::size_t k) {
    return n == 0 ? cx.objects[k] : c.dom(cx.chains[n][k].front());
  };

  std::vector<std::map<std::vector<MorphismId>, std::size_t>> index(top_degree + 1);
  std::vector<std::vector<std::size_t>> offsets(top_degree + 1);
  const std::size_t threshold = chain_rank_threshold();
  for (std::size_t n = 0; n <= top_degree; ++n) {
    // Block-diagonal relations; direct_sum() would also build a projection
    // and injection per chain, each holding a copy of the sum.
    std::vector<ZMatrix> rels;
    std::size_t total = 0;
    for (std::size_t k = 0; k < cx.chains[n].size(); ++k) {
      if (n > 0) index[n][cx.chains[n][k]] = k;
      const FgAbGroup& g = m.groups[source_object(n, k)];
      offsets[n].push_back(total);
      total += g.generators();
      rels.push_back(g.relations());
    }
    if (total > threshold)
      cx.warnings.push_back("degree " + std::to_string(n) + " chain group has " + std::to_string(total) +
                            " generators");
    cx.groups.emplace_back(total, block_diagonal(rels));
  }

  cx.boundary.emplace_back(cx.groups[0].generators(), 0);
  for (std::size_t n = 1; n <= top_degree; ++n) {
    ZMatrix d(cx.groups[n].generators(), cx.groups[n - 1].generators());
    for (std::size_t k = 0; k < cx.chains[n].size(); ++k) {
      const auto& chain = cx.chains[n][k];
      const ObjectId e0 = c.dom(chain.front());
      const ZMatrix unit = ZMatrix::identity(m.groups[e0].generators());
      const std::size_t row = offsets[n][k];
      auto target = [&](const std::vector<MorphismId>& t, ObjectId when_empty) {
        return t.empty() ? offsets[0][when_empty] : offsets[n - 1][index[n - 1].at(t)];
      };
      // d_0: push the coefficient along the first morphism.
      d.accumulate(m.actions[chain.front()], row,
                   target({chain.begin() + 1, chain.end()}, c.cod(chain.front())));
      // d_i, 0 < i < n: compose neighbours; degenerate results vanish.
      for (std::size_t i = 1; i < n; ++i) {
        const MorphismId h = *c.compose(chain[i - 1], chain[i]);
        if (c.is_identity(h)) continue;
        std::vector<MorphismId> t(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(i - 1));
        t.push_back(h);
        t.insert(t.end(), chain.begin() + static_cast<std::ptrdiff_t>(i + 1), chain.end());
        d.accumulate((i % 2 ? Integer(-1) : Integer(1)) * unit, row, target(t, 0));
      }
      // d_n: drop the last morphism.
      d.accumulate((n % 2 ? Integer(-1) : Integer(1)) * unit, row,
                   target({chain.begin(), chain.end() - 1}, e0));
    }
    cx.boundary.push_back(std::move(d));
  }
  return cx;
}

FgAbGroup homology(const ChainComplex& complex, std::size_t n) {
  if (n + 1 > complex.top_degree())
    throw std::invalid_argument("homology: complex is not built up to degree " + std::to_string(n + 1));
  return homology_at(complex.differential(n + 1), complex.differential(n));
}

FgAbGroup homology(const GModule& m, std::size_t n) { return homology(nerve_complex(m, n + 1), n); }

bool TheoremReport::ok() const {
  if (!h0_matches_colim) return false;
  for (const auto& d : degrees)
    if (!d.equal) return false;
  return true;
}

TheoremReport check_theorem(const BetaSetting& s, const GModule& a, std::size_t max_degree) {
  TheoremReport rep;
  const EColimit la = colim_E(s, a);
  const ChainComplex left = nerve_complex(a, max_degree + 1);
  const ChainComplex right = nerve_complex(la.module, max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    HomologyDegree d;
    d.degree = n;
    d.left = homology(left, n).canonical();
    d.right = homology(right, n).canonical();
    d.equal = d.left == d.right;
    if (n == 0)
      rep.h0_matches_colim = d.left == colim_category(a).group.canonical() &&
                             d.right == colim_category(la.module).group.canonical();
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

}  // namespace ogpd
