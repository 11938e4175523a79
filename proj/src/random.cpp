#include "ogpd/random.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace ogpd {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// below[i][j]: base identity j lies below i (reflexive, transitive).
using Relation = std::vector<std::vector<char>>;

void close_transitively(Relation& below) {
  const std::size_t k = below.size();
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (below[i][m] && below[m][j]) below[i][j] = 1;
}

bool down_sets_directed(const Relation& below) {
  const std::size_t k = below.size();
  for (std::size_t e = 0; e < k; ++e)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (!below[e][a] || !below[e][b]) continue;
        bool found = false;
        for (std::size_t c = 0; c < k && !found; ++c) found = below[a][c] && below[b][c];
        if (!found) return false;
      }
  return true;
}

Relation random_base_order(std::mt19937_64& rng, std::size_t k) {
  Relation below(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) below[i][i] = 1;
  // Only j > i may lie below i, so the closure stays antisymmetric.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (uniform(rng, 0, 1)) below[i][j] = 1;
  close_transitively(below);
  return below;
}

}  // namespace

GroupoidSpec random_groupoid_spec(std::uint64_t seed, const RandomOgParams& params) {
  std::mt19937_64 rng(seed);
  std::size_t k = uniform(rng, 1, std::max<std::size_t>(1, params.max_identities));
  const std::size_t p = uniform(rng, 1, std::max<std::size_t>(1, params.max_pair));

  Relation below = random_base_order(rng, k);
  if (params.directed) {
    for (int attempt = 0; attempt < 8 && !down_sets_directed(below); ++attempt) below = random_base_order(rng, k);
    if (!down_sets_directed(below)) {
      // Add a bottom element.
      for (auto& row : below) row.push_back(1);
      below.emplace_back(k + 1, 0);
      below[k][k] = 1;
      ++k;
    }
  }

  std::vector<std::size_t> n(k);
  for (auto& v : n) v = uniform(rng, 1, std::max<std::size_t>(1, params.max_order));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < k; ++e)
      for (std::size_t f = 0; f < k; ++f) {
        if (!below[e][f]) continue;
        const std::size_t g = std::gcd(n[f], n[e]);
        if (g != n[f]) {
          n[f] = g;
          changed = true;
        }
      }
  }

  auto suffix = [&](std::size_t i, std::size_t j) {
    return p > 1 ? "_" + std::to_string(i) + std::to_string(j) : std::string();
  };
  auto name = [&](std::size_t b, std::size_t i, std::size_t x, std::size_t j) {
    if (x == 0 && i == j) return "e" + std::to_string(b) + suffix(i, i);
    return "g" + std::to_string(b) + "_" + std::to_string(x) + suffix(i, j);
  };

  GroupoidSpec s;
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < p; ++i) s.identities.push_back(name(b, i, 0, i));
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t x = 0; x < n[b]; ++x) {
          if (x == 0 && i == j) continue;
          s.arrows.push_back({name(b, i, x, j), name(b, i, 0, i), name(b, j, 0, j), name(b, j, (n[b] - x) % n[b], i)});
        }
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t x = 0; x < n[b]; ++x) {
          if (x == 0 && i == j) continue;
          for (std::size_t l = 0; l < p; ++l)
            for (std::size_t y = 0; y < n[b]; ++y) {
              if (y == 0 && j == l) continue;
              s.compose.push_back({name(b, i, x, j), name(b, j, y, l), name(b, i, (x + y) % n[b], l)});
            }
        }
  for (std::size_t e = 0; e < k; ++e)
    for (std::size_t f = 0; f < k; ++f) {
      if (e == f || !below[e][f]) continue;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
          for (std::size_t x = 0; x < n[e]; ++x) s.order.emplace_back(name(f, i, x % n[f], j), name(e, i, x, j));
    }
  return s;
}

OrderedGroupoid generate_random_og(std::uint64_t seed, const RandomOgParams& params) {
  OrderedGroupoid g = OrderedGroupoid::build(random_groupoid_spec(seed, params));
  const ValidationReport rep = g.validate();
  if (!rep.ok())
    throw std::logic_error("random ordered groupoid fails " + rep.violations.front().axiom + " (seed " +
                           std::to_string(seed) + ")");
  return g;
}

std::vector<std::vector<int>> sign_characters(const OrderedGroupoid& g, std::size_t limit) {
  const std::size_t n = g.size();
  // Constraints checked once their largest arrow index is assigned.
  struct Product {
    ArrowId x, y, xy;
  };
  std::vector<std::vector<Product>> products(n);
  std::vector<std::vector<std::pair<ArrowId, ArrowId>>> comparable(n);
  for (ArrowId x = 0; x < n; ++x)
    for (ArrowId y = 0; y < n; ++y) {
      if (auto xy = g.compose(x, y)) products[std::max({x, y, *xy})].push_back({x, y, *xy});
      if (x != y && g.leq(x, y)) comparable[std::max(x, y)].emplace_back(x, y);
    }

  std::vector<std::vector<int>> out;
  std::vector<int> chi(n, 1);
  std::function<void(ArrowId)> extend = [&](ArrowId a) {
    if (out.size() >= limit) return;
    if (a == n) {
      out.push_back(chi);
      return;
    }
    for (int v : {1, -1}) {
      if (v == -1 && g.is_identity(a)) break;
      chi[a] = v;
      bool ok = true;
      for (const auto& c : products[a])
        if (chi[c.xy] != chi[c.x] * chi[c.y]) ok = false;
      for (auto [x, y] : comparable[a])
        if (chi[x] != chi[y]) ok = false;
      if (ok) extend(a + 1);
    }
    chi[a] = 1;
  };
  extend(0);
  return out;
}

void close_scalar_data(const OrderedGroupoid& g, const LCat& l, ScalarModuleData& data) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& m : l.morphisms()) {
      const ArrowId e = m.e, r = g.r(m.g);
      Integer w = lcm(data.weight[r], data.weight[e]);
      if (w != data.weight[r]) {
        data.weight[r] = w;
        changed = true;
      }
      Integer q = gcd(data.modulus[r], data.modulus[e]);
      if (q != data.modulus[r]) {
        data.modulus[r] = q;
        changed = true;
      }
    }
  }
}

GModule scalar_module(const OrderedGroupoid& g, const LCat& l, const ScalarModuleData& data) {
  GModule m;
  m.base = l.category_ptr();
  for (ObjectId o = 0; o < m.base->object_count(); ++o)
    m.groups.push_back(FgAbGroup::cyclic(data.modulus[l.identity_of(o)]));
  for (const auto& lm : l.morphisms()) {
    const Integer& we = data.weight[lm.e];
    const Integer& wr = data.weight[g.r(lm.g)];
    if (wr % we != 0) throw std::invalid_argument("scalar_module: weights are not closed");
    ZMatrix a(1, 1);
    a(0, 0) = data.sign[lm.g] * (wr / we);
    m.actions.push_back(std::move(a));
  }
  const std::string problem = m.check_functoriality();
  if (!problem.empty()) throw std::logic_error("scalar_module: " + problem);
  return m;
}

ScalarModuleData random_scalar_data(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                    const RandomModuleParams& params) {
  ScalarModuleData d;
  d.modulus.assign(g.size(), Integer(0));
  d.weight.assign(g.size(), Integer(1));
  for (ArrowId e : g.identities()) {
    const std::size_t lo = params.allow_free ? 1 : 2;
    const std::size_t v = uniform(rng, lo, std::max<std::size_t>(lo, params.max_modulus));
    // With free modules allowed, 1 stands for Z.
    d.modulus[e] = params.allow_free && v == 1 ? 0 : v;
    d.weight[e] = static_cast<unsigned long>(uniform(rng, 1, 3));
  }
  const auto chars = sign_characters(g, 64);
  d.sign = chars[uniform(rng, 0, chars.size() - 1)];
  close_scalar_data(g, l, d);
  return d;
}

GModule random_module(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                      const RandomModuleParams& params) {
  const std::size_t parts = uniform(rng, 1, std::max<std::size_t>(1, params.max_summands));
  std::vector<GModule> modules;
  for (std::size_t i = 0; i < parts; ++i) modules.push_back(scalar_module(g, l, random_scalar_data(g, l, rng, params)));
  return parts == 1 ? modules.front() : module_direct_sum(modules);
}

GModule module_direct_sum(const std::vector<GModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("module_direct_sum: no summands");
  GModule out;
  out.base = parts.front().base;
  for (ObjectId o = 0; o < out.base->object_count(); ++o) {
    std::vector<FgAbGroup> gs;
    for (const auto& p : parts) gs.push_back(p.groups[o]);
    out.groups.push_back(direct_sum(gs).sum);
  }
  for (MorphismId m = 0; m < out.base->morphism_count(); ++m) {
    std::vector<ZMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.actions[m]);
    out.actions.push_back(block_diagonal(blocks));
  }
  return out;
}

GMap gmap_direct_sum(const std::vector<GMap>& parts) {
  GMap out;
  for (std::size_t o = 0; o < parts.front().components.size(); ++o) {
    std::vector<ZMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.components[o]);
    out.components.push_back(block_diagonal(blocks));
  }
  return out;
}

RandomSurjection random_surjection(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                   const RandomModuleParams& params) {
  const std::size_t parts = uniform(rng, 1, std::max<std::size_t>(1, params.max_summands));
  std::vector<GModule> sources, targets;
  std::vector<GMap> maps;
  for (std::size_t i = 0; i < parts; ++i) {
    ScalarModuleData src = random_scalar_data(g, l, rng, params);
    ScalarModuleData dst = src;
    for (ArrowId e : g.identities()) {
      if (src.modulus[e] == 0) {
        dst.modulus[e] = static_cast<unsigned long>(uniform(rng, 0, std::max<std::size_t>(1, params.max_modulus)));
        continue;
      }
      // A random divisor.
      std::vector<unsigned long> divisors;
      const unsigned long n = src.modulus[e].get_ui();
      for (unsigned long q = 1; q <= n; ++q)
        if (n % q == 0) divisors.push_back(q);
      dst.modulus[e] = divisors[uniform(rng, 0, divisors.size() - 1)];
    }
    close_scalar_data(g, l, dst);
    sources.push_back(scalar_module(g, l, src));
    targets.push_back(scalar_module(g, l, dst));
    GMap m;
    for (ObjectId o = 0; o < l.category().object_count(); ++o) m.components.push_back(ZMatrix::identity(1));
    maps.push_back(std::move(m));
  }
  if (parts == 1) return {sources.front(), targets.front(), maps.front()};
  return {module_direct_sum(sources), module_direct_sum(targets), gmap_direct_sum(maps)};
}

ShortExactSequence random_short_exact(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                      std::size_t max_multiplier) {
  const std::size_t parts = uniform(rng, 1, 2);
  std::vector<GModule> free, quot;
  std::vector<GMap> first, second;
  const std::size_t objects = l.category().object_count();
  for (std::size_t i = 0; i < parts; ++i) {
    ScalarModuleData p = random_scalar_data(g, l, rng, {2, false, 1});
    for (auto& q : p.modulus) q = 0;
    const unsigned long k = uniform(rng, 2, std::max<std::size_t>(2, max_multiplier));
    ScalarModuleData c = p;
    for (ArrowId e : g.identities()) c.modulus[e] = k;
    free.push_back(scalar_module(g, l, p));
    quot.push_back(scalar_module(g, l, c));
    GMap f, s;
    ZMatrix times(1, 1);
    times(0, 0) = k;
    f.components.assign(objects, times);
    s.components.assign(objects, ZMatrix::identity(1));
    first.push_back(std::move(f));
    second.push_back(std::move(s));
  }
  if (parts == 1) return {free.front(), free.front(), quot.front(), first.front(), second.front()};
  GModule p = module_direct_sum(free);
  return {p, p, module_direct_sum(quot), gmap_direct_sum(first), gmap_direct_sum(second)};
}

}  // namespace ogpd
