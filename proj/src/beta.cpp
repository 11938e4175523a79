#include "ogpd/beta.hpp"

#include <algorithm>
#include <numeric>

namespace ogpd {

std::optional<ArrowId> beta_witness(const OrderedGroupoid& g, ArrowId a, ArrowId b) {
  if (g.leq(a, b)) return a;
  if (g.leq(b, a)) return b;
  std::optional<ArrowId> best;
  for (ArrowId k : g.order().common_lower_bounds(a, b))
    if (!best || g.name(k) < g.name(*best)) best = k;
  return best;
}

BetaRelation beta_relation(const OrderedGroupoid& g) {
  BetaRelation rel;
  rel.n = g.size();
  rel.witness.resize(rel.n * rel.n);
  for (ArrowId a = 0; a < rel.n; ++a)
    for (ArrowId b = 0; b < rel.n; ++b) rel.witness[a * rel.n + b] = beta_witness(g, a, b);
  return rel;
}

DirectednessResult principally_directed(const OrderedGroupoid& g) {
  DirectednessResult out;
  const std::size_t n = g.size();

  // Route 1: every principal ideal is directed. Pairs are scanned from the
  // top of the ideal down so that the reported pair is as high as possible.
  std::vector<std::size_t> ideal_size(n);
  for (ArrowId a = 0; a < n; ++a) ideal_size[a] = g.principal_ideal(a).size();
  for (ArrowId t = 0; t < n && out.directed; ++t) {
    auto ideal = g.principal_ideal(t);
    std::stable_sort(ideal.begin(), ideal.end(), [&](ArrowId x, ArrowId y) {
      if (ideal_size[x] != ideal_size[y]) return ideal_size[x] > ideal_size[y];
      return g.name(x) < g.name(y);
    });
    for (std::size_t i = 0; i < ideal.size() && out.directed; ++i)
      for (std::size_t j = i + 1; j < ideal.size(); ++j)
        if (g.order().common_lower_bounds(ideal[i], ideal[j]).empty()) {
          out.directed = false;
          out.non_directed_ideal = t;
          out.counterexample = std::array<ArrowId, 3>{ideal[i], t, ideal[j]};
          break;
        }
  }

  // Route 2: transitivity of the relation itself.
  const BetaRelation rel = beta_relation(g);
  for (ArrowId a = 0; a < n && out.beta_transitive; ++a)
    for (ArrowId t = 0; t < n && out.beta_transitive; ++t) {
      if (!rel.related(a, t)) continue;
      for (ArrowId b = 0; b < n; ++b)
        if (rel.related(t, b) && !rel.related(a, b)) {
          out.beta_transitive = false;
          if (!out.counterexample) out.counterexample = std::array<ArrowId, 3>{a, t, b};
          break;
        }
    }
  return out;
}

QuotientGroupoid quotient(const OrderedGroupoid& g) {
  const DirectednessResult pd = principally_directed(g);
  if (!pd.directed || !pd.beta_transitive) {
    std::string msg = "quotient undefined: not principally directed";
    if (pd.counterexample) {
      const auto& c = *pd.counterexample;
      msg += "; '" + g.name(c[0]) + "' beta '" + g.name(c[1]) + "' beta '" + g.name(c[2]) +
             "' but '" + g.name(c[0]) + "' and '" + g.name(c[2]) + "' have no common lower bound";
    }
    throw NotPrincipallyDirected(msg);
  }

  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = a + 1; b < n; ++b)
      if (beta_related(g, a, b)) parent[find(a)] = find(b);

  std::map<std::size_t, std::vector<ArrowId>> by_root;
  for (ArrowId a = 0; a < n; ++a) by_root[find(a)].push_back(a);
  std::vector<std::vector<ArrowId>> id_classes, arrow_classes;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end(),
              [&](ArrowId x, ArrowId y) { return g.name(x) < g.name(y); });
    const bool has_identity =
        std::any_of(members.begin(), members.end(), [&](ArrowId x) { return g.is_identity(x); });
    (has_identity ? id_classes : arrow_classes).push_back(members);
  }
  auto by_id = [&](const std::vector<ArrowId>& x, const std::vector<ArrowId>& y) {
    return g.name(x.front()) < g.name(y.front());
  };
  std::sort(id_classes.begin(), id_classes.end(), by_id);
  std::sort(arrow_classes.begin(), arrow_classes.end(), by_id);

  QuotientGroupoid q;
  q.classes = id_classes;
  q.classes.insert(q.classes.end(), arrow_classes.begin(), arrow_classes.end());
  q.class_of.resize(n);
  for (std::size_t c = 0; c < q.classes.size(); ++c)
    for (ArrowId a : q.classes[c]) q.class_of[a] = c;

  auto cid = [&](ArrowId a) { return g.name(q.classes[q.class_of[a]].front()); };
  GroupoidSpec spec;
  for (const auto& c : id_classes) spec.identities.push_back(g.name(c.front()));
  for (const auto& c : arrow_classes) {
    const ArrowId rep = c.front();
    spec.arrows.push_back({g.name(rep), cid(g.d(rep)), cid(g.r(rep)), cid(g.inverse(rep))});
  }
  for (const auto& c1 : q.classes)
    for (const auto& c2 : q.classes) {
      const ArrowId a = c1.front(), b = c2.front();
      if (q.class_of[g.r(a)] != q.class_of[g.d(b)]) continue;
      std::optional<ArrowId> f;
      for (ArrowId k : g.identity_lower_bounds(g.r(a), g.d(b)))
        if (!f || g.name(k) < g.name(*f)) f = k;
      if (!f) throw StructuralDefect("quotient: no identity below both r('" + g.name(a) +
                                     "') and d('" + g.name(b) + "')");
      const ArrowId prod = g.mul(g.corestriction(a, *f), g.restriction(*f, b));
      spec.compose.push_back({g.name(a), g.name(b), cid(prod)});
    }
  q.groupoid = OrderedGroupoid::build(spec);
  return q;
}

WelldefinednessReport check_quotient_welldefined(const OrderedGroupoid& g, const QuotientGroupoid& q) {
  WelldefinednessReport rep;
  const OrderedGroupoid& qg = q.groupoid;
  for (std::size_t c1 = 0; c1 < q.classes.size(); ++c1)
    for (std::size_t c2 = 0; c2 < q.classes.size(); ++c2) {
      auto expected = qg.compose(c1, c2);
      if (!expected) continue;
      for (ArrowId a : q.classes[c1])
        for (ArrowId b : q.classes[c2]) {
          auto lower = g.identity_lower_bounds(g.r(a), g.d(b));
          if (lower.empty()) {
            rep.mismatches.push_back("no identity below r('" + g.name(a) + "') and d('" +
                                     g.name(b) + "')");
            continue;
          }
          for (ArrowId f : lower) {
            ++rep.checked;
            const ArrowId prod = g.mul(g.corestriction(a, f), g.restriction(f, b));
            if (q.project(prod) != *expected)
              rep.mismatches.push_back("('" + g.name(a) + "'|" + g.name(f) + ")(" + g.name(f) +
                                       "|'" + g.name(b) + "') lands in class '" +
                                       qg.name(q.project(prod)) + "', expected '" +
                                       qg.name(*expected) + "'");
          }
        }
    }
  return rep;
}

}  // namespace ogpd
