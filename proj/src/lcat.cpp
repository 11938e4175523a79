#include "ogpd/lcat.hpp"

#include <stdexcept>

namespace ogpd {

LMorphism lcat_compose(const OrderedGroupoid& g, LMorphism a, LMorphism b) {
  if (g.r(a.g) != b.e)
    throw NotComposable("(" + g.name(a.e) + "," + g.name(a.g) + ") and (" + g.name(b.e) + "," +
                        g.name(b.g) + ") are not composable");
  return {a.e, g.mul(g.corestriction(a.g, g.d(b.g)), b.g)};
}

LCat LCat::build(const OrderedGroupoid& g) {
  LCat l;
  for (ArrowId e : g.identities()) {
    l.object_of_[e] = l.identity_of_.size();
    l.identity_of_.push_back(e);
  }
  for (ArrowId e : g.identities())
    for (ArrowId x = 0; x < g.size(); ++x)
      if (g.leq(g.d(x), e)) {
        l.index_[{e, x}] = l.morphisms_.size();
        l.morphisms_.push_back({e, x});
      }

  std::vector<std::string> objects;
  for (ArrowId e : l.identity_of_) objects.push_back(g.name(e));
  std::vector<FiniteCategory::Morphism> mors;
  for (const auto& m : l.morphisms_)
    mors.push_back({"(" + g.name(m.e) + "," + g.name(m.g) + ")", l.object_of_.at(m.e),
                    l.object_of_.at(g.r(m.g))});
  std::vector<MorphismId> ids;
  for (ArrowId e : l.identity_of_) ids.push_back(l.index_.at({e, e}));
  const std::size_t n = l.morphisms_.size();
  std::vector<long> table(n * n, -1);
  for (MorphismId a = 0; a < n; ++a)
    for (MorphismId b = 0; b < n; ++b) {
      if (g.r(l.morphisms_[a].g) != l.morphisms_[b].e) continue;
      table[a * n + b] = static_cast<long>(l.index_.at(lcat_compose(g, l.morphisms_[a], l.morphisms_[b])));
    }
  auto cat = std::make_shared<FiniteCategory>(std::move(objects), std::move(mors), std::move(ids),
                                              std::move(table));
  if (std::string err = cat->check_laws(); !err.empty())
    throw std::logic_error("L(G) is not a category: " + err);
  if (cat->left_cancellation_failure()) throw std::logic_error("L(G) is not left cancellative");
  l.category_ = std::move(cat);
  return l;
}

std::optional<MorphismId> LCat::find(ArrowId e, ArrowId g) const {
  auto it = index_.find({e, g});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MorphismId LCat::at(ArrowId e, ArrowId g) const {
  auto m = find(e, g);
  if (!m) throw PreconditionError("not a morphism of L(G)");
  return *m;
}

}  // namespace ogpd
