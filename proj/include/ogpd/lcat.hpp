// The left-cancellative category L(G) of an ordered groupoid: objects are
// the identities, morphisms the pairs (e, g) with d(g) <= e, from e to r(g),
// composed by (e,g)(f,h) = (e, (g|d(h)) h) when r(g) = f.

#ifndef OGPD_LCAT_HPP_
#define OGPD_LCAT_HPP_

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ogpd/category.hpp"
#include "ogpd/ordered_groupoid.hpp"

namespace ogpd {

struct LMorphism {
  ArrowId e = 0;
  ArrowId g = 0;
  friend auto operator<=>(const LMorphism&, const LMorphism&) = default;
};

// Throws NotComposable when r(a.g) != b.e.
LMorphism lcat_compose(const OrderedGroupoid& g, LMorphism a, LMorphism b);

class LCat {
 public:
  // The groupoid must have well-defined restrictions (OG3); the composition
  // table is checked for the category laws and left cancellativity, and a
  // std::logic_error is thrown if either fails.
  static LCat build(const OrderedGroupoid& g);

  const std::vector<LMorphism>& morphisms() const noexcept { return morphisms_; }
  const LMorphism& morphism(MorphismId m) const { return morphisms_.at(m); }
  std::optional<MorphismId> find(ArrowId e, ArrowId g) const;
  MorphismId at(ArrowId e, ArrowId g) const;

  // Object index of an identity of G, and back.
  ObjectId object_of(ArrowId identity) const { return object_of_.at(identity); }
  ArrowId identity_of(ObjectId o) const { return identity_of_.at(o); }

  const FiniteCategory& category() const noexcept { return *category_; }
  std::shared_ptr<const FiniteCategory> category_ptr() const noexcept { return category_; }

 private:
  std::vector<LMorphism> morphisms_;
  std::map<LMorphism, MorphismId> index_;
  std::map<ArrowId, ObjectId> object_of_;
  std::vector<ArrowId> identity_of_;
  std::shared_ptr<const FiniteCategory> category_;
};

}  // namespace ogpd

#endif  // OGPD_LCAT_HPP_
