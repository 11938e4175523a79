// Modules over a finite category (functors to abelian groups, acting on the
// right: a |> m lies in M(cod m) for a in M(dom m)), maps between them, and
// colimits.

#ifndef OGPD_GMODULE_HPP_
#define OGPD_GMODULE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ogpd/abgroup.hpp"
#include "ogpd/category.hpp"

namespace ogpd {

struct GModule {
  std::shared_ptr<const FiniteCategory> base;
  std::vector<FgAbGroup> groups;  // per object
  std::vector<ZMatrix> actions;   // per morphism, M(dom) -> M(cod)

  AbHom action(MorphismId m) const {
    return {groups[base->dom(m)], groups[base->cod(m)], actions[m]};
  }
  // Empty on success, else the first failure: an ill-defined action, a
  // non-identity identity action, or a composite whose action differs.
  std::string check_functoriality() const;
  bool all_finite() const;
};

struct GMap {
  std::vector<ZMatrix> components;  // per object, source -> target
};

// Empty when every component is a homomorphism and every naturality square
// commutes.
std::string check_naturality(const GModule& source, const GModule& target, const GMap& map);
bool gmap_equal(const GModule& target, const GMap& a, const GMap& b);
GMap identity_gmap(const GModule& m);
GMap zero_gmap(const GModule& source, const GModule& target);

struct Colimit {
  FgAbGroup group;
  // canonical[o]: M(o) -> colimit, as a matrix on generators.
  std::vector<ZMatrix> canonical;
  std::vector<std::size_t> offsets;  // generator offset of each M(o)
  // Component label of each object and the colimit of each component.
  std::vector<std::size_t> component_of;
  std::vector<FgAbGroup> components;
};

// The direct sum of all M(o) modulo a - a |> m for every morphism m.
Colimit colim_category(const GModule& m);

// Every natural transformation source -> target; all target groups must be
// finite with at most `element_bound` elements.
std::vector<GMap> enumerate_gmaps(const GModule& source, const GModule& target,
                                  std::size_t element_bound = 64);

}  // namespace ogpd

#endif  // OGPD_GMODULE_HPP_
