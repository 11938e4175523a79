#include "ogpd/gmodule.hpp"

#include <functional>
#include <stdexcept>

namespace ogpd {

std::string GModule::check_functoriality() const {
  const FiniteCategory& c = *base;
  if (groups.size() != c.object_count() || actions.size() != c.morphism_count())
    return "module does not match its base category";
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const auto& src = groups[c.dom(m)];
    const auto& dst = groups[c.cod(m)];
    if (!hom_welldefined(src, dst, actions[m]))
      return "action of " + c.morphism(m).name + " is not a homomorphism";
  }
  for (ObjectId o = 0; o < c.object_count(); ++o)
    if (!hom_equal(groups[o], actions[c.identity(o)], ZMatrix::identity(groups[o].generators())))
      return "identity of " + c.object_name(o) + " does not act as the identity";
  for (MorphismId a = 0; a < c.morphism_count(); ++a)
    for (MorphismId b = 0; b < c.morphism_count(); ++b) {
      auto ab = c.compose(a, b);
      if (!ab) continue;
      if (!hom_equal(groups[c.cod(b)], actions[a] * actions[b], actions[*ab]))
        return "action of " + c.morphism(*ab).name + " differs from action of " +
               c.morphism(a).name + " followed by " + c.morphism(b).name;
    }
  return {};
}

bool GModule::all_finite() const {
  for (const auto& g : groups)
    if (!g.is_finite()) return false;
  return true;
}

std::string check_naturality(const GModule& source, const GModule& target, const GMap& map) {
  const FiniteCategory& c = *source.base;
  if (map.components.size() != c.object_count()) return "wrong number of components";
  for (ObjectId o = 0; o < c.object_count(); ++o)
    if (!hom_welldefined(source.groups[o], target.groups[o], map.components[o]))
      return "component at " + c.object_name(o) + " is not a homomorphism";
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const ObjectId a = c.dom(m), b = c.cod(m);
    if (!hom_equal(target.groups[b], map.components[a] * target.actions[m],
                   source.actions[m] * map.components[b]))
      return "naturality square fails at " + c.morphism(m).name;
  }
  return {};
}

bool gmap_equal(const GModule& target, const GMap& a, const GMap& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t o = 0; o < a.components.size(); ++o)
    if (!hom_equal(target.groups[o], a.components[o], b.components[o])) return false;
  return true;
}

GMap identity_gmap(const GModule& m) {
  GMap out;
  for (const auto& g : m.groups) out.components.push_back(ZMatrix::identity(g.generators()));
  return out;
}

GMap zero_gmap(const GModule& source, const GModule& target) {
  GMap out;
  for (std::size_t o = 0; o < source.groups.size(); ++o)
    out.components.emplace_back(source.groups[o].generators(), target.groups[o].generators());
  return out;
}

namespace {

// Presentation of the colimit of m restricted to the objects with keep[o].
FgAbGroup colimit_presentation(const GModule& m, const std::vector<char>& keep,
                               std::vector<std::size_t>* offsets_out) {
  const FiniteCategory& c = *m.base;
  std::vector<std::size_t> offsets(c.object_count(), 0);
  std::size_t total = 0;
  std::size_t rel_rows = 0;
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    if (!keep[o]) continue;
    offsets[o] = total;
    total += m.groups[o].generators();
    rel_rows += m.groups[o].relations().rows();
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    if (keep[c.dom(f)] && !c.is_identity(f)) rel_rows += m.groups[c.dom(f)].generators();

  ZMatrix rel(rel_rows, total);
  std::size_t row = 0;
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    if (!keep[o]) continue;
    rel.paste(m.groups[o].relations(), row, offsets[o]);
    row += m.groups[o].relations().rows();
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (!keep[c.dom(f)] || c.is_identity(f)) continue;
    const ObjectId a = c.dom(f), b = c.cod(f);
    // a - a |> f
    for (std::size_t i = 0; i < m.groups[a].generators(); ++i, ++row) {
      rel(row, offsets[a] + i) += 1;
      for (std::size_t j = 0; j < m.groups[b].generators(); ++j) rel(row, offsets[b] + j) -= m.actions[f](i, j);
    }
  }
  if (offsets_out) *offsets_out = std::move(offsets);
  return {total, rel};
}

}  // namespace

Colimit colim_category(const GModule& m) {
  const FiniteCategory& c = *m.base;
  Colimit out;
  out.group = colimit_presentation(m, std::vector<char>(c.object_count(), 1), &out.offsets);
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    ZMatrix inj(m.groups[o].generators(), out.group.generators());
    for (std::size_t i = 0; i < m.groups[o].generators(); ++i) inj(i, out.offsets[o] + i) = 1;
    out.canonical.push_back(std::move(inj));
  }
  out.component_of = c.components();
  std::size_t ncomp = 0;
  for (auto k : out.component_of) ncomp = std::max(ncomp, k + 1);
  for (std::size_t k = 0; k < ncomp; ++k) {
    std::vector<char> keep(c.object_count(), 0);
    for (ObjectId o = 0; o < c.object_count(); ++o) keep[o] = out.component_of[o] == k;
    out.components.push_back(colimit_presentation(m, keep, nullptr));
  }
  return out;
}

std::vector<GMap> enumerate_gmaps(const GModule& source, const GModule& target,
                                  std::size_t element_bound) {
  const FiniteCategory& c = *source.base;
  const std::size_t n = c.object_count();
  for (const auto& g : target.groups) {
    if (!g.is_finite()) throw std::domain_error("enumerate_gmaps: target group is infinite");
    if (*g.order() > element_bound)
      throw std::domain_error("enumerate_gmaps: target group exceeds the element bound");
  }
  std::vector<std::vector<ZMatrix>> candidates(n);
  for (ObjectId o = 0; o < n; ++o) candidates[o] = enumerate_homs(source.groups[o], target.groups[o]);

  // Morphisms checked once both endpoints are assigned (endpoints <= o).
  std::vector<std::vector<MorphismId>> due(n);
  for (MorphismId m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) due[std::max(c.dom(m), c.cod(m))].push_back(m);

  std::vector<GMap> out;
  GMap current;
  current.components.resize(n);
  std::function<void(ObjectId)> extend = [&](ObjectId o) {
    if (o == n) {
      out.push_back(current);
      return;
    }
    for (const auto& cand : candidates[o]) {
      current.components[o] = cand;
      bool ok = true;
      for (MorphismId m : due[o]) {
        const ObjectId a = c.dom(m), b = c.cod(m);
        if (!hom_equal(target.groups[b], current.components[a] * target.actions[m],
                       source.actions[m] * current.components[b])) {
          ok = false;
          break;
        }
      }
      if (ok) extend(o + 1);
    }
  };
  extend(0);
  return out;
}

}  // namespace ogpd
