#include "ogpd/category.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace ogpd {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<MorphismId> identities, std::vector<long> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  if (identities_.size() != objects_.size())
    throw std::invalid_argument("FiniteCategory: one identity per object required");
  if (table_.size() != morphisms_.size() * morphisms_.size())
    throw std::invalid_argument("FiniteCategory: composition table has the wrong size");
}

std::optional<MorphismId> FiniteCategory::compose(MorphismId a, MorphismId b) const {
  long c = table_[a * morphisms_.size() + b];
  if (c < 0) return std::nullopt;
  return static_cast<MorphismId>(c);
}

std::string FiniteCategory::check_laws() const {
  const std::size_t m = morphisms_.size();
  for (ObjectId o = 0; o < objects_.size(); ++o) {
    const MorphismId id = identities_[o];
    if (dom(id) != o || cod(id) != o) return "identity of " + objects_[o] + " has wrong endpoints";
  }
  for (MorphismId a = 0; a < m; ++a) {
    if (compose(identities_[dom(a)], a) != a || compose(a, identities_[cod(a)]) != a)
      return "identity law fails for " + morphisms_[a].name;
    for (MorphismId b = 0; b < m; ++b) {
      auto ab = compose(a, b);
      if (ab.has_value() != (cod(a) == dom(b)))
        return "composition defined on the wrong pairs at (" + morphisms_[a].name + ", " +
               morphisms_[b].name + ")";
      if (ab && (dom(*ab) != dom(a) || cod(*ab) != cod(b)))
        return "composite has wrong endpoints at (" + morphisms_[a].name + ", " + morphisms_[b].name + ")";
    }
  }
  for (MorphismId a = 0; a < m; ++a)
    for (MorphismId b = 0; b < m; ++b) {
      auto ab = compose(a, b);
      if (!ab) continue;
      for (MorphismId c = 0; c < m; ++c) {
        auto bc = compose(b, c);
        if (!bc) continue;
        if (compose(*ab, c) != compose(a, *bc))
          return "associativity fails at (" + morphisms_[a].name + ", " + morphisms_[b].name +
                 ", " + morphisms_[c].name + ")";
      }
    }
  return {};
}

std::optional<std::array<MorphismId, 3>> FiniteCategory::left_cancellation_failure() const {
  const std::size_t m = morphisms_.size();
  for (MorphismId x = 0; x < m; ++x)
    for (MorphismId a = 0; a < m; ++a) {
      auto xa = compose(x, a);
      if (!xa) continue;
      for (MorphismId b = a + 1; b < m; ++b)
        if (cod(a) == cod(b) && compose(x, b) == xa) return std::array<MorphismId, 3>{x, a, b};
    }
  return std::nullopt;
}

std::vector<std::size_t> FiniteCategory::components() const {
  std::vector<std::size_t> parent(objects_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& mor : morphisms_) parent[find(mor.dom)] = find(mor.cod);
  std::vector<std::size_t> label(objects_.size(), objects_.size()), out(objects_.size());
  std::size_t next = 0;
  for (ObjectId o = 0; o < objects_.size(); ++o) {
    std::size_t root = find(o);
    if (label[root] == objects_.size()) label[root] = next++;
    out[o] = label[root];
  }
  return out;
}

}  // namespace ogpd
