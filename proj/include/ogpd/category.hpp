// Finite categories given by an explicit composition table. Composition is
// diagrammatic: compose(a, b) is "a then b" and is defined when
// cod(a) = dom(b).

#ifndef OGPD_CATEGORY_HPP_
#define OGPD_CATEGORY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ogpd {

using ObjectId = std::size_t;
using MorphismId = std::size_t;

class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    ObjectId dom = 0;
    ObjectId cod = 0;
  };

  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<MorphismId> identities, std::vector<long> table);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::string& object_name(ObjectId o) const { return objects_.at(o); }
  const Morphism& morphism(MorphismId m) const { return morphisms_.at(m); }
  ObjectId dom(MorphismId m) const { return morphisms_[m].dom; }
  ObjectId cod(MorphismId m) const { return morphisms_[m].cod; }
  MorphismId identity(ObjectId o) const { return identities_[o]; }
  bool is_identity(MorphismId m) const { return identities_[dom(m)] == m; }
  std::optional<MorphismId> compose(MorphismId a, MorphismId b) const;

  // Empty on success, else a description of the first failed law.
  std::string check_laws() const;
  // First triple (m, a, b) with m a = m b and a != b, if any.
  std::optional<std::array<MorphismId, 3>> left_cancellation_failure() const;

  // Connected component index of each object.
  std::vector<std::size_t> components() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<long> table_;  // morphism_count()^2, -1 where undefined
};

}  // namespace ogpd

#endif  // OGPD_CATEGORY_HPP_
