// Finite ordered groupoids.
//
// Composition is written left to right: g*h is defined when r(g) = d(h),
// with d(g) = g g^-1 and r(g) = g^-1 g. Arrows are indexed densely; the
// identities come first, in document order, followed by the remaining arrows.

#ifndef OGPD_ORDERED_GROUPOID_HPP_
#define OGPD_ORDERED_GROUPOID_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ogpd/errors.hpp"
#include "ogpd/poset.hpp"

namespace ogpd {

using ArrowId = std::size_t;

// The raw document form of a groupoid, before any checking.
struct GroupoidSpec {
  struct Arrow {
    std::string id, d, r, inv;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };
  std::vector<std::string> identities;
  std::vector<Arrow> arrows;
  std::vector<std::array<std::string, 3>> compose;           // (g, h, gh)
  std::vector<std::pair<std::string, std::string>> order;    // (lower, upper)

  friend bool operator==(const GroupoidSpec&, const GroupoidSpec&) = default;
};

struct Violation {
  std::string axiom;                 // e.g. "OG3", "associativity"
  std::vector<std::string> witness;  // arrow ids, meaning depends on the axiom
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& axiom) const;
};

class OrderedGroupoid {
 public:
  // Checks referential integrity, endpoint consistency of the inverse map and
  // completeness of the composition table; computes the order closure.
  // Throws InputError on any of these. Axioms are not checked here; see
  // validate().
  static OrderedGroupoid build(const GroupoidSpec& spec);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ArrowId a) const { return names_.at(a); }
  std::optional<ArrowId> find(const std::string& name) const;
  // Throws InputError for unknown names.
  ArrowId at(const std::string& name) const;

  bool is_identity(ArrowId a) const { return is_identity_[a] != 0; }
  const std::vector<ArrowId>& identities() const noexcept { return identities_; }
  ArrowId d(ArrowId a) const { return d_[a]; }
  ArrowId r(ArrowId a) const { return r_[a]; }
  ArrowId inverse(ArrowId a) const { return inv_[a]; }
  std::optional<ArrowId> compose(ArrowId g, ArrowId h) const;
  // Throws NotComposable when r(g) != d(h).
  ArrowId mul(ArrowId g, ArrowId h) const;

  const Poset& order() const noexcept { return order_; }
  bool leq(ArrowId a, ArrowId b) const { return order_.leq(a, b); }
  bool trivially_ordered() const { return order_.is_trivial(); }

  ValidationReport validate() const;

  // (e|x): the unique arrow below x with domain e. Requires e <= d(x).
  ArrowId restriction(ArrowId e, ArrowId x) const;
  // (x|e) = (e|x^-1)^-1. Requires e <= r(x).
  ArrowId corestriction(ArrowId x, ArrowId e) const;
  // g * h = (g|l)(l|h) with l the greatest lower bound of r(g), d(h) among
  // the identities; nullopt when that bound does not exist.
  std::optional<ArrowId> pseudoproduct(ArrowId g, ArrowId h) const;
  // Greatest lower bound of two identities within E(G).
  std::optional<ArrowId> identity_meet(ArrowId e, ArrowId f) const;

  std::vector<ArrowId> principal_ideal(ArrowId t) const { return order_.down_set(t); }
  bool is_directed(const std::vector<ArrowId>& s) const { return order_.is_directed(s); }
  // Identities below both arrows (which must be identities for this to be
  // meaningful), in index order.
  std::vector<ArrowId> identity_lower_bounds(ArrowId e, ArrowId f) const;

  // The document form; the order is emitted as covering pairs and only
  // compositions of two non-identity arrows are listed.
  GroupoidSpec to_spec() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, ArrowId> index_;
  std::vector<char> is_identity_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> d_, r_, inv_;
  std::vector<long> comp_;  // size()^2, -1 where undefined
  Poset order_;
  // Candidates y <= x with d(y) = e, keyed by (e, x); filled for e <= d(x).
  std::map<std::pair<ArrowId, ArrowId>, std::vector<ArrowId>> restriction_candidates_;
};

}  // namespace ogpd

#endif  // OGPD_ORDERED_GROUPOID_HPP_
