// The relation "has a common lower bound" on an ordered groupoid, the
// principally-directed test, and the quotient groupoid by that relation.

#ifndef OGPD_BETA_HPP_
#define OGPD_BETA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ogpd/ordered_groupoid.hpp"

namespace ogpd {

// A common lower bound of g and h, if one exists. Prefers g (or h) itself
// when it lies below the other; otherwise the lower bound with the smallest
// id.
std::optional<ArrowId> beta_witness(const OrderedGroupoid& g, ArrowId a, ArrowId b);
inline bool beta_related(const OrderedGroupoid& g, ArrowId a, ArrowId b) {
  return beta_witness(g, a, b).has_value();
}

struct BetaRelation {
  std::size_t n = 0;
  std::vector<std::optional<ArrowId>> witness;  // n*n, row-major

  bool related(ArrowId a, ArrowId b) const { return witness[a * n + b].has_value(); }
};
BetaRelation beta_relation(const OrderedGroupoid& g);

struct DirectednessResult {
  // Every principal order ideal is directed.
  bool directed = true;
  // The relation is transitive; computed independently as a cross-check.
  bool beta_transitive = true;
  // On failure: (a, t, b) with a beta t beta b, a and b unrelated. Taken
  // from a non-directed ideal of t when one exists.
  std::optional<std::array<ArrowId, 3>> counterexample;
  std::optional<ArrowId> non_directed_ideal;
};
DirectednessResult principally_directed(const OrderedGroupoid& g);
inline bool is_principally_directed(const OrderedGroupoid& g) {
  return principally_directed(g).directed;
}

struct QuotientGroupoid {
  // Classes in order of their least member id; class ids are those ids.
  std::vector<std::vector<ArrowId>> classes;
  std::vector<std::size_t> class_of;  // arrow of G -> class index
  // The quotient as a trivially ordered groupoid; arrow k is class k.
  OrderedGroupoid groupoid;

  ArrowId project(ArrowId a) const { return class_of[a]; }
};

// Throws NotPrincipallyDirected (with the counterexample in the message) when
// the relation is not transitive.
QuotientGroupoid quotient(const OrderedGroupoid& g);

struct WelldefinednessReport {
  std::size_t checked = 0;  // (class pair, representatives, lower bound) tuples
  std::vector<std::string> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};
// Recomputes every class product over all representatives and all
// admissible identities f and compares with the quotient's table.
WelldefinednessReport check_quotient_welldefined(const OrderedGroupoid& g, const QuotientGroupoid& q);

}  // namespace ogpd

#endif  // OGPD_BETA_HPP_
