// The expansion functor from G/beta-modules to G-modules, its left adjoint
// (the colimit over E(G), carrying an induced G/beta action), the adjunction
// bijections, and the comparison of iterated colimits with colim over L(G).
//
// Everything here assumes a principally directed G; BetaSetting::make
// enforces it.

#ifndef OGPD_EXPANSION_HPP_
#define OGPD_EXPANSION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ogpd/beta.hpp"
#include "ogpd/gmodule.hpp"
#include "ogpd/lcat.hpp"

namespace ogpd {

struct BetaSetting {
  OrderedGroupoid g;
  LCat lcat;             // L(G)
  QuotientGroupoid quotient;
  LCat qcat;             // L(G/beta), which is G/beta itself

  // Throws NotPrincipallyDirected.
  static BetaSetting make(const OrderedGroupoid& g);

  // Object of G/beta holding the class of an identity of G.
  ObjectId class_object(ArrowId identity) const;
  // Morphism of G/beta for the class of an arrow of G.
  MorphismId class_morphism(ArrowId arrow) const;
  // Identities of G in the class of quotient object x, in index order.
  const std::vector<ArrowId>& class_identities(ObjectId x) const { return class_identities_.at(x); }

 private:
  std::vector<std::vector<ArrowId>> class_identities_;
};

GModule expand(const BetaSetting& s, const GModule& b);
GMap expand_map(const BetaSetting& s, const GMap& xi);

struct GlamactionReport {
  std::size_t lower_bound_checks = 0;     // alternative choices of l
  std::size_t preimage_checks = 0;        // relators of L_x sent to zero
  std::size_t representative_checks = 0;  // alternative representatives g
  std::vector<std::string> failures;
  std::string functoriality;              // empty when the result is a module
  bool ok() const noexcept { return failures.empty() && functoriality.empty(); }
};

struct EColimit {
  GModule module;                   // over s.qcat
  std::vector<ZMatrix> canonical;   // per object of L(G): A_e -> L_{e beta}
  std::vector<std::size_t> offset;  // per object of L(G): generator offset in L_{e beta}
  GlamactionReport report;
};

// colim over E(G) of the restriction of `a`, one summand L_x per class x of
// identities, with the action of each class g beta computed on generators as
// (a alpha_(e,l) |> (l|g)) alpha_z; every choice of l and of representative,
// and every relator, is checked.
EColimit colim_E(const BetaSetting& s, const GModule& a);

// The G/beta-map L(A) -> L(A') induced by a G-map A -> A'.
GMap colim_E_map(const BetaSetting& s, const EColimit& la, const EColimit& lb, const GMap& phi);

// rho: Hom(A, B expanded) -> Hom(colim_E A, B). Throws MathError when phi does
// not factor through the colimit.
GMap rho(const BetaSetting& s, const EColimit& la, const GModule& b, const GMap& phi);
// tau: Hom(colim_E A, B) -> Hom(A, B expanded); component e is alpha_e then
// psi_{e beta}.
GMap tau(const BetaSetting& s, const EColimit& la, const GMap& psi);

struct AdjunctionReport {
  std::size_t left_homs = 0;   // |Hom(A, B expanded)|
  std::size_t right_homs = 0;  // |Hom(colim_E A, B)|
  bool rho_natural = true;     // every rho(phi) is a G/beta-map in the right set
  bool tau_natural = true;
  bool tau_after_rho = true;   // tau(rho(phi)) = phi for all phi
  bool rho_after_tau = true;   // rho(tau(psi)) = psi for all psi
  bool ok() const noexcept {
    return left_homs == right_homs && rho_natural && tau_natural && tau_after_rho && rho_after_tau;
  }
};
AdjunctionReport check_adjunction(const BetaSetting& s, const GModule& a, const GModule& b,
                                  std::size_t element_bound = 64);

struct ColimCompositionReport {
  CanonicalForm iterated;  // colim over G/beta of colim_E A
  CanonicalForm direct;    // colim over L(G) of A
  bool forms_equal = false;
  bool comparison_welldefined = false;
  bool inverse_welldefined = false;
  bool mutually_inverse = false;
  bool ok() const noexcept {
    return forms_equal && comparison_welldefined && inverse_welldefined && mutually_inverse;
  }
};
ColimCompositionReport check_colim_composition(const BetaSetting& s, const GModule& a);

bool componentwise_surjective(const GModule& source, const GModule& target, const GMap& map);

}  // namespace ogpd

#endif  // OGPD_EXPANSION_HPP_
