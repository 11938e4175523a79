// Homology of a finite category with coefficients in a module, computed
// from the normalized nerve: degree-n chains are strings e_0 -> ... -> e_n
// of non-identity morphisms, each carrying a copy of M(e_0).

#ifndef OGPD_HOMOLOGY_HPP_
#define OGPD_HOMOLOGY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ogpd/expansion.hpp"
#include "ogpd/gmodule.hpp"

namespace ogpd {

struct ChainComplex {
  // chains[n]: the nondegenerate chains of degree n (morphism sequences;
  // degree 0 uses the empty sequence per object, see `objects`).
  std::vector<std::vector<std::vector<MorphismId>>> chains;
  std::vector<ObjectId> objects;     // degree-0 chains, one per object
  std::vector<FgAbGroup> groups;     // C_n
  std::vector<ZMatrix> boundary;     // boundary[n]: C_n -> C_{n-1}; boundary[0] is C_0 -> 0
  std::vector<std::string> warnings;

  std::size_t top_degree() const { return groups.size() - 1; }
  AbHom differential(std::size_t n) const;
  // Empty when every composite of consecutive boundaries is zero.
  std::string check_boundary_squared() const;
};

// Chain-rank warning threshold: OG_MAX_CHAIN_RANK from the environment, or
// 10^4.
std::size_t chain_rank_threshold();

ChainComplex nerve_complex(const GModule& m, std::size_t top_degree);

// H_n(C, M) for n <= top_degree - 1 of a complex built by nerve_complex.
FgAbGroup homology(const ChainComplex& complex, std::size_t n);
// Builds the complex up to degree n + 1 and returns H_n.
FgAbGroup homology(const GModule& m, std::size_t n);

struct HomologyDegree {
  std::size_t degree = 0;
  CanonicalForm left;   // H_n(L(G), A)
  CanonicalForm right;  // H_n(G/beta, colim_E A)
  bool equal = false;
};

struct TheoremReport {
  std::vector<HomologyDegree> degrees;
  bool h0_matches_colim = true;  // both sides, degree 0
  bool ok() const;
};

TheoremReport check_theorem(const BetaSetting& s, const GModule& a, std::size_t max_degree);

}  // namespace ogpd

#endif  // OGPD_HOMOLOGY_HPP_
