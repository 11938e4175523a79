// Finitely generated abelian groups given by presentations, and
// homomorphisms between them.
//
// A group with k generators is Z^k modulo the row lattice of its relation
// matrix (m x k, one relator per row). Elements are row vectors of length k;
// a homomorphism A -> B is a (gens A) x (gens B) matrix acting on the right.

#ifndef OGPD_ABGROUP_HPP_
#define OGPD_ABGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ogpd/errors.hpp"
#include "ogpd/zmatrix.hpp"

namespace ogpd {

// Isomorphism invariant: free rank and invariant factors d_1 | d_2 | ...,
// each at least 2.
struct CanonicalForm {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

class FgAbGroup {
 public:
  FgAbGroup() : FgAbGroup(0, ZMatrix(0, 0)) {}
  FgAbGroup(std::size_t generators, ZMatrix relations);

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free(std::size_t rank) { return {rank, ZMatrix(0, rank)}; }
  // Z/n; n = 0 gives Z.
  static FgAbGroup cyclic(const Integer& n);
  // Torsion generators first (one relation d_i each), then `rank` free ones.
  static FgAbGroup from_invariants(std::size_t rank, const std::vector<Integer>& torsion);

  std::size_t generators() const noexcept { return generators_; }
  const ZMatrix& relations() const noexcept { return relations_; }
  const CanonicalForm& canonical() const noexcept { return canonical_; }

  bool is_finite() const noexcept { return canonical_.rank == 0; }
  bool is_trivial() const noexcept { return canonical_.is_trivial(); }
  // Group order, or nullopt for infinite groups.
  std::optional<Integer> order() const;

  // True iff x lies in the relation lattice (x is zero in the group).
  bool is_zero(const ZVector& x) const;
  bool equal(const ZVector& x, const ZVector& y) const;
  // Every row of w is zero in the group.
  bool rows_are_zero(const ZMatrix& w) const;
  // Canonical coordinates: one entry per invariant factor reduced into
  // [0, d), followed by the free coordinates. Equal elements have equal
  // normal forms.
  ZVector normal_form(const ZVector& x) const;

  // All elements, as generator-coordinate representatives, in a fixed order.
  // Throws std::domain_error for infinite groups or when the order exceeds
  // `limit`.
  std::vector<ZVector> elements(std::size_t limit = 1u << 20) const;

 private:
  friend std::vector<ZMatrix> enumerate_homs(const FgAbGroup&, const FgAbGroup&, std::size_t);

  std::size_t generators_ = 0;
  ZMatrix relations_;
  CanonicalForm canonical_;
  // Smith data of the relation matrix: coordinates are x * V.
  ZMatrix v_;
  ZMatrix v_inv_;
  std::vector<Integer> diag_;  // diagonal entries, zero past the rank
  std::size_t rank_ = 0;       // rank of the relation matrix
};

struct AbHom {
  FgAbGroup source;
  FgAbGroup target;
  ZMatrix matrix;

  // Relators of the source land in the relation lattice of the target.
  bool is_well_defined() const;
  ZVector apply(const ZVector& x) const { return x * matrix; }
};

// Throws MathError when the matrix is not a well-defined homomorphism.
AbHom make_hom(const FgAbGroup& source, const FgAbGroup& target, const ZMatrix& matrix);
AbHom identity_hom(const FgAbGroup& g);
AbHom zero_hom(const FgAbGroup& source, const FgAbGroup& target);
// "f then g".
AbHom compose(const AbHom& f, const AbHom& g);

bool hom_welldefined(const FgAbGroup& source, const FgAbGroup& target, const ZMatrix& matrix);
// Two matrices A -> B define the same homomorphism.
bool hom_equal(const FgAbGroup& target, const ZMatrix& a, const ZMatrix& b);
bool hom_equal(const AbHom& f, const AbHom& g);

// Kernel as a presented group together with its inclusion into the source.
AbHom kernel(const AbHom& f);
FgAbGroup cokernel(const AbHom& f);
bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);
bool is_isomorphism(const AbHom& f);

// ker(g) / im(f) for A --f--> B --g--> C. Throws MathError if g o f != 0.
FgAbGroup homology_at(const AbHom& f, const AbHom& g);

struct DirectSum {
  FgAbGroup sum;
  std::vector<AbHom> injections;
  std::vector<AbHom> projections;
  std::vector<std::size_t> offsets;  // generator offset of each summand
};
DirectSum direct_sum(const std::vector<FgAbGroup>& groups);

// Given a generator-level map h: A -> T and extra relators `quotient` on A's
// generators, returns the induced homomorphism A / <quotient> -> T. Throws
// MathError ("not induced") when some relator does not map to zero.
AbHom induced_on_cokernel(const AbHom& h, const ZMatrix& quotient);

// Every homomorphism A -> B, as matrices; B must be finite. Throws
// std::domain_error if |B|^gens(A) exceeds `limit` candidates.
std::vector<ZMatrix> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b,
                                    std::size_t limit = 1u << 20);

}  // namespace ogpd

#endif  // OGPD_ABGROUP_HPP_
