// Random instances for property checks: ordered groupoids built as
// semilattice-of-groups style constructions (optionally with a pair-groupoid
// factor), modules whose actions are integer scalars, and maps between them.
// Everything is a deterministic function of the seed.

#ifndef OGPD_RANDOM_HPP_
#define OGPD_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ogpd/expansion.hpp"
#include "ogpd/gmodule.hpp"
#include "ogpd/ordered_groupoid.hpp"

namespace ogpd {

struct RandomOgParams {
  std::size_t max_identities = 3;  // base identities, before the pair factor
  std::size_t max_order = 4;       // vertex groups are Z/n with n <= max_order
  std::size_t max_pair = 2;        // each base identity becomes 1..max_pair objects
  bool directed = false;           // force principally directed output
};

// Base identity b becomes "e<b>" (suffixed "_<i><i>" when the pair factor is
// larger than 1); the arrow with group element x from object i to j is
// "g<b>_<x>" with the same suffix scheme.
GroupoidSpec random_groupoid_spec(std::uint64_t seed, const RandomOgParams& params = {});
OrderedGroupoid generate_random_og(std::uint64_t seed, const RandomOgParams& params = {});

// Homomorphisms from the groupoid to {+1, -1}, one value per arrow; at most
// `limit` are returned, in a fixed order starting with the trivial one.
std::vector<std::vector<int>> sign_characters(const OrderedGroupoid& g, std::size_t limit = 256);

// Data for a module with A_e = Z/n_e (n_e = 0 for Z) and (e, x) acting as
// multiplication by sign(x) * w_r(x) / w_e.
struct ScalarModuleData {
  std::vector<Integer> modulus;  // per arrow index; only identities are read
  std::vector<Integer> weight;
  std::vector<int> sign;         // per arrow, a sign character
};

// Closes the data so the actions are well defined and functorial: weights
// grow and moduli shrink (by divisibility) along every morphism of l.
void close_scalar_data(const OrderedGroupoid& g, const LCat& l, ScalarModuleData& data);
GModule scalar_module(const OrderedGroupoid& g, const LCat& l, const ScalarModuleData& data);

struct RandomModuleParams {
  std::size_t max_modulus = 8;
  bool allow_free = false;
  std::size_t max_summands = 2;
};

ScalarModuleData random_scalar_data(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                    const RandomModuleParams& params = {});
GModule random_module(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                      const RandomModuleParams& params = {});

GModule module_direct_sum(const std::vector<GModule>& parts);
GMap gmap_direct_sum(const std::vector<GMap>& parts);

// A surjective map B -> B' of scalar modules with the same weights and signs:
// the moduli of B' divide those of B and every component is reduction.
struct RandomSurjection {
  GModule source, target;
  GMap map;
};
RandomSurjection random_surjection(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                   const RandomModuleParams& params = {});

// 0 -> P --k--> P --> P/kP -> 0 with P free, summand-wise multipliers k.
struct ShortExactSequence {
  GModule left, middle, right;
  GMap first, second;
};
ShortExactSequence random_short_exact(const OrderedGroupoid& g, const LCat& l, std::mt19937_64& rng,
                                      std::size_t max_multiplier = 6);

}  // namespace ogpd

#endif  // OGPD_RANDOM_HPP_
