// Finite partial orders on {0, ..., n-1}.

#ifndef OGPD_POSET_HPP_
#define OGPD_POSET_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ogpd {

class Poset {
 public:
  Poset() = default;
  // Discrete order on n elements.
  explicit Poset(std::size_t n);

  // Reflexive-transitive closure of the generating pairs (lower, upper).
  // Throws AntisymmetryError if the closure identifies distinct elements.
  static Poset from_generators(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  struct AntisymmetryError {
    std::size_t a, b;  // a <= b and b <= a with a != b
  };

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  std::vector<std::size_t> down_set(std::size_t t) const;
  std::vector<std::size_t> up_set(std::size_t t) const;
  // Common lower bounds of a and b.
  std::vector<std::size_t> common_lower_bounds(std::size_t a, std::size_t b) const;
  // Greatest element of the common lower bounds within `among`, if any.
  std::optional<std::size_t> meet_within(std::size_t a, std::size_t b,
                                         const std::vector<std::size_t>& among) const;
  // Every pair in s has a lower bound inside s.
  bool is_directed(const std::vector<std::size_t>& s) const;
  // Covering pairs (lower, upper): lower < upper with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  bool is_trivial() const;

 private:
  std::size_t n_ = 0;
  std::vector<char> leq_;
};

}  // namespace ogpd

#endif  // OGPD_POSET_HPP_
