#include "ogpd/poset.hpp"

#include <stdexcept>

namespace ogpd {

Poset::Poset(std::size_t n) : n_(n), leq_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
}

Poset Poset::from_generators(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Poset p(n);
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw std::out_of_range("Poset::from_generators: element out of range");
    p.leq_[lo * n + hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i]) throw AntisymmetryError{i, j};
  return p;
}

std::vector<std::size_t> Poset::down_set(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (leq(i, t)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::up_set(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (leq(t, i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::common_lower_bounds(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (leq(i, a) && leq(i, b)) out.push_back(i);
  return out;
}

std::optional<std::size_t> Poset::meet_within(std::size_t a, std::size_t b,
                                              const std::vector<std::size_t>& among) const {
  std::vector<std::size_t> lower;
  for (std::size_t i : among)
    if (leq(i, a) && leq(i, b)) lower.push_back(i);
  for (std::size_t c : lower) {
    bool greatest = true;
    for (std::size_t o : lower)
      if (!leq(o, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  return std::nullopt;
}

bool Poset::is_directed(const std::vector<std::size_t>& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool found = false;
      for (std::size_t k : s)
        if (leq(k, s[i]) && leq(k, s[j])) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < n_; ++lo)
    for (std::size_t hi = 0; hi < n_; ++hi) {
      if (lo == hi || !leq(lo, hi)) continue;
      bool between = false;
      for (std::size_t m = 0; m < n_ && !between; ++m)
        between = m != lo && m != hi && leq(lo, m) && leq(m, hi);
      if (!between) out.emplace_back(lo, hi);
    }
  return out;
}

bool Poset::is_trivial() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && leq(i, j)) return false;
  return true;
}

}  // namespace ogpd
