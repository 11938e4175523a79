#include "ogpd/abgroup.hpp"

#include <utility>

namespace ogpd {

std::string CanonicalForm::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

FgAbGroup::FgAbGroup(std::size_t generators, ZMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() == 0 && relations_.cols() != generators_) relations_ = ZMatrix(0, generators_);
  if (relations_.cols() != generators_)
    throw std::invalid_argument("FgAbGroup: relation matrix has " +
                                std::to_string(relations_.cols()) + " columns for " +
                                std::to_string(generators_) + " generators");
  SmithForm snf = smith_normal_form(relations_, {false, true, true});
  rank_ = snf.rank;
  v_ = std::move(snf.V);
  v_inv_ = std::move(snf.V_inv);
  diag_.assign(generators_, Integer(0));
  for (std::size_t i = 0; i < rank_; ++i) {
    diag_[i] = snf.diag(i);
    if (diag_[i] > 1) canonical_.torsion.push_back(diag_[i]);
  }
  canonical_.rank = generators_ - rank_;
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  ZMatrix r(1, 1);
  r(0, 0) = n;
  return {1, r};
}

FgAbGroup FgAbGroup::from_invariants(std::size_t rank, const std::vector<Integer>& torsion) {
  const std::size_t k = rank + torsion.size();
  ZMatrix r(torsion.size(), k);
  for (std::size_t i = 0; i < torsion.size(); ++i) r(i, i) = torsion[i];
  return {k, r};
}

std::optional<Integer> FgAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : canonical_.torsion) n *= d;
  return n;
}

bool FgAbGroup::is_zero(const ZVector& x) const {
  if (x.size() != generators_) throw std::invalid_argument("FgAbGroup::is_zero: length mismatch");
  ZVector c = x * v_;
  for (std::size_t i = 0; i < generators_; ++i) {
    if (i < rank_) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), diag_[i].get_mpz_t())) return false;
    } else if (sgn(c[i]) != 0) {
      return false;
    }
  }
  return true;
}

bool FgAbGroup::equal(const ZVector& x, const ZVector& y) const {
  ZVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return is_zero(d);
}

bool FgAbGroup::rows_are_zero(const ZMatrix& w) const {
  if (w.cols() != generators_) throw std::invalid_argument("FgAbGroup::rows_are_zero: width mismatch");
  for (std::size_t r = 0; r < w.rows(); ++r)
    if (!is_zero(w.row(r))) return false;
  return true;
}

ZVector FgAbGroup::normal_form(const ZVector& x) const {
  if (x.size() != generators_) throw std::invalid_argument("FgAbGroup::normal_form: length mismatch");
  ZVector c = x * v_;
  ZVector out;
  for (std::size_t i = 0; i < generators_; ++i) {
    if (i < rank_) {
      if (diag_[i] == 1) continue;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), diag_[i].get_mpz_t());
      out.push_back(r);
    } else {
      out.push_back(c[i]);
    }
  }
  return out;
}

std::vector<ZVector> FgAbGroup::elements(std::size_t limit) const {
  if (!is_finite()) throw std::domain_error("FgAbGroup::elements: infinite group");
  if (*order() > limit) throw std::domain_error("FgAbGroup::elements: group too large");
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < rank_; ++i)
    if (diag_[i] > 1) slots.push_back(i);
  std::vector<ZVector> out;
  ZVector coords(generators_);
  for (;;) {
    out.push_back(coords * v_inv_);
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      Integer& c = coords[slots[s]];
      c += 1;
      if (c < diag_[slots[s]]) break;
      c = 0;
    }
    if (s == slots.size()) break;
  }
  return out;
}

bool hom_welldefined(const FgAbGroup& source, const FgAbGroup& target, const ZMatrix& matrix) {
  if (matrix.rows() != source.generators() || matrix.cols() != target.generators()) return false;
  return target.rows_are_zero(source.relations() * matrix);
}

bool AbHom::is_well_defined() const { return hom_welldefined(source, target, matrix); }

AbHom make_hom(const FgAbGroup& source, const FgAbGroup& target, const ZMatrix& matrix) {
  if (matrix.rows() != source.generators() || matrix.cols() != target.generators())
    throw MathError("homomorphism matrix is " + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()) + ", expected " +
                    std::to_string(source.generators()) + "x" +
                    std::to_string(target.generators()));
  if (!hom_welldefined(source, target, matrix))
    throw MathError("matrix does not define a homomorphism: a relator maps outside the target's relations");
  return {source, target, matrix};
}

AbHom identity_hom(const FgAbGroup& g) {
  return {g, g, ZMatrix::identity(g.generators())};
}

AbHom zero_hom(const FgAbGroup& source, const FgAbGroup& target) {
  return {source, target, ZMatrix(source.generators(), target.generators())};
}

AbHom compose(const AbHom& f, const AbHom& g) {
  if (f.target.generators() != g.source.generators())
    throw std::invalid_argument("compose: target/source mismatch");
  return {f.source, g.target, f.matrix * g.matrix};
}

bool hom_equal(const FgAbGroup& target, const ZMatrix& a, const ZMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return target.rows_are_zero(a - b);
}

bool hom_equal(const AbHom& f, const AbHom& g) { return hom_equal(f.target, f.matrix, g.matrix); }

namespace {

// Basis (rows, in source coordinates) of {x : x * M lies in the target's
// relation lattice}.
ZMatrix preimage_of_zero(const ZMatrix& m, const FgAbGroup& target) {
  const std::size_t k = m.rows();
  ZMatrix stacked = vstack(m, target.relations());
  ZMatrix kern = left_kernel(stacked);
  return row_lattice_basis(kern.block(0, 0, kern.rows(), k));
}

// Re-express the rows of w in the basis `basis`; they must lie in its span.
ZMatrix coordinates_in(const ZMatrix& basis, const ZMatrix& w) {
  ZMatrix reduced = w.rows() > w.cols() ? row_lattice_basis(w) : w;
  auto z = solve_left(basis, reduced);
  if (!z) throw std::logic_error("coordinates_in: vector outside the lattice");
  return *z;
}

}  // namespace

AbHom kernel(const AbHom& f) {
  ZMatrix kb = preimage_of_zero(f.matrix, f.target);
  ZMatrix rel = kb.rows() == 0 ? ZMatrix(0, 0) : coordinates_in(kb, f.source.relations());
  FgAbGroup k(kb.rows(), rel.rows() == 0 ? ZMatrix(0, kb.rows()) : rel);
  return {k, f.source, kb};
}

FgAbGroup cokernel(const AbHom& f) {
  return {f.target.generators(), vstack(f.target.relations(), f.matrix)};
}

bool is_injective(const AbHom& f) { return kernel(f).source.is_trivial(); }
bool is_surjective(const AbHom& f) { return cokernel(f).is_trivial(); }
bool is_isomorphism(const AbHom& f) { return is_injective(f) && is_surjective(f); }

FgAbGroup homology_at(const AbHom& f, const AbHom& g) {
  if (f.target.generators() != g.source.generators())
    throw std::invalid_argument("homology_at: maps are not composable");
  if (!g.target.rows_are_zero(f.matrix * g.matrix))
    throw MathError("homology_at: composite is non-zero");
  ZMatrix kb = preimage_of_zero(g.matrix, g.target);
  if (kb.rows() == 0) return FgAbGroup::trivial();
  ZMatrix image = vstack(f.matrix, g.source.relations());
  ZMatrix rel = image.rows() == 0 ? ZMatrix(0, kb.rows()) : coordinates_in(kb, image);
  return {kb.rows(), rel};
}

DirectSum direct_sum(const std::vector<FgAbGroup>& groups) {
  std::vector<ZMatrix> rels;
  std::size_t total = 0;
  DirectSum out;
  for (const auto& g : groups) {
    rels.push_back(g.relations());
    out.offsets.push_back(total);
    total += g.generators();
  }
  out.sum = FgAbGroup(total, block_diagonal(rels));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::size_t k = groups[i].generators();
    ZMatrix inj(k, total), proj(total, k);
    for (std::size_t j = 0; j < k; ++j) {
      inj(j, out.offsets[i] + j) = 1;
      proj(out.offsets[i] + j, j) = 1;
    }
    out.injections.push_back({groups[i], out.sum, inj});
    out.projections.push_back({out.sum, groups[i], proj});
  }
  return out;
}

AbHom induced_on_cokernel(const AbHom& h, const ZMatrix& quotient) {
  if (quotient.cols() != h.source.generators())
    throw std::invalid_argument("induced_on_cokernel: quotient width mismatch");
  if (!h.target.rows_are_zero(quotient * h.matrix))
    throw MathError("not induced: a quotient relator maps to a non-zero element");
  FgAbGroup src(h.source.generators(), vstack(h.source.relations(), quotient));
  return {src, h.target, h.matrix};
}

std::vector<ZMatrix> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b, std::size_t limit) {
  if (!b.is_finite()) throw std::domain_error("enumerate_homs: infinite target");
  const std::vector<ZVector> elems = b.elements(limit);
  // A homomorphism is fixed by the images of the Smith generators of A
  // (rows of V^-1); generator j of A is sum_i V(j,i) * (Smith generator i).
  struct Slot {
    std::size_t index;
    std::vector<std::size_t> choices;
  };
  std::vector<Slot> slots;
  std::size_t count = 1;
  for (std::size_t i = 0; i < a.generators(); ++i) {
    const bool is_relation = i < a.rank_;
    if (is_relation && a.diag_[i] == 1) continue;
    Slot s{i, {}};
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (is_relation) {
        ZVector y = elems[e];
        for (auto& c : y) c *= a.diag_[i];
        if (!b.is_zero(y)) continue;
      }
      s.choices.push_back(e);
    }
    if (count > limit / std::max<std::size_t>(1, s.choices.size()))
      throw std::domain_error("enumerate_homs: hom-set candidate count exceeds limit");
    count *= s.choices.size();
    slots.push_back(std::move(s));
  }
  std::vector<ZMatrix> out;
  std::vector<std::size_t> pick(slots.size(), 0);
  for (;;) {
    ZMatrix smith_images(a.generators(), b.generators());
    for (std::size_t s = 0; s < slots.size(); ++s)
      smith_images.set_row(slots[s].index, elems[slots[s].choices[pick[s]]]);
    out.push_back(a.v_ * smith_images);
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++pick[s] < slots[s].choices.size()) break;
      pick[s] = 0;
    }
    if (s == slots.size()) break;
  }
  return out;
}

}  // namespace ogpd
