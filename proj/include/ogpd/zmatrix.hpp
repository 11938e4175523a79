// Dense integer matrices with exact (GMP) arithmetic and the Smith normal
// form kernel that all abelian-group computations reduce to.
//
// Conventions: vectors are rows. A matrix M with r rows and c columns acts
// on the right, x -> x * M, so a homomorphism Z^r -> Z^c is an r x c matrix
// whose i-th row is the image of the i-th generator. Composition "f then g"
// is the product F * G.

#ifndef OGPD_ZMATRIX_HPP_
#define OGPD_ZMATRIX_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ogpd {

using Integer = mpz_class;
using ZVector = std::vector<Integer>;

class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);
  ZMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ZMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ZMatrix identity(std::size_t n);
  static ZMatrix diagonal(const ZVector& d);
  static ZMatrix from_rows(const std::vector<ZVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ZVector row(std::size_t i) const;
  void set_row(std::size_t i, const ZVector& v);
  bool is_zero() const;

  ZMatrix transpose() const;
  ZMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // Copies `src` into this matrix with its top-left corner at (r0, c0).
  void paste(const ZMatrix& src, std::size_t r0, std::size_t c0);
  // Adds `src` into this matrix with its top-left corner at (r0, c0).
  void accumulate(const ZMatrix& src, std::size_t r0, std::size_t c0);

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t i);

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
ZMatrix operator+(const ZMatrix& a, const ZMatrix& b);
ZMatrix operator-(const ZMatrix& a, const ZMatrix& b);
ZMatrix operator*(const Integer& k, const ZMatrix& a);
ZVector operator*(const ZVector& x, const ZMatrix& a);

ZMatrix hstack(const ZMatrix& a, const ZMatrix& b);
ZMatrix vstack(const ZMatrix& a, const ZMatrix& b);
ZMatrix block_diagonal(const std::vector<ZMatrix>& blocks);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const ZMatrix& m);

struct SmithOptions {
  bool track_left = true;       // U
  bool track_right = true;      // V
  bool track_right_inv = true;  // V^-1
};

// U * M * V = S with S diagonal, non-negative, d_1 | d_2 | ... and U, V
// unimodular. `rank` is the number of non-zero diagonal entries; those
// entries occupy positions 0..rank-1.
struct SmithForm {
  ZMatrix S;
  ZMatrix U;
  ZMatrix V;
  ZMatrix V_inv;
  std::size_t rank = 0;

  const Integer& diag(std::size_t i) const { return S(i, i); }
};

SmithForm smith_normal_form(const ZMatrix& m, SmithOptions options = {});

// Checks every postcondition of smith_normal_form; returns an empty string on
// success or a description of the first failed condition. Requires U and V.
std::string verify_smith_form(const ZMatrix& m, const SmithForm& snf);

// When enabled, every smith_normal_form call with U and V tracked runs
// verify_smith_form and throws std::logic_error on failure. Off by default.
void set_smith_verification(bool enabled);
bool smith_verification_enabled();

// Basis (as rows) of the lattice {x : x * m = 0}.
ZMatrix left_kernel(const ZMatrix& m);

// Basis (as rows) of the row lattice of m. Rows are linearly independent.
ZMatrix row_lattice_basis(const ZMatrix& m);

// Integer solution X of X * basis = w, one row of X per row of w. `basis`
// must have linearly independent rows. Returns nullopt when some row of w
// lies outside the row lattice of `basis`.
std::optional<ZMatrix> solve_left(const ZMatrix& basis, const ZMatrix& w);

// True iff every row of w lies in the row lattice of m.
bool in_row_lattice(const ZMatrix& m, const ZMatrix& w);

}  // namespace ogpd

#endif  // OGPD_ZMATRIX_HPP_
