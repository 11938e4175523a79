#include "ogpd/zmatrix.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ogpd {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ZMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::diagonal(const ZVector& d) {
  ZMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVector>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

ZVector ZMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void ZMatrix::set_row(std::size_t i, const ZVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("ZMatrix::set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

bool ZMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ZMatrix ZMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("ZMatrix::block");
  ZMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ZMatrix::paste(const ZMatrix& src, std::size_t r0, std::size_t c0) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("ZMatrix::paste");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

void ZMatrix::accumulate(const ZMatrix& src, std::size_t r0, std::size_t c0) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
    throw std::out_of_range("ZMatrix::accumulate");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) += src(i, j);
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void ZMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void ZMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (sgn(s) != 0) (*this)(target, j) += k * s;
  }
}

void ZMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (sgn(s) != 0) (*this)(i, target) += k * s;
  }
}

void ZMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string ZMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ZMatrix product: dimension mismatch");
  ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

ZMatrix operator+(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("ZMatrix sum: dimension mismatch");
  ZMatrix c = a;
  c.accumulate(b, 0, 0);
  return c;
}

ZMatrix operator-(const ZMatrix& a, const ZMatrix& b) { return a + Integer(-1) * b; }

ZMatrix operator*(const Integer& k, const ZMatrix& a) {
  ZMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k * a(i, j);
  return c;
}

ZVector operator*(const ZVector& x, const ZMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
  ZVector y(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (sgn(x[k]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[k] * a(k, j);
  }
  return y;
}

ZMatrix hstack(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  ZMatrix c(a.rows(), a.cols() + b.cols());
  c.paste(a, 0, 0);
  c.paste(b, 0, a.cols());
  return c;
}

ZMatrix vstack(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  ZMatrix c(a.rows() + b.rows(), a.cols());
  c.paste(a, 0, 0);
  c.paste(b, a.rows(), 0);
  return c;
}

ZMatrix block_diagonal(const std::vector<ZMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  ZMatrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.paste(b, r, c);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Integer determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

std::atomic<bool> g_verify_smith{false};

// Row and column operations applied to the working matrix, mirrored onto the
// transformation matrices that are being tracked.
struct SmithWork {
  ZMatrix a;
  ZMatrix u;
  ZMatrix v;
  ZMatrix v_inv;
  SmithOptions opt;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (opt.track_left) u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (opt.track_right) v.swap_cols(i, j);
    if (opt.track_right_inv) v_inv.swap_rows(i, j);
  }
  // row_target += k * row_source
  void add_row(std::size_t target, std::size_t source, const Integer& k) {
    a.add_row_multiple(target, source, k);
    if (opt.track_left) u.add_row_multiple(target, source, k);
  }
  // col_target += k * col_source
  void add_col(std::size_t target, std::size_t source, const Integer& k) {
    a.add_col_multiple(target, source, k);
    if (opt.track_right) v.add_col_multiple(target, source, k);
    if (opt.track_right_inv) v_inv.add_row_multiple(source, target, -k);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (opt.track_left) u.negate_row(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const ZMatrix& m, SmithOptions options) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithWork w{m,
              options.track_left ? ZMatrix::identity(rows) : ZMatrix{},
              options.track_right ? ZMatrix::identity(cols) : ZMatrix{},
              options.track_right_inv ? ZMatrix::identity(cols) : ZMatrix{},
              options};
  ZMatrix& a = w.a;

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  while (t < limit) {
    // Pivot: entry of minimal absolute value in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, Integer(1));
    }
    if (sgn(a(t, t)) < 0) w.negate_row(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.S = std::move(w.a);
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.V_inv = std::move(w.v_inv);
  if (g_verify_smith.load(std::memory_order_relaxed) && options.track_left &&
      options.track_right) {
    std::string err = verify_smith_form(m, out);
    if (!err.empty()) throw std::logic_error("smith_normal_form postcondition: " + err);
  }
  return out;
}

std::string verify_smith_form(const ZMatrix& m, const SmithForm& snf) {
  if (snf.U.rows() != m.rows() || snf.V.rows() != m.cols()) return "U or V has wrong shape";
  if (snf.U * m * snf.V != snf.S) return "U*M*V != S";
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < snf.S.rows(); ++i)
    for (std::size_t j = 0; j < snf.S.cols(); ++j)
      if (i != j && sgn(snf.S(i, j)) != 0) return "S is not diagonal";
  for (std::size_t i = 0; i < limit; ++i) {
    if (sgn(snf.S(i, i)) < 0) return "negative diagonal entry";
    if ((i < snf.rank) != (sgn(snf.S(i, i)) != 0)) return "rank does not match diagonal";
    if (i + 1 < limit && sgn(snf.S(i, i)) != 0 &&
        !mpz_divisible_p(snf.S(i + 1, i + 1).get_mpz_t(), snf.S(i, i).get_mpz_t()))
      return "divisibility chain broken at " + std::to_string(i);
  }
  if (abs(determinant(snf.U)) != 1) return "U is not unimodular";
  if (abs(determinant(snf.V)) != 1) return "V is not unimodular";
  if (snf.V_inv.rows() == snf.V.rows() && !snf.V_inv.empty() &&
      snf.V * snf.V_inv != ZMatrix::identity(snf.V.rows()))
    return "V_inv is not the inverse of V";
  return {};
}

void set_smith_verification(bool enabled) { g_verify_smith.store(enabled); }
bool smith_verification_enabled() { return g_verify_smith.load(); }

ZMatrix left_kernel(const ZMatrix& m) {
  SmithForm snf = smith_normal_form(m, {true, false, false});
  const std::size_t n = m.rows();
  ZMatrix basis(n - snf.rank, n);
  for (std::size_t i = snf.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i - snf.rank, j) = snf.U(i, j);
  return basis;
}

ZMatrix row_lattice_basis(const ZMatrix& m) {
  // rowspan(M) = rowspan(U^-1 S V^-1) = rowspan(S V^-1).
  SmithForm snf = smith_normal_form(m, {false, false, true});
  ZMatrix basis(snf.rank, m.cols());
  for (std::size_t i = 0; i < snf.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = snf.diag(i) * snf.V_inv(i, j);
  return basis;
}

std::optional<ZMatrix> solve_left(const ZMatrix& basis, const ZMatrix& w) {
  if (basis.cols() != w.cols()) throw std::invalid_argument("solve_left: column mismatch");
  // X B = W with U B V = S:  (X U^-1) S = W V.
  SmithForm snf = smith_normal_form(basis, {true, true, false});
  if (snf.rank != basis.rows()) throw std::invalid_argument("solve_left: basis rows are dependent");
  ZMatrix t = w * snf.V;
  ZMatrix z(w.rows(), basis.rows());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (j < snf.rank) {
        if (!mpz_divisible_p(t(r, j).get_mpz_t(), snf.diag(j).get_mpz_t())) return std::nullopt;
        mpz_divexact(z(r, j).get_mpz_t(), t(r, j).get_mpz_t(), snf.diag(j).get_mpz_t());
      } else if (sgn(t(r, j)) != 0) {
        return std::nullopt;
      }
    }
  }
  return z * snf.U;
}

bool in_row_lattice(const ZMatrix& m, const ZMatrix& w) {
  if (m.cols() != w.cols()) throw std::invalid_argument("in_row_lattice: column mismatch");
  if (w.is_zero()) return true;
  if (m.rows() == 0) return false;
  SmithForm snf = smith_normal_form(m, {false, true, false});
  ZMatrix t = w * snf.V;
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (j < snf.rank) {
        if (!mpz_divisible_p(t(r, j).get_mpz_t(), snf.diag(j).get_mpz_t())) return false;
      } else if (sgn(t(r, j)) != 0) {
        return false;
      }
    }
  return true;
}

}  // namespace ogpd
