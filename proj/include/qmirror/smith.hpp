#pragma once

#include <optional>
#include <utility>

#include "qmirror/matrix.hpp"

namespace qmirror {

/// Smith normal form over a Euclidean domain: U * M * V == S with U, V
/// unimodular (unit determinant, tracked exactly) and S diagonal with
/// d_1 | d_2 | ..., each entry in normalized form.
template <typename T>
struct SmithResult {
  Matrix<T> S, U, V;
  size_t rank = 0;
  T detU{1}, detV{1};

  std::vector<T> diagonal() const {
    std::vector<T> d;
    for (size_t i = 0; i < rank; ++i) d.push_back(S.at(i, i));
    return d;
  }
};

namespace detail {

template <typename T>
class SmithWorker {
public:
  explicit SmithWorker(Matrix<T> m)
      : S_(std::move(m)),
        U_(Matrix<T>::identity(S_.rows())),
        V_(Matrix<T>::identity(S_.cols())) {}

  SmithResult<T> run() {
    const size_t bound = std::min(S_.rows(), S_.cols());
    size_t t = 0;
    while (t < bound && reduce_from(t)) ++t;
    rank_ = t;
    enforce_chain();
    normalize_diagonal();
    return SmithResult<T>{std::move(S_), std::move(U_), std::move(V_), rank_,
                          std::move(detU_), std::move(detV_)};
  }

private:
  // Brings a pivot to (t,t) and clears its row and column. Returns false
  // when the trailing submatrix is zero.
  //
  // Entries the pivot does not divide are handled by one-shot Bezout
  // transforms (each strictly shrinks the pivot, and the quotient growth
  // stays inside a single gcd computation); the rest is exact shears.
  bool reduce_from(size_t t) {
    if (!select_pivot(t)) return false;
    for (;;) {
      // Content stripping is a tracked unit scaling, so the unimodularity
      // contract is preserved.
      for (size_t i = t; i < S_.rows(); ++i) strip_row_content(i);
      for (size_t j = t; j < S_.cols(); ++j) strip_col_content(j);

      bool transformed = false;
      for (size_t i = t + 1; i < S_.rows() && !transformed; ++i)
        if (!S_.at(i, t).is_zero() && !S_.at(t, t).divides(S_.at(i, t))) {
          row_gcd_transform(t, i, t);
          transformed = true;
        }
      for (size_t j = t + 1; j < S_.cols() && !transformed; ++j)
        if (!S_.at(t, j).is_zero() && !S_.at(t, t).divides(S_.at(t, j))) {
          col_gcd_transform(t, j, t);
          transformed = true;
        }
      if (transformed) continue;

      for (size_t i = t + 1; i < S_.rows(); ++i)
        if (!S_.at(i, t).is_zero())
          row_op(i, t, -S_.at(i, t).exact_quotient(S_.at(t, t)));
      for (size_t j = t + 1; j < S_.cols(); ++j)
        if (!S_.at(t, j).is_zero())
          col_op(j, t, -S_.at(t, j).exact_quotient(S_.at(t, t)));
      return true;
    }
  }

  // Unimodular [[u, v], [-b/g, a/g]] on rows (p, i): the pivot entry at
  // column c becomes gcd(a, b) and the entry at (i, c) becomes zero.
  void row_gcd_transform(size_t p, size_t i, size_t c) {
    const T a = S_.at(p, c), b = S_.at(i, c);
    auto eg = ext_gcd(a, b);
    const T bg = b.exact_quotient(eg.g), ag = a.exact_quotient(eg.g);
    apply_pair_rows(S_, p, i, eg.u, eg.v, bg, ag);
    apply_pair_rows(U_, p, i, eg.u, eg.v, bg, ag);
  }
  void col_gcd_transform(size_t p, size_t j, size_t r) {
    const T a = S_.at(r, p), b = S_.at(r, j);
    auto eg = ext_gcd(a, b);
    const T bg = b.exact_quotient(eg.g), ag = a.exact_quotient(eg.g);
    apply_pair_cols(S_, p, j, eg.u, eg.v, bg, ag);
    apply_pair_cols(V_, p, j, eg.u, eg.v, bg, ag);
  }

  static void apply_pair_rows(Matrix<T>& m, size_t p, size_t q, const T& u, const T& v,
                              const T& bg, const T& ag) {
    for (size_t j = 0; j < m.cols(); ++j) {
      T x = m.at(p, j), y = m.at(q, j);
      m.at(p, j) = u * x + v * y;
      m.at(q, j) = ag * y - bg * x;
    }
  }
  static void apply_pair_cols(Matrix<T>& m, size_t p, size_t q, const T& u, const T& v,
                              const T& bg, const T& ag) {
    for (size_t i = 0; i < m.rows(); ++i) {
      T x = m.at(i, p), y = m.at(i, q);
      m.at(i, p) = u * x + v * y;
      m.at(i, q) = ag * y - bg * x;
    }
  }

  bool select_pivot(size_t t) {
    std::optional<std::pair<size_t, size_t>> best;
    for (size_t i = t; i < S_.rows(); ++i)
      for (size_t j = t; j < S_.cols(); ++j) {
        if (S_.at(i, j).is_zero()) continue;
        if (!best || complexity(S_.at(i, j)) < complexity(S_.at(best->first, best->second)))
          best = {i, j};
      }
    if (!best) return false;
    if (best->first != t) row_swap(best->first, t);
    if (best->second != t) col_swap(best->second, t);
    return true;
  }

  // Repairs d_i | d_{i+1} violations with operations confined to the
  // offending 2x2 block; each repair strictly shrinks the first violating
  // entry, so the scan terminates.
  void enforce_chain() {
    for (;;) {
      size_t bad = rank_;
      for (size_t i = 0; i + 1 < rank_; ++i) {
        if (!S_.at(i, i).divides(S_.at(i + 1, i + 1))) {
          bad = i;
          break;
        }
      }
      if (bad == rank_) return;
      fix_pair(bad, bad + 1);
    }
  }

  // diag(a, b) -> diag(gcd, lcm*unit) via ops touching only rows/cols p, q.
  void fix_pair(size_t p, size_t q) {
    col_op(p, q, T(1));  // S(q,p) becomes b
    for (;;) {
      if (!S_.at(q, p).is_zero()) {
        if (S_.at(p, p).divides(S_.at(q, p)))
          row_op(q, p, -S_.at(q, p).exact_quotient(S_.at(p, p)));
        else
          row_gcd_transform(p, q, p);
        continue;
      }
      if (!S_.at(p, q).is_zero()) {
        if (S_.at(p, p).divides(S_.at(p, q)))
          col_op(q, p, -S_.at(p, q).exact_quotient(S_.at(p, p)));
        else
          col_gcd_transform(p, q, p);
        continue;
      }
      return;
    }
  }

  void normalize_diagonal() {
    for (size_t i = 0; i < rank_; ++i) {
      auto [norm, unit] = S_.at(i, i).unit_normalize();
      if (unit.is_one()) continue;
      T inv = unit.unit_inverse();
      U_.scale_row(i, inv);
      detU_ *= inv;
      S_.at(i, i) = norm;
    }
  }

  void strip_row_content(size_t i) {
    std::vector<T> row;
    for (size_t j = 0; j < S_.cols(); ++j) row.push_back(S_.at(i, j));
    T u = common_unit_content(row.begin(), row.end());
    if (u.is_one()) return;
    T inv = u.unit_inverse();
    S_.scale_row(i, inv);
    U_.scale_row(i, inv);
    detU_ *= inv;
  }
  void strip_col_content(size_t j) {
    std::vector<T> col;
    for (size_t i = 0; i < S_.rows(); ++i) col.push_back(S_.at(i, j));
    T u = common_unit_content(col.begin(), col.end());
    if (u.is_one()) return;
    T inv = u.unit_inverse();
    S_.scale_col(j, inv);
    V_.scale_col(j, inv);
    detV_ *= inv;
  }

  void row_op(size_t dst, size_t src, const T& f) {
    S_.add_row_multiple(dst, src, f);
    U_.add_row_multiple(dst, src, f);
  }
  void col_op(size_t dst, size_t src, const T& f) {
    S_.add_col_multiple(dst, src, f);
    V_.add_col_multiple(dst, src, f);
  }
  void row_swap(size_t a, size_t b) {
    S_.swap_rows(a, b);
    U_.swap_rows(a, b);
    detU_ = -detU_;
  }
  void col_swap(size_t a, size_t b) {
    S_.swap_cols(a, b);
    V_.swap_cols(a, b);
    detV_ = -detV_;
  }

  Matrix<T> S_, U_, V_;
  T detU_{1}, detV_{1};
  size_t rank_ = 0;
};

}  // namespace detail

template <typename T>
SmithResult<T> smith_normal_form(const Matrix<T>& m) {
  return detail::SmithWorker<T>(m).run();
}

inline SmithResult<LaurentPoly> snf(const LaurentMatrix& m) { return smith_normal_form(m); }

/// Solves A * X = B over the ring; returns nullopt when no solution exists.
template <typename T>
std::optional<Matrix<T>> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
  auto sm = smith_normal_form(a);
  Matrix<T> c = sm.U * b;
  Matrix<T> z(a.cols(), b.cols());
  for (size_t i = 0; i < sm.rank; ++i) {
    const T& d = sm.S.at(i, i);
    for (size_t j = 0; j < b.cols(); ++j) {
      auto [q, r] = c.at(i, j).divmod(d);
      if (!r.is_zero()) return std::nullopt;
      z.at(i, j) = q;
    }
  }
  for (size_t i = sm.rank; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      if (!c.at(i, j).is_zero()) return std::nullopt;
  return sm.V * z;
}

/// Basis of {x : A x = 0}; columns are a free basis of the kernel.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& a) {
  auto sm = smith_normal_form(a);
  return sm.V.columns(sm.rank, a.cols() - sm.rank);
}

}  // namespace qmirror
