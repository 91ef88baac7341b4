#pragma once

#include "finstone/checked_int.hpp"
#include "finstone/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace finstone {

enum class SnfTransforms {
  none,   // diagonal only
  right,  // rightV and its inverse
  both,   // leftU as well
};

/// leftU * m * rightV == diagonal(diag), |det leftU| = |det rightV| = 1,
/// diag[i] >= 0 and diag[i] | diag[i + 1].
struct SnfResult {
  std::vector<BigInt> diag;  // length min(rows, cols)
  IntMatrix leftU;           // empty unless SnfTransforms::both
  IntMatrix rightV;          // empty when SnfTransforms::none
  IntMatrix rightVinv;       // empty when SnfTransforms::none

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diag)
      if (d != 0) ++r;
    return r;
  }
  bool torsion_free() const {
    for (const auto& d : diag)
      if (d > 1) return false;
    return true;
  }
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> t;
    for (const auto& d : diag)
      if (d > 1) t.push_back(d);
    return t;
  }
};

namespace detail {

using std::abs;
using boost::multiprecision::abs;

template <class T>
struct SnfWork {
  Matrix<T> a;
  std::optional<Matrix<T>> u, v, vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) {
      v->swap_cols(i, j);
      vinv->swap_rows(i, j);
    }
  }
  void add_row(std::size_t dst, std::size_t src, const T& k) {
    a.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const T& k) {
    a.add_col_multiple(dst, src, k);
    if (v) {
      v->add_col_multiple(dst, src, k);
      vinv->add_row_multiple(src, dst, -k);
    }
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (u) u->negate_row(i);
  }

  // Moves the smallest nonzero |entry| of the trailing block at t into (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    T best{};
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const T& x = a(i, j);
        if (x == 0) continue;
        T ax = abs(x);
        if (!found || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row t and column t outside the pivot. Returns false if a smaller
  // remainder appeared and the pivot must be re-chosen.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      const T q = a(i, t) / a(t, t);
      add_row(i, t, -q);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      const T q = a(t, j) / a(t, t);
      add_col(j, t, -q);
      if (a(t, j) != 0) clean = false;
    }
    return clean;
  }

  void run() {
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (!clear_cross(t)) {
          place_pivot(t);
          continue;
        }
        // The pivot must divide every remaining entry.
        const T p = a(t, t);
        std::size_t bad = a.rows();
        if (!(abs(p) == 1)) {
          for (std::size_t i = t + 1; i < a.rows() && bad == a.rows(); ++i)
            for (std::size_t j = t + 1; j < a.cols(); ++j)
              if (a(i, j) % p != 0) {
                bad = i;
                break;
              }
        }
        if (bad == a.rows()) break;
        add_row(t, bad, T(1));
      }
      if (a(t, t) < T(0)) negate_row(t);
    }
  }
};

template <class T>
Matrix<T> convert_matrix(const IntMatrix& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, BigInt>) {
        out(i, j) = m(i, j);
      } else {
        if (m(i, j) > std::numeric_limits<std::int64_t>::max() / 4 ||
            m(i, j) < std::numeric_limits<std::int64_t>::min() / 4)
          throw Overflow();
        out(i, j) = T(static_cast<std::int64_t>(m(i, j)));
      }
    }
  return out;
}

template <class T>
IntMatrix to_big(const Matrix<T>& m) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return m;
  } else {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value();
    return out;
  }
}

template <class T>
SnfResult snf_with(const IntMatrix& m, SnfTransforms mode) {
  SnfWork<T> w;
  w.a = convert_matrix<T>(m);
  if (mode == SnfTransforms::both) w.u = Matrix<T>::identity(m.rows());
  if (mode != SnfTransforms::none) {
    w.v = Matrix<T>::identity(m.cols());
    w.vinv = Matrix<T>::identity(m.cols());
  }
  w.run();
  SnfResult r;
  const std::size_t n = std::min(m.rows(), m.cols());
  r.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, BigInt>)
      r.diag.push_back(w.a(i, i));
    else
      r.diag.push_back(BigInt(w.a(i, i).value()));
  }
  if (w.u) r.leftU = to_big(*w.u);
  if (w.v) {
    r.rightV = to_big(*w.v);
    r.rightVinv = to_big(*w.vinv);
  }
  return r;
}

}  // namespace detail

/// Smith normal form with a minimal-absolute-value pivot rule. Runs on
/// overflow-checked 64-bit integers first and falls back to arbitrary
/// precision on overflow; the result is identical either way because the
/// pivot sequence only depends on exact values.
inline SnfResult smith_normal_form(const IntMatrix& m, SnfTransforms mode = SnfTransforms::both) {
  try {
    return detail::snf_with<detail::CheckedInt>(m, mode);
  } catch (const detail::Overflow&) {
    return detail::snf_with<BigInt>(m, mode);
  }
}

/// Arbitrary-precision-only path; exposed for cross-checking the fast path.
inline SnfResult smith_normal_form_exact(const IntMatrix& m, SnfTransforms mode = SnfTransforms::both) {
  return detail::snf_with<BigInt>(m, mode);
}

/// Builds the diagonal matrix described by an SNF result for an r x c input.
inline IntMatrix snf_diagonal_matrix(const SnfResult& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
  return d;
}

}  // namespace finstone
