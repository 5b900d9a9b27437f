#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qmb::linalg {

/// Dense row-major matrix over a templated real scalar (double or qmb::dd).
/// Kept deliberately small: every matrix in this project is desk scale.
template <class Real>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Real> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Real(0)) {}

  Real& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Real& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Real(1);
    return m;
  }

  Mat transposed() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  Mat& operator*=(Real s) {
    for (auto& x : a) x *= s;
    return *this;
  }
};

template <class Real>
Mat<Real> matmul(const Mat<Real>& x, const Mat<Real>& y) {
  Mat<Real> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Real xv = x(i, k);
      if (xv == Real(0)) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xv * y(k, j);
    }
  return z;
}

template <class Real>
Real frob_inner(const Mat<Real>& x, const Mat<Real>& y) {
  Real s(0);
  for (size_t k = 0; k < x.a.size(); ++k) s += x.a[k] * y.a[k];
  return s;
}

template <class Real>
void symmetrize(Mat<Real>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j) {
      Real v = (m(i, j) + m(j, i)) * Real(0.5);
      m(i, j) = v;
      m(j, i) = v;
    }
}

/// In-place Cholesky A = L L^T (lower triangle). Returns false if A is not
/// numerically positive definite.
template <class Real>
bool cholesky(Mat<Real>& m) {
  using std::sqrt;
  const int n = m.rows;
  for (int j = 0; j < n; ++j) {
    Real d = m(j, j);
    for (int k = 0; k < j; ++k) d -= m(j, k) * m(j, k);
    if (!(d > Real(0))) return false;
    Real ljj = sqrt(d);
    m(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      Real s = m(i, j);
      for (int k = 0; k < j; ++k) s -= m(i, k) * m(j, k);
      m(i, j) = s / ljj;
    }
    for (int k = j + 1; k < n; ++k) m(j, k) = Real(0);
  }
  return true;
}

// Solve L x = b for lower-triangular L (in-place on b).
template <class Real>
void solve_lower(const Mat<Real>& l, std::vector<Real>& b) {
  const int n = l.rows;
  for (int i = 0; i < n; ++i) {
    Real s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
}

// Solve L^T x = b (in-place on b).
template <class Real>
void solve_lower_t(const Mat<Real>& l, std::vector<Real>& b) {
  const int n = l.rows;
  for (int i = n - 1; i >= 0; --i) {
    Real s = b[i];
    for (int k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
}

// X := L^{-1} X for lower-triangular L.
template <class Real>
void solve_lower_mat(const Mat<Real>& l, Mat<Real>& x) {
  std::vector<Real> col(x.rows);
  for (int j = 0; j < x.cols; ++j) {
    for (int i = 0; i < x.rows; ++i) col[i] = x(i, j);
    solve_lower(l, col);
    for (int i = 0; i < x.rows; ++i) x(i, j) = col[i];
  }
}

// X := L^{-T} X.
template <class Real>
void solve_lower_t_mat(const Mat<Real>& l, Mat<Real>& x) {
  std::vector<Real> col(x.rows);
  for (int j = 0; j < x.cols; ++j) {
    for (int i = 0; i < x.rows; ++i) col[i] = x(i, j);
    solve_lower_t(l, col);
    for (int i = 0; i < x.rows; ++i) x(i, j) = col[i];
  }
}

/// Cyclic Jacobi eigensolver for symmetric matrices. Returns eigenvalues in
/// ascending order; if `vecs` is non-null it receives the eigenvectors as
/// columns. Deterministic: fixed sweep order, fixed iteration cap.
template <class Real>
std::vector<Real> jacobi_eigh(Mat<Real> m, Mat<Real>* vecs = nullptr) {
  using std::abs;
  using std::sqrt;
  const int n = m.rows;
  Mat<Real> v = Mat<Real>::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    Real off(0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    Real scale(0);
    for (int i = 0; i < n; ++i) scale += m(i, i) * m(i, i);
    if (!(off > (scale + off) * Real(1e-64) + Real(0))) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        Real apq = m(p, q);
        if (apq == Real(0)) continue;
        Real tau = (m(q, q) - m(p, p)) / (Real(2) * apq);
        Real t;
        if (tau >= Real(0))
          t = Real(1) / (tau + sqrt(Real(1) + tau * tau));
        else
          t = Real(-1) / (-tau + sqrt(Real(1) + tau * tau));
        Real c = Real(1) / sqrt(Real(1) + t * t);
        Real s = t * c;
        for (int k = 0; k < n; ++k) {
          Real mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          Real mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          Real vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<Real> eig(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    eig[i] = m(i, i);
    order[i] = i;
  }
  for (int i = 0; i < n; ++i)  // insertion sort keeps determinism
    for (int j = i; j > 0 && eig[order[j]] < eig[order[j - 1]]; --j)
      std::swap(order[j], order[j - 1]);
  std::vector<Real> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = eig[order[i]];
  if (vecs) {
    *vecs = Mat<Real>(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) (*vecs)(i, j) = v(i, order[j]);
  }
  return sorted;
}

template <class Real>
Real min_eigenvalue(const Mat<Real>& m) {
  auto e = jacobi_eigh(m);
  return e.empty() ? Real(0) : e.front();
}

/// Smallest eigenvalue of a symmetric tridiagonal matrix via Sturm-sequence
/// bisection (used by the finite-difference ground-state estimator).
inline double tridiag_min_eigenvalue(const std::vector<double>& diag,
                                     const std::vector<double>& off) {
  const int n = static_cast<int>(diag.size());
  auto count_below = [&](double x) {
    // Number of eigenvalues < x, from the sign changes of the Sturm sequence.
    int cnt = 0;
    double d = diag[0] - x;
    if (d < 0) ++cnt;
    for (int i = 1; i < n; ++i) {
      double denom = d;
      if (denom == 0) denom = 1e-300;
      d = (diag[i] - x) - off[i - 1] * off[i - 1] / denom;
      if (d < 0) ++cnt;
    }
    return cnt;
  };
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double r = std::abs(i > 0 ? off[i - 1] : 0.0) + std::abs(i < n - 1 ? off[i] : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qmb::linalg
