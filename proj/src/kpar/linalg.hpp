#pragma once
// Small exact linear algebra helpers: rationals, kernel bases over Z,
// consistency of linear systems over Q, and Smith normal form with a
// tracked row transform. Everything here operates on tiny matrices
// (diagrams have at most a few dozen arcs), so naive pivoting is fine.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kpar {

using ll = long long;

// x mod m mapped into [0, m); m == 0 means "over Z" (identity).
inline ll pmod(ll x, ll m) {
  if (m == 0) return x;
  ll r = x % m;
  return r < 0 ? r + m : r;
}

struct Rat {
  ll n = 0, d = 1;
  Rat() = default;
  Rat(ll num) : n(num), d(1) {}
  Rat(ll num, ll den) : n(num), d(den) { norm(); }
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    ll g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  bool is_zero() const { return n == 0; }
  bool is_integer() const { return d == 1; }
  friend Rat operator+(Rat a, Rat b) { return Rat(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.n * b.n, a.d * b.d); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.n == 0) throw std::domain_error("division by zero rational");
    return Rat(a.n * b.d, a.d * b.n);
  }
  Rat operator-() const { Rat r; r.n = -n; r.d = d; return r; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

using Mat = std::vector<std::vector<ll>>;

// Integer basis of the right kernel of `rows` (each row has n entries).
// Gaussian elimination over Q, free columns parameterized, results scaled
// to integers.
inline Mat kernel_basis(const Mat& rows, int n) {
  std::vector<std::vector<Rat>> A;
  for (const auto& r : rows) {
    std::vector<Rat> rr(n);
    for (int c = 0; c < n; ++c) rr[c] = Rat(r[c]);
    A.push_back(std::move(rr));
  }
  int m = (int)A.size();
  std::vector<int> pivot_row(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (!A[i][c].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    Rat inv = Rat(1) / A[r][c];
    for (int cc = 0; cc < n; ++cc) A[r][cc] = A[r][cc] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Rat f = A[i][c];
      for (int cc = 0; cc < n; ++cc) A[i][cc] = A[i][cc] - f * A[r][cc];
    }
    pivot_row[c] = r;
    ++r;
  }
  Mat basis;
  for (int fc = 0; fc < n; ++fc) {
    if (pivot_row[fc] >= 0) continue;
    std::vector<Rat> v(n);
    v[fc] = Rat(1);
    for (int c = 0; c < n; ++c)
      if (pivot_row[c] >= 0) v[c] = -A[pivot_row[c]][fc];
    ll den = 1;
    for (const auto& x : v) den = std::lcm(den, x.d);
    std::vector<ll> iv(n);
    for (int c = 0; c < n; ++c) iv[c] = v[c].n * (den / v[c].d);
    basis.push_back(std::move(iv));
  }
  return basis;
}

// Does A x = b admit a rational solution?  (A given by rows.)
inline bool solvable_q(const Mat& A_in, const std::vector<ll>& b_in) {
  int m = (int)A_in.size();
  int n = m ? (int)A_in[0].size() : 0;
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
  std::vector<Rat> b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = Rat(A_in[i][j]);
    b[i] = Rat(b_in[i]);
  }
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (!A[i][c].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    std::swap(b[r], b[pr]);
    Rat inv = Rat(1) / A[r][c];
    for (int cc = 0; cc < n; ++cc) A[r][cc] = A[r][cc] * inv;
    b[r] = b[r] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Rat f = A[i][c];
      for (int cc = 0; cc < n; ++cc) A[i][cc] = A[i][cc] - f * A[r][cc];
      b[i] = b[i] - f * b[r];
    }
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!b[i].is_zero()) return false;
  return true;
}

// Unique rational solution of A x = b if the system has full column rank
// and is consistent; nullopt otherwise.
inline std::optional<std::vector<Rat>> solve_unique_q(const Mat& A_in,
                                                      const std::vector<ll>& b_in) {
  int m = (int)A_in.size();
  int n = m ? (int)A_in[0].size() : 0;
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
  std::vector<Rat> b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = Rat(A_in[i][j]);
    b[i] = Rat(b_in[i]);
  }
  std::vector<int> where(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (!A[i][c].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    std::swap(b[r], b[pr]);
    Rat inv = Rat(1) / A[r][c];
    for (int cc = 0; cc < n; ++cc) A[r][cc] = A[r][cc] * inv;
    b[r] = b[r] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Rat f = A[i][c];
      for (int cc = 0; cc < n; ++cc) A[i][cc] = A[i][cc] - f * A[r][cc];
      b[i] = b[i] - f * b[r];
    }
    where[c] = r;
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rat> x(n);
  for (int c = 0; c < n; ++c) {
    if (where[c] < 0) return std::nullopt;  // free variable: not unique
    x[c] = b[where[c]];
  }
  return x;
}

// Smith normal form D = U A V of an integer matrix; only U (row transform)
// and the diagonal are needed by callers, but V is tracked for completeness.
struct Snf {
  std::vector<ll> diag;  // invariant factors d_1 | d_2 | ..., possibly 0
  Mat u;                 // rows x rows unimodular
  Mat v;                 // cols x cols unimodular
};

inline Snf smith_normal_form(Mat a) {
  int m = (int)a.size();
  int n = m ? (int)a[0].size() : 0;
  Mat u(m, std::vector<ll>(m, 0)), v(n, std::vector<ll>(n, 0));
  for (int i = 0; i < m; ++i) u[i][i] = 1;
  for (int j = 0; j < n; ++j) v[j][j] = 1;
  auto row_add = [&](int dst, int src, ll f) {
    for (int j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < m; ++j) u[dst][j] += f * u[src][j];
  };
  auto col_add = [&](int dst, int src, ll f) {
    for (int i = 0; i < m; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < n; ++i) v[i][dst] += f * v[i][src];
  };
  auto row_swap = [&](int i, int j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < m; ++j) u[i][j] = -u[i][j];
  };
  int t = 0;
  while (t < m && t < n) {
    // find a nonzero pivot
    int pi = -1, pj = -1;
    for (int i = t; i < m && pi < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        ll q = a[i][t] / a[t][t];
        row_add(i, t, -q);
        if (a[i][t] != 0) { row_swap(t, i); dirty = true; }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        ll q = a[t][j] / a[t][t];
        col_add(j, t, -q);
        if (a[t][j] != 0) { col_swap(t, j); dirty = true; }
      }
    }
    if (a[t][t] < 0) row_neg(t);
    ++t;
  }
  // enforce the divisibility chain
  for (int i = 0; i + 1 < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (a[j][j] % a[i][i] == 0) continue;
      // fold a[j][j] into position i via the classic 2x2 trick
      col_add(i, j, 1);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        if (a[j][i] != 0) {
          ll q = a[j][i] / a[i][i];
          row_add(j, i, -q);
          if (a[j][i] != 0) { row_swap(i, j); dirty = true; }
        }
        if (a[i][j] != 0) {
          ll q = a[i][j] / a[i][i];
          col_add(j, i, -q);
          if (a[i][j] != 0) { col_swap(i, j); dirty = true; }
        }
      }
      if (a[i][i] < 0) row_neg(i);
      if (a[j][j] < 0) row_neg(j);
    }
  }
  Snf out;
  out.diag.resize(std::min(m, n), 0);
  for (int i = 0; i < (int)out.diag.size(); ++i) out.diag[i] = a[i][i];
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

}  // namespace kpar
