#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

using DimVec = std::vector<long>;     // per-vertex dimensions (or any integer vector)
using Stability = std::vector<long>;  // theta_i = theta(S(i))

struct Arrow {
  int source = 0;  // 0-based vertex ids
  int target = 0;
};

// Finite directed multigraph.  Vertex and arrow order are fixed at
// construction and define all matrix bases and determinant signs downstream.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::vector<std::string> labels = {})
      : n_(vertex_count), arrows_(std::move(arrows)), labels_(std::move(labels)) {
    if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& a = arrows_[i];
      if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
        throw std::invalid_argument("arrow " + std::to_string(i) + " has an endpoint outside [1, " +
                                    std::to_string(n_) + "]");
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("label count does not match vertex count");
  }

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  Quiver opposite() const {
    std::vector<Arrow> rev(arrows_);
    for (auto& a : rev) std::swap(a.source, a.target);
    return Quiver(n_, std::move(rev), labels_);
  }

  bool operator==(const Quiver& o) const {
    if (n_ != o.n_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].source != o.arrows_[i].source || arrows_[i].target != o.arrows_[i].target)
        return false;
    return true;
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<std::string> labels_;
};

inline void check_dimvec(const Quiver& q, const DimVec& d, const char* what = "dimension vector") {
  if (static_cast<int>(d.size()) != q.vertex_count())
    throw std::invalid_argument(std::string(what) + " length does not match vertex count");
}

inline bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm
  int n = q.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& a : q.arrows()) ++indeg[a.target];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : q.arrows())
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == n;
}

// Stable topological sort: repeatedly take the smallest vertex with no
// remaining incoming arrows.  Throws with a witness cycle when cyclic.
inline std::vector<int> admissible_ordering(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& a : q.arrows()) ++indeg[a.target];
  std::vector<bool> used(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) {
      // walk forward among the remaining vertices until a vertex repeats
      std::vector<int> seen_at(n, -1);
      std::vector<int> path;
      int v = 0;
      while (used[v]) ++v;
      while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(path.size());
        path.push_back(v);
        for (const auto& a : q.arrows())
          if (a.source == v && !used[a.target]) {
            v = a.target;
            break;
          }
      }
      std::string cyc;
      for (std::size_t i = seen_at[v]; i < path.size(); ++i)
        cyc += std::to_string(path[i] + 1) + "->";
      cyc += std::to_string(v + 1);
      throw std::domain_error("quiver has an oriented cycle: " + cyc);
    }
    used[pick] = true;
    order.push_back(pick);
    for (const auto& a : q.arrows())
      if (a.source == pick) --indeg[a.target];
  }
  return order;
}

// Euler matrix A[i][j] = delta_ij - #{arrows i->j} and its symmetrization.
struct EulerData {
  std::vector<std::vector<long>> euler_matrix;       // A
  std::vector<std::vector<mpq_class>> symmetrized;  // B = (A + A^T)/2
};

inline EulerData euler_data(const Quiver& q) {
  int n = q.vertex_count();
  EulerData e;
  e.euler_matrix.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) e.euler_matrix[i][i] = 1;
  for (const auto& a : q.arrows()) --e.euler_matrix[a.source][a.target];
  e.symmetrized.assign(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      e.symmetrized[i][j] = mpq_class(e.euler_matrix[i][j] + e.euler_matrix[j][i], 2);
      e.symmetrized[i][j].canonicalize();
    }
  return e;
}

inline long euler_pairing(const Quiver& q, const DimVec& a, const DimVec& b) {
  check_dimvec(q, a);
  check_dimvec(q, b);
  long s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += a[i] * b[i];
  for (const auto& ar : q.arrows()) s -= a[ar.source] * b[ar.target];
  return s;
}

inline long tits_form(const Quiver& q, const DimVec& x) { return euler_pairing(q, x, x); }

inline mpq_class tits_form(const Quiver& q, const std::vector<mpq_class>& x) {
  if (static_cast<int>(x.size()) != q.vertex_count())
    throw std::invalid_argument("vector length does not match vertex count");
  mpq_class s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += x[i] * x[i];
  for (const auto& ar : q.arrows()) s -= x[ar.source] * x[ar.target];
  return s;
}

// --- certified bound on lambda = -(minimal eigenvalue of the Tits form) ---

struct LambdaBound {
  mpq_class lower;
  mpq_class upper;
};

namespace detail {

// characteristic polynomial of an integer matrix by Faddeev-LeVerrier,
// monic, coefficients c[0] + c[1] x + ... + x^n
inline std::vector<mpq_class> char_poly(const std::vector<std::vector<long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<mpq_class>> mk(n, std::vector<mpq_class>(n, 0));  // M_0 = 0
  std::vector<mpq_class> c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    // c_{n-k} = -tr(A * M_k)/k
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += m[i][l] * next[l][i];
    c[n - k] = -tr / k;
    mk = std::move(next);
  }
  return c;
}

inline std::vector<mpz_class> clear_denominators(const std::vector<mpq_class>& c) {
  mpz_class lcm = 1;
  for (const auto& x : c) {
    mpz_class den = x.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(mpz_class(x.get_num() * (lcm / x.get_den())));
  return out;
}

inline int sgn_at(const std::vector<mpz_class>& p, const mpq_class& x) {
  mpq_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + mpq_class(*it);
  return sgn(v);
}

// Sturm chain of a squarefree-or-not integer polynomial (as mpq polys).
inline std::vector<std::vector<mpz_class>> sturm_chain(std::vector<mpz_class> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<std::vector<mpz_class>> chain;
  if (p.empty()) return chain;
  chain.push_back(p);
  if (p.size() > 1) {
    std::vector<mpz_class> dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<long>(i);
    chain.push_back(dp);
    while (chain.back().size() > 1) {
      // pseudo-remainder of the previous two, sign-normalized
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain.back();
      std::vector<mpq_class> r(a.begin(), a.end());
      std::vector<mpq_class> bq(b.begin(), b.end());
      while (r.size() >= bq.size() && !r.empty()) {
        mpq_class coef = r.back() / bq.back();
        std::size_t shift = r.size() - bq.size();
        for (std::size_t i = 0; i < bq.size(); ++i) r[shift + i] -= coef * bq[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (r.empty()) break;
      for (auto& x : r) x = -x;
      chain.push_back(clear_denominators(r));
    }
  }
  return chain;
}

inline int sign_changes(const std::vector<std::vector<mpz_class>>& chain, const mpq_class& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn_at(p, x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

}  // namespace detail

// Certified rational interval around lambda by Sturm bisection on the
// characteristic polynomial of 2B (integer matrix; eigenvalues are 2x).
inline LambdaBound lambda_bound(const Quiver& q, const mpq_class& width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  int n = q.vertex_count();
  auto e = euler_data(q);
  std::vector<std::vector<long>> c2b(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class v = 2 * e.symmetrized[i][j];
      c2b[i][j] = static_cast<long>(v.get_num().get_si());
    }
  auto cp = detail::clear_denominators(detail::char_poly(c2b));
  auto chain = detail::sturm_chain(cp);
  // Cauchy root bound for the monic-normalized polynomial
  mpq_class bound = 1;
  for (std::size_t i = 0; i + 1 < cp.size(); ++i) {
    mpq_class r = abs(mpq_class(cp[i]) / mpq_class(cp.back()));
    if (r > bound) bound = r;
  }
  bound += 1;
  // invariant: no root in (-inf, lo], at least one in (lo, hi]
  mpq_class lo = -bound, hi = bound;
  int total = detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
  if (total < n) throw std::logic_error("Sturm chain lost roots of a symmetric matrix");
  mpq_class target = 2 * width;  // interval for 2*lambda
  int vlo = detail::sign_changes(chain, lo);
  while (hi - lo > target) {
    mpq_class mid = (lo + hi) / 2;
    int vm = detail::sign_changes(chain, mid);
    if (vlo - vm >= 1)
      hi = mid;  // smallest root is at most mid
    else
      lo = mid;
  }
  // smallest eigenvalue of 2B lies in (lo, hi]; lambda = -min/2
  return {-hi / 2, -lo / 2};
}

inline long norm_squared(const DimVec& d) {
  long s = 0;
  for (long x : d) s += x * x;
  return s;
}

// Smallest positive integer m with m > upper(lambda) * |d|^2, refining the
// lambda interval until the choice is pinned to within one.
inline long effective_m(const Quiver& q, const DimVec& d) {
  check_dimvec(q, d);
  long n2 = norm_squared(d);
  if (n2 == 0) throw std::invalid_argument("dimension vector must be nonzero");
  mpq_class width(1, 4 * n2);
  auto lb = lambda_bound(q, width);
  if (lb.upper <= 0) return 1;
  mpq_class bound = lb.upper * n2;
  // smallest integer strictly greater than bound
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
  long m = static_cast<long>(fl.get_si()) + 1;
  return std::max(1l, m);
}

// Enumerates all 0 < gamma < d with <gamma,beta> < 0 and returns the smallest
// positive integer above max (<gamma,gamma> - <gamma,epsilon>)/<gamma,beta>.
inline long sharpened_m(const Quiver& q, const DimVec& d, const DimVec& beta, const DimVec& epsilon,
                        long cap = 10'000'000) {
  check_dimvec(q, d);
  check_dimvec(q, beta);
  check_dimvec(q, epsilon);
  long count = 1;
  for (long x : d) {
    if (x < 0) throw std::invalid_argument("d must be nonnegative");
    if (count > cap / (x + 1)) throw std::domain_error("gamma enumeration exceeds cap");
    count *= x + 1;
  }
  bool any = false;
  mpq_class best;
  DimVec gamma(d.size(), 0);
  for (;;) {
    // advance odometer
    std::size_t i = 0;
    while (i < gamma.size() && ++gamma[i] > d[i]) gamma[i++] = 0;
    if (i == gamma.size()) break;
    bool proper = false;
    for (std::size_t j = 0; j < gamma.size(); ++j)
      if (gamma[j] < d[j]) proper = true;
    if (!proper) continue;  // gamma == d
    long gb = euler_pairing(q, gamma, beta);
    if (gb >= 0) continue;
    mpq_class ratio(euler_pairing(q, gamma, gamma) - euler_pairing(q, gamma, epsilon), gb);
    ratio.canonicalize();
    if (!any || ratio > best) {
      best = ratio;
      any = true;
    }
  }
  if (!any) return 1;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), best.get_num().get_mpz_t(), best.get_den().get_mpz_t());
  long m = static_cast<long>(fl.get_si()) + 1;
  return std::max(1l, m);
}

// Lemma-style codimension lower bounds from the pair (d_sub, d_quot).
struct CodimBounds {
  long b1;  // -<d', d''>
  long b2;  // 1 - <d', d>
  long b3;  // 1 - <d, d''>
};

inline CodimBounds codim_bounds(const Quiver& q, const DimVec& d_sub, const DimVec& d_quot) {
  check_dimvec(q, d_sub);
  check_dimvec(q, d_quot);
  DimVec d(d_sub.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = d_sub[i] + d_quot[i];
  return {-euler_pairing(q, d_sub, d_quot), 1 - euler_pairing(q, d_sub, d),
          1 - euler_pairing(q, d, d_quot)};
}

}  // namespace qrep
