#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/homext.hpp"

namespace qrep {

inline long theta_eval(const Stability& th, const DimVec& d) {
  if (th.size() != d.size()) throw std::invalid_argument("stability function has wrong length");
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += th[i] * d[i];
  return s;
}

inline mpq_class slope(const Stability& th, const DimVec& d) {
  long total = 0;
  for (long x : d) total += x;
  if (total == 0) throw std::invalid_argument("slope of the zero dimension vector");
  mpq_class s(theta_eval(th, d), total);
  s.canonicalize();
  return s;
}

// theta_alpha(d) = <alpha, d>,  eta_beta(d) = -<d, beta>
inline Stability theta_from_alpha(const Quiver& q, const DimVec& alpha) {
  auto e = euler_data(q);
  int n = q.vertex_count();
  Stability th(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) th[j] += alpha[i] * e.euler_matrix[i][j];
  return th;
}

inline Stability eta_from_beta(const Quiver& q, const DimVec& beta) {
  auto e = euler_data(q);
  int n = q.vertex_count();
  Stability th(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) th[i] -= e.euler_matrix[i][j] * beta[j];
  return th;
}

struct ThetaVector {
  DimVec vec;
  bool is_dimension_vector = false;  // all entries >= 0
};

namespace detail {

// solve the n x n integer system over the rationals; throws when singular or
// when the solution is not integral
inline DimVec solve_integral(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> rhs) {
  int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("Euler matrix is singular; stability function has no preimage");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class t = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= t * m[c][j];
      rhs[r] -= t * rhs[c];
    }
  }
  DimVec out(n);
  for (int i = 0; i < n; ++i) {
    mpq_class x = rhs[i] / m[i][i];
    if (x.get_den() != 1) throw std::domain_error("stability function has no integral preimage");
    out[i] = static_cast<long>(x.get_num().get_si());
  }
  return out;
}

}  // namespace detail

// alpha with theta = <alpha, .>, i.e. A^T alpha = theta
inline ThetaVector alpha_of(const Quiver& q, const Stability& th) {
  auto e = euler_data(q);
  int n = q.vertex_count();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = e.euler_matrix[j][i];
    rhs[i] = th[i];
  }
  ThetaVector out;
  out.vec = detail::solve_integral(std::move(m), std::move(rhs));
  out.is_dimension_vector = true;
  for (long x : out.vec)
    if (x < 0) out.is_dimension_vector = false;
  return out;
}

// beta with theta = -<., beta>, i.e. A beta = -theta
inline ThetaVector beta_of(const Quiver& q, const Stability& th) {
  auto e = euler_data(q);
  int n = q.vertex_count();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = e.euler_matrix[i][j];
    rhs[i] = -th[i];
  }
  ThetaVector out;
  out.vec = detail::solve_integral(std::move(m), std::move(rhs));
  out.is_dimension_vector = true;
  for (long x : out.vec)
    if (x < 0) out.is_dimension_vector = false;
  return out;
}

// --- verdicts ---------------------------------------------------------------

enum class StabStatus { semistable, stable, unstable, unknown };

inline const char* to_string(StabStatus s) {
  switch (s) {
    case StabStatus::semistable: return "semistable";
    case StabStatus::stable: return "stable";
    case StabStatus::unstable: return "unstable";
    default: return "unknown";
  }
}

template <class F>
struct StabVerdict {
  StabStatus status = StabStatus::unknown;
  std::optional<Subrep<F>> destabilizer;    // theta > 0
  std::optional<Subrep<F>> strict_witness;  // theta = 0, proper and nonzero
  std::optional<Rep<F>> hom_vanisher;       // V with Hom(M, V) = 0
  std::string method;
};

// Exhaustive semistability test over a finite field: enumerate every
// subrepresentation and evaluate theta.  Stable means exactly two
// subrepresentations (0 and M) have theta = 0.
template <class F>
StabVerdict<F> check_semistable_oracle(const Rep<F>& m, const Stability& th,
                                       unsigned long cap = 1'000'000) {
  static_assert(F::kFinite, "the stability oracle enumerates over a finite field");
  if (theta_eval(th, m.dims) != 0) throw std::invalid_argument("θ(d) must vanish");
  auto subs = enumerate_subreps(m, {}, cap);
  StabVerdict<F> v;
  v.method = "oracle";
  long zero_count = 0;
  std::optional<std::pair<mpq_class, long>> best_key;
  long mtot = total_dim(m);
  for (const auto& w : subs) {
    DimVec d = subrep_dims(w);
    long t = theta_eval(th, d);
    long tot = 0;
    for (long x : d) tot += x;
    if (t > 0) {
      mpq_class sl(t, tot);
      sl.canonicalize();
      std::pair<mpq_class, long> key{sl, tot};
      if (!best_key || key.first > best_key->first ||
          (key.first == best_key->first && key.second > best_key->second)) {
        best_key = key;
        v.destabilizer = w;
      }
    } else if (t == 0) {
      ++zero_count;
      if (tot != 0 && tot != mtot && !v.strict_witness) v.strict_witness = w;
    }
  }
  if (v.destabilizer) {
    v.status = StabStatus::unstable;
  } else if (zero_count == 2) {
    v.status = StabStatus::stable;
  } else {
    v.status = StabStatus::semistable;
  }
  return v;
}

// One-sided randomized certificate: theta = eta_beta with beta >= 0; M is
// semistable iff Hom(M, V) = 0 for some V of dimension m*beta, and a nonzero
// determinantal semi-invariant proves exactly that.  Never claims unstable.
template <class F>
StabVerdict<F> certify_semistable(const Rep<F>& m, const Stability& th,
                                  const std::string& strategy = "crude", int samples = 100,
                                  std::uint64_t seed = 0, unsigned long min_field_size = 101) {
  const F& f = m.field;
  if (theta_eval(th, m.dims) != 0) throw std::invalid_argument("θ(d) must vanish");
  auto beta = beta_of(m.quiver, th);
  if (!beta.is_dimension_vector)
    throw std::invalid_argument("β is not a dimension vector; no hom-vanishing certificate exists");
  if (f.finite() && f.size() < min_field_size)
    throw std::invalid_argument("field too small for reliable sampling; use the oracle");
  long mm;
  if (strategy == "crude") {
    mm = effective_m(m.quiver, m.dims);
  } else if (strategy == "sharp") {
    mm = sharpened_m(m.quiver, m.dims, beta.vec, DimVec(m.dims.size(), 0));
  } else {
    throw std::invalid_argument("unknown strategy: " + strategy);
  }
  DimVec vd;
  for (long b : beta.vec) vd.push_back(mm * b);
  StabVerdict<F> v;
  v.method = "semi-invariant";
  Rng base(seed);
  for (int s = 0; s < samples; ++s) {
    auto vr = random_rep(m.quiver, vd, f, base.child(static_cast<std::uint64_t>(s)).next());
    if (!f.is_zero(semi_invariant(m, vr))) {
      v.status = StabStatus::semistable;
      v.hom_vanisher = vr;
      return v;
    }
  }
  v.status = StabStatus::unknown;
  return v;
}

// Exhaustive version of the hom-vanishing criterion: search every V with
// dimension vector m*beta for m = 1..m_max over the same finite field.
template <class F>
std::optional<Rep<F>> find_hom_vanishing_v(const Rep<F>& m, const Stability& th, long m_max = 2) {
  static_assert(F::kFinite, "exhaustive search needs a finite field");
  const F& f = m.field;
  if (theta_eval(th, m.dims) != 0) throw std::invalid_argument("θ(d) must vanish");
  auto beta = beta_of(m.quiver, th);
  if (!beta.is_dimension_vector)
    throw std::invalid_argument("β is not a dimension vector; no hom-vanishing certificate exists");
  const Quiver& q = m.quiver;
  auto elems = f.enumerate();
  for (long mm = 1; mm <= m_max; ++mm) {
    DimVec vd;
    for (long b : beta.vec) vd.push_back(mm * b);
    long entries = 0;
    for (const auto& ar : q.arrows()) entries += vd[ar.source] * vd[ar.target];
    std::vector<std::size_t> odo(entries, 0);
    for (;;) {
      std::vector<Matrix<F>> maps;
      long pos = 0;
      for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& ar = q.arrows()[a];
        Matrix<F> mx(f, static_cast<int>(vd[ar.target]), static_cast<int>(vd[ar.source]));
        for (int r = 0; r < mx.rows; ++r)
          for (int c = 0; c < mx.cols; ++c) mx.at(r, c) = elems[odo[pos++]];
        maps.push_back(std::move(mx));
      }
      auto vr = make_rep(q, f, vd, std::move(maps));
      if (hom_dim(m, vr) == 0) return vr;
      std::size_t i = 0;
      while (i < odo.size() && ++odo[i] == elems.size()) odo[i++] = 0;
      if (i == odo.size() || entries == 0) break;
    }
  }
  return std::nullopt;
}

// --- Harder-Narasimhan ------------------------------------------------------

template <class F>
struct HNResult {
  std::vector<Subrep<F>> chain;  // 0 = M^0 < M^1 < ... < M^r = M
  std::vector<mpq_class> slopes;
};

namespace detail {

// subspaces as produced by subspaces_of_dim are column-echelon canonical, so
// matrix equality decides subspace equality
template <class F>
bool same_subrep(const F& f, const Subrep<F>& x, const Subrep<F>& y) {
  for (std::size_t i = 0; i < x.inc.size(); ++i)
    if (!mat_eq(f, x.inc[i], y.inc[i])) return false;
  return true;
}

// pull a subrepresentation of M/W back to a subrepresentation of M
template <class F>
Subrep<F> pullback_subrep(const Rep<F>& m, const Subrep<F>& w, const Morphism<F>& proj,
                          const Subrep<F>& wq) {
  const F& f = m.field;
  Subrep<F> out;
  for (int i = 0; i < m.quiver.vertex_count(); ++i) {
    auto x = solve(f, proj.comp[i], wq.inc[i]);
    if (!x) throw std::logic_error("projection not surjective");
    auto cs = column_space(f, mat_hcat(f, w.inc[i], *x));
    out.inc.push_back(cs.basis);
  }
  return out;
}

}  // namespace detail

template <class F>
HNResult<F> hn_filtration(const Rep<F>& m, const Stability& th, unsigned long cap = 1'000'000) {
  static_assert(F::kFinite, "HN filtrations use the exhaustive oracle");
  const F& f = m.field;
  HNResult<F> out;
  out.chain.push_back(zero_subrep(m));
  if (total_dim(m) == 0) return out;
  auto subs = enumerate_subreps(m, {}, cap);
  // maximal destabilizer: maximize slope, then total dimension; this
  // subrepresentation is unique, so a residual tie is an internal error
  std::optional<std::pair<mpq_class, long>> best;
  std::vector<Subrep<F>> winners;
  for (const auto& w : subs) {
    DimVec d = subrep_dims(w);
    long tot = 0;
    for (long x : d) tot += x;
    if (tot == 0) continue;
    std::pair<mpq_class, long> key{slope(th, d), tot};
    if (!best || key.first > best->first || (key.first == best->first && key.second > best->second)) {
      best = key;
      winners.assign(1, w);
    } else if (key.first == best->first && key.second == best->second) {
      winners.push_back(w);
    }
  }
  for (std::size_t i = 1; i < winners.size(); ++i)
    if (!detail::same_subrep(f, winners[0], winners[i]))
      throw std::logic_error("maximal destabilizer is not unique; this is a bug");
  Subrep<F> w = winners[0];
  out.chain.push_back(w);
  out.slopes.push_back(best->first);
  if (subrep_dims(w) == m.dims) return out;  // M itself is semistable
  auto [quot, proj] = quotient_rep(m, w);
  auto rest = hn_filtration(quot, th, cap);
  for (std::size_t k = 1; k < rest.chain.size(); ++k)
    out.chain.push_back(detail::pullback_subrep(m, w, proj, rest.chain[k]));
  for (const auto& s : rest.slopes) out.slopes.push_back(s);
  return out;
}

// --- filtrations and weights ------------------------------------------------

// Descending chain F_n: equal to M for n <= top, then the listed proper
// steps, then 0 for n > top + steps.size().
template <class F>
struct Filtration {
  Rep<F> rep;
  long top = 0;
  std::vector<Subrep<F>> steps;
};

template <class F>
void validate_filtration(const Filtration<F>& filt) {
  const F& f = filt.rep.field;
  for (const auto& w : filt.steps)
    if (!subrep_is_valid(filt.rep, w)) throw std::invalid_argument("filtration step is not a subrepresentation");
  for (std::size_t k = 0; k + 1 < filt.steps.size(); ++k)
    for (std::size_t i = 0; i < filt.steps[k].inc.size(); ++i)
      if (!solve(f, filt.steps[k].inc[i], filt.steps[k + 1].inc[i]))
        throw std::invalid_argument("filtration steps are not nested");
}

template <class F>
Filtration<F> two_step(const Rep<F>& m, const Subrep<F>& w) {
  Filtration<F> filt{m, 0, {w}};
  validate_filtration(filt);
  return filt;
}

// gr_n = F_n / F_{n+1} for n = top .. top+len, as representations
template <class F>
std::vector<Rep<F>> graded_pieces(const Filtration<F>& filt) {
  const F& f = filt.rep.field;
  validate_filtration(filt);
  std::vector<Rep<F>> out;
  // walk the chain M = F_top >= F_{top+1} >= ... >= 0
  std::vector<Subrep<F>> chain;
  chain.push_back(full_subrep(filt.rep));
  for (const auto& w : filt.steps) chain.push_back(w);
  chain.push_back(zero_subrep(filt.rep));
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    auto upper = subrep_to_rep(filt.rep, chain[k]);
    // express chain[k+1] inside chain[k]
    Subrep<F> inner;
    for (std::size_t i = 0; i < chain[k].inc.size(); ++i) {
      auto x = solve(f, chain[k].inc[i], chain[k + 1].inc[i]);
      if (!x) throw std::invalid_argument("filtration steps are not nested");
      inner.inc.push_back(*x);
    }
    out.push_back(quotient_rep(upper, inner).first);
  }
  return out;
}

template <class F>
Rep<F> gr(const Filtration<F>& filt) {
  auto pieces = graded_pieces(filt);
  Rep<F> out = zero_rep(filt.rep.quiver, filt.rep.field);
  for (const auto& p : pieces) out = direct_sum(out, p);
  return out;
}

// wt = -sum_n n*theta(gr_n) = -(top*theta(M) + sum_{n > top} theta(F_n));
// the two expressions are computed independently and must agree.
template <class F>
long filtration_weight(const Filtration<F>& filt, const Stability& th) {
  auto pieces = graded_pieces(filt);
  long wt1 = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k)
    wt1 -= (filt.top + static_cast<long>(k)) * theta_eval(th, pieces[k].dims);
  long wt2 = -filt.top * theta_eval(th, filt.rep.dims);
  for (const auto& w : filt.steps) wt2 -= theta_eval(th, subrep_dims(w));
  if (wt1 != wt2) throw std::logic_error("weight formulas disagree; this is a bug");
  return wt1;
}

// --- Jordan-Hoelder ---------------------------------------------------------

// 0 = C_0 < C_1 < ... < C_r = M with stable theta = 0 quotients, built by
// repeatedly splitting off a minimal-dimension stable subrepresentation.
template <class F>
Filtration<F> jh_filtration(const Rep<F>& m, const Stability& th, unsigned long cap = 1'000'000) {
  static_assert(F::kFinite, "JH filtrations use the exhaustive oracle");
  auto verdict = check_semistable_oracle(m, th, cap);
  if (verdict.status == StabStatus::unstable)
    throw std::invalid_argument("Jordan-Hoelder filtration of an unstable representation");
  struct Builder {
    const Stability& th;
    unsigned long cap;
    // returns ascending proper chain inside mm
    std::vector<Subrep<F>> run(const Rep<F>& mm) {
      const F& f = mm.field;
      if (total_dim(mm) == 0) return {};
      auto subs = enumerate_subreps(mm, {}, cap);
      std::optional<long> best_tot;
      std::optional<Subrep<F>> pick;
      for (const auto& w : subs) {
        DimVec d = subrep_dims(w);
        long tot = 0;
        for (long x : d) tot += x;
        if (tot == 0 || theta_eval(th, d) != 0) continue;
        if (best_tot && tot >= *best_tot) continue;
        // stable piece?
        auto sub = subrep_to_rep(mm, w);
        auto sv = check_semistable_oracle(sub, th, cap);
        if (sv.status != StabStatus::stable) continue;
        best_tot = tot;
        pick = w;
      }
      if (!pick) throw std::logic_error("no stable theta=0 subrepresentation found; this is a bug");
      std::vector<Subrep<F>> chain;
      if (subrep_dims(*pick) != mm.dims) chain.push_back(*pick);
      auto [quot, proj] = quotient_rep(mm, *pick);
      for (const auto& wq : run(quot))
        chain.push_back(detail::pullback_subrep(mm, *pick, proj, wq));
      return chain;
    }
  } builder{th, cap};
  std::vector<Subrep<F>> ascending = builder.run(m);
  // descending filtration F_0 = M, F_k = C_{r-k}, F_r = 0
  Filtration<F> filt{m, 0, {}};
  for (std::size_t k = ascending.size(); k-- > 0;) filt.steps.push_back(ascending[k]);
  validate_filtration(filt);
  return filt;
}

template <class F>
std::optional<bool> is_polystable(const Rep<F>& m, const Stability& th,
                                  unsigned long cap = 1'000'000) {
  auto g = gr(jh_filtration(m, th, cap));
  auto iso = is_isomorphic(m, g);
  if (iso.status == IsoStatus::unknown) return std::nullopt;
  return iso.status == IsoStatus::yes;
}

// --- separating semi-invariants ---------------------------------------------

// Search for N with Hom(M0, N) != 0 but Hom(M^l, N) = 0 for every other M^l.
template <class F>
std::optional<Rep<F>> separating_semi_invariant(const Rep<F>& m0, const std::vector<Rep<F>>& others,
                                                const Stability& th, int samples = 100,
                                                std::uint64_t seed = 0,
                                                unsigned long cap = 1'000'000) {
  const F& f = m0.field;
  const Quiver& q = m0.quiver;
  auto beta = beta_of(q, th);
  if (!beta.is_dimension_vector) throw std::invalid_argument("β is not a dimension vector");
  if constexpr (F::kFinite) {
    if (check_semistable_oracle(m0, th, cap).status != StabStatus::stable)
      throw std::invalid_argument("separation requires stable inputs");
    for (const auto& ml : others)
      if (check_semistable_oracle(ml, th, cap).status != StabStatus::stable)
        throw std::invalid_argument("separation requires stable inputs");
  }
  DimVec dmax = m0.dims;
  for (const auto& ml : others)
    for (std::size_t i = 0; i < dmax.size(); ++i) dmax[i] = std::max(dmax[i], ml.dims[i]);
  long m_max = effective_m(q, dmax) + 2;
  Rng base(seed);
  for (int s = 0; s < samples; ++s) {
    long mm = (s % m_max) + 1;
    DimVec nd;
    for (long b : beta.vec) nd.push_back(mm * b);
    auto n = random_rep(q, nd, f, base.child(static_cast<std::uint64_t>(s)).next());
    if (hom_dim(m0, n) == 0) continue;
    bool ok = true;
    for (const auto& ml : others)
      if (hom_dim(ml, n) != 0) {
        ok = false;
        break;
      }
    if (ok) return n;
  }
  return std::nullopt;
}

}  // namespace qrep
