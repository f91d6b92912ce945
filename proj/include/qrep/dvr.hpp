#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/ratfun.hpp"
#include "qrep/stability.hpp"

namespace qrep {

// A family of representations over the valuation ring k[t]_(t) inside k(t):
// matrices over k(t) with every entry of valuation >= 0.  The generic fiber
// lives over k(t), the special fiber over k via reduction at t = 0.
template <class Base>
struct DVRFamily {
  using RF = RationalFunctionField<Base>;
  Quiver quiver;
  RF ring;
  DimVec dims;
  std::vector<Matrix<RF>> maps;
};

template <class Base>
DVRFamily<Base> make_dvr_family(const Quiver& q, const RationalFunctionField<Base>& ring,
                                DimVec dims, std::vector<Matrix<RationalFunctionField<Base>>> maps) {
  // reuse the shape checks, then enforce integrality
  auto rep = make_rep(q, ring, dims, maps);
  for (int a = 0; a < q.arrow_count(); ++a)
    for (int r = 0; r < rep.maps[a].rows; ++r)
      for (int c = 0; c < rep.maps[a].cols; ++c)
        if (!ring.integral(rep.maps[a].at(r, c)))
          throw std::invalid_argument("arrow " + std::to_string(a) + " entry (" + std::to_string(r) +
                                      "," + std::to_string(c) + ") has negative valuation");
  return {q, ring, std::move(rep.dims), std::move(rep.maps)};
}

template <class Base>
Rep<RationalFunctionField<Base>> generic_fiber(const DVRFamily<Base>& fam) {
  return {fam.quiver, fam.ring, fam.dims, fam.maps};
}

template <class Base>
Rep<Base> special_fiber(const DVRFamily<Base>& fam) {
  const Base& k = fam.ring.base();
  std::vector<Matrix<Base>> maps;
  for (const auto& m : fam.maps) {
    Matrix<Base> r(k, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(i, j) = fam.ring.reduce(m.at(i, j));
    maps.push_back(std::move(r));
  }
  return {fam.quiver, k, fam.dims, std::move(maps)};
}

// lift a matrix over k to constants in k(t)
template <class Base>
Matrix<RationalFunctionField<Base>> constant_lift(const RationalFunctionField<Base>& ring,
                                                  const Matrix<Base>& m) {
  Matrix<RationalFunctionField<Base>> out(ring, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = ring.from_base(m.at(i, j));
  return out;
}

// --- integral models --------------------------------------------------------

template <class Base>
struct IntegralModel {
  DVRFamily<Base> family;
  std::vector<long> exponents;  // m_i, zero on every admissible source
  Morphism<RationalFunctionField<Base>> witness;  // diag(t^{m_i}): M -> generic fiber
};

// Rescale a representation over k(t) to an integral family: walk the vertices
// in admissible order and give each vertex the minimal exponent that clears
// the denominators of its incoming arrows.
template <class Base>
IntegralModel<Base> integral_model(const Rep<RationalFunctionField<Base>>& m) {
  const auto& ring = m.field;
  const Quiver& q = m.quiver;
  auto order = admissible_ordering(q);  // throws on oriented cycles
  std::vector<long> mexp(q.vertex_count(), 0);
  for (int v : order) {
    long need = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrows()[a];
      if (ar.target != v) continue;
      std::optional<long> minval;
      for (int r = 0; r < m.maps[a].rows; ++r)
        for (int c = 0; c < m.maps[a].cols; ++c) {
          auto val = ring.valuation(m.maps[a].at(r, c));
          if (val && (!minval || *val < *minval)) minval = *val;
        }
      if (minval) need = std::max(need, mexp[ar.source] - *minval);
    }
    mexp[v] = need;
  }
  std::vector<Matrix<RationalFunctionField<Base>>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    long e = mexp[ar.target] - mexp[ar.source];
    Matrix<RationalFunctionField<Base>> n(ring, m.maps[a].rows, m.maps[a].cols);
    for (int r = 0; r < n.rows; ++r)
      for (int c = 0; c < n.cols; ++c) n.at(r, c) = ring.shift(m.maps[a].at(r, c), e);
    maps.push_back(std::move(n));
  }
  IntegralModel<Base> out{make_dvr_family(q, ring, m.dims, std::move(maps)), mexp, {}};
  std::vector<Matrix<RationalFunctionField<Base>>> comp;
  for (int i = 0; i < q.vertex_count(); ++i) {
    auto c = mat_identity(ring, static_cast<int>(m.dims[i]));
    for (int r = 0; r < c.rows; ++r) c.at(r, r) = ring.shift(c.at(r, r), mexp[i]);
    comp.push_back(std::move(c));
  }
  out.witness = make_morphism(m, generic_fiber(out.family), std::move(comp));
  return out;
}

// --- Langton reduction ------------------------------------------------------

// Certify semistability of the generic fiber by sampling hom-vanishing
// certificates V with entries in the residue field.
template <class Base>
std::optional<Rep<RationalFunctionField<Base>>> certify_generic_semistable(
    const DVRFamily<Base>& fam, const Stability& th, int samples = 100, std::uint64_t seed = 0) {
  auto gen = generic_fiber(fam);
  if (theta_eval(th, gen.dims) != 0) throw std::invalid_argument("θ(d) must vanish");
  auto beta = beta_of(fam.quiver, th);
  if (!beta.is_dimension_vector) throw std::invalid_argument("β is not a dimension vector");
  long mm = effective_m(fam.quiver, gen.dims);
  DimVec vd;
  for (long b : beta.vec) vd.push_back(mm * b);
  Rng base(seed);
  for (int s = 0; s < samples; ++s) {
    auto vk = random_rep(fam.quiver, vd, fam.ring.base(),
                         base.child(static_cast<std::uint64_t>(s)).next());
    std::vector<Matrix<RationalFunctionField<Base>>> lifted;
    for (const auto& mx : vk.maps) lifted.push_back(constant_lift(fam.ring, mx));
    auto v = make_rep(fam.quiver, fam.ring, vd, std::move(lifted));
    if (!fam.ring.is_zero(semi_invariant(gen, v))) return v;
  }
  return std::nullopt;
}

template <class Base>
struct LangtonResult {
  DVRFamily<Base> family;
  std::vector<DimVec> trace;  // dimension vector of each destabilizer
  Morphism<RationalFunctionField<Base>> witness;  // generic fiber of output -> generic fiber of input
  int iterations = 0;
};

// Langton's loop: while the special fiber is unstable, change the lattice
// along the maximal destabilizer.  Lift an echelon basis of the destabilizer
// entrywise, extend by standard vectors at the free rows, multiply the
// complement by t, and rewrite the structure maps in the new basis.
template <class Base>
LangtonResult<Base> langton_reduce(const DVRFamily<Base>& fam, const Stability& th,
                                   int max_iter = 100, bool assume_generic_semistable = false,
                                   int cert_samples = 100, std::uint64_t cert_seed = 0) {
  const auto& ring = fam.ring;
  const Quiver& q = fam.quiver;
  if (!assume_generic_semistable && !certify_generic_semistable(fam, th, cert_samples, cert_seed))
    throw std::invalid_argument("generic fiber could not be certified semistable");
  LangtonResult<Base> out{fam, {}, {}, 0};
  std::vector<Matrix<RationalFunctionField<Base>>> total;
  for (long d : fam.dims) total.push_back(mat_identity(ring, static_cast<int>(d)));
  for (int iter = 0; iter < max_iter; ++iter) {
    auto special = special_fiber(out.family);
    auto verdict = check_semistable_oracle(special, th);
    if (verdict.status != StabStatus::unstable) {
      out.iterations = iter;
      out.witness = make_morphism(generic_fiber(out.family), generic_fiber(fam), std::move(total));
      return out;
    }
    auto destab = hn_filtration(special, th).chain[1];
    out.trace.push_back(subrep_dims(destab));
    const Base& k = ring.base();
    std::vector<Matrix<RationalFunctionField<Base>>> u;
    for (int i = 0; i < q.vertex_count(); ++i) {
      // free rows of the echelon inclusion = complement positions
      auto cok = cokernel(k, destab.inc[i]);
      auto lift = constant_lift(ring, destab.inc[i]);
      Matrix<RationalFunctionField<Base>> ext(ring, lift.rows,
                                              static_cast<int>(cok.free_rows.size()));
      auto t = ring.shift(ring.one(), 1);
      for (std::size_t j = 0; j < cok.free_rows.size(); ++j)
        ext.at(cok.free_rows[j], static_cast<int>(j)) = t;
      u.push_back(mat_hcat(ring, lift, ext));
    }
    std::vector<Matrix<RationalFunctionField<Base>>> maps;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrows()[a];
      maps.push_back(
          mat_mul(ring, inverse(ring, u[ar.target]), mat_mul(ring, out.family.maps[a], u[ar.source])));
    }
    out.family = make_dvr_family(q, ring, out.family.dims, std::move(maps));
    for (int i = 0; i < q.vertex_count(); ++i) total[i] = mat_mul(ring, total[i], u[i]);
  }
  std::ostringstream msg;
  msg << "Langton loop did not terminate within " << max_iter << " iterations; trace:";
  for (const auto& d : out.trace) {
    msg << " (";
    for (std::size_t i = 0; i < d.size(); ++i) msg << (i ? "," : "") << d[i];
    msg << ")";
  }
  throw std::runtime_error(msg.str());
}

}  // namespace qrep
