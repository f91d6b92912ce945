#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/rep.hpp"

namespace qrep {

// The 2-term Hom complex of a pair (M, N): the differential
// (f_i) |-> (f_{t(a)} M_a - N_a f_{s(a)}) from  sum_i Hom(M_i, N_i)  to
// sum_a Hom(M_{s(a)}, N_{t(a)}).  Basis convention: rows ordered by
// (arrow index, target-basis index, source-basis index), columns by
// (vertex index, target-basis index, source-basis index).
template <class F>
struct HomComplex {
  Matrix<F> differential;
  std::vector<long> col_offset;  // per vertex
  std::vector<long> row_offset;  // per arrow
};

template <class F>
HomComplex<F> hom_complex(const Rep<F>& m, const Rep<F>& n) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("hom complex over different quivers");
  const F& f = m.field;
  const Quiver& q = m.quiver;
  HomComplex<F> hc;
  long cols = 0;
  for (int i = 0; i < q.vertex_count(); ++i) {
    hc.col_offset.push_back(cols);
    cols += n.dims[i] * m.dims[i];
  }
  long rows = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    hc.row_offset.push_back(rows);
    rows += n.dims[q.arrows()[a].target] * m.dims[q.arrows()[a].source];
  }
  hc.differential = Matrix<F>(f, static_cast<int>(rows), static_cast<int>(cols));
  auto& d = hc.differential;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    long dmn_s = m.dims[ar.source], dnn_t = n.dims[ar.target];
    for (long r = 0; r < dnn_t; ++r)
      for (long c = 0; c < dmn_s; ++c) {
        long row = hc.row_offset[a] + r * dmn_s + c;
        // + f_{t(a)}[r][k] * M_a[k][c]
        for (long k = 0; k < m.dims[ar.target]; ++k) {
          const auto& coef = m.maps[a].at(static_cast<int>(k), static_cast<int>(c));
          if (f.is_zero(coef)) continue;
          long col = hc.col_offset[ar.target] + r * m.dims[ar.target] + k;
          d.at(static_cast<int>(row), static_cast<int>(col)) =
              f.add(d.at(static_cast<int>(row), static_cast<int>(col)), coef);
        }
        // - N_a[r][k] * f_{s(a)}[k][c]
        for (long k = 0; k < n.dims[ar.source]; ++k) {
          const auto& coef = n.maps[a].at(static_cast<int>(r), static_cast<int>(k));
          if (f.is_zero(coef)) continue;
          long col = hc.col_offset[ar.source] + k * m.dims[ar.source] + c;
          d.at(static_cast<int>(row), static_cast<int>(col)) =
              f.sub(d.at(static_cast<int>(row), static_cast<int>(col)), coef);
        }
      }
  }
  return hc;
}

template <class F>
long hom_dim(const Rep<F>& m, const Rep<F>& n) {
  auto hc = hom_complex(m, n);
  return hc.differential.cols - rank(m.field, hc.differential);
}

template <class F>
long ext_dim(const Rep<F>& m, const Rep<F>& n) {
  auto hc = hom_complex(m, n);
  return hc.differential.rows - rank(m.field, hc.differential);
}

template <class F>
std::vector<Morphism<F>> hom_basis(const Rep<F>& m, const Rep<F>& n) {
  const F& f = m.field;
  auto hc = hom_complex(m, n);
  auto k = kernel(f, hc.differential);
  std::vector<Morphism<F>> out;
  for (int col = 0; col < k.cols; ++col) {
    std::vector<Matrix<F>> comp;
    for (int i = 0; i < m.quiver.vertex_count(); ++i) {
      Matrix<F> c(f, static_cast<int>(n.dims[i]), static_cast<int>(m.dims[i]));
      for (long r = 0; r < n.dims[i]; ++r)
        for (long cc = 0; cc < m.dims[i]; ++cc)
          c.at(static_cast<int>(r), static_cast<int>(cc)) =
              k.at(static_cast<int>(hc.col_offset[i] + r * m.dims[i] + cc), col);
      comp.push_back(std::move(c));
    }
    out.push_back(make_morphism(m, n, std::move(comp)));
  }
  return out;
}

// Determinantal semi-invariant: det of the Hom-complex differential.  Only
// defined when the Euler pairing of the dimension vectors vanishes.
template <class F>
typename F::Elem semi_invariant(const Rep<F>& m, const Rep<F>& v) {
  if (euler_pairing(m.quiver, m.dims, v.dims) != 0)
    throw std::invalid_argument("Euler pairing nonzero; the differential is not square");
  auto hc = hom_complex(m, v);
  return det(m.field, hc.differential);
}

// Dual representation over the opposite quiver.
template <class F>
Rep<F> dual_rep(const Rep<F>& m) {
  const F& f = m.field;
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < m.quiver.arrow_count(); ++a) maps.push_back(mat_transpose(f, m.maps[a]));
  return {m.quiver.opposite(), f, m.dims, std::move(maps)};
}

namespace detail {

// components of right multiplication by arrow a: P(t(a)) -> P(s(a)),
// p |-> p after a
template <class F>
std::vector<Matrix<F>> right_mult_components(const Quiver& q, const F& f,
                                             const std::vector<PathFan>& fans, int a) {
  int ta = q.arrows()[a].target, sa = q.arrows()[a].source;
  std::vector<Matrix<F>> comp;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Matrix<F> c(f, static_cast<int>(fans[sa].by_target[v].size()),
                static_cast<int>(fans[ta].by_target[v].size()));
    for (std::size_t col = 0; col < fans[ta].by_target[v].size(); ++col) {
      std::vector<int> p{a};
      const auto& tail = fans[ta].by_target[v][col];
      p.insert(p.end(), tail.begin(), tail.end());
      c.at(fans[sa].index[v].at(p), static_cast<int>(col)) = f.one();
    }
    comp.push_back(std::move(c));
  }
  return comp;
}

// Map induced on the degree-1 term of the Hom complex by post-composition
// with a morphism psi: N -> N' (given by components).
template <class F>
Matrix<F> postcompose_on_c1(const Rep<F>& m, const Rep<F>& n, const Rep<F>& np,
                            const std::vector<Matrix<F>>& psi) {
  const F& f = m.field;
  const Quiver& q = m.quiver;
  long rows = 0, cols = 0;
  std::vector<long> roff, coff;
  for (int a = 0; a < q.arrow_count(); ++a) {
    roff.push_back(rows);
    coff.push_back(cols);
    rows += np.dims[q.arrows()[a].target] * m.dims[q.arrows()[a].source];
    cols += n.dims[q.arrows()[a].target] * m.dims[q.arrows()[a].source];
  }
  Matrix<F> out(f, static_cast<int>(rows), static_cast<int>(cols));
  for (int a = 0; a < q.arrow_count(); ++a) {
    int tv = q.arrows()[a].target;
    long dm = m.dims[q.arrows()[a].source];
    const Matrix<F>& p = psi[tv];
    for (int r = 0; r < p.rows; ++r)
      for (int c = 0; c < p.cols; ++c) {
        if (f.is_zero(p.at(r, c))) continue;
        for (long k = 0; k < dm; ++k)
          out.at(static_cast<int>(roff[a] + r * dm + k), static_cast<int>(coff[a] + c * dm + k)) =
              p.at(r, c);
      }
  }
  return out;
}

// Ext(M, P(j)) for all j, with explicit cokernel presentations.
template <class F>
struct ExtBundle {
  std::vector<Rep<F>> projectives;
  std::vector<Cokernel<F>> cok;  // of hom_complex(M, P(j)).differential
};

template <class F>
ExtBundle<F> ext_against_projectives(const Rep<F>& m, const std::vector<PathFan>& fans) {
  const Quiver& q = m.quiver;
  ExtBundle<F> out;
  for (int j = 0; j < q.vertex_count(); ++j) {
    out.projectives.push_back(projective_rep(q, m.field, j));
    out.cok.push_back(cokernel(m.field, hom_complex(m, out.projectives.back()).differential));
  }
  return out;
}

// induced map Ext(M, P(u)) -> Ext(M, P(v)) for psi: P(u) -> P(v)
template <class F>
Matrix<F> induced_ext_map(const Rep<F>& m, const ExtBundle<F>& eb, int u, int v,
                          const std::vector<Matrix<F>>& psi) {
  const F& f = m.field;
  auto big = postcompose_on_c1(m, eb.projectives[u], eb.projectives[v], psi);
  return mat_mul(f, eb.cok[v].projection, mat_mul(f, big, eb.cok[u].complement));
}

}  // namespace detail

// Auslander-Reiten translate, computed without a minimal presentation:
// (tau M)_j is the dual of Ext(M, P(j)), arrows act through the cokernel
// functoriality of right multiplication.
template <class F>
Rep<F> tau(const Rep<F>& m) {
  const Quiver& q = m.quiver;
  const F& f = m.field;
  if (!is_acyclic(q)) throw std::domain_error("tau needs an acyclic quiver");
  std::vector<PathFan> fans;
  for (int i = 0; i < q.vertex_count(); ++i) fans.push_back(enumerate_paths(q, i));
  auto eb = detail::ext_against_projectives(m, fans);
  DimVec dims;
  for (int j = 0; j < q.vertex_count(); ++j) dims.push_back(eb.cok[j].projection.rows);
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int ta = q.arrows()[a].target, sa = q.arrows()[a].source;
    auto ra = detail::right_mult_components(q, f, fans, a);
    // E_{t(a)} -> E_{s(a)}; dualizing transposes into shape tau_t x tau_s
    maps.push_back(mat_transpose(f, detail::induced_ext_map(m, eb, ta, sa, ra)));
  }
  return make_rep(q, f, std::move(dims), std::move(maps));
}

template <class F>
Rep<F> tau_minus(const Rep<F>& m) {
  return dual_rep(tau(dual_rep(m)));
}

// --- isomorphism testing ----------------------------------------------------

enum class IsoStatus { yes, no, unknown };

template <class F>
struct IsoResult {
  IsoStatus status = IsoStatus::unknown;
  std::optional<Morphism<F>> witness;
};

template <class F>
IsoResult<F> is_isomorphic(const Rep<F>& m, const Rep<F>& n, std::uint64_t seed = 0,
                           int random_tries = 64, unsigned long exhaustive_cap = 200'000) {
  const F& f = m.field;
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("different quivers");
  if (m.dims != n.dims) return {IsoStatus::no, std::nullopt};
  if (total_dim(m) == 0) return {IsoStatus::yes, identity_morphism(m)};
  auto basis = hom_basis(m, n);
  if (basis.empty()) return {IsoStatus::no, std::nullopt};
  auto check = [&](const Morphism<F>& phi) { return morphism_is_iso(f, phi); };
  for (const auto& phi : basis)
    if (check(phi)) return {IsoStatus::yes, phi};
  auto combine = [&](const std::vector<typename F::Elem>& coef) {
    std::vector<Matrix<F>> comp;
    for (int i = 0; i < m.quiver.vertex_count(); ++i) {
      Matrix<F> c(f, static_cast<int>(n.dims[i]), static_cast<int>(m.dims[i]));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (f.is_zero(coef[b])) continue;
        c = mat_add(f, c, mat_scale(f, basis[b].comp[i], coef[b]));
      }
      comp.push_back(std::move(c));
    }
    return Morphism<F>{std::move(comp)};
  };
  // random combinations (useful when the field is reasonably large)
  bool try_random = !f.finite() || f.size() >= 5;
  if (try_random && basis.size() > 1) {
    Rng rng = Rng(seed).child(0x150);
    for (int t = 0; t < random_tries; ++t) {
      std::vector<typename F::Elem> coef;
      for (std::size_t b = 0; b < basis.size(); ++b) coef.push_back(f.sample(rng));
      auto phi = combine(coef);
      if (check(phi)) return {IsoStatus::yes, phi};
    }
  }
  // exhaustive coefficient search over small finite spaces is conclusive
  if constexpr (F::kFinite) {
    unsigned long q = f.size();
    unsigned long count = 1;
    bool fits = true;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (count > exhaustive_cap / q) {
        fits = false;
        break;
      }
      count *= q;
    }
    if (fits) {
      auto elems = f.enumerate();
      std::vector<std::size_t> odo(basis.size(), 0);
      for (;;) {
        std::vector<typename F::Elem> coef;
        for (auto i : odo) coef.push_back(elems[i]);
        auto phi = combine(coef);
        if (check(phi)) return {IsoStatus::yes, phi};
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == elems.size()) odo[i++] = 0;
        if (i == odo.size()) break;
      }
      return {IsoStatus::no, std::nullopt};
    }
  }
  return {IsoStatus::unknown, std::nullopt};
}

}  // namespace qrep
