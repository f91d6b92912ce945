#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"
#include "qrep/rng.hpp"

namespace qrep {

// A representation: one vector space dimension per vertex, one matrix per
// arrow (shape dims[target] x dims[source]).
template <class F>
struct Rep {
  Quiver quiver;
  F field;
  DimVec dims;
  std::vector<Matrix<F>> maps;
};

template <class F>
Rep<F> make_rep(const Quiver& q, const F& f, DimVec dims, std::vector<Matrix<F>> maps) {
  check_dimvec(q, dims);
  for (long d : dims)
    if (d < 0) throw std::invalid_argument("negative dimension");
  if (maps.size() != static_cast<std::size_t>(q.arrow_count()))
    throw std::invalid_argument("map count does not match arrow count");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    if (maps[a].rows != dims[ar.target] || maps[a].cols != dims[ar.source])
      throw std::invalid_argument("arrow " + std::to_string(a) + ": map has shape " +
                                  std::to_string(maps[a].rows) + "x" + std::to_string(maps[a].cols) +
                                  ", expected " + std::to_string(dims[ar.target]) + "x" +
                                  std::to_string(dims[ar.source]));
  }
  return {q, f, std::move(dims), std::move(maps)};
}

template <class F>
Rep<F> zero_rep(const Quiver& q, const F& f) {
  DimVec dims(q.vertex_count(), 0);
  std::vector<Matrix<F>> maps(q.arrow_count());
  for (auto& m : maps) m = Matrix<F>(f, 0, 0);
  return {q, f, std::move(dims), std::move(maps)};
}

template <class F>
long total_dim(const Rep<F>& m) {
  long s = 0;
  for (long d : m.dims) s += d;
  return s;
}

template <class F>
bool rep_eq(const Rep<F>& x, const Rep<F>& y) {
  if (!(x.quiver == y.quiver) || x.dims != y.dims) return false;
  for (std::size_t a = 0; a < x.maps.size(); ++a)
    if (!mat_eq(x.field, x.maps[a], y.maps[a])) return false;
  return true;
}

// Morphism of representations; intertwining squares are checked eagerly.
template <class F>
struct Morphism {
  std::vector<Matrix<F>> comp;  // per vertex, shape N_i x M_i
};

template <class F>
Morphism<F> make_morphism(const Rep<F>& m, const Rep<F>& n, std::vector<Matrix<F>> comp) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("morphism between different quivers");
  if (comp.size() != static_cast<std::size_t>(m.quiver.vertex_count()))
    throw std::invalid_argument("component count mismatch");
  const F& f = m.field;
  for (int i = 0; i < m.quiver.vertex_count(); ++i)
    if (comp[i].rows != n.dims[i] || comp[i].cols != m.dims[i])
      throw std::invalid_argument("component " + std::to_string(i) + " has wrong shape");
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& ar = m.quiver.arrows()[a];
    if (!mat_eq(f, mat_mul(f, comp[ar.target], m.maps[a]), mat_mul(f, n.maps[a], comp[ar.source])))
      throw std::invalid_argument("intertwining square fails at arrow " + std::to_string(a));
  }
  return {std::move(comp)};
}

template <class F>
Morphism<F> identity_morphism(const Rep<F>& m) {
  std::vector<Matrix<F>> comp;
  for (long d : m.dims) comp.push_back(mat_identity(m.field, static_cast<int>(d)));
  return {std::move(comp)};
}

template <class F>
bool morphism_is_zero(const F& f, const Morphism<F>& phi) {
  for (const auto& c : phi.comp)
    if (!mat_is_zero(f, c)) return false;
  return true;
}

template <class F>
bool morphism_is_iso(const F& f, const Morphism<F>& phi) {
  for (const auto& c : phi.comp)
    if (!is_invertible(f, c)) return false;
  return true;
}

// Subrepresentation witness: per-vertex full-column-rank inclusion matrices
// whose spans are arrow-stable.
template <class F>
struct Subrep {
  std::vector<Matrix<F>> inc;  // dims[i] x k_i
};

template <class F>
DimVec subrep_dims(const Subrep<F>& w) {
  DimVec d;
  for (const auto& m : w.inc) d.push_back(m.cols);
  return d;
}

template <class F>
Subrep<F> zero_subrep(const Rep<F>& m) {
  Subrep<F> w;
  for (long d : m.dims) w.inc.push_back(Matrix<F>(m.field, static_cast<int>(d), 0));
  return w;
}

template <class F>
Subrep<F> full_subrep(const Rep<F>& m) {
  Subrep<F> w;
  for (long d : m.dims) w.inc.push_back(mat_identity(m.field, static_cast<int>(d)));
  return w;
}

// Validates arrow stability and returns the induced subrepresentation
// structure maps; throws naming the first failing arrow.
template <class F>
std::vector<Matrix<F>> subrep_structure_maps(const Rep<F>& m, const Subrep<F>& w) {
  const F& f = m.field;
  std::vector<Matrix<F>> out;
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& ar = m.quiver.arrows()[a];
    auto x = solve(f, w.inc[ar.target], mat_mul(f, m.maps[a], w.inc[ar.source]));
    if (!x) throw std::invalid_argument("witness is not arrow-stable at arrow " + std::to_string(a));
    out.push_back(std::move(*x));
  }
  return out;
}

template <class F>
bool subrep_is_valid(const Rep<F>& m, const Subrep<F>& w) {
  const F& f = m.field;
  for (int i = 0; i < m.quiver.vertex_count(); ++i) {
    if (w.inc[i].rows != m.dims[i]) return false;
    if (rank(f, w.inc[i]) != w.inc[i].cols) return false;
  }
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& ar = m.quiver.arrows()[a];
    if (!solve(f, w.inc[ar.target], mat_mul(f, m.maps[a], w.inc[ar.source]))) return false;
  }
  return true;
}

template <class F>
Rep<F> subrep_to_rep(const Rep<F>& m, const Subrep<F>& w) {
  return make_rep(m.quiver, m.field, subrep_dims(w), subrep_structure_maps(m, w));
}

// Quotient by a subrepresentation: bases are the non-pivot standard vectors
// of each inclusion's column echelon form.  Returns the quotient and the
// projection morphism.
template <class F>
std::pair<Rep<F>, Morphism<F>> quotient_rep(const Rep<F>& m, const Subrep<F>& w) {
  const F& f = m.field;
  int n = m.quiver.vertex_count();
  std::vector<Cokernel<F>> cks;
  DimVec qdims;
  for (int i = 0; i < n; ++i) {
    cks.push_back(cokernel(f, w.inc[i]));
    qdims.push_back(cks.back().projection.rows);
  }
  std::vector<Matrix<F>> qmaps;
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& ar = m.quiver.arrows()[a];
    qmaps.push_back(
        mat_mul(f, cks[ar.target].projection, mat_mul(f, m.maps[a], cks[ar.source].complement)));
  }
  // validate the witness along the way (projection kills the subspace only
  // when it is arrow-stable)
  subrep_structure_maps(m, w);
  Rep<F> quot = make_rep(m.quiver, f, std::move(qdims), std::move(qmaps));
  std::vector<Matrix<F>> proj;
  for (int i = 0; i < n; ++i) proj.push_back(cks[i].projection);
  Morphism<F> pm = make_morphism(m, quot, std::move(proj));
  return {std::move(quot), std::move(pm)};
}

// --- simples, projectives, injectives -------------------------------------

template <class F>
Rep<F> simple_rep(const Quiver& q, const F& f, int vertex) {
  DimVec dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix<F>> maps;
  for (const auto& ar : q.arrows())
    maps.push_back(Matrix<F>(f, static_cast<int>(dims[ar.target]), static_cast<int>(dims[ar.source])));
  return {q, f, std::move(dims), std::move(maps)};
}

// All paths out of `start`, ordered lexicographically by arrow index
// sequence, bucketed by endpoint.  Throws when the path set is infinite.
struct PathFan {
  int start = 0;
  std::vector<std::vector<std::vector<int>>> by_target;  // vertex -> list of arrow-index paths
  std::vector<std::map<std::vector<int>, int>> index;    // path -> position in its bucket
};

inline PathFan enumerate_paths(const Quiver& q, int start) {
  // reject if any vertex reachable from start lies on an oriented cycle
  int n = q.vertex_count();
  std::vector<bool> reach(n, false);
  std::vector<int> stack{start};
  reach[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows())
      if (a.source == v && !reach[a.target]) {
        reach[a.target] = true;
        stack.push_back(a.target);
      }
  }
  // cycle within reachable set?
  {
    std::vector<int> color(n, 0);
    for (int s = 0; s < n; ++s) {
      if (!reach[s] || color[s]) continue;
      // iterative DFS with gray/black marking
      std::vector<std::pair<int, int>> st{{s, 0}};
      color[s] = 1;
      while (!st.empty()) {
        auto& [v, ai] = st.back();
        bool advanced = false;
        for (int a = ai; a < q.arrow_count(); ++a) {
          const auto& ar = q.arrows()[a];
          if (ar.source != v) continue;
          ai = a + 1;
          if (color[ar.target] == 1)
            throw std::domain_error("infinite-dimensional projective/injective: vertex " +
                                    std::to_string(start + 1) + " reaches an oriented cycle");
          if (color[ar.target] == 0) {
            color[ar.target] = 1;
            st.push_back({ar.target, 0});
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          color[v] = 2;
          st.pop_back();
        }
      }
    }
  }
  PathFan fan;
  fan.start = start;
  fan.by_target.assign(n, {});
  fan.index.assign(n, {});
  // DFS in increasing arrow order yields lexicographic path order
  std::vector<int> path;
  auto emit = [&](int v) {
    fan.index[v][path] = static_cast<int>(fan.by_target[v].size());
    fan.by_target[v].push_back(path);
  };
  // recursive enumeration via explicit stack of (vertex, next arrow to try)
  std::vector<std::pair<int, int>> st{{start, 0}};
  emit(start);
  while (!st.empty()) {
    auto& [v, ai] = st.back();
    bool advanced = false;
    for (int a = ai; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrows()[a];
      if (ar.source != v) continue;
      ai = a + 1;
      path.push_back(a);
      emit(ar.target);
      st.push_back({ar.target, 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      st.pop_back();
      if (!path.empty()) path.pop_back();
    }
  }
  return fan;
}

// Indecomposable projective P(i): basis of P(i)_j is the paths i -> j,
// arrows act by path concatenation.
template <class F>
Rep<F> projective_rep(const Quiver& q, const F& f, int vertex) {
  PathFan fan = enumerate_paths(q, vertex);
  DimVec dims;
  for (int j = 0; j < q.vertex_count(); ++j)
    dims.push_back(static_cast<long>(fan.by_target[j].size()));
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    Matrix<F> m(f, static_cast<int>(dims[ar.target]), static_cast<int>(dims[ar.source]));
    for (int c = 0; c < m.cols; ++c) {
      std::vector<int> p = fan.by_target[ar.source][c];
      p.push_back(a);
      m.at(fan.index[ar.target].at(p), c) = f.one();
    }
    maps.push_back(std::move(m));
  }
  return {q, f, std::move(dims), std::move(maps)};
}

// I_Q(i) = dual of P_{Q^op}(i).
template <class F>
Rep<F> injective_rep(const Quiver& q, const F& f, int vertex) {
  Rep<F> p = projective_rep(q.opposite(), f, vertex);
  // dual: transpose each map, reattach to the reversed arrow (which is the
  // original arrow of q, in the same order)
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) maps.push_back(mat_transpose(f, p.maps[a]));
  return {q, f, p.dims, std::move(maps)};
}

// --- direct sum and morphism kernels/images/cokernels ---------------------

template <class F>
Rep<F> direct_sum(const Rep<F>& x, const Rep<F>& y) {
  if (!(x.quiver == y.quiver)) throw std::invalid_argument("direct sum over different quivers");
  const F& f = x.field;
  DimVec dims(x.dims);
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += y.dims[i];
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < x.quiver.arrow_count(); ++a) {
    const auto& ar = x.quiver.arrows()[a];
    Matrix<F> m(f, static_cast<int>(dims[ar.target]), static_cast<int>(dims[ar.source]));
    for (int i = 0; i < x.maps[a].rows; ++i)
      for (int j = 0; j < x.maps[a].cols; ++j) m.at(i, j) = x.maps[a].at(i, j);
    for (int i = 0; i < y.maps[a].rows; ++i)
      for (int j = 0; j < y.maps[a].cols; ++j)
        m.at(x.maps[a].rows + i, x.maps[a].cols + j) = y.maps[a].at(i, j);
    maps.push_back(std::move(m));
  }
  return {x.quiver, f, std::move(dims), std::move(maps)};
}

// Kernel of a morphism as a subrepresentation witness of its source.
template <class F>
Subrep<F> kernel_subrep(const Rep<F>& m, const Morphism<F>& phi) {
  Subrep<F> w;
  for (int i = 0; i < m.quiver.vertex_count(); ++i) w.inc.push_back(kernel(m.field, phi.comp[i]));
  return w;
}

// Image of a morphism as a subrepresentation witness of its target.
template <class F>
Subrep<F> image_subrep(const Rep<F>& n, const Morphism<F>& phi) {
  Subrep<F> w;
  for (int i = 0; i < n.quiver.vertex_count(); ++i)
    w.inc.push_back(column_space(n.field, phi.comp[i]).basis);
  return w;
}

template <class F>
Rep<F> kernel_rep(const Rep<F>& m, const Morphism<F>& phi) {
  return subrep_to_rep(m, kernel_subrep(m, phi));
}

template <class F>
Rep<F> image_rep(const Rep<F>& n, const Morphism<F>& phi) {
  return subrep_to_rep(n, image_subrep(n, phi));
}

template <class F>
std::pair<Rep<F>, Morphism<F>> cokernel_rep(const Rep<F>& n, const Morphism<F>& phi) {
  return quotient_rep(n, image_subrep(n, phi));
}

// --- canonical projective resolution --------------------------------------

// 0 -> P1 -> P0 -> M -> 0 with P1 = sum_a M_{s(a)} (x) P(t(a)) and
// P0 = sum_i M_i (x) P(i).
template <class F>
struct CanonicalResolution {
  Rep<F> p1;
  Rep<F> p0;
  Morphism<F> inclusion;   // P1 -> P0
  Morphism<F> projection;  // P0 -> M
};

template <class F>
CanonicalResolution<F> canonical_resolution(const Rep<F>& m) {
  const Quiver& q = m.quiver;
  const F& f = m.field;
  if (!is_acyclic(q)) throw std::domain_error("canonical resolution needs an acyclic quiver");
  int n = q.vertex_count();
  std::vector<PathFan> fans;
  for (int i = 0; i < n; ++i) fans.push_back(enumerate_paths(q, i));

  // offsets of the summands inside P0 and P1, per vertex j
  // P0_j basis: (i, copy index < d_i, path i->j)
  auto p0_count = [&](int i, int j) {
    return static_cast<long>(m.dims[i]) * static_cast<long>(fans[i].by_target[j].size());
  };
  std::vector<std::vector<long>> p0_off(n, std::vector<long>(n, 0));
  DimVec p0_dims(n, 0);
  for (int j = 0; j < n; ++j) {
    long off = 0;
    for (int i = 0; i < n; ++i) {
      p0_off[i][j] = off;
      off += p0_count(i, j);
    }
    p0_dims[j] = off;
  }
  auto p0_index = [&](int i, int copy, int j, const std::vector<int>& path) {
    long paths = static_cast<long>(fans[i].by_target[j].size());
    return p0_off[i][j] + copy * paths + fans[i].index[j].at(path);
  };

  // P1_j basis: (arrow a, copy index < d_{s(a)}, path t(a)->j)
  int na = q.arrow_count();
  std::vector<std::vector<long>> p1_off(na, std::vector<long>(n, 0));
  DimVec p1_dims(n, 0);
  for (int j = 0; j < n; ++j) {
    long off = 0;
    for (int a = 0; a < na; ++a) {
      p1_off[a][j] = off;
      int ta = q.arrows()[a].target;
      off += static_cast<long>(m.dims[q.arrows()[a].source]) *
             static_cast<long>(fans[ta].by_target[j].size());
    }
    p1_dims[j] = off;
  }
  auto p1_index = [&](int a, int copy, int j, const std::vector<int>& path) {
    int ta = q.arrows()[a].target;
    long paths = static_cast<long>(fans[ta].by_target[j].size());
    return p1_off[a][j] + copy * paths + fans[ta].index[j].at(path);
  };

  // structure maps of P0 and P1: block diagonal copies of the projectives
  std::vector<Matrix<F>> p0_maps, p1_maps;
  for (int b = 0; b < na; ++b) {
    const auto& br = q.arrows()[b];
    Matrix<F> m0(f, static_cast<int>(p0_dims[br.target]), static_cast<int>(p0_dims[br.source]));
    for (int i = 0; i < n; ++i)
      for (int copy = 0; copy < m.dims[i]; ++copy)
        for (const auto& path : fans[i].by_target[br.source]) {
          auto longer = path;
          longer.push_back(b);
          m0.at(static_cast<int>(p0_index(i, copy, br.target, longer)),
                static_cast<int>(p0_index(i, copy, br.source, path))) = f.one();
        }
    p0_maps.push_back(std::move(m0));
    Matrix<F> m1(f, static_cast<int>(p1_dims[br.target]), static_cast<int>(p1_dims[br.source]));
    for (int a = 0; a < na; ++a) {
      int ta = q.arrows()[a].target;
      int sa = q.arrows()[a].source;
      for (int copy = 0; copy < m.dims[sa]; ++copy)
        for (const auto& path : fans[ta].by_target[br.source]) {
          auto longer = path;
          longer.push_back(b);
          m1.at(static_cast<int>(p1_index(a, copy, br.target, longer)),
                static_cast<int>(p1_index(a, copy, br.source, path))) = f.one();
        }
    }
    p1_maps.push_back(std::move(m1));
  }
  Rep<F> p0 = make_rep(q, f, p0_dims, std::move(p0_maps));
  Rep<F> p1 = make_rep(q, f, p1_dims, std::move(p1_maps));

  // projection P0 -> M at vertex j: (i, copy, path) |-> path acting on e_copy
  std::vector<Matrix<F>> proj;
  for (int j = 0; j < n; ++j) {
    Matrix<F> pj(f, static_cast<int>(m.dims[j]), static_cast<int>(p0_dims[j]));
    for (int i = 0; i < n; ++i)
      for (int copy = 0; copy < m.dims[i]; ++copy)
        for (const auto& path : fans[i].by_target[j]) {
          // apply the arrow maps along the path to the basis vector e_copy
          Matrix<F> v(f, static_cast<int>(m.dims[i]), 1);
          v.at(copy, 0) = f.one();
          for (int a : path) v = mat_mul(f, m.maps[a], v);
          int col = static_cast<int>(p0_index(i, copy, j, path));
          for (int r = 0; r < pj.rows; ++r) pj.at(r, col) = v.at(r, 0);
        }
    proj.push_back(std::move(pj));
  }

  // inclusion P1 -> P0 at vertex j:
  // (a, copy, path: t(a)->j) |-> sum_l (M_a)[l][copy] (t(a), l, path)
  //                              - (s(a), copy, a*path)
  std::vector<Matrix<F>> incl;
  for (int j = 0; j < n; ++j) {
    Matrix<F> ij(f, static_cast<int>(p0_dims[j]), static_cast<int>(p1_dims[j]));
    for (int a = 0; a < na; ++a) {
      int ta = q.arrows()[a].target;
      int sa = q.arrows()[a].source;
      for (int copy = 0; copy < m.dims[sa]; ++copy)
        for (const auto& path : fans[ta].by_target[j]) {
          int col = static_cast<int>(p1_index(a, copy, j, path));
          for (int l = 0; l < m.dims[ta]; ++l) {
            const auto& c = m.maps[a].at(l, copy);
            if (f.is_zero(c)) continue;
            int row = static_cast<int>(p0_index(ta, l, j, path));
            ij.at(row, col) = f.add(ij.at(row, col), c);
          }
          std::vector<int> apath{a};
          apath.insert(apath.end(), path.begin(), path.end());
          int row = static_cast<int>(p0_index(sa, copy, j, apath));
          ij.at(row, col) = f.sub(ij.at(row, col), f.one());
        }
    }
    incl.push_back(std::move(ij));
  }

  CanonicalResolution<F> out{std::move(p1), std::move(p0), {}, {}};
  out.inclusion = make_morphism(out.p1, out.p0, std::move(incl));
  out.projection = make_morphism(out.p0, m, std::move(proj));
  return out;
}

// --- random representations ------------------------------------------------

template <class F>
Rep<F> random_rep(const Quiver& q, const DimVec& d, const F& f, std::uint64_t seed) {
  check_dimvec(q, d);
  Rng root(seed);
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    Rng r = root.child(static_cast<std::uint64_t>(a));
    maps.push_back(mat_random(f, static_cast<int>(d[q.arrows()[a].target]),
                              static_cast<int>(d[q.arrows()[a].source]), r));
  }
  return make_rep(q, f, d, std::move(maps));
}

// --- exhaustive subrepresentation enumeration over finite fields -----------

namespace detail {

// all k-dimensional subspaces of F^n as RCEF inclusion matrices
template <class F>
void subspaces_of_dim(const F& f, int n, int k, std::vector<Matrix<F>>& out) {
  if (k == 0) {
    out.push_back(Matrix<F>(f, n, 0));
    return;
  }
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  auto elems = f.enumerate();
  for (;;) {
    // free positions: rows > pivots[c] that are not pivots themselves
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    std::vector<bool> is_piv(n, false);
    for (int p : pivots) is_piv[p] = true;
    for (int c = 0; c < k; ++c)
      for (int r = pivots[c] + 1; r < n; ++r)
        if (!is_piv[r]) free_pos.push_back({r, c});
    std::vector<std::size_t> odo(free_pos.size(), 0);
    for (;;) {
      Matrix<F> m(f, n, k);
      for (int c = 0; c < k; ++c) m.at(pivots[c], c) = f.one();
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        m.at(free_pos[i].first, free_pos[i].second) = elems[odo[i]];
      out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < odo.size() && ++odo[i] == elems.size()) odo[i++] = 0;
      if (i == odo.size()) break;
    }
    // next pivot combination (lexicographic)
    int c = k - 1;
    while (c >= 0 && pivots[c] == n - k + c) --c;
    if (c < 0) break;
    ++pivots[c];
    for (int j = c + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

inline unsigned long gaussian_binomial(unsigned long q, int n, int k) {
  // [n choose k]_q; desk scale, checked against a cap by the caller
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    mpz_class qn = 1, qk = 1;
    for (int j = 0; j < n - i; ++j) qn *= q;
    for (int j = 0; j < k - i; ++j) qk *= q;
    num *= qn - 1;
    den *= qk - 1;
  }
  mpz_class r = num / den;
  if (!r.fits_ulong_p()) return ~0ul;
  return r.get_ui();
}

}  // namespace detail

// Exhaustive, duplicate-free enumeration of subrepresentation witnesses.
// When dim_filter is given only subspaces of that dimension vector are kept.
template <class F>
std::vector<Subrep<F>> enumerate_subreps(const Rep<F>& m, const std::optional<DimVec>& dim_filter = {},
                                         unsigned long cap = 1'000'000) {
  static_assert(F::kFinite, "subrepresentation enumeration needs a finite field");
  const F& f = m.field;
  unsigned long q = f.size();
  // cap check: product over vertices of the subspace counts
  mpz_class total = 1;
  for (long d : m.dims) {
    mpz_class per = 0;
    for (int k = 0; k <= d; ++k) per += detail::gaussian_binomial(q, static_cast<int>(d), k);
    total *= per;
    if (total > cap)
      throw std::domain_error("subspace count exceeds cap; reduce q or the dimension vector");
  }
  int n = m.quiver.vertex_count();
  std::vector<std::vector<Matrix<F>>> per_vertex(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m.dims[i]; ++k) {
      if (dim_filter && (*dim_filter)[i] != k) continue;
      detail::subspaces_of_dim(f, static_cast<int>(m.dims[i]), k, per_vertex[i]);
    }
    if (per_vertex[i].empty()) return {};
  }
  std::vector<Subrep<F>> out;
  std::vector<std::size_t> odo(n, 0);
  for (;;) {
    Subrep<F> w;
    for (int i = 0; i < n; ++i) w.inc.push_back(per_vertex[i][odo[i]]);
    bool stable = true;
    for (int a = 0; a < m.quiver.arrow_count() && stable; ++a) {
      const auto& ar = m.quiver.arrows()[a];
      if (!solve(f, w.inc[ar.target], mat_mul(f, m.maps[a], w.inc[ar.source]))) stable = false;
    }
    if (stable) out.push_back(std::move(w));
    int i = 0;
    while (i < n && ++odo[i] == per_vertex[i].size()) odo[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace qrep
