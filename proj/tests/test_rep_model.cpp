#include "doctest.h"

#include "qrep/fields.hpp"
#include "qrep/linalg.hpp"
#include "qrep/rep.hpp"

using namespace qrep;

namespace {

Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver a3() { return Quiver(3, {{0, 1}, {1, 2}}); }
Quiver kronecker(int n) {
  std::vector<Arrow> arrows(n, {0, 1});
  return Quiver(2, arrows);
}
Quiver jordan() { return Quiver(1, {{0, 0}}); }
// n subspaces into one sink (sink is vertex n)
Quiver subspace(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({i, n});
  return Quiver(n + 1, arrows);
}

template <class F>
Rep<F> rep_of(const Quiver& q, const F& f, DimVec d,
              std::vector<std::vector<typename F::Elem>> entries) {
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    Matrix<F> m(f, static_cast<int>(d[q.arrows()[a].target]),
                static_cast<int>(d[q.arrows()[a].source]));
    std::size_t k = 0;
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = entries[a][k++];
    maps.push_back(std::move(m));
  }
  return make_rep(q, f, std::move(d), std::move(maps));
}

}  // namespace

TEST_CASE("projective and injective dimension vectors") {
  Rationals f;
  CHECK(projective_rep(a2(), f, 0).dims == DimVec{1, 1});
  CHECK(projective_rep(a2(), f, 1).dims == DimVec{0, 1});
  CHECK(injective_rep(a2(), f, 0).dims == DimVec{1, 0});
  CHECK(injective_rep(a2(), f, 1).dims == DimVec{1, 1});
  CHECK(projective_rep(kronecker(3), f, 0).dims == DimVec{1, 3});
  CHECK(projective_rep(kronecker(3), f, 1).dims == DimVec{0, 1});
  CHECK(injective_rep(kronecker(3), f, 1).dims == DimVec{3, 1});
  CHECK(projective_rep(a3(), f, 0).dims == DimVec{1, 1, 1});
  CHECK(projective_rep(subspace(3), f, 0).dims == DimVec{1, 0, 0, 1});
  CHECK_THROWS_AS(projective_rep(jordan(), f, 0), std::domain_error);
  CHECK_THROWS_AS(injective_rep(jordan(), f, 0), std::domain_error);
}

TEST_CASE("projective structure maps respect path composition") {
  FiniteField f(5);
  // P(1) of A3: one basis path per vertex; arrow maps are 1x1 identities
  auto p = projective_rep(a3(), f, 0);
  for (const auto& m : p.maps) {
    REQUIRE(m.rows == 1);
    REQUIRE(m.cols == 1);
    CHECK(f.eq(m.at(0, 0), f.one()));
  }
}

TEST_CASE("make_rep rejects bad shapes, morphism checks intertwining") {
  Rationals f;
  std::vector<Matrix<Rationals>> maps{Matrix<Rationals>(f, 1, 1)};
  CHECK_THROWS_AS(make_rep(a2(), f, {2, 1}, maps), std::invalid_argument);
  auto m = rep_of(a2(), f, {1, 1}, {{f.one()}});
  auto n = rep_of(a2(), f, {1, 1}, {{f.zero()}});
  // identity components do not intertwine 1 with 0
  std::vector<Matrix<Rationals>> comp{mat_identity(f, 1), mat_identity(f, 1)};
  CHECK_THROWS_AS(make_morphism(m, n, comp), std::invalid_argument);
  std::vector<Matrix<Rationals>> zero{Matrix<Rationals>(f, 1, 1), Matrix<Rationals>(f, 1, 1)};
  CHECK(morphism_is_zero(f, make_morphism(m, n, zero)));
}

TEST_CASE("kernel, image, quotient of a morphism are exact") {
  FiniteField f(3);
  // A2, M = (2,2) with arrow the identity; phi: M -> N collapses one column
  auto m = random_rep(a2(), {2, 2}, f, 7);
  auto subs = enumerate_subreps(m);
  bool found_proper = false;
  for (const auto& w : subs) {
    auto dims = subrep_dims(w);
    CHECK(subrep_is_valid(m, w));
    long t = 0;
    for (long d : dims) t += d;
    auto [quot, proj] = quotient_rep(m, w);
    CHECK(total_dim(quot) == total_dim(m) - t);
    // kernel of the projection is the subrep again
    auto ker = kernel_subrep(m, proj);
    CHECK(subrep_dims(ker) == dims);
    auto img = image_subrep(quot, proj);
    CHECK(subrep_dims(img) == quot.dims);
    if (t != 0 && t != total_dim(m)) found_proper = true;
  }
  CHECK(found_proper);
}

TEST_CASE("canonical resolution is exact on random instances") {
  FiniteField f2(2);
  FiniteField f5(5);
  Rationals fq;
  auto check_one = [](const auto& fld, const Quiver& q, const DimVec& d, std::uint64_t seed) {
    auto m = random_rep(q, d, fld, seed);
    auto res = canonical_resolution(m);
    for (int i = 0; i < q.vertex_count(); ++i) {
      CHECK(res.p0.dims[i] - res.p1.dims[i] == m.dims[i]);
      // inclusion injective, projection surjective, composite zero
      CHECK(rank(fld, res.inclusion.comp[i]) == res.p1.dims[i]);
      CHECK(rank(fld, res.projection.comp[i]) == m.dims[i]);
      CHECK(mat_is_zero(fld, mat_mul(fld, res.projection.comp[i], res.inclusion.comp[i])));
    }
  };
  std::vector<Quiver> quivers{a2(), a3(), kronecker(2), kronecker(3), subspace(2), subspace(3)};
  Rng rng(99);
  int count = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const auto& q : quivers) {
      DimVec d;
      for (int i = 0; i < q.vertex_count(); ++i) d.push_back(static_cast<long>(rng.below(4)));
      check_one(f2, q, d, seed);
      check_one(f5, q, d, seed * 3 + 1);
      check_one(fq, q, d, seed * 7 + 2);
      count += 3;
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("subrepresentation enumeration: hand counts") {
  FiniteField f(2);
  // A2, d=(1,1), arrow = 1: subreps are 0, (0,1), full
  auto m1 = rep_of(a2(), f, {1, 1}, {{f.one()}});
  CHECK(enumerate_subreps(m1).size() == 3);
  // arrow = 0: (1,0) also works
  auto m0 = rep_of(a2(), f, {1, 1}, {{f.zero()}});
  CHECK(enumerate_subreps(m0).size() == 4);
  // dim filter
  CHECK(enumerate_subreps(m1, DimVec{1, 0}).size() == 0);
  CHECK(enumerate_subreps(m0, DimVec{1, 0}).size() == 1);
  // Jordan nilpotent 2x2 over F2: 0, span(e1), full
  auto jn = rep_of(jordan(), f, {2}, {{f.zero(), f.one(), f.zero(), f.zero()}});
  CHECK(enumerate_subreps(jn).size() == 3);
  // Jordan identity: every subspace is stable: 1 + 3 + 1
  auto ji = rep_of(jordan(), f, {2}, {{f.one(), f.zero(), f.zero(), f.one()}});
  CHECK(enumerate_subreps(ji).size() == 5);
}

TEST_CASE("subrepresentation enumeration agrees with a rank-based oracle") {
  FiniteField f(2);
  auto q = kronecker(2);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto m = random_rep(q, {2, 2}, f, seed);
    auto subs = enumerate_subreps(m);
    // oracle: iterate over all pairs of subspaces, test A U_s <= U_t by ranks
    std::vector<Matrix<FiniteField>> spaces;
    for (int k = 0; k <= 2; ++k) detail::subspaces_of_dim(f, 2, k, spaces);
    long oracle = 0;
    for (const auto& u : spaces)
      for (const auto& v : spaces) {
        bool ok = true;
        for (int a = 0; a < 2 && ok; ++a) {
          auto img = mat_mul(f, m.maps[a], u);
          if (rank(f, mat_hcat(f, v, img)) != rank(f, v)) ok = false;
        }
        if (ok) ++oracle;
      }
    CHECK(static_cast<long>(subs.size()) == oracle);
    for (const auto& w : subs) CHECK(subrep_is_valid(m, w));
  }
}

TEST_CASE("random representations are seed stable") {
  FiniteField f(7);
  auto q = kronecker(3);
  auto m1 = random_rep(q, {2, 3}, f, 42);
  auto m2 = random_rep(q, {2, 3}, f, 42);
  auto m3 = random_rep(q, {2, 3}, f, 43);
  CHECK(rep_eq(m1, m2));
  CHECK(!rep_eq(m1, m3));
}

TEST_CASE("direct sums and simples") {
  Rationals f;
  auto s1 = simple_rep(a2(), f, 0);
  auto s2 = simple_rep(a2(), f, 1);
  CHECK(s1.dims == DimVec{1, 0});
  CHECK(s2.dims == DimVec{0, 1});
  auto d = direct_sum(s1, s2);
  CHECK(d.dims == DimVec{1, 1});
  CHECK(mat_is_zero(f, d.maps[0]));
  auto dd = direct_sum(d, d);
  CHECK(total_dim(dd) == 4);
}
