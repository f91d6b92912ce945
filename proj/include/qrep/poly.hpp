#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

// Dense univariate polynomials over an exact field, little-endian
// coefficients with no trailing zeros.  All routines take the coefficient
// field explicitly since field objects carry runtime data (p, modulus).
template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void poly_trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> poly_const(const F& f, const typename F::Elem& c) {
  Poly<F> r;
  if (!f.is_zero(c)) r.push_back(c);
  return r;
}

template <class F>
bool poly_is_zero(const Poly<F>& a) {
  return a.empty();
}

template <class F>
int poly_deg(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;  // -1 for the zero polynomial
}

template <class F>
bool poly_eq(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  poly_trim(f, r);
  return r;
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& c : r) c = f.neg(c);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_add(f, a, poly_neg(f, b));
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  poly_trim(f, r);
  return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r = a;
  for (auto& x : r) x = f.mul(x, c);
  return r;
}

// Euclidean division; divisor must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly<F> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    auto c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    poly_trim(f, a);
    if (a.size() > shift + b.size() - 1) throw std::logic_error("divmod failed to reduce");
  }
  poly_trim(f, q);
  return {q, a};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_divmod(f, a, b).second;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return poly_scale(f, a, f.inv(a.back()));
}

// Monic gcd.
template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

template <class F>
typename F::Elem poly_eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto r = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

// Number of leading zero coefficients, i.e. the t-adic valuation.
template <class F>
int poly_trailing_zeros(const F& f, const Poly<F>& a) {
  int n = 0;
  while (n < static_cast<int>(a.size()) && f.is_zero(a[n])) ++n;
  return n;
}

template <class F>
std::string poly_to_string(const F& f, const Poly<F>& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string s;
  for (int i = poly_deg<F>(a); i >= 0; --i) {
    if (f.is_zero(a[i])) continue;
    std::string c = f.to_string(a[i]);
    bool neg = !c.empty() && c[0] == '-';
    if (!s.empty()) {
      s += neg ? "-" : "+";
      if (neg) c = c.substr(1);
    }
    bool unit_coeff = (c == "1");
    if (i == 0) {
      s += c;
    } else {
      if (!unit_coeff) {
        // composite coefficients (extension-field elements) need parens
        if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos)
          c = "(" + c + ")";
        s += c + "*";
      }
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace qrep
