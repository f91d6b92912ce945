#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/poly.hpp"
#include "qrep/rng.hpp"

namespace qrep {

// ---------------------------------------------------------------------------
// Rational numbers (exact, GMP-backed).

class Rationals {
 public:
  using Elem = mpq_class;
  static constexpr bool kFinite = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long n) const { return Elem(n); }
  std::optional<Elem> var() const { return std::nullopt; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  bool finite() const { return false; }
  unsigned long size() const { throw std::domain_error("rationals are infinite"); }
  std::vector<Elem> enumerate() const { throw std::domain_error("cannot enumerate an infinite field"); }

  // bounded-height sampling: numerator in [-10,10], denominator in [1,4]
  Elem sample(Rng& rng) const {
    long num = static_cast<long>(rng.below(21)) - 10;
    long den = static_cast<long>(rng.below(4)) + 1;
    Elem r(num, den);
    r.canonicalize();
    return r;
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "rat"; }
};

// ---------------------------------------------------------------------------
// Finite fields F_{p^k}.  Elements are coefficient vectors of length k
// (little-endian, residues mod p); k = 1 is the prime field.

class FiniteField {
 public:
  using Elem = std::vector<std::uint64_t>;
  static constexpr bool kFinite = true;

  explicit FiniteField(std::uint64_t p) : p_(p), k_(1) { check_prime(p); }

  // modulus: monic irreducible of degree k over F_p, little-endian, length k+1
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    check_prime(p);
    if (modulus_.size() < 3) throw std::invalid_argument("extension modulus must have degree >= 2");
    k_ = static_cast<unsigned>(modulus_.size()) - 1;
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    check_irreducible();
  }

  // F_{p^k} with the lexicographically smallest monic irreducible modulus
  static FiniteField extension(std::uint64_t p, unsigned k) {
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    if (k == 1) return FiniteField(p);
    std::vector<std::uint64_t> mod(k + 1, 0);
    mod[k] = 1;
    for (;;) {
      try {
        return FiniteField(p, mod);
      } catch (const std::invalid_argument&) {
      }
      unsigned i = 0;
      while (i < k && ++mod[i] == p) mod[i++] = 0;
      if (i == k) throw std::logic_error("no irreducible modulus found");
    }
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(long n) const {
    Elem e(k_, 0);
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    e[0] = static_cast<std::uint64_t>(r);
    return e;
  }
  std::optional<Elem> var() const {
    if (k_ == 1) return std::nullopt;
    Elem e(k_, 0);
    e[1] = 1;
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = mod_add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = mod_sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + mod_mul(a[i], b[j])) % p_;
    }
    if (k_ > 1) reduce_by_modulus(prod);
    prod.resize(k_);
    return prod;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (k_ == 1) return Elem{mod_inv(a[0])};
    // extended Euclid in F_p[x] against the modulus
    std::vector<std::uint64_t> r0 = modulus_, r1(a);
    trim(r1);
    std::vector<std::uint64_t> s0, s1{1};
    while (!r1.empty()) {
      auto [q, r2] = fp_divmod(r0, r1);
      auto s2 = fp_sub(s0, fp_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd
    std::uint64_t c = mod_inv(r0[0]);
    Elem out(k_, 0);
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = mod_mul(s0[i], c);
    return out;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  bool finite() const { return true; }
  unsigned long size() const {
    unsigned long q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      if (q > (1ul << 62) / p_) throw std::overflow_error("field too large to enumerate");
      q *= p_;
    }
    return q;
  }
  std::vector<Elem> enumerate() const {
    std::vector<Elem> out;
    out.reserve(size());
    Elem e(k_, 0);
    for (;;) {
      out.push_back(e);
      unsigned i = 0;
      while (i < k_ && ++e[i] == p_) e[i++] = 0;
      if (i == k_) break;
    }
    return out;
  }

  Elem sample(Rng& rng) const {
    Elem e(k_);
    for (unsigned i = 0; i < k_; ++i) e[i] = rng.below(p_);
    return e;
  }

  std::string to_string(const Elem& a) const {
    if (k_ == 1) return std::to_string(a[0]);
    // print as a polynomial in x
    struct Fp {
      std::uint64_t p;
      using Elem = std::uint64_t;
      bool is_zero(Elem c) const { return c == 0; }
      std::string to_string(Elem c) const { return std::to_string(c); }
    } fp{p_};
    std::vector<std::uint64_t> c(a);
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return "0";
    return poly_to_string(fp, c, "x");
  }
  std::string name() const {
    std::string s = "fq:" + std::to_string(p_);
    if (k_ > 1) s += "^" + std::to_string(k_);
    return s;
  }

 private:
  static void check_prime(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("characteristic must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
  }

  // desk-scale irreducibility test: no monic factor of degree <= k/2
  void check_irreducible() const {
    unsigned half = k_ / 2;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < half; ++i) {
      if (count > 2'000'000 / p_) throw std::invalid_argument("modulus too large to certify irreducible");
      count *= p_;
    }
    std::vector<std::uint64_t> cand;
    for (unsigned deg = 1; deg <= half; ++deg) {
      cand.assign(deg + 1, 0);
      cand[deg] = 1;
      for (;;) {
        if (fp_divmod(modulus_, cand).second.empty())
          throw std::invalid_argument("modulus is reducible over F_p");
        unsigned i = 0;
        while (i < deg && ++cand[i] == p_) cand[i++] = 0;
        if (i == deg) break;
      }
    }
  }

  std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t mod_inv(std::uint64_t a) const {
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a % p_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
  }

  static void trim(std::vector<std::uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  std::vector<std::uint64_t> fp_sub(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_sub(a[i], b[i]);
    trim(a);
    return a;
  }
  std::vector<std::uint64_t> fp_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + mod_mul(a[i], b[j])) % p_;
    trim(r);
    return r;
  }
  std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> fp_divmod(
      std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    std::uint64_t li = mod_inv(b.back());
    while (a.size() >= b.size() && !b.empty()) {
      std::uint64_t c = mod_mul(a.back(), li);
      std::size_t shift = a.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = mod_sub(a[shift + i], mod_mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  void reduce_by_modulus(std::vector<std::uint64_t>& prod) const {
    for (std::size_t i = prod.size(); i-- > k_;) {
      std::uint64_t c = prod[i];
      if (!c) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < k_; ++j)
        prod[i - k_ + j] = mod_sub(prod[i - k_ + j], mod_mul(c, modulus_[j]));
    }
    prod.resize(k_);
  }

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace qrep
