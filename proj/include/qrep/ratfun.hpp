#pragma once

#include <limits>
#include <optional>
#include <stdexcept>

#include "qrep/fields.hpp"
#include "qrep/poly.hpp"

namespace qrep {

// Rational functions k(t) over an exact base field.  Elements are reduced
// fractions num/den with den monic, so equality is coefficientwise and the
// t-adic valuation reads off trailing zeros.
template <class Base>
class RationalFunctionField {
 public:
  struct Elem {
    Poly<Base> num;
    Poly<Base> den;  // monic, coprime to num; {one} for polynomials
    bool operator==(const Elem&) const = default;
  };
  static constexpr bool kFinite = false;

  explicit RationalFunctionField(Base base) : base_(std::move(base)) {}

  const Base& base() const { return base_; }

  Elem zero() const { return {{}, {base_.one()}}; }
  Elem one() const { return {{base_.one()}, {base_.one()}}; }
  Elem from_int(long n) const { return {poly_const(base_, base_.from_int(n)), {base_.one()}}; }
  Elem from_base(const typename Base::Elem& c) const { return {poly_const(base_, c), {base_.one()}}; }
  std::optional<Elem> var() const {
    return Elem{{base_.zero(), base_.one()}, {base_.one()}};
  }
  Elem from_poly(Poly<Base> p) const {
    poly_trim(base_, p);
    return {std::move(p), {base_.one()}};
  }

  Elem make(Poly<Base> num, Poly<Base> den) const {
    poly_trim(base_, num);
    poly_trim(base_, den);
    if (den.empty()) throw std::domain_error("zero denominator");
    if (num.empty()) return zero();
    auto g = poly_gcd(base_, num, den);
    if (poly_deg<Base>(g) > 0) {
      num = poly_divmod(base_, num, g).first;
      den = poly_divmod(base_, den, g).first;
    }
    auto lead = den.back();
    if (!base_.eq(lead, base_.one())) {
      auto li = base_.inv(lead);
      num = poly_scale(base_, num, li);
      den = poly_scale(base_, den, li);
    }
    return {std::move(num), std::move(den)};
  }

  Elem add(const Elem& a, const Elem& b) const {
    return make(poly_add(base_, poly_mul(base_, a.num, b.den), poly_mul(base_, b.num, a.den)),
                poly_mul(base_, a.den, b.den));
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const { return {poly_neg(base_, a.num), a.den}; }
  Elem mul(const Elem& a, const Elem& b) const {
    return make(poly_mul(base_, a.num, b.num), poly_mul(base_, a.den, b.den));
  }
  Elem inv(const Elem& a) const {
    if (a.num.empty()) throw std::domain_error("division by zero");
    return make(a.den, a.num);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool eq(const Elem& a, const Elem& b) const {
    return poly_eq(base_, a.num, b.num) && poly_eq(base_, a.den, b.den);
  }

  bool finite() const { return false; }
  unsigned long size() const { throw std::domain_error("rational function field is infinite"); }
  std::vector<Elem> enumerate() const { throw std::domain_error("cannot enumerate an infinite field"); }

  // low-degree fractions; denominator kept unit at t=0 so samples are integral
  Elem sample(Rng& rng) const {
    Poly<Base> num(3, base_.zero()), den(2, base_.zero());
    for (auto& c : num) c = base_.sample(rng);
    den[0] = base_.one();
    den[1] = base_.sample(rng);
    return make(std::move(num), std::move(den));
  }

  // t-adic valuation; nullopt encodes +infinity (the zero element)
  std::optional<long> valuation(const Elem& a) const {
    if (a.num.empty()) return std::nullopt;
    return poly_trailing_zeros(base_, a.num) - poly_trailing_zeros(base_, a.den);
  }

  bool integral(const Elem& a) const {
    auto v = valuation(a);
    return !v || *v >= 0;
  }

  // the residue map R -> R/t, i.e. evaluation at t = 0 when integral
  typename Base::Elem reduce(const Elem& a) const {
    auto v = valuation(a);
    if (v && *v < 0) throw std::domain_error("not integral: valuation " + std::to_string(*v));
    // reduced fraction with valuation >= 0 forces den(0) != 0
    auto n0 = a.num.empty() ? base_.zero() : a.num[0];
    return base_.div(n0, a.den[0]);
  }

  // multiply by t^e (e may be negative)
  Elem shift(const Elem& a, long e) const {
    if (a.num.empty() || e == 0) return a;
    if (e > 0) {
      Poly<Base> num(a.num.size() + e, base_.zero());
      std::copy(a.num.begin(), a.num.end(), num.begin() + e);
      return make(std::move(num), a.den);
    }
    Poly<Base> den(a.den.size() - e, base_.zero());
    std::copy(a.den.begin(), a.den.end(), den.begin() - e);
    return make(a.num, std::move(den));
  }

  std::string to_string(const Elem& a) const {
    if (a.num.empty()) return "0";
    std::string n = poly_to_string(base_, a.num, "t");
    if (poly_deg<Base>(a.den) == 0) return n;
    std::string d = poly_to_string(base_, a.den, "t");
    auto wrap = [](const std::string& s) {
      if (s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos ||
          s.find('*') != std::string::npos)
        return "(" + s + ")";
      return s;
    };
    return wrap(n) + "/" + wrap(d);
  }
  std::string name() const { return "ratfun:" + base_.name(); }

 private:
  Base base_;
};

}  // namespace qrep
