// Python bindings. Representations travel as JSON documents (strings) in the
// same format the CLI reads and writes; scalar quiver data uses plain types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrep/json_io.hpp"

namespace py = pybind11;
using namespace qrep;

namespace {

Quiver quiver_arg(const std::string& spec) {
  auto i = spec.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && spec[i] == '{') return quiver_from_json(json::parse(spec));
  return fixture_quiver(spec);
}

// Run fn(rep, field) for a full representation document.
template <class Fn>
std::string with_rep(const std::string& doc, Fn&& fn) {
  json j = json::parse(doc);
  Quiver q = quiver_from_json(j.at("quiver"));
  return with_field(j.at("field").get<std::string>(), [&](auto f) -> std::string {
    return fn(rep_from_json(q, f, j), f);
  });
}

std::string py_check(const std::string& doc, const Stability& th, const std::string& strategy,
                     int samples, std::uint64_t seed, unsigned long cap) {
  return with_rep(doc, [&](auto m, auto f) -> std::string {
    using F = decltype(f);
    StabVerdict<F> v;
    if constexpr (F::kFinite) {
      mpz_class total = 1;
      bool small = true;
      for (long d : m.dims) {
        mpz_class per = 0;
        for (int k = 0; k <= d; ++k) per += detail::gaussian_binomial(f.size(), static_cast<int>(d), k);
        total *= per;
        if (total > cap) small = false;
      }
      if (small && strategy == "auto")
        v = check_semistable_oracle(m, th, cap);
      else
        v = certify_semistable(m, th, strategy == "auto" ? "crude" : strategy, samples, seed);
    } else {
      v = certify_semistable(m, th, strategy == "auto" ? "crude" : strategy, samples, seed);
    }
    return verdict_to_json(v, f).dump();
  });
}

std::string py_hn(const std::string& doc, const Stability& th, unsigned long cap) {
  return with_rep(doc, [&](auto m, auto f) -> std::string {
    using F = decltype(f);
    if constexpr (F::kFinite) {
      auto hn = hn_filtration(m, th, cap);
      json chain = json::array(), slopes = json::array();
      for (const auto& w : hn.chain) chain.push_back(subrep_to_json(f, w));
      for (const auto& s : hn.slopes) slopes.push_back(s.get_str());
      return json{{"chain", chain}, {"slopes", slopes}}.dump();
    } else {
      throw std::invalid_argument("hn needs a finite field (exhaustive oracle)");
    }
  });
}

std::string py_jh(const std::string& doc, const Stability& th, unsigned long cap) {
  return with_rep(doc, [&](auto m, auto f) -> std::string {
    using F = decltype(f);
    if constexpr (F::kFinite) {
      auto jh = jh_filtration(m, th, cap);
      json steps = json::array();
      for (const auto& w : jh.steps) steps.push_back(subrep_to_json(f, w));
      auto poly = is_polystable(m, th, cap);
      json out{{"steps", steps}, {"gr", rep_to_json(gr(jh))}};
      if (poly)
        out["polystable"] = *poly;
      else
        out["polystable"] = "unknown";
      return out.dump();
    } else {
      throw std::invalid_argument("jh needs a finite field (exhaustive oracle)");
    }
  });
}

}  // namespace

PYBIND11_MODULE(_qrep, m) {
  m.doc() = "exact computations with quiver representations";

  m.def("euler_pairing",
        [](const std::string& q, const DimVec& a, const DimVec& b) {
          return euler_pairing(quiver_arg(q), a, b);
        },
        py::arg("quiver"), py::arg("a"), py::arg("b"));

  m.def("tits_form",
        [](const std::string& q, const DimVec& d) { return tits_form(quiver_arg(q), d); },
        py::arg("quiver"), py::arg("dims"));

  m.def("lambda_bound",
        [](const std::string& q, const std::string& width) {
          auto lb = lambda_bound(quiver_arg(q), mpq_class(width));
          return std::make_pair(lb.lower.get_str(), lb.upper.get_str());
        },
        py::arg("quiver"), py::arg("width") = "1/1000");

  m.def("effective_m",
        [](const std::string& q, const DimVec& d) { return effective_m(quiver_arg(q), d); },
        py::arg("quiver"), py::arg("dims"));

  m.def("hom_ext",
        [](const std::string& mdoc, const std::string& ndoc) {
          return with_rep(mdoc, [&](auto mm, auto f) -> std::string {
            json nj = json::parse(ndoc);
            auto nn = rep_from_json(quiver_from_json(nj.at("quiver")), f, nj);
            return json{{"hom", hom_dim(mm, nn)}, {"ext", ext_dim(mm, nn)}}.dump();
          });
        },
        py::arg("m"), py::arg("n"));

  m.def("semi_invariant",
        [](const std::string& mdoc, const std::string& vdoc) {
          return with_rep(mdoc, [&](auto mm, auto f) -> std::string {
            json vj = json::parse(vdoc);
            auto vv = rep_from_json(quiver_from_json(vj.at("quiver")), f, vj);
            auto s = semi_invariant(mm, vv);
            return json{{"value", f.to_string(s)}, {"nonzero", !f.is_zero(s)}}.dump();
          });
        },
        py::arg("m"), py::arg("v"));

  m.def("check", &py_check, py::arg("rep"), py::arg("theta"), py::arg("strategy") = "auto",
        py::arg("samples") = 100, py::arg("seed") = 0, py::arg("cap") = 1'000'000);

  m.def("hn", &py_hn, py::arg("rep"), py::arg("theta"), py::arg("cap") = 1'000'000);

  m.def("jh", &py_jh, py::arg("rep"), py::arg("theta"), py::arg("cap") = 1'000'000);

  m.def("tau",
        [](const std::string& doc, bool inverse) {
          return with_rep(doc, [&](auto mm, auto) -> std::string {
            return rep_to_json(inverse ? tau_minus(mm) : tau(mm)).dump();
          });
        },
        py::arg("rep"), py::arg("inverse") = false);

  m.def("random_rep",
        [](const std::string& q, const DimVec& d, const std::string& field, std::uint64_t seed) {
          return with_field(field, [&](auto f) -> std::string {
            return rep_to_json(random_rep(quiver_arg(q), d, f, seed)).dump();
          });
        },
        py::arg("quiver"), py::arg("dims"), py::arg("field") = "rat", py::arg("seed") = 0);

  m.def("langton",
        [](const std::string& doc, const Stability& th, int max_iter) {
          return with_rep(doc, [&](auto mm, auto f) -> std::string {
            using F = decltype(f);
            if constexpr (std::is_same_v<F, RationalFunctionField<FiniteField>>) {
              auto fam = make_dvr_family(mm.quiver, f, mm.dims, mm.maps);
              auto res = langton_reduce(fam, th, max_iter);
              json trace = json::array();
              for (const auto& t : res.trace) trace.push_back(t);
              return json{{"family", rep_to_json(generic_fiber(res.family))},
                          {"special_fiber", rep_to_json(special_fiber(res.family))},
                          {"iterations", res.iterations},
                          {"trace", trace}}.dump();
            } else {
              throw std::invalid_argument("langton needs field ratfun:fq:<p>");
            }
          });
        },
        py::arg("rep"), py::arg("theta"), py::arg("max_iter") = 100);
}
