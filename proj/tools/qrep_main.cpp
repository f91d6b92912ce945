// qrep: exact computations with quiver representations.
//
// Every command reads JSON/flags and writes one JSON document to stdout.
// Exit codes: 0 definite answer, 1 error, 2 "unknown" verdict.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrep/json_io.hpp"

using namespace qrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

DimVec parse_vec(const std::string& s) {
  DimVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  if (out.empty()) throw std::invalid_argument("missing dimension vector (--dims)");
  return out;
}

// Inline JSON text or a path to a JSON file.
json load_json_arg(const std::string& s) {
  auto i = s.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (s[i] == '{' || s[i] == '[')) return json::parse(s);
  std::ifstream in(s);
  if (!in) throw std::invalid_argument("not JSON and no such file: " + s);
  json j;
  in >> j;
  return j;
}

// Accept either a bare array of arrow matrices or a full representation
// document; for a document, only the maps are returned here.
json maps_json(const std::string& s) {
  json j = load_json_arg(s);
  return j.is_object() ? j.at("maps") : j;
}

Quiver load_quiver(const std::string& spec) {
  auto i = spec.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && spec[i] == '{') return quiver_from_json(json::parse(spec));
  try {
    return fixture_quiver(spec);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("no such quiver fixture or file: " + spec);
  json j;
  in >> j;
  return quiver_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// King's canonical slope-zero stability function for d, used by `bounds`
// when no --theta is given
Stability default_theta(const Quiver& q, const DimVec& d) {
  long total = 0;
  for (long x : d) total += x;
  Stability th;
  for (long x : d) th.push_back(total - q.vertex_count() * x);
  return th;
}

struct Common {
  std::string quiver = "a2";
  std::string field = "rat";
  std::string dims;
  std::string theta;
  std::string rep;   // maps JSON (paired with --dims)
  std::uint64_t seed = 0;
  int samples = 100;
  unsigned long cap = 1'000'000;
};

// A full representation document passed via --rep supplies the quiver, field,
// and dims, so none of those flags are mandatory at parse time.
void normalize_rep(Common& c) {
  if (c.rep.empty()) return;
  json j = load_json_arg(c.rep);
  if (j.is_object()) {
    if (j.contains("quiver")) c.quiver = j["quiver"].dump();
    if (j.contains("field")) c.field = j["field"].get<std::string>();
    if (c.dims.empty() && j.contains("dims")) {
      std::string d;
      for (const auto& x : j["dims"]) d += (d.empty() ? "" : ",") + std::to_string(x.get<long>());
      c.dims = d;
    }
    c.rep = j.at("maps").dump();
  } else {
    c.rep = j.dump();
  }
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--quiver", c.quiver, "quiver fixture name or JSON file");
  cmd->add_option("--field", c.field, "field spec: rat | fq:p[^k] | ratfun:<base>");
  cmd->add_option("--dims", c.dims, "dimension vector, comma separated");
  cmd->add_option("--theta", c.theta, "stability function, comma separated");
  cmd->add_option("--rep", c.rep, "structure maps as a JSON array, one matrix per arrow");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--samples", c.samples, "sampling attempts");
  cmd->add_option("--cap", c.cap, "enumeration cap");
}

template <class F>
Rep<F> rep_from_flags(const Quiver& q, const F& f, const Common& c) {
  if (c.rep.empty()) throw std::invalid_argument("--rep is required for this command");
  return rep_from_maps_json(q, f, parse_vec(c.dims), maps_json(c.rep));
}

int cmd_info(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  auto e = euler_data(q);
  json em = json::array();
  for (const auto& row : e.euler_matrix) em.push_back(row);
  json out{{"quiver", quiver_to_json(q)}, {"acyclic", is_acyclic(q)}, {"euler_matrix", em}};
  if (is_acyclic(q)) out["admissible_ordering"] = admissible_ordering(q);
  emit(out);
  return kExitOk;
}

int cmd_euler(const Common& c, const std::string& dims2) {
  Quiver q = load_quiver(c.quiver);
  DimVec a = parse_vec(c.dims);
  DimVec b = dims2.empty() ? a : parse_vec(dims2);
  json out{{"pairing", euler_pairing(q, a, b)},
           {"tits", tits_form(q, a)},
           {"dims", a},
           {"dims2", b}};
  emit(out);
  return kExitOk;
}

int cmd_bounds(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  DimVec d = parse_vec(c.dims);
  auto lb = lambda_bound(q, mpq_class(1, 1000));
  Stability th = c.theta.empty() ? default_theta(q, d) : parse_vec(c.theta);
  json out{{"lambda_lower", lb.lower.get_str()},
           {"lambda_upper", lb.upper.get_str()},
           {"effective_m", effective_m(q, d)}};
  try {
    auto beta = beta_of(q, th);
    if (beta.is_dimension_vector) {
      out["beta"] = beta.vec;
      out["sharpened_m"] = sharpened_m(q, d, beta.vec, DimVec(d.size(), 0));
    }
  } catch (const std::domain_error&) {
    // singular Euler matrix: no beta, no sharpened bound
  }
  emit(out);
  return kExitOk;
}

int cmd_check(const Common& c, const std::string& strategy) {
  Quiver q = load_quiver(c.quiver);
  if (c.theta.empty()) throw std::invalid_argument("--theta is required");
  Stability th = parse_vec(c.theta);
  return with_field(c.field, [&](auto f) {
    using F = decltype(f);
    auto m = rep_from_flags(q, f, c);
    StabVerdict<F> v;
    if constexpr (F::kFinite) {
      bool small = true;
      mpz_class total = 1;
      for (long d : m.dims) {
        mpz_class per = 0;
        for (int k = 0; k <= d; ++k) per += detail::gaussian_binomial(f.size(), static_cast<int>(d), k);
        total *= per;
        if (total > c.cap) small = false;
      }
      if (small && strategy == "auto") {
        v = check_semistable_oracle(m, th, c.cap);
      } else {
        v = certify_semistable(m, th, strategy == "auto" ? "crude" : strategy, c.samples, c.seed);
      }
    } else {
      v = certify_semistable(m, th, strategy == "auto" ? "crude" : strategy, c.samples, c.seed);
    }
    emit(verdict_to_json(v, f));
    return v.status == StabStatus::unknown ? kExitUnknown : kExitOk;
  });
}

int cmd_hn(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  Stability th = parse_vec(c.theta);
  return with_field(c.field, [&](auto f) {
    using F = decltype(f);
    if constexpr (F::kFinite) {
      auto m = rep_from_flags(q, f, c);
      auto hn = hn_filtration(m, th, c.cap);
      json chain = json::array(), slopes = json::array();
      for (const auto& w : hn.chain) chain.push_back(subrep_to_json(f, w));
      for (const auto& s : hn.slopes) slopes.push_back(s.get_str());
      emit(json{{"chain", chain}, {"slopes", slopes}});
      return kExitOk;
    } else {
      throw std::invalid_argument("hn needs a finite field (exhaustive oracle)");
      return kExitError;
    }
  });
}

int cmd_jh(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  Stability th = parse_vec(c.theta);
  return with_field(c.field, [&](auto f) {
    using F = decltype(f);
    if constexpr (F::kFinite) {
      auto m = rep_from_flags(q, f, c);
      auto jh = jh_filtration(m, th, c.cap);
      json steps = json::array();
      for (const auto& w : jh.steps) steps.push_back(subrep_to_json(f, w));
      auto g = gr(jh);
      auto poly = is_polystable(m, th, c.cap);
      json out{{"steps", steps}, {"gr", rep_to_json(g)}};
      if (poly)
        out["polystable"] = *poly;
      else
        out["polystable"] = "unknown";
      emit(out);
      return poly ? kExitOk : kExitUnknown;
    } else {
      throw std::invalid_argument("jh needs a finite field (exhaustive oracle)");
      return kExitError;
    }
  });
}

int cmd_tau(const Common& c, bool inverse) {
  Quiver q = load_quiver(c.quiver);
  return with_field(c.field, [&](auto f) {
    auto m = rep_from_flags(q, f, c);
    auto t = inverse ? tau_minus(m) : tau(m);
    emit(rep_to_json(t));
    return kExitOk;
  });
}

int cmd_semiinv(const Common& c, const std::string& vdims, const std::string& vrep) {
  Quiver q = load_quiver(c.quiver);
  return with_field(c.field, [&](auto f) {
    auto m = rep_from_flags(q, f, c);
    Rep<decltype(f)> v = [&] {
      DimVec vd = parse_vec(vdims);
      if (!vrep.empty()) return rep_from_maps_json(q, f, vd, maps_json(vrep));
      return random_rep(q, vd, f, c.seed);
    }();
    auto s = semi_invariant(m, v);
    emit(json{{"value", f.to_string(s)}, {"nonzero", !f.is_zero(s)}, {"v", rep_to_json(v)}});
    return kExitOk;
  });
}

int cmd_separate(const Common& c, const std::vector<std::string>& others) {
  Quiver q = load_quiver(c.quiver);
  Stability th = parse_vec(c.theta);
  return with_field(c.field, [&](auto f) {
    auto m0 = rep_from_flags(q, f, c);
    std::vector<Rep<decltype(f)>> ml;
    for (const auto& o : others)
      ml.push_back(rep_from_maps_json(q, f, parse_vec(c.dims), maps_json(o)));
    auto n = separating_semi_invariant(m0, ml, th, c.samples, c.seed, c.cap);
    if (!n) {
      emit(json{{"status", "unknown"}});
      return kExitUnknown;
    }
    emit(json{{"status", "found"}, {"n", rep_to_json(*n)}});
    return kExitOk;
  });
}

int cmd_langton(const Common& c, int max_iter, bool assume) {
  Quiver q = load_quiver(c.quiver);
  Stability th = parse_vec(c.theta);
  if (c.field.rfind("ratfun:fq:", 0) != 0)
    throw std::invalid_argument("langton needs --field ratfun:fq:<p>");
  return with_field(c.field, [&](auto f) {
    using F = decltype(f);
    if constexpr (std::is_same_v<F, RationalFunctionField<FiniteField>>) {
      auto m = rep_from_flags(q, f, c);
      auto fam = make_dvr_family(q, f, m.dims, m.maps);
      auto res = langton_reduce(fam, th, max_iter, assume, c.samples, c.seed);
      json trace = json::array();
      for (std::size_t i = 0; i < res.trace.size(); ++i) {
        json line{{"iteration", i + 1}, {"destabilizer_dims", res.trace[i]}};
        std::cerr << line.dump() << "\n";  // JSON-lines trace
        trace.push_back(line);
      }
      emit(json{{"family", rep_to_json(generic_fiber(res.family))},
                {"special_fiber", rep_to_json(special_fiber(res.family))},
                {"iterations", res.iterations},
                {"trace", trace}});
      return kExitOk;
    } else {
      throw std::invalid_argument("langton needs --field ratfun:fq:<p>");
      return kExitError;
    }
  });
}

int cmd_random(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  return with_field(c.field, [&](auto f) {
    emit(rep_to_json(random_rep(q, parse_vec(c.dims), f, c.seed)));
    return kExitOk;
  });
}

int cmd_census(const Common& c) {
  Quiver q = load_quiver(c.quiver);
  Stability th = parse_vec(c.theta);
  return with_field(c.field, [&](auto f) {
    using F = decltype(f);
    if constexpr (F::kFinite) {
      DimVec d = parse_vec(c.dims);
      long edim = 0;
      for (const auto& ar : q.arrows()) edim += d[ar.source] * d[ar.target];
      mpz_class total = 1;
      for (long i = 0; i < edim; ++i) {
        total *= f.size();
        if (total > c.cap) throw std::domain_error("census space exceeds cap");
      }
      // enumerate all representations
      auto elems = f.enumerate();
      std::vector<std::size_t> odo(edim, 0);
      long semistable = 0, stable = 0, count_total = 0;
      // proper nonzero subdimension vectors
      std::vector<DimVec> subdims;
      {
        DimVec cur(d.size(), 0);
        for (;;) {
          bool zero = true, full = true;
          for (std::size_t i = 0; i < d.size(); ++i) {
            if (cur[i] != 0) zero = false;
            if (cur[i] != d[i]) full = false;
          }
          if (!zero && !full) subdims.push_back(cur);
          std::size_t i = 0;
          while (i < d.size() && ++cur[i] > d[i]) cur[i++] = 0;
          if (i == d.size()) break;
        }
      }
      std::vector<long> bcounts(subdims.size(), 0);
      // sampled semi-invariant targets
      std::vector<Rep<F>> vs;
      try {
        auto beta = beta_of(q, th);
        if (beta.is_dimension_vector) {
          for (int s = 0; s < 3; ++s) {
            DimVec vd;
            for (long b : beta.vec) vd.push_back(b);
            vs.push_back(random_rep(q, vd, f, Rng(c.seed).child(static_cast<std::uint64_t>(s)).next()));
          }
        }
      } catch (const std::domain_error&) {
      }
      std::vector<long> sigma_nonzero(vs.size(), 0);
      for (;;) {
        std::vector<Matrix<F>> maps;
        long pos = 0;
        for (int a = 0; a < q.arrow_count(); ++a) {
          const auto& ar = q.arrows()[a];
          Matrix<F> mx(f, static_cast<int>(d[ar.target]), static_cast<int>(d[ar.source]));
          for (int r = 0; r < mx.rows; ++r)
            for (int cc = 0; cc < mx.cols; ++cc) mx.at(r, cc) = elems[odo[pos++]];
          maps.push_back(std::move(mx));
        }
        auto m = make_rep(q, f, d, std::move(maps));
        ++count_total;
        if (theta_eval(th, d) == 0) {
          auto v = check_semistable_oracle(m, th, c.cap);
          if (v.status != StabStatus::unstable) ++semistable;
          if (v.status == StabStatus::stable) ++stable;
        }
        auto subs = enumerate_subreps(m, {}, c.cap);
        for (std::size_t si = 0; si < subdims.size(); ++si)
          for (const auto& w : subs)
            if (subrep_dims(w) == subdims[si]) {
              ++bcounts[si];
              break;
            }
        for (std::size_t vi = 0; vi < vs.size(); ++vi)
          if (euler_pairing(q, d, vs[vi].dims) == 0 && !f.is_zero(semi_invariant(m, vs[vi])))
            ++sigma_nonzero[vi];
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == elems.size()) odo[i++] = 0;
        if (i == odo.size() || edim == 0) break;
      }
      json bs = json::array();
      for (std::size_t si = 0; si < subdims.size(); ++si) {
        json b{{"dims", subdims[si]}, {"count", bcounts[si]}};
        if (bcounts[si] > 0)
          b["observed_exponent"] = std::log(static_cast<double>(bcounts[si])) / std::log(static_cast<double>(f.size()));
        DimVec dpp;
        for (std::size_t i = 0; i < d.size(); ++i) dpp.push_back(d[i] - subdims[si][i]);
        b["bound_b1"] = -euler_pairing(q, subdims[si], dpp);
        bs.push_back(std::move(b));
      }
      json sig = json::array();
      for (std::size_t vi = 0; vi < vs.size(); ++vi)
        sig.push_back(json{{"v_dims", vs[vi].dims}, {"nonzero_count", sigma_nonzero[vi]}});
      emit(json{{"total", count_total},
                {"rep_space_dim", edim},
                {"semistable", semistable},
                {"stable", stable},
                {"B", bs},
                {"sigma", sig}});
      return kExitOk;
    } else {
      throw std::invalid_argument("census needs a finite field");
      return kExitError;
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quiver representations"};
  app.require_subcommand(1);

  Common c;
  std::string dims2, strategy = "auto", vdims, vrep;
  std::vector<std::string> others;
  int max_iter = 100;
  bool inverse = false, assume = false;

  auto* info = app.add_subcommand("info", "quiver structure and Euler matrix");
  add_common(info, c);
  auto* euler = app.add_subcommand("euler", "Euler pairing and Tits form");
  add_common(euler, c);
  euler->add_option("--dims2", dims2, "second dimension vector");
  auto* bounds = app.add_subcommand("bounds", "lambda bracket and effective bounds");
  add_common(bounds, c);
  auto* check = app.add_subcommand("check", "semistability verdict with certificate");
  add_common(check, c);
  check->add_option("--strategy", strategy, "auto | crude | sharp");
  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration");
  add_common(hn, c);
  auto* jh = app.add_subcommand("jh", "Jordan-Hoelder filtration and polystability");
  add_common(jh, c);
  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate");
  add_common(tau_cmd, c);
  tau_cmd->add_flag("--inverse", inverse, "compute the inverse translate");
  auto* semiinv = app.add_subcommand("semiinv", "determinantal semi-invariant");
  add_common(semiinv, c);
  semiinv->add_option("--vdims", vdims, "dimension vector of V")->required();
  semiinv->add_option("--vrep", vrep, "structure maps of V (random when omitted)");
  auto* separate = app.add_subcommand("separate", "separating semi-invariant search");
  add_common(separate, c);
  separate
      ->add_option("--other", others,
                   "structure maps of a representation to separate from; repeatable")
      ->allow_extra_args(false);
  auto* langton = app.add_subcommand("langton", "semistable reduction over k[t]_(t)");
  add_common(langton, c);
  langton->add_option("--max-iter", max_iter, "iteration cap");
  langton->add_flag("--assume-generic-semistable", assume, "skip generic-fiber certification");
  auto* random = app.add_subcommand("random", "seeded random representation");
  add_common(random, c);
  auto* census = app.add_subcommand("census", "exhaustive census over a finite field");
  add_common(census, c);

  CLI11_PARSE(app, argc, argv);

  try {
    normalize_rep(c);
    if (info->parsed()) return cmd_info(c);
    if (euler->parsed()) return cmd_euler(c, dims2);
    if (bounds->parsed()) return cmd_bounds(c);
    if (check->parsed()) return cmd_check(c, strategy);
    if (hn->parsed()) return cmd_hn(c);
    if (jh->parsed()) return cmd_jh(c);
    if (tau_cmd->parsed()) return cmd_tau(c, inverse);
    if (semiinv->parsed()) return cmd_semiinv(c, vdims, vrep);
    if (separate->parsed()) return cmd_separate(c, others);
    if (langton->parsed()) return cmd_langton(c, max_iter, assume);
    if (random->parsed()) return cmd_random(c);
    if (census->parsed()) return cmd_census(c);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kExitError;
  }
  return kExitError;
}
