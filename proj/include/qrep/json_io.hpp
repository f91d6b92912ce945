#pragma once

#include <string>

#include "json.hpp"
#include "qrep/dvr.hpp"
#include "qrep/parse.hpp"
#include "qrep/stability.hpp"

namespace qrep {

using json = nlohmann::json;

// --- quivers ----------------------------------------------------------------

inline json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  json labels = json::array();
  for (int i = 0; i < q.vertex_count(); ++i) labels.push_back(std::to_string(i + 1));
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}, {"labels", labels}};
}

inline Quiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw std::invalid_argument("quiver JSON needs \"vertices\" and \"arrows\"");
  int n = j.at("vertices").get<int>();
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arrow must be a [source,target] pair");
    arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  }
  return Quiver(n, arrows);
}

// Named fixtures: a2, a3, jordan, kronecker:n, subspace:n.
inline Quiver fixture_quiver(const std::string& name) {
  if (name == "a2") return Quiver(2, {{0, 1}});
  if (name == "a3") return Quiver(3, {{0, 1}, {1, 2}});
  if (name == "jordan") return Quiver(1, {{0, 0}});
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    int n = std::stoi(name.substr(colon + 1));
    if (n < 1) throw std::invalid_argument("fixture parameter must be positive");
    if (head == "kronecker") {
      std::vector<Arrow> arrows(n, {0, 1});
      return Quiver(2, arrows);
    }
    if (head == "subspace") {
      std::vector<Arrow> arrows;
      for (int i = 0; i < n; ++i) arrows.push_back({i, n});
      return Quiver(n + 1, arrows);
    }
  }
  throw std::invalid_argument("unknown quiver fixture: " + name);
}

// --- matrices and representations -------------------------------------------

template <class F>
json matrix_to_json(const F& f, const Matrix<F>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(f.to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
typename F::Elem elem_from_json(const F& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long>());
  if (j.is_string()) return parse_elem(f, j.get<std::string>());
  throw std::invalid_argument("matrix entry must be an integer or an expression string");
}

// Accepts rows-of-entries, or a flat entry list of the right length.
template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, int rows, int cols) {
  Matrix<F> m(f, rows, cols);
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array");
  bool nested = !j.empty() && j.at(0).is_array();
  if (nested) {
    if (static_cast<int>(j.size()) != rows) throw std::invalid_argument("matrix has wrong row count");
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(j.at(r).size()) != cols)
        throw std::invalid_argument("matrix has wrong column count");
      for (int c = 0; c < cols; ++c) m.at(r, c) = elem_from_json(f, j.at(r).at(c));
    }
  } else {
    if (static_cast<long>(j.size()) != static_cast<long>(rows) * cols)
      throw std::invalid_argument("flat matrix has wrong entry count");
    long k = 0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = elem_from_json(f, j.at(k++));
  }
  return m;
}

template <class F>
json rep_to_json(const Rep<F>& m) {
  json maps = json::array();
  for (const auto& mx : m.maps) maps.push_back(matrix_to_json(m.field, mx));
  return {{"quiver", quiver_to_json(m.quiver)},
          {"field", m.field.name()},
          {"dims", m.dims},
          {"maps", maps}};
}

template <class F>
Rep<F> rep_from_maps_json(const Quiver& q, const F& f, const DimVec& dims, const json& maps) {
  if (!maps.is_array() || static_cast<int>(maps.size()) != q.arrow_count())
    throw std::invalid_argument("maps array must have one matrix per arrow");
  std::vector<Matrix<F>> ms;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    ms.push_back(matrix_from_json(f, maps.at(a), static_cast<int>(dims[ar.target]),
                                  static_cast<int>(dims[ar.source])));
  }
  return make_rep(q, f, dims, std::move(ms));
}

template <class F>
Rep<F> rep_from_json(const Quiver& q, const F& f, const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("maps"))
    throw std::invalid_argument("representation JSON needs \"dims\" and \"maps\"");
  DimVec dims = j.at("dims").get<DimVec>();
  return rep_from_maps_json(q, f, dims, j.at("maps"));
}

template <class F>
json subrep_to_json(const F& f, const Subrep<F>& w) {
  json inc = json::array();
  for (const auto& mx : w.inc) inc.push_back(matrix_to_json(f, mx));
  return {{"dims", subrep_dims(w)}, {"inclusions", inc}};
}

template <class F>
json verdict_to_json(const StabVerdict<F>& v, const F& f) {
  json j{{"status", to_string(v.status)}, {"method", v.method}};
  if (v.destabilizer) j["certificate"] = subrep_to_json(f, *v.destabilizer);
  if (v.strict_witness) j["strict_witness"] = subrep_to_json(f, *v.strict_witness);
  if (v.hom_vanisher) j["certificate"] = rep_to_json(*v.hom_vanisher);
  return j;
}

// --- field specs ------------------------------------------------------------

// Dispatch on a field spec ("rat", "fq:p[^k]", "ratfun:<base>") and call fn
// with the corresponding field object.
template <class Fn>
auto with_field(const std::string& spec, Fn&& fn) {
  if (spec == "rat") return fn(Rationals{});
  if (spec.rfind("fq:", 0) == 0) {
    std::string rest = spec.substr(3);
    auto caret = rest.find('^');
    std::uint64_t p = std::stoull(rest.substr(0, caret));
    unsigned k = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(rest.substr(caret + 1)));
    return fn(FiniteField::extension(p, k));
  }
  if (spec.rfind("ratfun:", 0) == 0) {
    std::string base = spec.substr(7);
    if (base == "rat") return fn(RationalFunctionField<Rationals>(Rationals{}));
    if (base.rfind("fq:", 0) == 0) {
      std::string rest = base.substr(3);
      auto caret = rest.find('^');
      std::uint64_t p = std::stoull(rest.substr(0, caret));
      unsigned k = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(rest.substr(caret + 1)));
      return fn(RationalFunctionField<FiniteField>(FiniteField::extension(p, k)));
    }
  }
  throw std::invalid_argument("unknown field spec: " + spec);
}

}  // namespace qrep
