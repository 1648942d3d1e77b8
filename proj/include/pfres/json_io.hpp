#ifndef PFRES_JSON_IO_HPP
#define PFRES_JSON_IO_HPP

// JSON job files and certificates. Polynomials travel as strings in the parser grammar.
//
//   {"ring": {"vars": ["x", "y", ...], "char": 0 | p},
//    "matrix": [["poly", ...], ...], "twists": [...], "t": int,
//    "ideal": ["poly", ...],
//    "module": {"target_twists": [...], "source_twists": [...], "matrix": [[...], ...]},
//    "complex": {"min_index": int, "modules": [[...], ...], "maps": [matrix, ...]}}
//
// maps[k] is d_{min_index + k + 1} : modules[k + 1] -> modules[k].

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfres/cohomology.hpp"
#include "pfres/exactness.hpp"
#include "pfres/graded.hpp"
#include "pfres/parser.hpp"

namespace pfres::json_io {

using nlohmann::json;

// A schema violation at a JSON pointer.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : std::invalid_argument((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

inline std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return path + "/" + k;
}
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(path, key), "missing");
  return *it;
}

inline long long read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<long long>();
}

inline std::vector<int> read_ints(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(static_cast<int>(read_int(v[i], child(path, i))));
  return out;
}

struct RingSpec {
  std::vector<std::string> vars;
  std::uint32_t characteristic = 0;
};

inline RingSpec read_ring(const json& doc, std::optional<std::uint32_t> char_override = std::nullopt) {
  const json& r = require(doc, "", "ring");
  RingSpec spec;
  const json& vars = require(r, "/ring", "vars");
  if (!vars.is_array() || vars.empty()) throw SchemaError("/ring/vars", "expected a nonempty array of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) throw SchemaError(child("/ring/vars", i), "expected a string");
    spec.vars.push_back(vars[i].get<std::string>());
  }
  if (r.contains("char")) {
    long long c = read_int(r["char"], "/ring/char");
    if (c < 0 || c >= (1LL << 31)) throw SchemaError("/ring/char", "characteristic out of range");
    spec.characteristic = static_cast<std::uint32_t>(c);
  }
  if (char_override) spec.characteristic = *char_override;
  if (spec.characteristic == 1 || (spec.characteristic > 1 && !PrimeField::is_prime(spec.characteristic)))
    throw SchemaError("/ring/char", "characteristic must be 0 or a prime");
  return spec;
}

template <Field F>
Polynomial<F> read_poly(const json& v, const RingPtr<F>& ring, const std::string& path) {
  if (v.is_number_integer()) return Polynomial<F>::constant(ring, v.get<long long>());
  if (!v.is_string()) throw SchemaError(path, "expected a polynomial string");
  try {
    return parse_poly(v.get<std::string>(), ring);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

template <Field F>
std::vector<Polynomial<F>> read_polys(const json& v, const RingPtr<F>& ring, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of polynomials");
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_poly(v[i], ring, child(path, i)));
  return out;
}

// rows x cols; a matrix with no rows is [], one with no columns is [[], ...].
template <Field F>
PolyMatrix<F> read_matrix(const json& v, const RingPtr<F>& ring, const std::string& path,
                          std::optional<std::size_t> rows = std::nullopt, std::optional<std::size_t> cols = std::nullopt) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of rows");
  if (rows && v.size() != *rows)
    throw SchemaError(path, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(v.size()));
  std::size_t c = cols.value_or(v.empty() ? 0 : (v[0].is_array() ? v[0].size() : 0));
  PolyMatrix<F> m(ring, v.size(), c);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rp = child(path, i);
    if (!v[i].is_array()) throw SchemaError(rp, "expected a row array");
    if (v[i].size() != c)
      throw SchemaError(rp, "expected " + std::to_string(c) + " entries, got " + std::to_string(v[i].size()));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = read_poly(v[i][j], ring, child(rp, j));
  }
  return m;
}

template <Field F>
GradedMap<F> make_map(Twists src, Twists tgt, PolyMatrix<F> m, const std::string& path) {
  try {
    return GradedMap<F>(std::move(src), std::move(tgt), std::move(m));
  } catch (const DegreeError& e) {
    throw SchemaError(path, e.what());
  }
}

template <Field F>
PresentedModule<F> read_module(const json& v, const RingPtr<F>& ring, const std::string& path) {
  Twists tgt = read_ints(require(v, path, "target_twists"), child(path, "target_twists"));
  Twists src = v.contains("source_twists") ? read_ints(v["source_twists"], child(path, "source_twists")) : Twists{};
  PolyMatrix<F> m(ring, tgt.size(), src.size());
  if (v.contains("matrix")) m = read_matrix(v["matrix"], ring, child(path, "matrix"), tgt.size(), src.size());
  return PresentedModule<F>(make_map(std::move(src), std::move(tgt), std::move(m), child(path, "matrix")));
}

// Complex from its JSON description; NotAComplex escapes to the caller.
template <Field F>
FreeComplex<F> read_complex(const json& v, const RingPtr<F>& ring, const std::string& path) {
  const int lo = v.contains("min_index") ? static_cast<int>(read_int(v["min_index"], child(path, "min_index"))) : 0;
  const json& mv = require(v, path, "modules");
  const std::string mp = child(path, "modules");
  if (!mv.is_array() || mv.empty()) throw SchemaError(mp, "expected a nonempty array of twist lists");
  std::vector<Twists> mods;
  for (std::size_t i = 0; i < mv.size(); ++i) mods.push_back(read_ints(mv[i], child(mp, i)));
  const json& maps_v = require(v, path, "maps");
  const std::string ap = child(path, "maps");
  if (!maps_v.is_array() || maps_v.size() + 1 != mods.size())
    throw SchemaError(ap, "expected " + std::to_string(mods.size() - 1) + " maps");
  std::vector<GradedMap<F>> maps;
  for (std::size_t k = 0; k + 1 < mods.size(); ++k) {
    auto m = read_matrix(maps_v[k], ring, child(ap, k), mods[k].size(), mods[k + 1].size());
    maps.push_back(make_map(mods[k + 1], mods[k], std::move(m), child(ap, k)));
  }
  return FreeComplex<F>(ring, lo, std::move(mods), std::move(maps));
}

template <Field F>
json write_polys(const std::vector<Polynomial<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <Field F>
json write_matrix(const PolyMatrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write_polys(m.row(i)));
  return out;
}

template <Field F>
json write_ring(const RingPtr<F>& ring) {
  return {{"vars", ring->variables()}, {"char", ring->characteristic()}};
}

template <Field F>
json write_module(const PresentedModule<F>& m) {
  return {{"target_twists", m.generators()},
          {"source_twists", m.relations()},
          {"matrix", write_matrix(m.presentation().matrix())}};
}

template <Field F>
json write_complex(const FreeComplex<F>& c) {
  json maps = json::array();
  for (const auto& d : c.maps()) maps.push_back(write_matrix(d.matrix()));
  return {{"min_index", c.min_index()}, {"modules", c.modules()}, {"maps", maps}};
}

inline json write_be(const BECertificate& c) {
  json pos = json::array();
  for (const auto& p : c.positions)
    pos.push_back({{"index", p.index},
                   {"module_rank", p.module_rank},
                   {"map_rank", p.map_rank},
                   {"grade", grade_to_string(p.grade)},
                   {"grade_exact", p.grade_exact},
                   {"required_grade", grade_to_string(p.required_grade)},
                   {"rank_ok", p.rank_ok},
                   {"grade_ok", p.grade_ok}});
  return {{"exact", c.exact},
          {"is_complex", c.is_complex},
          {"mode", to_string(c.mode)},
          {"positions", pos},
          {"violations", c.violations}};
}

inline json write_table(const CohomologyTable& t) {
  return {{"kind", t.kind == TableKind::sheaf ? "sheaf" : "local"},
          {"N", t.N},
          {"tmin", t.window.tmin},
          {"tmax", t.window.tmax},
          {"h", t.h}};
}

}  // namespace pfres::json_io

#endif  // PFRES_JSON_IO_HPP
