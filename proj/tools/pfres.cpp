// pfres: command-line front end.
//
//   pfres <command> [file] [--json] [--seed N] [--char p] [--tmin a --tmax b] [--length-bound n]
//
// Reads a JSON job (file or stdin), prints a text report or the certificate as JSON.
// Exit status: 0 PASS, 1 FAILED, 2 input error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfres/json_io.hpp"
#include "pfres/pfres.hpp"

namespace {

using namespace pfres;
using json_io::json;
using json_io::SchemaError;

enum Exit { pass = 0, failed = 1, input_error = 2 };

struct Options {
  std::string command;
  std::string input = "-";
  bool json = false;
  bool full = false;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> characteristic;
  std::optional<int> tmin, tmax;
  std::optional<int> length_bound;
  std::string mode;
  std::string kind;
};

struct Outcome {
  int status = pass;
  json cert = json::object();
  std::string text;
};

// An input that is well formed but rejected by a precondition of the operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAILED"; }

Outcome finish(Outcome o, bool ok) {
  o.status = ok ? pass : failed;
  o.cert["status"] = verdict(ok);
  return o;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// Betti table: column k, row a - k, entry the number of generators of F_k in degree a.
template <Field F>
std::string betti_table(const FreeComplex<F>& c) {
  if (c.empty()) return "(zero complex)\n";
  std::map<int, std::map<int, int>> rows;
  for (auto [key, mult] : c.betti()) rows[key.second - key.first][key.first] += mult;
  std::ostringstream os;
  os << std::setw(7) << "";
  for (int k = c.min_index(); k <= c.max_index(); ++k) os << std::setw(4) << k;
  os << "\n" << std::setw(7) << "total:";
  for (int k = c.min_index(); k <= c.max_index(); ++k) os << std::setw(4) << c.rank(k);
  os << "\n";
  for (const auto& [r, cols] : rows) {
    os << std::setw(6) << r << ":";
    for (int k = c.min_index(); k <= c.max_index(); ++k) {
      auto it = cols.find(k);
      os << std::setw(4) << (it == cols.end() ? std::string(".") : std::to_string(it->second));
    }
    os << "\n";
  }
  return os.str();
}

std::string be_text(const BECertificate& c) {
  std::ostringstream os;
  os << "exactness (" << to_string(c.mode) << "): " << (c.exact ? "EXACT" : "NOT CERTIFIED") << "\n";
  os << "  index  rank  map_rank  grade  needed\n";
  for (const auto& p : c.positions)
    os << std::setw(7) << p.index << std::setw(6) << p.module_rank << std::setw(10) << p.map_rank << std::setw(7)
       << (grade_to_string(p.grade) + (p.grade_exact ? "" : "+")) << std::setw(8) << grade_to_string(p.required_grade)
       << (p.rank_ok && p.grade_ok ? "" : "  <-- violated") << "\n";
  return os.str();
}

std::string violations_text(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += "violated: " + x + "\n";
  return s;
}

ExactnessMode parse_mode(const std::string& m) {
  if (m == "resolution") return ExactnessMode::resolution;
  if (m == "acyclic") return ExactnessMode::acyclic;
  if (m == "punctured") return ExactnessMode::punctured;
  throw SchemaError("/mode", "unknown exactness mode '" + m + "'");
}

std::string string_field(const json& doc, const std::string& key, const std::string& fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_string()) throw SchemaError("/" + key, "expected a string");
  return doc[key].get<std::string>();
}

int int_field(const json& doc, const std::string& key) {
  return static_cast<int>(json_io::read_int(json_io::require(doc, "", key), "/" + key));
}

template <Field F>
PolyMatrix<F> read_skew(const json& doc, const RingPtr<F>& ring) {
  auto m = json_io::read_matrix(json_io::require(doc, "", "matrix"), ring, "/matrix");
  if (m.rows() != m.cols()) throw SchemaError("/matrix", "matrix is not square");
  if (auto d = skew_defect(m)) throw SchemaError("/matrix", *d);
  return m;
}

template <Field F>
PresentedModule<F> read_module_or_quotient(const json& doc, const RingPtr<F>& ring) {
  if (doc.contains("module")) return json_io::read_module(doc["module"], ring, "/module");
  if (doc.contains("ideal")) {
    auto gens = json_io::read_polys(doc["ideal"], ring, "/ideal");
    Twists src;
    PolyMatrix<F> row(ring, 1, gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_homogeneous()) throw SchemaError("/ideal/" + std::to_string(i), "not homogeneous");
      src.push_back(std::max(gens[i].max_degree(), 0));
      row(0, i) = gens[i];
    }
    return PresentedModule<F>(json_io::make_map(src, {0}, row, "/ideal"));
  }
  throw SchemaError("/module", "missing (give \"module\" or \"ideal\")");
}

template <Field F>
Window window_for(const PresentedModule<F>& m, const Options& o) {
  if (o.tmin && o.tmax) {
    if (*o.tmin > *o.tmax) throw InputError("--tmin exceeds --tmax");
    return {*o.tmin, *o.tmax};
  }
  Window w = default_window(minimal_free_resolution(m, static_cast<int>(m.ring()->nvars())));
  if (o.tmin) w.tmin = *o.tmin;
  if (o.tmax) w.tmax = *o.tmax;
  if (w.tmin > w.tmax) throw InputError("empty degree window");
  return w;
}

// ---- commands

template <Field F>
Outcome cmd_pf(const json& doc, const RingPtr<F>& ring, const Options& o) {
  auto m = read_skew(doc, ring);
  Outcome out;
  out.cert["size"] = m.rows();
  if (o.full || m.rows() % 2 == 0) {
    if (m.rows() % 2 != 0) throw InputError("pfaffian: even size required, got " + std::to_string(m.rows()));
    auto p = pfaffian(m);
    out.cert["pfaffian"] = to_string(p);
    out.text = "pf = " + to_string(p) + "\n";
  } else {
    auto g = sub_pfaffians(m);
    out.cert["sub_pfaffians"] = json_io::write_polys(g);
    for (std::size_t i = 0; i < g.size(); ++i) out.text += "g" + std::to_string(i + 1) + " = " + to_string(g[i]) + "\n";
  }
  return finish(std::move(out), true);
}

template <Field F>
FreeComplex<F> build_from(const json& doc, const RingPtr<F>& ring) {
  auto m = read_skew(doc, ring);
  auto e = json_io::read_ints(json_io::require(doc, "", "twists"), "/twists");
  if (e.size() != m.rows())
    throw SchemaError("/twists", "expected " + std::to_string(m.rows()) + " twists, one per row of the matrix");
  if (e.size() % 2 != 1) throw SchemaError("/twists", "E must have odd rank");
  PfaffianTwists tw(e, int_field(doc, "t"));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& p = m(i, j);
      if (!p.is_zero() && (!p.is_homogeneous() || p.max_degree() != tw.entry_degree(i, j)))
        throw SchemaError("/matrix/" + std::to_string(i) + "/" + std::to_string(j),
                          "entry must be a form of degree t + a_i + a_j = " + std::to_string(tw.entry_degree(i, j)));
    }
  return build_pfaffian_resolution(tw, m);
}

template <Field F>
Outcome cmd_build(const json& doc, const RingPtr<F>& ring, const Options&) {
  auto c = build_from(doc, ring);
  Outcome out;
  out.cert["complex"] = json_io::write_complex(c);
  out.text = betti_table(c);
  return finish(std::move(out), true);
}

template <Field F>
Outcome cmd_certify(const json& doc, const RingPtr<F>& ring, const Options&) {
  Outcome out;
  std::optional<FreeComplex<F>> c;
  try {
    c = doc.contains("complex") ? json_io::read_complex(doc["complex"], ring, "/complex") : build_from(doc, ring);
  } catch (const NotAComplex& e) {
    const std::string v = "exactness: not a complex, " + std::string(e.what());
    out.cert["violations"] = {v};
    out.text = "status: FAILED\n" + violations_text({v});
    return finish(std::move(out), false);
  }
  auto cert = certify_pfaffian_scheme(*c);
  std::ostringstream os;
  os << "status: " << verdict(cert.passed) << "\n";
  os << "N: " << cert.N << "\n";
  out.cert["N"] = cert.N;
  out.cert["l"] = cert.l;
  out.cert["exactness"] = json_io::write_be(cert.exactness);
  if (cert.exactness.is_complex) {
    if (cert.codim.empty) {
      os << "codim: unit ideal\n";
      out.cert["codim"] = nullptr;
    } else {
      os << "codim: " << cert.codim.codim << "\n";
      out.cert["codim"] = cert.codim.codim;
    }
  }
  os << "l: " << cert.l << "\n";
  if (!cert.parity) {
    os << "parity: not applicable (n = N - 3 = " << cert.N - 3 << ")\n";
    out.cert["parity"] = {{"applies", false}};
  } else {
    const auto& p = *cert.parity;
    json pj = {{"applies", p.applies}, {"n", p.n}, {"even", p.even}};
    if (p.chi) pj["chi"] = *p.chi;
    if (p.identity_value) pj["identity_value"] = *p.identity_value;
    if (p.identity_holds) pj["identity_holds"] = *p.identity_holds;
    out.cert["parity"] = pj;
    if (!p.applies)
      os << "parity: not applicable";
    else
      os << "parity: chi(O_X(l/2)) = " << *p.chi << (p.even ? " (even)" : " (ODD)");
    if (p.identity_holds) os << ", identity " << (*p.identity_holds ? "holds" : "FAILS");
    os << "\n";
  }
  os << be_text(cert.exactness);
  os << violations_text(cert.violations);
  out.cert["violations"] = cert.violations;
  out.text = os.str();
  return finish(std::move(out), cert.passed);
}

template <Field F>
Outcome cmd_pfaffianize(const json& doc, const RingPtr<F>& ring, const Options&) {
  auto gens = json_io::read_polys(json_io::require(doc, "", "ideal"), ring, "/ideal");
  if (ring->characteristic() == 2) throw InputError("pfaffianize: characteristic 2 is not supported");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_homogeneous()) throw SchemaError("/ideal/" + std::to_string(i), "not homogeneous");
  Outcome out;
  try {
    auto r = pfaffianize(Ideal<F>(ring, gens));
    out.cert["matrix"] = json_io::write_matrix(r.skew.matrix());
    out.cert["sub_pfaffians"] = json_io::write_polys(r.pfaffians);
    out.cert["rank_F1"] = r.skew.rows();
    out.cert["e"] = r.resolution.e;
    out.cert["symmetrized"] = r.symmetrized;
    out.cert["ideal_equal"] = r.ideal_equal;
    out.cert["pairing_defect"] = r.pairing_defect ? json(*r.pairing_defect) : json(nullptr);
    out.cert["violations"] = json::array();
    std::ostringstream os;
    os << "status: PASS\nrank F_1: " << r.skew.rows() << "\nlast twist e: " << r.resolution.e << "\n";
    os << "symmetrized: " << (r.symmetrized ? "yes" : "no") << "\nskew matrix:\n";
    for (std::size_t i = 0; i < r.skew.rows(); ++i) {
      os << " ";
      for (std::size_t j = 0; j < r.skew.cols(); ++j) os << " " << to_string(r.skew.matrix()(i, j));
      os << "\n";
    }
    os << "sub-Pfaffians generate the ideal: yes\n";
    out.text = os.str();
    return finish(std::move(out), true);
  } catch (const ShapeError& e) {
    out.cert["violations"] = {std::string("shape: ") + e.what()};
  } catch (const StructureError& e) {
    out.cert["violations"] = {std::string("structure: ") + e.what()};
  }
  out.text = "status: FAILED\n" + violations_text(out.cert["violations"].get<std::vector<std::string>>());
  return finish(std::move(out), false);
}

template <Field F>
Outcome cmd_resolve(const json& doc, const RingPtr<F>& ring, const Options& o) {
  const int bound = o.length_bound.value_or(static_cast<int>(ring->nvars()) + 1);
  if (bound < 1) throw InputError("--length-bound must be positive");
  auto c = minimal_free_resolution(read_module_or_quotient(doc, ring), bound);
  Outcome out;
  out.cert["complex"] = json_io::write_complex(c);
  out.cert["length"] = c.trimmed().max_index();
  out.text = betti_table(c);
  return finish(std::move(out), true);
}

template <Field F>
Outcome cmd_cohomology(const json& doc, const RingPtr<F>& ring, const Options& o) {
  auto m = read_module_or_quotient(doc, ring);
  const std::string kind = o.kind.empty() ? string_field(doc, "kind", "sheaf") : o.kind;
  if (kind != "sheaf" && kind != "local") throw SchemaError("/kind", "expected \"sheaf\" or \"local\"");
  const Window w = window_for(m, o);
  auto tab = kind == "sheaf" ? sheaf_cohomology_table(m, w) : local_cohomology_dims(m, w);
  Outcome out;
  out.cert["table"] = json_io::write_table(tab);
  out.text = format_table(tab);
  return finish(std::move(out), true);
}

template <Field F>
Outcome cmd_horrocks(const json& doc, const RingPtr<F>& ring, const Options& o) {
  auto m = read_module_or_quotient(doc, ring);
  const int i = int_field(doc, "i");
  const int N = ring->projective_dim();
  auto e = horrocks_bundle(m, i, N);
  Window w = o.tmin || o.tmax ? window_for(e, o) : Window{-N - 2, N + 2};
  auto tab = sheaf_cohomology_table(e, w);
  Outcome out;
  out.cert["bundle"] = json_io::write_module(e);
  out.cert["table"] = json_io::write_table(tab);
  out.text = "generators: " + join(e.generators()) + "\nrelations: " + join(e.relations()) + "\n" + format_table(tab);
  return finish(std::move(out), true);
}

template <Field F>
Outcome cmd_lambda2(const json& doc, const RingPtr<F>& ring, const Options& o) {
  std::optional<FreeComplex<F>> g;
  try {
    g = json_io::read_complex(json_io::require(doc, "", "complex"), ring, "/complex");
  } catch (const NotAComplex& e) {
    throw SchemaError("/complex", std::string("not a complex: ") + e.what());
  }
  if (ring->characteristic() == 2) throw InputError("lambda2: characteristic 2 is not supported, use char2-check");
  const ExactnessMode mode = parse_mode(o.mode.empty() ? string_field(doc, "mode", "acyclic") : o.mode);
  auto l = lambda2_complex(*g);
  Outcome out;
  json ranks = json::array();
  std::ostringstream os;
  os << "Lambda^2 term ranks (cohomological degree " << l.min_degree << ".." << l.max_degree << "):";
  for (int i = l.min_degree; i <= l.max_degree; ++i) {
    ranks.push_back(l.complex.rank(-i));
    os << " " << l.complex.rank(-i);
  }
  os << "\n";
  out.cert["ranks"] = ranks;
  out.cert["complex"] = json_io::write_complex(l.complex);
  if (l.complex.trimmed().min_index() == l.complex.trimmed().max_index()) {
    os << "status: PASS (a single term is exact away from it)\n";
    out.cert["violations"] = json::array();
    out.text = os.str();
    return finish(std::move(out), true);
  }
  auto cert = certify_except_lowest(l.complex.trimmed(), mode);
  out.cert["exactness"] = json_io::write_be(cert);
  out.cert["violations"] = cert.violations;
  os << "status: " << verdict(cert.exact) << " (exact except in the lowest degree)\n" << be_text(cert)
     << violations_text(cert.violations);
  out.text = os.str();
  return finish(std::move(out), cert.exact);
}

template <Field F>
Outcome cmd_char2(const json& doc, const RingPtr<F>& ring, const Options& o) {
  Outcome out;
  std::ostringstream os;
  if (doc.contains("twists") && !doc.contains("module") && !doc.contains("ideal")) {
    auto v = json_io::read_ints(doc["twists"], "/twists");
    auto ts = tensor_square_decomposition(ring, v);
    auto defects = tensor_square_defects(ts);
    out.cert["ranks"] = {{"V", ts.v.size()},
                         {"tensor", ts.tensor.size()},
                         {"lambda2", ts.lambda2.size()},
                         {"d2", ts.d2.size()},
                         {"s2", ts.s2.size()}};
    if (ts.frob) out.cert["ranks"]["frobenius"] = ts.frob->size();
    out.cert["violations"] = defects;
    os << "rank V = " << ts.v.size() << ", D_2 = " << ts.d2.size() << ", S_2 = " << ts.s2.size()
       << ", Lambda^2 = " << ts.lambda2.size();
    if (ts.frob) os << ", F(V) = " << ts.frob->size();
    os << "\nstatus: " << verdict(defects.empty()) << "\n" << violations_text(defects);
    out.text = os.str();
    return finish(std::move(out), defects.empty());
  }
  auto m = read_module_or_quotient(doc, ring);
  const int r = int_field(doc, "r");
  std::optional<Window> w;
  if (o.tmin || o.tmax) w = window_for(m, o);
  auto rep = char2_max_cohom_check(m, r, w);
  std::vector<std::string> v;
  if (rep.row_2r != rep.expected)
    v.push_back("row " + std::to_string(2 * r) + " of Lambda^2 E differs from dim " +
                (rep.symmetric ? "S_2" : "Lambda^2") + "(H^r)");
  for (int i : rep.nonzero_above) v.push_back("row " + std::to_string(i) + " above 2r is not zero");
  out.cert["N"] = rep.N;
  out.cert["r"] = rep.r;
  out.cert["compared_with"] = rep.symmetric ? "S_2" : "Lambda^2";
  out.cert["tmin"] = rep.window.tmin;
  out.cert["tmax"] = rep.window.tmax;
  out.cert["row_2r"] = rep.row_2r;
  out.cert["expected"] = rep.expected;
  out.cert["violations"] = v;
  os << "N = " << rep.N << ", r = " << r << ", compared with " << (rep.symmetric ? "S_2" : "Lambda^2") << "(H^r)\n";
  os << std::setw(12) << "t";
  for (int t = rep.window.tmin; t <= rep.window.tmax; ++t) os << std::setw(4) << t;
  os << "\n" << std::setw(12) << ("h^" + std::to_string(2 * r));
  for (auto x : rep.row_2r) os << std::setw(4) << x;
  os << "\n" << std::setw(12) << "expected";
  for (auto x : rep.expected) os << std::setw(4) << x;
  os << "\nstatus: " << verdict(rep.holds()) << "\n" << violations_text(v);
  out.text = os.str();
  return finish(std::move(out), rep.holds());
}

template <Field F>
Outcome cmd_random_skew(const json& doc, const RingPtr<F>& ring, const Options& o) {
  auto e = json_io::read_ints(json_io::require(doc, "", "twists"), "/twists");
  if (e.size() % 2 != 1) throw SchemaError("/twists", "E must have odd rank");
  const int t = int_field(doc, "t");
  double density = 1.0;
  if (doc.contains("density")) {
    if (!doc["density"].is_number() || doc["density"].get<double>() <= 0 || doc["density"].get<double>() > 1)
      throw SchemaError("/density", "expected a number in (0, 1]");
    density = doc["density"].get<double>();
  }
  PfaffianTwists tw(e, t);
  Rng rng(o.seed);
  auto m = random_skew(ring, tw, rng, density);
  Outcome out;
  out.cert = {{"ring", json_io::write_ring(ring)}, {"matrix", json_io::write_matrix(m)}, {"twists", e}, {"t", t},
              {"seed", o.seed}};
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << to_string(m(i, j));
    os << "\n";
  }
  out.text = os.str();
  out.status = pass;
  return out;
}

template <Field F>
Outcome dispatch(const Options& o, const json& doc, const RingPtr<F>& ring) {
  static const std::map<std::string, std::function<Outcome(const json&, const RingPtr<F>&, const Options&)>> table{
      {"pf", cmd_pf<F>},
      {"build", cmd_build<F>},
      {"certify", cmd_certify<F>},
      {"pfaffianize", cmd_pfaffianize<F>},
      {"resolve", cmd_resolve<F>},
      {"cohomology", cmd_cohomology<F>},
      {"horrocks", cmd_horrocks<F>},
      {"lambda2", cmd_lambda2<F>},
      {"char2-check", cmd_char2<F>},
      {"random-skew", cmd_random_skew<F>},
  };
  Outcome out = table.at(o.command)(doc, ring, o);
  out.cert["command"] = o.command;
  return out;
}

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

int run(const Options& o) {
  const json doc = read_document(o.input);
  auto spec = json_io::read_ring(doc, o.characteristic);
  Outcome out;
  if (spec.characteristic == 0)
    out = dispatch(o, doc, make_ring(Rationals{}, spec.vars));
  else
    out = dispatch(o, doc, make_ring(PrimeField(spec.characteristic), spec.vars));
  if (o.json)
    std::cout << out.cert.dump(2) << "\n";
  else
    std::cout << out.text;
  return out.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian resolutions, structure theorem and cohomology checks"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"pf", "Pfaffian (even size) or sub-Pfaffians (odd size) of a skew matrix"},
      {"build", "the four-term resolution of the sub-Pfaffian ideal"},
      {"certify", "exactness, codimension and parity certificate"},
      {"pfaffianize", "recover a skew matrix from a Gorenstein codimension-3 ideal"},
      {"resolve", "minimal free resolution of S/I or a presented module"},
      {"cohomology", "sheaf or local cohomology table"},
      {"horrocks", "syzygy bundle of a finite-length module and its cohomology"},
      {"lambda2", "second exterior power of a complex, certified exact except in degree 0"},
      {"char2-check", "tensor-square ranks, or Lambda^2 cohomology of a syzygy bundle"},
      {"random-skew", "seeded random skew matrix with prescribed twists"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "JSON job file (default: stdin)");
    sub->add_flag("--json", o.json, "print the certificate as JSON");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--char", o.characteristic, "override the characteristic of the ring");
    sub->add_option("--tmin", o.tmin, "lowest twist of the degree window");
    sub->add_option("--tmax", o.tmax, "highest twist of the degree window");
    sub->add_option("--length-bound", o.length_bound, "maximal length of a computed resolution");
    sub->add_option("--mode", o.mode, "exactness mode: resolution, acyclic, punctured");
    sub->add_option("--kind", o.kind, "cohomology kind: sheaf or local");
    if (name == "pf") sub->add_flag("--full", o.full, "demand the full Pfaffian");
    sub->callback([&o, n = name] { o.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }
  try {
    return run(o);
  } catch (const SchemaError& e) {
    std::cerr << "input error at " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return input_error;
}
