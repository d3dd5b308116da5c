// Command-line front end for the gentle library.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gentle/gentle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gentle;

constexpr int kSchema = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quiver_file;
  std::string dim, rank, eps, lambda;
  std::string dim2, rank2, lambda2;
  std::string theta;
  std::string at;
  std::string ratio;
  unsigned prime = 5;
  unsigned long long seed = 1;
  bool json = false;
  bool band = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read quiver file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Flag values are user input: malformed values are usage errors.
template <class F>
auto flag(F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

json vector_json(const GentleAlgebra& alg, const DimensionVector& d) {
  json j = json::object();
  for (std::size_t i = 0; i < d.size(); ++i) j[alg.vertex_name(i)] = d[i];
  return j;
}

json vector_json(const GentleAlgebra& alg, const Weight& w) {
  json j = json::object();
  for (std::size_t i = 0; i < w.size(); ++i) j[alg.vertex_name(i)] = w[i];
  return j;
}

json vector_json(const GentleAlgebra& alg, const RankFunction& r) {
  json j = json::object();
  for (std::size_t i = 0; i < r.size(); ++i) j[alg.arrow(i).name] = r[i];
  return j;
}

std::string gamma_vertex_name(const GentleAlgebra& alg, const UpDownGraph& g, std::size_t v) {
  return "v" + std::to_string(g.vertices()[v].index) + "^" + alg.vertex_name(g.vertices()[v].q_vertex);
}

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, Rational>)
        row.push_back(m(r, c).get_str());
      else
        row.push_back(m(r, c).to_string());
    }
    rows.push_back(row);
  }
  return rows;
}

template <class T>
std::string matrix_text(const Matrix<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return "  (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")\n";
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, Rational>)
        out += (c ? " " : "") + m(r, c).get_str();
      else
        out += (c ? " " : "") + m(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

struct Session {
  const Options& opt;
  GentleAlgebra alg;

  explicit Session(const Options& o) : opt(o), alg(parse_quiver(read_file(o.quiver_file))) {}

  DimensionVector dim(const std::string& text, const char* name) const {
    if (text.empty()) throw UsageError(std::string("missing ") + name);
    return flag([&] { return parse_dimension_vector(alg, text); });
  }
  RankFunction rank(const std::string& text, const char* name) const {
    if (text.empty()) throw UsageError(std::string("missing ") + name);
    return flag([&] { return parse_rank_function(alg, text); });
  }
  SignFunction eps() const {
    return flag([&] { return SignFunction::with_overrides(alg, parse_signs(alg, opt.eps)); });
  }

  // Band parameters by label; unlisted bands get seeded random values if `fill`.
  std::vector<MultiPoly> band_params(const UpDownData& data, const std::string& text, bool symbolic_default,
                                     std::mt19937_64& rng, json* used) const {
    auto given = flag([&] { return parse_parameters(text); });
    for (const auto& [label, value] : given) {
      bool known = false;
      for (std::size_t k = 0; k < data.band_count(); ++k) known = known || UpDownData::band_label(k) == label;
      if (!known) throw UsageError("no band labelled '" + label + "'");
    }
    std::vector<MultiPoly> out;
    std::uniform_int_distribution<int> pick(2, 97);
    for (std::size_t k = 0; k < data.band_count(); ++k) {
      auto label = UpDownData::band_label(k);
      auto it = given.find(label);
      if (it != given.end()) {
        out.emplace_back(it->second);
        if (used) (*used)[label] = it->second.get_str();
      } else if (symbolic_default) {
        out.push_back(MultiPoly::variable("lambda_" + label));
        if (used) (*used)[label] = "lambda_" + label;
      } else {
        Rational v(pick(rng));
        out.emplace_back(v);
        if (used) (*used)[label] = v.get_str();
      }
    }
    return out;
  }
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const Options& opt) {
  Session s(opt);
  const auto& q = s.alg.quiver();
  json j{{"schema", kSchema}, {"name", q.name}, {"gentle", true}};
  j["vertices"] = q.vertices;
  json arrows = json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"name", a.name}, {"tail", q.vertices[a.tail]}, {"head", q.vertices[a.head]}, {"color", q.colors[a.color]}});
  j["arrows"] = arrows;
  j["colors"] = q.colors;
  json rels = json::array();
  std::string text = "quiver " + q.name + ": " + std::to_string(q.vertices.size()) + " vertices, " +
                     std::to_string(q.arrows.size()) + " arrows, " + std::to_string(q.colors.size()) +
                     " colors\nrelations:";
  for (const auto& [a, b] : relation_pairs(s.alg)) {
    std::string rel = q.arrows[b].name + "*" + q.arrows[a].name;
    rels.push_back(rel);
    text += " " + rel;
  }
  j["relations"] = rels;
  emit(opt, j, text + "\ngentle: yes\n");
  return 0;
}

int cmd_components(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  json list = json::array();
  std::string text = "maximal rank functions for d = " + format_vector(s.alg, d) + ":\n";
  for (const auto& r : maximal_rank_functions(s.alg, d)) {
    bool reg = is_regular(s.alg, d, r);
    list.push_back({{"rank", vector_json(s.alg, r)}, {"regular", reg}});
    text += "  " + format_vector(s.alg, r) + (reg ? "  [regular]" : "") + "\n";
  }
  auto rr = regular_rank_function(s.alg, d);
  json j{{"schema", kSchema}, {"dim", vector_json(s.alg, d)}, {"maximal", list}};
  j["regular_rank"] = rr ? vector_json(s.alg, *rr) : json(nullptr);
  text += "regular rank function: " + (rr ? format_vector(s.alg, *rr) : std::string("none")) + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_decompose(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto r = s.rank(opt.rank, "--rank");
  auto dec = generic_decomposition(s.alg, d, r, s.eps());
  json comps = json::array();
  std::string text;
  for (const auto& e : dec.entries) {
    comps.push_back({{"kind", to_string(e.kind)},
                     {"word", e.word},
                     {"dim", vector_json(s.alg, e.dim)},
                     {"rank", vector_json(s.alg, e.rank)},
                     {"multiplicity", e.multiplicity}});
    text += std::string(to_string(e.kind)) + " x" + std::to_string(e.multiplicity) + "  " + e.word + "\n  dim " +
            format_vector(s.alg, e.dim) + "\n  rank " + format_vector(s.alg, e.rank) + "\n";
  }
  json j{{"schema", kSchema}, {"components", comps}, {"trdeg", dec.transcendence_degree()},
         {"rank_is_maximal", dec.rank_is_maximal}, {"warnings", dec.warnings}};
  text += "trdeg " + std::to_string(dec.transcendence_degree()) + "\n";
  if (!dec.rank_is_maximal) text += "note: rank function is not maximal\n";
  for (const auto& w : dec.warnings) text += "warning: " + w + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_module(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto r = s.rank(opt.rank, "--rank");
  auto data = updown_data(s.alg, d, r, s.eps());
  std::mt19937_64 rng(opt.seed);
  json params = json::object();
  auto lambda = s.band_params(data, opt.lambda, true, rng, &params);
  auto rep = updown_module(s.alg, data, lambda);
  json bands = json::array();
  std::string text;
  for (std::size_t k = 0; k < data.band_count(); ++k) {
    auto base = gamma_vertex_name(s.alg, data.graph, data.base_point[k]);
    bands.push_back({{"label", UpDownData::band_label(k)}, {"word", data.components[data.bands[k]].word},
                     {"base_point", base}, {"parameter", params[UpDownData::band_label(k)]}});
    text += UpDownData::band_label(k) + ": " + data.components[data.bands[k]].word + "  base " + base + "\n";
  }
  json mats = json::object();
  for (std::size_t a = 0; a < s.alg.arrow_count(); ++a) {
    mats[s.alg.arrow(a).name] = matrix_json(rep.maps[a]);
    text += s.alg.arrow(a).name + ":\n" + matrix_text(rep.maps[a]);
  }
  json j{{"schema", kSchema}, {"dim", vector_json(s.alg, d)}, {"bands", bands}, {"matrices", mats}};
  emit(opt, j, text);
  return 0;
}

int cmd_euler(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto e = opt.dim2.empty() ? d : s.dim(opt.dim2, "--dim2");
  long long v = euler_form(s.alg, d, e);
  emit(opt, {{"schema", kSchema}, {"euler", v}}, "<<d, e>> = " + std::to_string(v) + "\n");
  return 0;
}

// The two modules of hom/ext: up-and-down modules at rational parameters.
std::pair<RationalRepresentation, RationalRepresentation> module_pair(const Session& s, json& info) {
  std::mt19937_64 rng(s.opt.seed);
  auto d = s.dim(s.opt.dim, "--dim");
  auto r = s.rank(s.opt.rank, "--rank");
  auto d2 = s.opt.dim2.empty() ? d : s.dim(s.opt.dim2, "--dim2");
  auto r2 = s.opt.rank2.empty() ? r : s.rank(s.opt.rank2, "--rank2");
  auto eps = s.eps();
  auto data1 = updown_data(s.alg, d, r, eps);
  auto data2 = updown_data(s.alg, d2, r2, eps);
  json p1 = json::object(), p2 = json::object();
  auto m = specialize(updown_module(s.alg, data1, s.band_params(data1, s.opt.lambda, false, rng, &p1)), {});
  auto n = specialize(updown_module(s.alg, data2, s.band_params(data2, s.opt.lambda2, false, rng, &p2)), {});
  info["M"] = {{"dim", vector_json(s.alg, d)}, {"parameters", p1}};
  info["N"] = {{"dim", vector_json(s.alg, d2)}, {"parameters", p2}};
  return {m, n};
}

int cmd_hom(const Options& opt) {
  Session s(opt);
  json j{{"schema", kSchema}};
  auto [m, n] = module_pair(s, j);
  auto h = hom_dim(s.alg, m, n);
  j["hom"] = h;
  emit(opt, j, "dim Hom(M, N) = " + std::to_string(h) + "\n");
  return 0;
}

int cmd_ext(const Options& opt) {
  Session s(opt);
  json j{{"schema", kSchema}};
  auto [m, n] = module_pair(s, j);
  auto e = ext1_dim(s.alg, m, n);
  j["ext1"] = e;
  emit(opt, j, "dim Ext^1(M, N) = " + std::to_string(e) + "\n");
  return 0;
}

json presentation_json(const GentleAlgebra& alg, const ProjectivePresentation& pres, std::string& text) {
  json p0 = json::array(), p1 = json::array(), f = json::array();
  for (auto x : pres.p0) p0.push_back(alg.vertex_name(x));
  for (auto x : pres.p1) p1.push_back(alg.vertex_name(x));
  text += "P0 = ";
  for (std::size_t u = 0; u < pres.p0.size(); ++u) text += (u ? " + " : "") + std::string("P") + alg.vertex_name(pres.p0[u]);
  text += pres.p0.empty() ? "0\n" : "\n";
  text += "P1 = ";
  for (std::size_t v = 0; v < pres.p1.size(); ++v) text += (v ? " + " : "") + std::string("P") + alg.vertex_name(pres.p1[v]);
  text += pres.p1.empty() ? "0\n" : "\n";
  for (std::size_t s = 0; s < pres.p1.size(); ++s)
    for (std::size_t u = 0; u < pres.p0.size(); ++u) {
      if (pres.f[s][u].empty()) continue;
      std::string entry;
      json terms = json::array();
      for (const auto& t : pres.f[s][u]) {
        terms.push_back({{"coefficient", t.coefficient.to_string()}, {"path", path_to_string(alg, t.path)}});
        entry += (entry.empty() ? "" : " + ") + std::string("(") + t.coefficient.to_string() + ")*" +
                 path_to_string(alg, t.path);
      }
      f.push_back({{"p1_slot", s}, {"p0_slot", u}, {"terms", terms}});
      text += "F[" + std::to_string(s) + "," + std::to_string(u) + "] = " + entry + "\n";
    }
  return {{"p0", p0}, {"p1", p1}, {"f", f}, {"minimal", pres.minimal}};
}

int cmd_presentation(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto r = s.rank(opt.rank, "--rank");
  auto data = updown_data(s.alg, d, r, s.eps());
  std::mt19937_64 rng(opt.seed);
  json params = json::object();
  std::string text;
  json j{{"schema", kSchema}};
  if (opt.band) {
    auto lambda = s.band_params(data, opt.lambda, true, rng, &params);
    auto pres = band_presentation(s.alg, data, lambda);
    j["method"] = "band";
    j["parameters"] = params;
    j["presentation"] = presentation_json(s.alg, pres, text);
    j["weight"] = vector_json(s.alg, weight_of(s.alg, pres));
    text += "weight " + format_vector(s.alg, weight_of(s.alg, pres)) + "\n";
  } else {
    auto lambda = s.band_params(data, opt.lambda, false, rng, &params);
    auto m = specialize(updown_module(s.alg, data, lambda), {});
    auto md = minimal_presentation_data(s.alg, m);
    j["method"] = "cover";
    j["parameters"] = params;
    j["presentation"] = presentation_json(s.alg, md.presentation, text);
    j["weight"] = vector_json(s.alg, weight_of(s.alg, md.presentation));
    j["pdim_at_most_one"] = md.projective_dimension_at_most_one();
    text += "weight " + format_vector(s.alg, weight_of(s.alg, md.presentation)) + "\npdim <= 1: " +
            (md.projective_dimension_at_most_one() ? "yes" : "no") + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_semiinvariant(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto r = s.rank(opt.rank, "--rank");
  auto d2 = opt.dim2.empty() ? d : s.dim(opt.dim2, "--dim2");
  auto r2 = opt.rank2.empty() ? r : s.rank(opt.rank2, "--rank2");
  auto x = band_pair(s.alg, d, r);
  auto target = updown_data(s.alg, d2, r2);
  if (target.band_count() > 1) throw DomainError("the target module must have at most one band");
  std::vector<MultiPoly> mu;
  if (target.band_count() == 1) mu.push_back(MultiPoly::variable("mu"));
  auto m = updown_module(s.alg, target, mu);
  auto theta = weight_of(s.alg, x.presentation);
  MultiPoly value = schofield_si(s.alg, x.presentation, m);
  json j{{"schema", kSchema}, {"weight", vector_json(s.alg, theta)}, {"value", value.to_string()}};
  std::string text = "weight " + format_vector(s.alg, theta) + "\nvalue " + value.to_string() + "\n";
  bool same = d == d2 && r == r2;
  try {
    auto ex = factor_monomial_times(value, "lambda", "mu",
                                    same ? MultiPoly::variable("lambda") - MultiPoly::variable("mu") : MultiPoly(1));
    j["exponents"] = {{"p", ex.p}, {"l", ex.l}};
    j["unit"] = ex.unit.get_str();
    text += "exponents p=" + std::to_string(ex.p) + " l=" + std::to_string(ex.l) + " unit " + ex.unit.get_str() + "\n";
  } catch (const InvariantError& e) {
    j["exponents"] = nullptr;
    text += "exponents: " + std::string(e.what()) + "\n";
  }
  if (!opt.at.empty() && opt.ratio.empty()) {
    auto values = flag([&] { return parse_parameters(opt.at); });
    Rational v = value.evaluate(values);
    j["at"] = v.get_str();
    text += "at " + opt.at + ": " + v.get_str() + "\n";
  }
  if (!opt.ratio.empty()) {
    auto parts = detail::split(opt.ratio, ':');
    if (parts.size() != 2) throw UsageError("--ratio expects lambda1:lambda2");
    auto l1 = flag([&] { return parse_rational(parts[0]); });
    auto l2 = flag([&] { return parse_rational(parts[1]); });
    auto values = flag([&] { return parse_parameters(opt.at); });
    values["lambda"] = l2;
    Rational den = value.evaluate(values);
    if (den == 0) throw DomainError("ratio denominator vanishes at lambda = " + l2.get_str());
    values["lambda"] = l1;
    Rational ratio = value.evaluate(values) / den;
    j["ratio"] = ratio.get_str();
    text += "ratio " + ratio.get_str() + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_stability(const Options& opt) {
  Session s(opt);
  auto d = s.dim(opt.dim, "--dim");
  auto r = s.rank(opt.rank, "--rank");
  auto data = updown_data(s.alg, d, r, s.eps());
  std::mt19937_64 rng(opt.seed);
  json params = json::object();
  auto lambda = s.band_params(data, opt.lambda, false, rng, &params);
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (reduce_rational(lambda[k].constant_value(), opt.prime) == 0)
      throw DomainError("parameter of " + UpDownData::band_label(k) + " vanishes mod " + std::to_string(opt.prime));
  auto m = specialize(updown_module(s.alg, data, lambda), {});
  Weight theta = opt.theta.empty() ? weight_of(s.alg, minimal_presentation(s.alg, m))
                                   : flag([&] { return parse_weight(s.alg, opt.theta); });
  auto budget = budget_from_environment();
  auto cert = check_stability(s.alg, reduce_mod_p(s.alg, m, opt.prime), theta, budget);
  json realized = json::array();
  for (const auto& v : cert.realized) realized.push_back(vector_json(s.alg, v));
  json j{{"schema", kSchema},
         {"verdict", to_string(cert.verdict)},
         {"prime", cert.prime},
         {"theta", vector_json(s.alg, theta)},
         {"parameters", params},
         {"witness", cert.witness ? vector_json(s.alg, *cert.witness) : json(nullptr)},
         {"realized", realized}};
  std::string text = std::string(to_string(cert.verdict)) + " over F_" + std::to_string(cert.prime) +
                     " for theta " + format_vector(s.alg, theta) + "\n";
  if (cert.witness) text += "witness " + format_vector(s.alg, *cert.witness) + "\n";
  text += std::to_string(cert.realized.size()) + " submodule dimension vectors\n";
  emit(opt, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant theory of acyclic gentle algebras"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("quiver", opt.quiver_file, "quiver file")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
  };
  auto module_flags = [&](CLI::App* sub) {
    sub->add_option("--dim", opt.dim, "dimension vector, v=3,w=4 or 3,4");
    sub->add_option("--rank", opt.rank, "rank function, a=2,b=1");
    sub->add_option("--eps", opt.eps, "sign overrides, vertex:color=+1");
    sub->add_option("--lambda", opt.lambda, "band parameters, b1=2/3");
    sub->add_option("--seed", opt.seed, "seed for unspecified band parameters");
  };
  auto second_module = [&](CLI::App* sub) {
    sub->add_option("--dim2", opt.dim2, "dimension vector of the second module");
    sub->add_option("--rank2", opt.rank2, "rank function of the second module");
    sub->add_option("--lambda2", opt.lambda2, "band parameters of the second module");
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    return sub;
  };

  add("validate", "check the gentle axioms", cmd_validate);
  auto* comp = add("components", "maximal rank functions and the regular one", cmd_components);
  comp->add_option("--dim", opt.dim, "dimension vector")->required();
  auto* dec = add("decompose", "generic decomposition and transcendence degree", cmd_decompose);
  module_flags(dec);
  auto* mod = add("module", "matrices of the up-and-down module", cmd_module);
  module_flags(mod);
  auto* eul = add("euler", "Euler form <<d, e>>", cmd_euler);
  eul->add_option("--dim", opt.dim, "first dimension vector")->required();
  eul->add_option("--dim2", opt.dim2, "second dimension vector (default: --dim)");
  auto* hom = add("hom", "dim Hom(M, N) of up-and-down modules", cmd_hom);
  module_flags(hom);
  second_module(hom);
  auto* ext = add("ext", "dim Ext^1(M, N) of up-and-down modules", cmd_ext);
  module_flags(ext);
  second_module(ext);
  auto* pres = add("presentation", "minimal projective presentation", cmd_presentation);
  module_flags(pres);
  pres->add_flag("--band", opt.band, "use the band presentation (all components must be bands)");
  auto* si = add("semiinvariant", "Schofield semi-invariant of a band", cmd_semiinvariant);
  si->add_option("--dim", opt.dim, "dimension vector of the band X")->required();
  si->add_option("--rank", opt.rank, "rank function of the band X")->required();
  si->add_option("--dim2", opt.dim2, "dimension vector of the target module (default: X's)");
  si->add_option("--rank2", opt.rank2, "rank function of the target module (default: X's)");
  si->add_option("--at", opt.at, "evaluate at lambda=..,mu=..");
  si->add_option("--ratio", opt.ratio, "ratio of values at lambda1:lambda2 (mu from --at)");
  auto* st = add("stability", "King stability over F_p", cmd_stability);
  module_flags(st);
  st->add_option("--theta", opt.theta, "weight (default: theta of the module's presentation)");
  st->add_option("--prime", opt.prime, "prime <= 13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : app.get_subcommands())
      if (handlers.count(sub)) return handlers[sub](opt);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const gentle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
