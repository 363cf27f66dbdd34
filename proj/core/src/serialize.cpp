#include "torideg/serialize.hpp"

#include "json.hpp"

#include "torideg/error.hpp"
#include "torideg/io.hpp"

namespace torideg {

namespace {

using json = nlohmann::ordered_json;

json rat(const Rational& q) { return to_string(q); }

json vec(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

json zvec(const ZVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json mat(const QMatrix& M) {
  json a = json::array();
  for (const auto& r : M) a.push_back(vec(r));
  return a;
}

json halfspaces(const std::vector<Polytope::Halfspace>& hs) {
  json a = json::array();
  for (const auto& h : hs) a.push_back({{"c0", rat(h.c0)}, {"c", vec(h.c)}});
  return a;
}

Rational read_rat(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational number, got " + j.dump());
}

QVector read_vec(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  QVector v;
  for (const auto& x : j) v.push_back(read_rat(x));
  if (v.size() != n) throw ParseError("vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  return v;
}

QMatrix read_mat(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  QMatrix M;
  for (const auto& r : j) M.push_back(read_vec(r, n));
  return M;
}

json parse_doc(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json cone_json(const Cone& C, const QMatrix& lineality) {
  json rays = json::array();
  std::vector<ZVector> rs;
  try {
    rs = rays_mod_lineality(C, lineality);
  } catch (const DomainError&) {
    for (const auto& r : C.generators().rays) rs.push_back(primitive(r));
  }
  for (const auto& r : rs) rays.push_back(zvec(r));
  return {{"dimension", C.dimension()},
          {"rays", rays},
          {"inequalities", mat(C.inequalities())},
          {"equalities", mat(C.equalities())}};
}

json fan_doc(const Fan& F, std::size_t n) {
  json cones = json::array();
  for (const auto& C : F.cones) cones.push_back(cone_json(C, F.lineality));
  json adj = json::array();
  for (const auto& [a, b] : F.adjacency) adj.push_back({a, b});
  return {{"ambient_dim", n}, {"lineality", mat(F.lineality)}, {"cones", cones}, {"adjacency", adj}};
}

}  // namespace

std::string polytope_to_json(const Polytope& P) {
  json j = {{"ambient_dim", P.ambient_dim()},
            {"affine_dimension", P.affine_dimension()},
            {"vertices", mat(P.vertices())},
            {"facets", halfspaces(P.facets())},
            {"equations", halfspaces(P.equations())}};
  return j.dump(2) + "\n";
}

Polytope polytope_from_json(std::string_view text) {
  json j = parse_doc(text);
  try {
    std::size_t n = j.at("ambient_dim").get<std::size_t>();
    return Polytope(n, read_mat(j.at("vertices"), n));
  } catch (const json::exception& e) {
    throw ParseError(std::string("polytope JSON: ") + e.what());
  }
}

std::string fan_to_json(const Fan& F) {
  std::size_t n = F.cones.empty() ? (F.lineality.empty() ? 0 : F.lineality[0].size()) : F.cones[0].ambient_dim();
  return fan_doc(F, n).dump(2) + "\n";
}

Fan fan_from_json(std::string_view text) {
  json j = parse_doc(text);
  try {
    std::size_t n = j.at("ambient_dim").get<std::size_t>();
    Fan F;
    F.lineality = read_mat(j.at("lineality"), n);
    for (const auto& c : j.at("cones")) F.cones.emplace_back(n, read_mat(c.at("inequalities"), n), read_mat(c.at("equalities"), n));
    for (const auto& e : j.at("adjacency")) {
      auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      if (a >= F.cones.size() || b >= F.cones.size()) throw ParseError("adjacency refers to a missing cone");
      F.adjacency.emplace_back(a, b);
    }
    return F;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fan JSON: ") + e.what());
  }
}

std::string groebner_fan_to_json(const GroebnerFan& G) {
  json j = fan_doc(G.fan(), G.ideal.ring()->nvars());
  j["ring"] = ring_header(*G.ideal.ring());
  for (std::size_t i = 0; i < G.bases.size(); ++i) {
    json basis = json::array(), marks = json::array();
    for (std::size_t k = 0; k < G.bases[i].size(); ++k) {
      basis.push_back(to_string(G.bases[i].elements()[k]));
      marks.push_back(monomial_to_string(G.bases[i].leads()[k], *G.ideal.ring()));
    }
    j["cones"][i]["basis"] = basis;
    j["cones"][i]["initial_ideal"] = marks;
  }
  return j.dump(2) + "\n";
}

std::string tropical_cones_to_json(const std::vector<TropicalCone>& cones) {
  json a = json::array();
  for (const auto& t : cones) {
    json rows = json::array();
    for (const auto& r : t.ray_matrix) rows.push_back(zvec(r));
    json gens = json::array();
    for (const auto& g : t.initial_ideal.generators()) gens.push_back(to_string(g));
    a.push_back({{"dimension", t.dimension},
                 {"lineality_rows", t.lineality_rows},
                 {"ray_matrix", rows},
                 {"initial_ideal", gens},
                 {"monomial_free", t.monomial_free},
                 {"binomial", t.binomial},
                 {"toric", t.toric},
                 {"prime", t.prime}});
  }
  return a.dump(2) + "\n";
}

}  // namespace torideg
