#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "torideg/dataset.hpp"
#include "torideg/degeneration.hpp"
#include "torideg/error.hpp"
#include "torideg/io.hpp"
#include "torideg/serialize.hpp"
#include "torideg/tropical.hpp"
#include "torideg/valuation.hpp"
#include "torideg/wallcross.hpp"

namespace torideg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string dataset;
  std::string ideal_file;
  std::string order = "grevlex";
  std::string rays;
  std::string out;
  std::string format = "text";
  std::string expect;
  std::string matrix;
  std::string chamber_order = "grevlex";
  std::string poly;
  std::string ray1;
  std::string ray2;
  std::string map = "all";
  std::vector<std::string> points;
  std::string at;
  std::string degree;
  std::string cones_from;
  std::string keep;
  long degree_bound = -1;
};

/// Loaded input: the ideal and, for bundled data, its dataset.
struct Input {
  std::optional<Dataset> dataset;
  std::optional<Ideal> ideal;

  const Ideal& I() const { return *ideal; }
  const RingPtr& ring() const { return ideal->ring(); }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Input load_input(const Options& o) {
  Input in;
  if (!o.dataset.empty() && !o.ideal_file.empty()) throw ParseError("give either --dataset or --ideal, not both");
  if (!o.dataset.empty()) {
    in.dataset = Dataset::load(o.dataset);
    in.ideal = in.dataset->ideal();
  } else if (!o.ideal_file.empty()) {
    in.ideal = parse_ideal(read_file(o.ideal_file));
  } else {
    throw ParseError("an input is required: --dataset NAME or --ideal FILE");
  }
  return in;
}

ZVector to_integer_vector(const QVector& q, const std::string& what) {
  ZVector v;
  for (const auto& x : q) {
    if (x.get_den() != 1) throw ParseError(what + " must have integer entries");
    v.push_back(x.get_num());
  }
  return v;
}

bool looks_numeric(const std::string& item) {
  return !item.empty() && (item[0] == '(' || item[0] == '[' || item[0] == '-' || std::isdigit(static_cast<unsigned char>(item[0])));
}

ZVector parse_ray_item(const std::string& item, const Input& in) {
  const std::size_t n = in.ring()->nvars();
  ZVector v;
  if (looks_numeric(item)) {
    v = to_integer_vector(parse_vector(item), "ray '" + item + "'");
  } else if (in.dataset) {
    v = in.dataset->resolve(item);
  } else {
    throw ParseError("ray name '" + item + "' needs a --dataset");
  }
  if (v.size() != n)
    throw ParseError("ray '" + item + "' has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

/// A comma-separated list, or a file with one ray (name, sum or numbers) per line.
ZMatrix parse_rays(const std::string& spec, const Input& in) {
  ZMatrix M;
  if (spec.empty()) return M;
  std::vector<std::string> items;
  if (std::filesystem::is_regular_file(spec)) {
    std::istringstream text(read_file(spec));
    std::string line;
    while (std::getline(text, line)) {
      line = trim(line);
      if (!line.empty() && line[0] != '#') items.push_back(line);
    }
  } else {
    items = split_top(spec, ',');
  }
  for (const auto& item : items) M.push_back(parse_ray_item(item, in));
  return M;
}

QVector parse_point(const std::string& text, std::size_t n, const std::string& what) {
  QVector v = parse_vector(text);
  if (v.size() != n)
    throw ParseError(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

std::vector<long> parse_degree(const std::string& text, const Ring& R) {
  QVector q = parse_point(text, R.grading_rows(), "--degree");
  std::vector<long> d;
  for (const auto& x : q) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw ParseError("--degree entries must be integers");
    d.push_back(x.get_num().get_si());
  }
  return d;
}

QMatrix grading_rows(const Ring& R) {
  QMatrix M;
  for (const auto& row : R.grading()) M.push_back(to_rational(row));
  return M;
}

/// Weighting matrix from --matrix (a file, or `dataset` for the bundled value
/// matrix) or from the grading rows followed by --rays.
QMatrix weighting_rows(const Options& o, const Input& in, bool allow_grading_only = false) {
  const std::size_t n = in.ring()->nvars();
  QMatrix M;
  if (!o.matrix.empty()) {
    if (o.matrix == "dataset") {
      if (!in.dataset || !in.dataset->value_matrix()) throw ParseError("--matrix dataset: the dataset has no value matrix");
      for (const auto& r : *in.dataset->value_matrix()) M.push_back(to_rational(r));
    } else {
      M = parse_matrix(read_file(o.matrix));
    }
    for (const auto& r : M)
      if (r.size() != n) throw ParseError("--matrix rows must have " + std::to_string(n) + " entries");
    if (!o.rays.empty()) throw ParseError("give either --matrix or --rays, not both");
  } else if (!o.rays.empty() || allow_grading_only) {
    M = grading_rows(*in.ring());
    for (const auto& r : parse_rays(o.rays, in)) M.push_back(to_rational(r));
  } else {
    throw ParseError("a weighting is required: --matrix FILE or --rays LIST");
  }
  return M;
}

ValuationProfile make_profile(const Options& o, const Input& in, QMatrix M) {
  ZdOrder lex = ZdOrder::lex(M.size());
  return ValuationProfile(in.I(), WeightingMatrix{std::move(M), lex}, TermOrder::parse(o.chamber_order));
}

ZMatrix integer_lineality(const Ideal& I) { return to_integer_rows_exact(lineality_space(I)); }

std::string polytope_text(const Polytope& P) {
  std::string s = "ambient_dim " + std::to_string(P.ambient_dim()) + "\n";
  s += "dimension " + std::to_string(P.affine_dimension()) + "\n";
  s += "vertices " + std::to_string(P.vertices().size()) + "\n";
  for (const auto& v : P.vertices()) s += "  " + to_string(v) + "\n";
  return s;
}

std::string matrix_rows_text(const ZMatrix& M, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < M.size(); ++i) s += (i > from ? " " : "") + to_string(to_rational(M[i]));
  return s;
}

json zmatrix_json(const ZMatrix& M, std::size_t from = 0) {
  json a = json::array();
  for (std::size_t i = from; i < M.size(); ++i) {
    json r = json::array();
    for (const auto& x : M[i]) r.push_back(to_string(x));
    a.push_back(r);
  }
  return a;
}

json ideal_json(const Ideal& I) {
  json a = json::array();
  for (const auto& g : I.generators()) a.push_back(to_string(g));
  return a;
}

std::string ideal_lines(const Ideal& I, const std::string& indent) {
  std::string s;
  for (const auto& g : I.generators()) s += indent + to_string(g) + "\n";
  return s;
}

/// Output of one command: the text written to --out or stdout, and the exit code.
struct Result {
  std::string text;
  int code = kSuccess;
};

bool json_out(const Options& o) { return o.format == "json"; }

// ---------------------------------------------------------------------------
// Commands.

Result cmd_gb(const Options& o) {
  Input in = load_input(o);
  MarkedGroebnerBasis G = buchberger(in.I(), TermOrder::parse(o.order));
  if (!json_out(o)) return {format_groebner(G)};
  json basis = json::array();
  for (std::size_t i = 0; i < G.size(); ++i)
    basis.push_back({{"poly", to_string(G.elements()[i])}, {"lead", monomial_to_string(G.leads()[i], *G.ring())}});
  json j = {{"ring", ring_header(*G.ring())}, {"order", G.order().to_string()}, {"basis", basis}};
  return {j.dump(2) + "\n"};
}

Result cmd_initial(const Options& o) {
  Input in = load_input(o);
  const std::size_t n = in.ring()->nvars();
  InitialIdeal J = [&] {
    if (!o.matrix.empty()) {
      QMatrix M = weighting_rows(o, in);
      return initial_ideal(in.I(), WeightingMatrix{M, ZdOrder::lex(M.size())}, TermOrder::parse(o.order));
    }
    QVector w(n, 0);
    if (!o.points.empty()) {
      if (o.points.size() != 1) throw ParseError("initial takes one --point");
      w = parse_point(o.points[0], n, "--point");
    } else if (!o.rays.empty()) {
      for (const auto& r : parse_rays(o.rays, in))
        for (std::size_t j = 0; j < n; ++j) w[j] += r[j];
    } else {
      throw ParseError("initial needs a weight: --point W, --rays LIST or --matrix FILE");
    }
    return initial_ideal(in.I(), w, TermOrder::parse(o.order));
  }();
  bool mf = is_monomial_free(J.ideal);
  Result r;
  if (json_out(o)) {
    json j = {{"ring", ring_header(*in.ring())}, {"initial_ideal", ideal_json(J.ideal)}, {"monomial_free", mf}};
    r.text = j.dump(2) + "\n";
  } else {
    r.text = format_ideal(J.ideal) + "# monomial_free " + bool_text(mf) + "\n";
  }
  if (o.expect == "monomial-free" && !mf) r.code = kMathFailure;
  if (o.expect == "prime") throw ParseError("initial supports --expect monomial-free only");
  return r;
}

Result cmd_gfan(const Options& o) {
  Input in = load_input(o);
  GroebnerFan G = gfan_traverse(in.I());
  if (json_out(o)) return {groebner_fan_to_json(G)};
  std::string s = ring_header(*in.ring()) + "\n";
  s += "lineality " + std::to_string(G.lineality.size()) + "\n";
  for (const auto& l : G.lineality) s += "  " + to_string(l) + "\n";
  s += "cones " + std::to_string(G.cones.size()) + "\n";
  for (std::size_t i = 0; i < G.cones.size(); ++i) {
    s += "cone " + std::to_string(i) + "\n  initial_ideal";
    for (const auto& m : G.bases[i].leads()) s += " " + monomial_to_string(m, *in.ring());
    s += "\n  rays";
    for (const auto& r : rays_mod_lineality(G.cones[i], G.lineality, to_rational(in.ring()->positive_weight())))
      s += " " + to_string(to_rational(r));
    s += "\n";
  }
  s += "adjacency " + std::to_string(G.adjacency.size()) + "\n";
  for (const auto& [a, b] : G.adjacency) s += "  " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return {s};
}

std::string tropical_cone_text(const TropicalCone& t, std::size_t index) {
  std::string s = "cone " + std::to_string(index) + "\n";
  s += "  dimension " + std::to_string(t.dimension) + "\n";
  s += "  rays " + matrix_rows_text(t.ray_matrix, t.lineality_rows) + "\n";
  s += "  initial_ideal\n" + ideal_lines(t.initial_ideal, "    ");
  s += "  monomial_free " + bool_text(t.monomial_free) + "\n";
  s += "  binomial " + bool_text(t.binomial) + "\n";
  s += "  prime " + bool_text(t.prime) + "\n";
  return s;
}

Result cmd_trop(const Options& o) {
  Input in = load_input(o);
  if (!o.expect.empty() && o.expect != "prime" && o.expect != "monomial-free")
    throw ParseError("--expect must be prime or monomial-free");
  std::vector<TropicalCone> cones;
  std::vector<std::string> labels;
  if (o.cones_from.empty()) {
    cones = tropicalize(in.I());
  } else {
    std::vector<std::string> lines;
    if (o.cones_from == "rays") {
      if (!in.dataset) throw ParseError("--cones-from rays needs a --dataset");
      for (const auto& [name, v] : in.dataset->rays())
        if (name.size() < 2 || name[0] != 'E') lines.push_back(name);
    } else {
      std::istringstream text(read_file(o.cones_from));
      std::string line;
      while (std::getline(text, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') lines.push_back(line);
      }
    }
    ZMatrix L = integer_lineality(in.I());
    for (const auto& line : lines) {
      ZMatrix M = L;
      for (const auto& r : parse_rays(line, in)) M.push_back(r);
      cones.push_back(certify_prime_cone(in.I(), M, L.size(), o.expect == "prime"));
      labels.push_back(line);
    }
  }
  Result r;
  for (const auto& t : cones) {
    if (o.expect == "monomial-free" && !t.monomial_free) r.code = kMathFailure;
    if (o.expect == "prime" && !t.prime) r.code = kMathFailure;
  }
  if (json_out(o)) {
    r.text = tropical_cones_to_json(cones);
    return r;
  }
  r.text = ring_header(*in.ring()) + "\ncones " + std::to_string(cones.size()) + "\n";
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!labels.empty()) r.text += "# " + labels[i] + "\n";
    r.text += tropical_cone_text(cones[i], i);
  }
  return r;
}

Result cmd_certify(const Options& o) {
  Input in = load_input(o);
  if (o.rays.empty()) throw ParseError("certify needs --rays");
  if (!o.expect.empty() && o.expect != "prime" && o.expect != "monomial-free")
    throw ParseError("--expect must be prime or monomial-free");
  ZMatrix L = integer_lineality(in.I());
  ZMatrix M = L;
  for (const auto& r : parse_rays(o.rays, in)) M.push_back(r);
  TropicalCone t = certify_prime_cone(in.I(), M, L.size());
  Result r;
  if (o.expect == "prime" && !t.prime) r.code = kMathFailure;
  if (o.expect == "monomial-free" && !t.monomial_free) r.code = kMathFailure;
  if (json_out(o)) {
    json j = {{"ring", ring_header(*in.ring())},
              {"dimension", t.dimension},
              {"lineality_rows", t.lineality_rows},
              {"ray_matrix", zmatrix_json(t.ray_matrix)},
              {"initial_ideal", ideal_json(t.initial_ideal)},
              {"monomial_free", t.monomial_free},
              {"binomial", t.binomial},
              {"toric", t.toric},
              {"prime", t.prime}};
    r.text = j.dump(2) + "\n";
    return r;
  }
  r.text = "dimension " + std::to_string(t.dimension) + "\n";
  r.text += "lineality_rows " + std::to_string(t.lineality_rows) + "\n";
  r.text += "rays " + matrix_rows_text(t.ray_matrix, t.lineality_rows) + "\n";
  r.text += "initial_ideal " + std::to_string(t.initial_ideal.size()) + "\n" + ideal_lines(t.initial_ideal, "  ");
  r.text += "monomial_free " + bool_text(t.monomial_free) + "\n";
  r.text += "binomial " + bool_text(t.binomial) + "\n";
  r.text += "toric " + bool_text(t.toric) + "\n";
  r.text += "prime " + bool_text(t.prime) + "\n";
  return r;
}

Result cmd_valuation_eval(const Options& o) {
  Input in = load_input(o);
  if (o.poly.empty()) throw ParseError("valuation eval needs --poly");
  ValuationProfile P = make_profile(o, in, weighting_rows(o, in));
  std::vector<std::string> polys = split_top(o.poly, ';');
  json values = json::array();
  std::string s;
  for (const auto& text : polys) {
    MultiPoly f = parse_poly(text, in.ring());
    QVector v = quasival_eval(P, f);
    s += text + " " + to_string(v) + "\n";
    values.push_back({{"poly", text}, {"value", to_string(v)}});
  }
  if (json_out(o)) return {values.dump(2) + "\n"};
  return {s};
}

Result cmd_valuation_semigroup(const Options& o) {
  Input in = load_input(o);
  if (o.degree.empty()) throw ParseError("valuation semigroup needs --degree");
  ValuationProfile P = make_profile(o, in, weighting_rows(o, in));
  SemigroupSlice S = value_semigroup_slice(P, parse_degree(o.degree, *in.ring()));
  json j = {{"degree", S.degree}, {"values", json::array()}};
  std::string s = "degree " + o.degree + "\nvalues " + std::to_string(S.values.size()) + "\n";
  for (const auto& [v, count] : S.values) {
    s += "  " + to_string(v) + " " + std::to_string(count) + "\n";
    j["values"].push_back({{"value", to_string(v)}, {"count", count}});
  }
  for (const auto& p : o.points) {
    QVector v = parse_point(p, P.value_dim(), "--point");
    bool member = S.contains(v);
    s += "member " + to_string(v) + " " + bool_text(member) + "\n";
    j["members"].push_back({{"value", to_string(v)}, {"member", member}});
  }
  if (json_out(o)) return {j.dump(2) + "\n"};
  return {s};
}

Result cmd_valuation_khovanskii(const Options& o) {
  Input in = load_input(o);
  QMatrix M = weighting_rows(o, in);
  KhovanskiiResult k = khovanskii_check(in.I(), WeightingMatrix{M, ZdOrder::lex(M.size())});
  Result r;
  if (json_out(o)) {
    json j = {{"holds", k.holds},
              {"monomial_free", k.verdict.monomial_free},
              {"binomial", k.verdict.binomial},
              {"toric", k.verdict.toric},
              {"certificate", k.certificate}};
    r.text = j.dump(2) + "\n";
  } else {
    r.text = "khovanskii " + bool_text(k.holds) + "\n";
    if (!k.holds) r.text += "reason " + k.certificate + "\n";
  }
  if (o.expect == "prime" && !k.holds) r.code = kMathFailure;
  return r;
}

Result polytope_result(const Options& o, const Polytope& P) {
  if (json_out(o)) return {polytope_to_json(P)};
  return {polytope_text(P)};
}

Result cmd_nobody(const Options& o) {
  Input in = load_input(o);
  ValuationProfile P = make_profile(o, in, weighting_rows(o, in));
  return polytope_result(o, newton_okounkov_polytope(P));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_top(text, ',')) {
    Rational q = parse_rational(item);
    if (q.get_den() != 1 || q < 0) throw ParseError("--keep takes nonnegative row indices");
    out.push_back(q.get_num().get_ui());
  }
  return out;
}

Result cmd_bnewton(const Options& o) {
  Input in = load_input(o);
  ValuationProfile P = make_profile(o, in, weighting_rows(o, in));
  Polytope D = o.poly.empty() ? delta_B(P) : bnewton_polytope(parse_poly(o.poly, in.ring()), P);
  if (!o.keep.empty()) D = project_onto_face(P, D, parse_indices(o.keep));
  return polytope_result(o, D);
}

Result cmd_wallcross(const Options& o) {
  Input in = load_input(o);
  if (o.ray1.empty() || o.ray2.empty()) throw ParseError("wallcross needs --ray1 and --ray2");
  if (o.map != "all" && o.map != "shift" && o.map != "flip" && o.map != "algebraic")
    throw ParseError("--map must be shift, flip, algebraic or all");
  QMatrix base = weighting_rows(o, in, true);
  QMatrix M1 = base, M2 = base;
  M1.push_back(to_rational(parse_ray_item(o.ray1, in)));
  M2.push_back(to_rational(parse_ray_item(o.ray2, in)));
  ValuationProfile P1 = make_profile(o, in, M1);
  ValuationProfile P2(in.I(), WeightingMatrix{M2, ZdOrder::lex(M2.size())}, P1.chamber());
  WallData W = build_wall(P1, P2);
  json j = {{"kappa", to_string(W.kappa)},
            {"delta1", json::parse(polytope_to_json(W.delta1))},
            {"delta2", json::parse(polytope_to_json(W.delta2))},
            {"images", json::array()}};
  std::string s = "kappa " + to_string(W.kappa) + "\n";
  s += "delta1";
  for (const auto& v : W.delta1.vertices()) s += " " + to_string(v);
  s += "\ndelta2";
  for (const auto& v : W.delta2.vertices()) s += " " + to_string(v);
  s += "\n";
  for (const auto& text : o.points) {
    QVector p = parse_point(text, P1.value_dim(), "--point");
    json img = {{"point", to_string(p)}};
    s += "point " + to_string(p);
    const std::vector<std::pair<std::string, std::function<QVector(const WallData&, const QVector&)>>> maps = {
        {"shift", shift}, {"flip", flip}, {"algebraic", algebraic_wallcross}};
    for (const auto& [name, fn] : maps) {
      if (o.map != "all" && o.map != name) continue;
      QVector q = fn(W, p);
      s += " " + name + " " + to_string(q);
      img[name] = to_string(q);
    }
    s += "\n";
    j["images"].push_back(img);
  }
  if (json_out(o)) return {j.dump(2) + "\n"};
  return {s};
}

LiftedIdeal make_lift(const Options& o, const Input& in) {
  ZMatrix M = parse_rays(o.rays, in);
  if (M.empty()) throw ParseError("the lift needs the chamber rays in --rays");
  const std::size_t n = in.ring()->nvars();
  QVector w(n, 0);
  for (const auto& r : M)
    for (std::size_t j = 0; j < n; ++j) w[j] += r[j];
  MarkedGroebnerBasis chamber = buchberger(in.I(), refine(w, TermOrder::parse(o.chamber_order)));
  return lift_ideal(in.I(), chamber, M);
}

Result cmd_lift(const Options& o) {
  Input in = load_input(o);
  LiftedIdeal L = make_lift(o, in);
  Ideal J = L.ideal();
  if (json_out(o)) {
    json j = {{"ring", ring_header(*L.ring)}, {"order", L.order.to_string()}, {"generators", ideal_json(J)}};
    return {j.dump(2) + "\n"};
  }
  return {format_ideal(J) + "# order " + L.order.to_string() + "\n"};
}

Result cmd_fiber(const Options& o) {
  Input in = load_input(o);
  if (o.at.empty()) throw ParseError("fiber needs --at");
  LiftedIdeal L = make_lift(o, in);
  Ideal F = fiber(L, parse_point(o.at, L.M.size(), "--at"));
  json j = {{"ring", ring_header(*F.ring())}, {"at", o.at}, {"generators", ideal_json(F)}};
  std::string s = format_ideal(F);
  if (!o.degree.empty()) {
    std::size_t h = hilbert_slice(F, parse_degree(o.degree, *in.ring()));
    s += "# hilbert " + o.degree + " " + std::to_string(h) + "\n";
    j["hilbert"] = {{"degree", o.degree}, {"value", h}};
  }
  if (json_out(o)) return {j.dump(2) + "\n"};
  return {s};
}

Result cmd_hilbert(const Options& o) {
  Input in = load_input(o);
  Ideal J = in.I();
  if (!o.at.empty()) {
    LiftedIdeal L = make_lift(o, in);
    J = fiber(L, parse_point(o.at, L.M.size(), "--at"));
  }
  std::vector<std::pair<std::string, std::size_t>> rows;
  if (!o.degree.empty()) {
    rows.emplace_back(o.degree, hilbert_slice(J, parse_degree(o.degree, *in.ring())));
  } else if (o.degree_bound >= 0) {
    if (in.ring()->grading_rows() != 1) throw ParseError("--degree-bound needs a single grading row; use --degree");
    for (long d = 0; d <= o.degree_bound; ++d) rows.emplace_back(std::to_string(d), hilbert_slice(J, {d}));
  } else {
    throw ParseError("hilbert needs --degree or --degree-bound");
  }
  json j = json::array();
  std::string s;
  for (const auto& [d, h] : rows) {
    s += d + " " + std::to_string(h) + "\n";
    j.push_back({{"degree", d}, {"value", h}});
  }
  if (json_out(o)) return {j.dump(2) + "\n"};
  return {s};
}

Result cmd_degree(const Options& o) {
  Input in = load_input(o);
  ValuationProfile P = make_profile(o, in, weighting_rows(o, in));
  Polytope D = newton_okounkov_polytope(P);
  // The value lattice is spanned by the values of the variables.
  ZMatrix M = P.integer_matrix();
  ZMatrix columns(in.ring()->nvars(), ZVector(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) columns[j][i] = M[i][j];
  Integer deg = degree_from_polytope(D, columns);
  if (json_out(o)) {
    json j = {{"degree", to_string(deg)}, {"polytope", json::parse(polytope_to_json(D))}};
    return {j.dump(2) + "\n"};
  }
  return {"degree " + to_string(deg) + "\n"};
}

Result cmd_datasets(const Options& o) {
  auto catalog = dataset_catalog();
  json a = json::array();
  std::string s;
  for (const auto& d : catalog) {
    s += d.name + "\n  generators " + std::to_string(d.generators) + "\n  convention " + d.convention + "\n";
    s += "  description " + d.description + "\n  provenance " + d.provenance + "\n";
    json sums = json::object();
    for (const auto& [file, sum] : d.checksums) {
      s += "  crc32 " + sum + " " + file + "\n";
      sums[file] = sum;
    }
    a.push_back({{"name", d.name},
                 {"generators", d.generators},
                 {"convention", d.convention},
                 {"description", d.description},
                 {"provenance", d.provenance},
                 {"checksums", sums}});
  }
  if (json_out(o)) return {a.dump(2) + "\n"};
  return {s};
}

// ---------------------------------------------------------------------------
// Command-line wiring.

void add_input(CLI::App* app, Options& o) {
  app->add_option("--dataset", o.dataset, "bundled dataset name");
  app->add_option("--ideal", o.ideal_file, "ideal file");
  app->add_option("--out", o.out, "write the result to this file");
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_weighting(CLI::App* app, Options& o) {
  app->add_option("--matrix", o.matrix, "weighting matrix file, or 'dataset' for the bundled value matrix");
  app->add_option("--rays", o.rays, "rays appended to the grading rows (list or file)");
  app->add_option("--chamber-order", o.chamber_order, "tie-break order selecting the Groebner chamber");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"torideg: toric degenerations from tropical cones"};
  app.name("torideg");
  app.require_subcommand(1);
  std::function<Result(const Options&)> action;
  auto bind = [&](CLI::App* sub, Result (*fn)(const Options&)) { sub->callback([&action, fn] { action = fn; }); };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_input(gb, o);
  gb->add_option("--order", o.order, "term order");
  bind(gb, cmd_gb);

  auto* initial = app.add_subcommand("initial", "initial ideal for a weight vector or matrix");
  add_input(initial, o);
  initial->add_option("--order", o.order, "tie-break order");
  initial->add_option("--point", o.points, "weight vector");
  initial->add_option("--rays", o.rays, "weight as a sum of rays");
  initial->add_option("--matrix", o.matrix, "weighting matrix file, or 'dataset' for the bundled value matrix");
  initial->add_option("--expect", o.expect, "fail unless the result is monomial-free");
  bind(initial, cmd_initial);

  auto* gfan = app.add_subcommand("gfan", "Groebner fan by facet flips");
  add_input(gfan, o);
  bind(gfan, cmd_gfan);

  auto* trop = app.add_subcommand("trop", "tropical variety as the monomial-free subfan");
  add_input(trop, o);
  trop->add_option("--cones-from", o.cones_from, "candidate cones, one ray list per line, or 'rays'");
  trop->add_option("--expect", o.expect, "prime or monomial-free")->check(CLI::IsMember({"prime", "monomial-free"}));
  bind(trop, cmd_trop);

  auto* certify = app.add_subcommand("certify", "prime-cone certificate for a cone given by rays");
  add_input(certify, o);
  certify->add_option("--rays", o.rays, "rays of the cone");
  certify->add_option("--expect", o.expect, "prime or monomial-free")->check(CLI::IsMember({"prime", "monomial-free"}));
  bind(certify, cmd_certify);

  auto* valuation = app.add_subcommand("valuation", "quasivaluation of a weighting matrix");
  valuation->require_subcommand(1);
  auto* veval = valuation->add_subcommand("eval", "value of polynomials (';'-separated)");
  add_input(veval, o);
  add_weighting(veval, o);
  veval->add_option("--poly", o.poly, "polynomials");
  bind(veval, cmd_valuation_eval);
  auto* vsemi = valuation->add_subcommand("semigroup", "values of one degree slice");
  add_input(vsemi, o);
  add_weighting(vsemi, o);
  vsemi->add_option("--degree", o.degree, "multidegree");
  vsemi->add_option("--point", o.points, "value to test for membership");
  bind(vsemi, cmd_valuation_semigroup);
  auto* vkhov = valuation->add_subcommand("khovanskii", "do the variables form a Khovanskii basis");
  add_input(vkhov, o);
  add_weighting(vkhov, o);
  vkhov->add_option("--expect", o.expect, "fail unless the basis property holds")->check(CLI::IsMember({"prime"}));
  bind(vkhov, cmd_valuation_khovanskii);

  auto* nobody = app.add_subcommand("nobody", "Newton-Okounkov polytope");
  add_input(nobody, o);
  add_weighting(nobody, o);
  bind(nobody, cmd_nobody);

  auto* bnewton = app.add_subcommand("bnewton", "B-Newton polytope of a polynomial or of the chamber");
  add_input(bnewton, o);
  add_weighting(bnewton, o);
  bnewton->add_option("--poly", o.poly, "polynomial (default: the chamber polytope)");
  bnewton->add_option("--keep", o.keep, "rows kept by the projection onto a face");
  bind(bnewton, cmd_bnewton);

  auto* wall = app.add_subcommand("wallcross", "wall-crossing maps between two profiles");
  add_input(wall, o);
  add_weighting(wall, o);
  wall->add_option("--ray1", o.ray1, "last row of the first profile");
  wall->add_option("--ray2", o.ray2, "last row of the second profile");
  wall->add_option("--map", o.map, "shift, flip, algebraic or all");
  wall->add_option("--point", o.points, "points to map");
  bind(wall, cmd_wallcross);

  auto* lift = app.add_subcommand("lift", "lifted ideal over one parameter per chamber ray");
  add_input(lift, o);
  lift->add_option("--rays", o.rays, "chamber rays");
  lift->add_option("--chamber-order", o.chamber_order, "tie-break order selecting the chamber");
  bind(lift, cmd_lift);

  auto* fib = app.add_subcommand("fiber", "fiber of the lifted ideal");
  add_input(fib, o);
  fib->add_option("--rays", o.rays, "chamber rays");
  fib->add_option("--chamber-order", o.chamber_order, "tie-break order selecting the chamber");
  fib->add_option("--at", o.at, "parameter values");
  fib->add_option("--degree", o.degree, "also report this Hilbert slice");
  bind(fib, cmd_fiber);

  auto* hilb = app.add_subcommand("hilbert", "Hilbert function values");
  add_input(hilb, o);
  hilb->add_option("--degree", o.degree, "multidegree");
  hilb->add_option("--degree-bound", o.degree_bound, "all degrees 0..K (single grading row)");
  hilb->add_option("--rays", o.rays, "chamber rays, with --at: use a fiber of the lift");
  hilb->add_option("--chamber-order", o.chamber_order, "tie-break order selecting the chamber");
  hilb->add_option("--at", o.at, "parameter values of the fiber");
  bind(hilb, cmd_hilbert);

  auto* degree = app.add_subcommand("degree", "degree from the Newton-Okounkov polytope");
  add_input(degree, o);
  add_weighting(degree, o);
  bind(degree, cmd_degree);

  auto* datasets = app.add_subcommand("datasets", "bundled datasets with checksums");
  datasets->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  datasets->add_option("--out", o.out, "write the result to this file");
  bind(datasets, cmd_datasets);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "torideg: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Result r = action(o);
    if (o.out.empty()) out << r.text;
    else write_file_atomic(o.out, r.text);
    if (r.code == kMathFailure) err << "torideg: expectation '" << o.expect << "' not met\n";
    return r.code;
  } catch (const ParseError& e) {
    err << "torideg: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "torideg: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace torideg::cli
