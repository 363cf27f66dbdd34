#include "torideg/io.hpp"

#include <fstream>
#include <sstream>

#include "torideg/error.hpp"

namespace torideg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

bool starts_with_word(std::string_view line, std::string_view word) {
  return line.substr(0, word.size()) == word &&
         (line.size() == word.size() || std::isspace(static_cast<unsigned char>(line[word.size()])));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t k = s.find(sep, pos);
    out.emplace_back(trim(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos)));
    if (k == std::string_view::npos) return out;
    pos = k + 1;
  }
}

Ring::Grading parse_integer_matrix(std::string_view text) {
  text = trim(text);
  if (text.size() < 4 || text.front() != '[' || text.back() != ']') throw ParseError("grading must look like [[..],[..]]");
  text = trim(text.substr(1, text.size() - 2));
  Ring::Grading rows;
  while (!text.empty()) {
    if (text.front() != '[') throw ParseError("grading row must start with '['");
    std::size_t close = text.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated grading row");
    std::vector<long> row;
    for (const auto& tok : split(text.substr(1, close - 1), ',')) {
      Rational q = parse_rational(tok);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("grading entries must be integers");
      row.push_back(q.get_num().get_si());
    }
    rows.push_back(std::move(row));
    text = trim(text.substr(close + 1));
    if (!text.empty()) {
      if (text.front() != ',') throw ParseError("grading rows must be separated by ','");
      text = trim(text.substr(1));
    }
  }
  return rows;
}

}  // namespace

RingPtr parse_ring_header(std::string_view line) {
  line = trim(line);
  if (!starts_with_word(line, "ring")) throw ParseError("expected a 'ring' header line");
  line = trim(line.substr(4));
  std::string_view names_part = line, grading_part;
  std::size_t g = line.find("grading");
  if (g != std::string_view::npos) {
    names_part = trim(line.substr(0, g));
    grading_part = trim(line.substr(g + 7));
  }
  std::vector<std::string> names;
  for (auto& n : split(names_part, ',')) {
    if (n.empty()) throw ParseError("empty variable name in ring header");
    names.push_back(n);
  }
  try {
    if (grading_part.empty()) return Ring::standard(std::move(names));
    return Ring::make(std::move(names), parse_integer_matrix(grading_part));
  } catch (const DomainError& e) {
    throw ParseError(std::string("ring header: ") + e.what());
  }
}

std::string ring_header(const Ring& ring) {
  std::string s = "ring ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) s += (i ? "," : "") + ring.name(i);
  s += " grading [";
  for (std::size_t r = 0; r < ring.grading_rows(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t j = 0; j < ring.nvars(); ++j) s += (j ? "," : "") + std::to_string(ring.grading()[r][j]);
    s += "]";
  }
  return s + "]";
}

Ideal parse_ideal(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("ideal file is empty");
  RingPtr ring = parse_ring_header(lines[0]);
  std::vector<MultiPoly> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_poly(lines[i], ring));
  return Ideal(ring, std::move(gens));
}

std::string format_ideal(const Ideal& I) {
  std::string s = ring_header(*I.ring()) + "\n";
  for (const auto& g : I.generators()) s += to_string(g) + "\n";
  return s;
}

MarkedGroebnerBasis parse_groebner(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("Groebner basis file is empty");
  RingPtr ring = parse_ring_header(lines[0]);
  std::optional<TermOrder> order;
  std::vector<MultiPoly> elements;
  std::vector<Monomial> leads;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (starts_with_word(lines[i], "order")) {
      order = TermOrder::parse(trim(lines[i].substr(5)));
      continue;
    }
    std::size_t k = lines[i].rfind(" marked ");
    if (k == std::string_view::npos) throw ParseError("basis line without 'marked' annotation: " + std::string(lines[i]));
    MultiPoly f = parse_poly(lines[i].substr(0, k), ring);
    MultiPoly lead = parse_poly(lines[i].substr(k + 8), ring);
    if (!lead.is_monomial() || lead.terms()[0].second != 1)
      throw ParseError("marked term must be a monomial: " + std::string(lines[i]));
    elements.push_back(std::move(f));
    leads.push_back(lead.terms()[0].first);
  }
  if (!order) {
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (const auto& [m, c] : elements[i].terms())
        if (m != leads[i]) pairs.emplace_back(leads[i], m);
    try {
      order = TermOrder::weighted(to_rational(separating_weight(pairs, ring->nvars())), TermOrder::grevlex());
    } catch (const DomainError& e) {
      throw ParseError(std::string("markings are not induced by any term order: ") + e.what());
    }
  }
  bool reduced = true;
  for (std::size_t i = 0; i < elements.size() && reduced; ++i) {
    if (elements[i].coefficient(leads[i]) != 1) reduced = false;
    for (const auto& [m, c] : elements[i].terms())
      for (std::size_t k = 0; k < leads.size(); ++k)
        if ((m != leads[i] || k != i) && leads[k].divides(m)) reduced = false;
  }
  return MarkedGroebnerBasis(ring, *order, std::move(elements), std::move(leads), reduced);
}

std::string format_groebner(const MarkedGroebnerBasis& G) {
  std::string s = ring_header(*G.ring()) + "\norder " + G.order().to_string() + "\n";
  for (std::size_t i = 0; i < G.size(); ++i)
    s += to_string(G.elements()[i]) + " marked " + monomial_to_string(G.leads()[i], *G.ring()) + "\n";
  return s;
}

QMatrix parse_matrix(std::string_view text) {
  QMatrix rows;
  for (auto line : content_lines(text)) {
    QVector row;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) row.push_back(parse_rational(tok));
    if (!rows.empty() && row.size() != rows[0].size()) throw ParseError("ragged matrix rows");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_matrix(const QMatrix& M) {
  std::string s;
  for (const auto& row : M) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].get_str();
    s += "\n";
  }
  return s;
}

QVector parse_vector(std::string_view text) {
  std::string s(trim(text));
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s = s.substr(1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  for (auto& c : s)
    if (c == ',') c = ' ';
  QVector v;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  if (v.empty()) throw ParseError("empty vector '" + std::string(text) + "'");
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw ParseError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace torideg
