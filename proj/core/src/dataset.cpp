#include "torideg/dataset.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "torideg/error.hpp"
#include "torideg/io.hpp"

namespace torideg {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] != '#') out.push_back(std::move(t));
  }
  return out;
}

ZVector parse_integer_row(std::istringstream& in, const std::string& where) {
  ZVector row;
  std::string tok;
  while (in >> tok) {
    Rational q = parse_rational(tok);
    if (q.get_den() != 1) throw ParseError(where + ": entries must be integers");
    row.push_back(q.get_num());
  }
  return row;
}

DatasetInfo info_from_json(const json& j) {
  DatasetInfo d;
  d.name = j.at("name").get<std::string>();
  d.description = j.value("description", "");
  d.provenance = j.value("provenance", "");
  d.ideal_file = j.at("ideal").get<std::string>();
  if (j.contains("rays")) d.rays_file = j.at("rays").get<std::string>();
  if (j.contains("matrix")) d.matrix_file = j.at("matrix").get<std::string>();
  d.convention = j.value("convention", "max");
  if (d.convention != "max" && d.convention != "min")
    throw ParseError("dataset '" + d.name + "': convention must be 'max' or 'min'");
  d.generators = j.at("generators").get<std::size_t>();
  if (j.contains("checksums"))
    for (const auto& [file, sum] : j.at("checksums").items()) d.checksums[file] = sum.get<std::string>();
  return d;
}

bool is_digits(std::string_view s, std::size_t len) {
  return s.size() == len && std::all_of(s.begin(), s.end(), [](char c) { return c >= '1' && c <= '9'; });
}

}  // namespace

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("TORIDEG_DATA"); env != nullptr && *env != '\0') return env;
  return TORIDEG_DEFAULT_DATA_DIR;
}

std::string crc32_hex(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

std::vector<DatasetInfo> dataset_catalog(const std::filesystem::path& dir) {
  json j;
  try {
    j = json::parse(read_file(dir / "catalog.json"));
  } catch (const json::exception& e) {
    throw ParseError("catalog.json: " + std::string(e.what()));
  }
  std::vector<DatasetInfo> out;
  try {
    for (const auto& entry : j.at("datasets")) out.push_back(info_from_json(entry));
  } catch (const json::exception& e) {
    throw ParseError("catalog.json: " + std::string(e.what()));
  }
  return out;
}

Dataset Dataset::load(const std::string& name, const std::filesystem::path& dir) {
  std::optional<DatasetInfo> info;
  for (auto& d : dataset_catalog(dir))
    if (d.name == name) info = std::move(d);
  if (!info) throw ParseError("unknown dataset '" + name + "'");

  auto read_checked = [&](const std::string& file) {
    std::string text = read_file(dir / file);
    auto it = info->checksums.find(file);
    if (it != info->checksums.end() && it->second != crc32_hex(text))
      throw ParseError("dataset '" + name + "': checksum mismatch for " + file);
    return text;
  };

  Ideal I = parse_ideal(read_checked(info->ideal_file));
  if (I.size() != info->generators)
    throw ParseError("dataset '" + name + "': expected " + std::to_string(info->generators) + " generators, found " +
                     std::to_string(I.size()));
  const std::size_t n = I.ring()->nvars();
  const int sign = info->convention == "min" ? -1 : 1;
  Dataset D(*info, std::move(I));

  if (D.info_.rays_file) {
    for (const auto& line : content_lines(read_checked(*D.info_.rays_file))) {
      std::istringstream in(line);
      std::string key;
      in >> key;
      ZVector v = parse_integer_row(in, *D.info_.rays_file);
      if (v.size() != n)
        throw ParseError(*D.info_.rays_file + ": ray '" + key + "' has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(n));
      for (auto& x : v) x *= sign;
      if (!D.rays_.emplace(key, std::move(v)).second) throw ParseError(*D.info_.rays_file + ": duplicate ray '" + key + "'");
    }
  }
  if (D.info_.matrix_file) {
    ZMatrix M;
    for (const auto& row : D.ideal_.ring()->grading()) M.emplace_back(row.begin(), row.end());
    for (const auto& line : content_lines(read_checked(*D.info_.matrix_file))) {
      std::istringstream in(line);
      ZVector v = parse_integer_row(in, *D.info_.matrix_file);
      if (v.size() != n) throw ParseError(*D.info_.matrix_file + ": row width differs from the variable count");
      for (auto& x : v) x *= sign;
      M.push_back(std::move(v));
    }
    D.matrix_ = std::move(M);
  }
  return D;
}

std::optional<ZVector> Dataset::plucker_vector(const std::string& name) const {
  const Ring& R = *ideal_.ring();
  const std::size_t n = R.nvars();
  auto unit = [&](std::string idx) -> std::optional<ZVector> {
    std::sort(idx.begin(), idx.end());
    auto j = R.index_of("p" + idx);
    if (!j) return std::nullopt;
    ZVector v(n, 0);
    v[*j] = 1;
    return v;
  };
  // Sum of e<T> over the Plücker variables p<T> whose index set contains `sub`.
  auto containing = [&](const std::string& sub) -> std::optional<ZVector> {
    ZVector v(n, 0);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& v_name = R.name(j);
      if (v_name.size() != 4 || v_name[0] != 'p') continue;
      if (std::all_of(sub.begin(), sub.end(), [&](char c) { return v_name.find(c, 1) != std::string::npos; })) {
        v[j] = 1;
        any = true;
      }
    }
    if (!any) return std::nullopt;
    return v;
  };
  auto add = [](std::optional<ZVector> a, const std::optional<ZVector>& b) -> std::optional<ZVector> {
    if (!a || !b) return std::nullopt;
    for (std::size_t j = 0; j < a->size(); ++j) (*a)[j] += (*b)[j];
    return a;
  };

  std::optional<ZVector> v;
  const std::string rest = name.substr(1);
  if (name[0] == 'e' && is_digits(rest, 3)) {
    v = unit(rest);
  } else if (name[0] == 'f' && is_digits(rest, 2)) {
    v = containing(rest);
  } else if (name[0] == 'E' && is_digits(rest, 1)) {
    v = containing(rest);
  } else if (name[0] == 'g' && is_digits(rest, 6)) {
    const std::string c = rest.substr(2, 1), d = rest.substr(3, 1), e = rest.substr(4, 1), f = rest.substr(5, 1);
    v = add(add(containing(e + f), unit(c + d + e)), unit(c + d + f));
  }
  if (v && info_.convention == "min")
    for (auto& x : *v) x = -x;
  return v;
}

std::optional<ZVector> Dataset::resolve_name(const std::string& name) const {
  if (auto it = rays_.find(name); it != rays_.end()) return it->second;
  if (name.size() >= 2) return plucker_vector(name);
  return std::nullopt;
}

ZVector Dataset::resolve(std::string_view expression) const {
  std::string expr = trim(expression);
  if (expr.empty()) throw ParseError("empty ray expression");
  ZVector sum(ideal_.ring()->nvars(), 0);
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    std::size_t plus = expr.find('+', pos);
    if (plus == std::string::npos) plus = expr.size();
    std::string name = trim(std::string_view(expr).substr(pos, plus - pos));
    auto v = resolve_name(name);
    if (!v) throw ParseError("unknown ray '" + name + "' in dataset '" + info_.name + "'");
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += (*v)[j];
    pos = plus + 1;
  }
  return sum;
}

ZMatrix Dataset::resolve_list(std::string_view list) const {
  ZMatrix out;
  std::size_t pos = 0;
  const std::string s(list);
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(resolve(std::string_view(s).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace torideg
