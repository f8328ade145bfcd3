#include "geocrystal/io.hpp"

#include <fstream>
#include <sstream>

#include "geocrystal/error.hpp"

namespace geocrystal::io {

namespace {

int read_rank(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("expected an object with integer field \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw ParseError("rank n must be >= 1");
  return n;
}

std::pair<int, int> parse_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("index key '" + key + "' is not of the form k,j");
  try {
    std::size_t used1 = 0, used2 = 0;
    int k = std::stoi(key.substr(0, comma), &used1);
    int j = std::stoi(key.substr(comma + 1), &used2);
    if (used1 != comma || used2 != key.size() - comma - 1) throw ParseError("bad index key '" + key + "'");
    return {k, j};
  } catch (const std::logic_error&) {
    throw ParseError("bad index key '" + key + "'");
  }
}

RatFun read_ratfun(const json& v) {
  if (v.is_string()) return RatFun::parse(v.get<std::string>());
  if (v.is_number_integer()) return RatFun(Rational(v.get<long>()));
  throw ParseError("expected a rational-function string or an integer");
}

Triangle<RatFun> read_coords(const json& j, int n) {
  if (!j.contains("coords") || !j["coords"].is_object()) throw ParseError("missing object field \"coords\"");
  Triangle<RatFun> t(n);
  std::vector<bool> seen(t.size(), false);
  for (const auto& [key, val] : j["coords"].items()) {
    auto [k, jj] = parse_key(key);
    if (!t.contains(k, jj)) throw ParseError("coordinate " + key + " outside 1 <= k <= j <= n");
    t(k, jj) = read_ratfun(val);
    seen[t.offset(k, jj)] = true;
  }
  for (auto [k, jj] : Triangle<RatFun>::indices(n))
    if (!seen[t.offset(k, jj)]) throw ParseError("missing coordinate " + index_key(k, jj));
  return t;
}

json write_coords(const Triangle<RatFun>& t, const char* chart) {
  json coords = json::object();
  for (auto [k, j] : Triangle<RatFun>::indices(t.rank())) coords[index_key(k, j)] = t(k, j).to_string();
  return json{{"n", t.rank()}, {"chart", chart}, {"coords", coords}};
}

}  // namespace

std::string index_key(int k, int j) { return std::to_string(k) + "," + std::to_string(j); }

json to_json(const MatRF& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return json{{"n", static_cast<int>(m.size()) - 1}, {"entries", rows}};
}

MatRF matrix_from_json(const json& j) {
  const int n = read_rank(j);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != static_cast<std::size_t>(n + 1))
    throw ParseError("\"entries\" must hold n+1 rows");
  MatRF m(n + 1);
  for (int r = 0; r <= n; ++r) {
    const auto& row = j["entries"][r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n + 1)) throw ParseError("each row needs n+1 entries");
    for (int c = 0; c <= n; ++c) m(r, c) = read_ratfun(row[c]);
  }
  return m;
}

json to_json(const charts::TorusPointA& p) { return write_coords(p.a, "a"); }
json to_json(const charts::TorusPointB& q) { return write_coords(q.A, "A"); }

ChartPoint chart_from_json(const json& j) {
  const int n = read_rank(j);
  if (!j.contains("chart") || !j["chart"].is_string()) throw ParseError("missing string field \"chart\"");
  const std::string chart = j["chart"].get<std::string>();
  if (chart == "a") return charts::TorusPointA{read_coords(j, n)};
  if (chart == "A") return charts::TorusPointB{read_coords(j, n)};
  throw ParseError("chart must be \"a\" or \"A\", got \"" + chart + "\"");
}

json to_json(const gyt::SharpElement& v) {
  json B = json::object();
  const auto idx = gyt::SharpElement::indices(v.rank());
  for (auto [k, j] : idx) B[index_key(k, j)] = v.B(k, j);
  return json{{"n", v.rank()}, {"B", B}};
}

gyt::SharpElement sharp_from_json(const json& j) {
  const int n = read_rank(j);
  if (!j.contains("B") || !j["B"].is_object()) throw ParseError("missing object field \"B\"");
  gyt::SharpElement v(n);
  std::size_t count = 0;
  for (const auto& [key, val] : j["B"].items()) {
    auto [k, jj] = parse_key(key);
    if (!gyt::SharpElement::stored(n, k, jj)) throw ParseError("entry " + key + " outside 1 <= k < j <= n+1");
    if (!val.is_number_integer()) throw ParseError("entry " + key + " must be an integer");
    v.B(k, jj) = val.get<std::int64_t>();
    ++count;
  }
  if (count != v.entries().size()) throw ParseError("expected all " + std::to_string(v.entries().size()) + " entries");
  return v;
}

json to_json(const gyt::Tableau& t) { return json{{"shape", t.shape}, {"rows", t.rows}}; }

gyt::Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) throw ParseError("tableau needs shape and rows");
  gyt::Tableau t;
  try {
    t = gyt::Tableau{j["shape"].get<std::vector<int>>(), j["rows"].get<std::vector<std::vector<int>>>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tableau: ") + e.what());
  }
  // Entry bounds depend on n and are left to Tableau::validate.
  bool fits = t.rows.size() == t.shape.size();
  for (std::size_t r = 0; fits && r < t.rows.size(); ++r) fits = static_cast<int>(t.rows[r].size()) == t.shape[r];
  if (!fits) throw ParseError("tableau rows do not match its shape");
  return t;
}

json to_json(const sl::IdentityReport& r) {
  return json{{"identity", r.identity}, {"holds", r.holds}, {"witness", r.witness ? json(*r.witness) : json()}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace geocrystal::io
