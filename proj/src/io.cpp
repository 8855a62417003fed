#include "hodgering/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace hodgering {

namespace {

using json = nlohmann::ordered_json;

std::int64_t to_i64(const Rational& x, bool numerator_part) {
  const auto part = numerator_part ? numerator(x) : denominator(x);
  if (part < std::numeric_limits<std::int64_t>::min() ||
      part > std::numeric_limits<std::int64_t>::max())
    throw ParseError("rational coefficient exceeds 64-bit range");
  return part.convert_to<std::int64_t>();
}

json rational_json(const Rational& x) {
  return json{{"num", to_i64(x, true)}, {"den", to_i64(x, false)}};
}

Rational rational_from(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j["num"].is_number_integer() || !j["den"].is_number_integer())
    throw ParseError(field + ": expected integer or {num, den} pair");
  const std::int64_t den = j["den"].get<std::int64_t>();
  if (den <= 0) throw ParseError(field + ": denominator must be positive");
  return Rational(j["num"].get<std::int64_t>(), den);
}

int int_field(const json& j, const std::string& name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw ParseError("missing or non-integer field \"" + name + "\"");
  return j[name].get<int>();
}

}  // namespace

std::string serialize(const RingDocument& doc) {
  const HodgeRing& r = doc.ring;
  json out;
  out["schema_version"] = "1";
  out["dim"] = r.dim_c();
  out["flags"] = json{{"geometric", r.geometric}};

  json pieces = json::array();
  for (const auto& [k, n] : r.splitting.pieces)
    if (n > 0)
      pieces.push_back(json{{"p", k.p}, {"q", k.q}, {"l", k.l}, {"dim", n}});
  out["pieces"] = std::move(pieces);

  std::vector<std::pair<Index, Index>> keys;
  keys.reserve(r.mult.size());
  for (const auto& [key, row] : r.mult)
    keys.emplace_back(static_cast<Index>(key >> 32),
                      static_cast<Index>(key & 0xffffffffu));
  std::sort(keys.begin(), keys.end());
  json mult = json::array();
  for (const auto& [i, j] : keys) {
    auto [row, flip] = r.basis_product(i, j);
    (void)flip;
    json coeffs = json::array();
    for (const auto& [k, v] : *row) {
      json c = rational_json(v);
      c = json{{"k", k}, {"num", c["num"]}, {"den", c["den"]}};
      coeffs.push_back(std::move(c));
    }
    mult.push_back(json{{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
  }
  out["mult"] = std::move(mult);

  if (r.conjugation) {
    json trips = json::array();
    for (Index i = 0; i < r.dim(); ++i)
      for (Index j = 0; j < r.dim(); ++j)
        if (!(*r.conjugation)(i, j).is_zero()) {
          json c = rational_json((*r.conjugation)(i, j));
          trips.push_back(
              json{{"i", i}, {"j", j}, {"num", c["num"]}, {"den", c["den"]}});
        }
    out["conjugation"] = std::move(trips);
  }

  json elems = json::object();
  for (const auto& [name, x] : doc.elements) {
    json coeffs = json::array();
    for (Index i = 0; i < x.size(); ++i) coeffs.push_back(rational_json(x(i)));
    elems[name] = std::move(coeffs);
  }
  out["elements"] = std::move(elems);

  return out.dump(2) + "\n";
}

RingDocument deserialize(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!in.is_object()) throw ParseError("document root must be an object");
  if (!in.contains("schema_version") || !in["schema_version"].is_string())
    throw ParseError("missing schema_version");
  if (in["schema_version"].get<std::string>() != "1")
    throw SchemaVersionMismatch("unsupported schema_version \"" +
                                in["schema_version"].get<std::string>() + "\"");

  RingDocument doc;
  HodgeRing& r = doc.ring;
  r.splitting.dim_c = int_field(in, "dim");
  if (r.splitting.dim_c < 1) throw ParseError("dim must be >= 1");

  if (!in.contains("pieces") || !in["pieces"].is_array())
    throw ParseError("missing pieces array");
  for (const auto& pj : in["pieces"]) {
    const PieceKey key{int_field(pj, "p"), int_field(pj, "q"), int_field(pj, "l")};
    const int n = int_field(pj, "dim");
    if (n < 0) throw ParseError("pieces: negative dimension");
    if (n > 0) r.splitting.pieces[key] += n;
  }
  r.splitting.finalize();
  const Index total = r.dim();

  if (!in.contains("mult") || !in["mult"].is_array())
    throw ParseError("missing mult array");
  for (const auto& mj : in["mult"]) {
    const Index i = int_field(mj, "i"), j = int_field(mj, "j");
    if (i < 0 || j >= total) throw ParseError("mult: index out of bounds");
    if (i > j) throw ParseError("mult: upper-triangular only (found i > j)");
    if (!mj.contains("coeffs") || !mj["coeffs"].is_array())
      throw ParseError("mult: missing coeffs array");
    SparseVec row;
    for (const auto& cj : mj["coeffs"]) {
      const Index k = int_field(cj, "k");
      if (k < 0 || k >= total) throw ParseError("mult: coefficient index out of bounds");
      row.emplace_back(k, rational_from(cj, "mult coefficient"));
    }
    r.set_product(i, j, std::move(row));
  }

  if (in.contains("conjugation")) {
    if (!in["conjugation"].is_array())
      throw ParseError("conjugation must be a triplet array");
    Mat c = Mat::Zero(total, total);
    for (const auto& tj : in["conjugation"]) {
      const Index i = int_field(tj, "i"), j = int_field(tj, "j");
      if (i < 0 || i >= total || j < 0 || j >= total)
        throw ParseError("conjugation: index out of bounds");
      c(i, j) = rational_from(tj, "conjugation entry");
    }
    r.conjugation = std::move(c);
  }

  if (in.contains("flags")) {
    if (!in["flags"].is_object()) throw ParseError("flags must be an object");
    if (in["flags"].contains("geometric"))
      r.geometric = in["flags"]["geometric"].get<bool>();
  }

  const PieceKey unit_key{0, 0, 0};
  if (r.splitting.dim(unit_key) != 1)
    throw ParseError("document has no one-dimensional unit piece I^{0,0;0}");
  r.unit = r.basis_element(r.splitting.offset(unit_key));

  if (in.contains("elements")) {
    if (!in["elements"].is_object()) throw ParseError("elements must be an object");
    for (const auto& [name, cj] : in["elements"].items()) {
      if (!cj.is_array() || static_cast<Index>(cj.size()) != total)
        throw ParseError("element \"" + name + "\": expected " +
                         std::to_string(total) + " coefficients");
      Element x = r.zero_element();
      for (Index i = 0; i < total; ++i)
        x(i) = rational_from(cj[i], "element \"" + name + "\"");
      doc.elements[name] = std::move(x);
    }
  }

  const ValidationReport report = validate(r);
  if (!report.passed) {
    std::string msg = "ring validation failed:";
    for (const auto& v : report.violations) msg += "\n  " + v.check + ": " + v.message;
    throw ValidationFailed(msg);
  }
  return doc;
}

RingDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

void save(const RingDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize(doc);
  if (!out) throw ParseError("write failed for " + path);
}

Mat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix file must be an array of arrays");
  const Index n = static_cast<Index>(j.size());
  Mat m(n, static_cast<Index>(j[0].size()));
  for (Index i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != m.cols())
      throw ParseError("matrix rows have unequal lengths");
    for (Index c = 0; c < m.cols(); ++c)
      m(i, c) = rational_from(j[i][c], "matrix entry");
  }
  return m;
}

namespace {

json table_json(const std::map<std::pair<int, int>, Index>& t,
                const char* first, const char* second) {
  json out = json::array();
  for (const auto& [key, n] : t)
    out.push_back(json{{first, key.first}, {second, key.second}, {"dim", n}});
  return out;
}

}  // namespace

std::string report_json(const Report& rep) {
  json out;
  out["passed"] = rep.passed;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (c.skipped) cj["skipped_reason"] = c.skipped_reason;
    checks.push_back(std::move(cj));
  }
  out["checks"] = std::move(checks);
  out["hodge_table"] = table_json(rep.hodge_table, "p", "l");
  out["weight_table"] = table_json(rep.weight_table, "k", "l");
  json nu = json::object();
  for (const auto& [l, v] : rep.nu) nu[std::to_string(l)] = v;
  out["nu"] = std::move(nu);
  return out.dump(2) + "\n";
}

std::string report_text(const Report& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks) {
    out << (c.skipped ? "SKIP" : (c.ok ? "PASS" : "FAIL")) << "  " << c.name;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    if (c.skipped) out << "  (" << c.skipped_reason << ")";
    out << "\n";
  }
  if (!rep.nu.empty()) {
    out << "nu:";
    for (const auto& [l, v] : rep.nu) out << " nu_" << l << "=" << v;
    out << "\n";
  }
  out << (rep.passed ? "PASSED" : "FAILED") << "\n";
  return out.str();
}

std::string render_diamond(const HodgeRing& r) {
  const auto table = hodge_numbers(r);
  const int dc = r.dim_c();
  Index widest = 1;
  int top = 0;
  for (const auto& [key, n] : table) {
    widest = std::max<Index>(widest, std::to_string(n).size());
    top = std::max(top, key.second);
  }
  const int cell = static_cast<int>(widest) + 1;

  std::ostringstream out;
  for (int l = 0; l <= top; ++l) {
    std::string line;
    for (int p = std::max(0, l - dc); p <= std::min(l, dc); ++p) {
      const int col = dc + 2 * p - l;
      const auto it = table.find({p, l});
      const std::string s = std::to_string(it == table.end() ? 0 : it->second);
      const std::size_t at = static_cast<std::size_t>(col) * cell;
      if (line.size() < at + s.size()) line.resize(at + s.size(), ' ');
      line.replace(at, s.size(), s);
    }
    out << line << "\n";
  }
  std::string axis(static_cast<std::size_t>(dc) * cell + 1, ' ');
  axis[static_cast<std::size_t>(dc) * cell] = '^';
  out << axis << "\n";
  return out.str();
}

std::string diamond_json(const HodgeRing& r) {
  json out;
  out["dim"] = r.dim_c();
  out["hodge_table"] = table_json(hodge_numbers(r), "p", "l");
  return out.dump(2) + "\n";
}

}  // namespace hodgering
