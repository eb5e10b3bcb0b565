#include "cyop/opfile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cyop {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    Int n = r.get_num();
    if (n <= Int("9007199254740992") && n >= Int("-9007199254740992")) return json(mpz_get_si(n.get_mpz_t()));
    return json(n.get_str());
  }
  return json(to_string(r));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a rational string");
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(rational_to_json(p[i]));
  if (a.empty()) a.push_back(0);
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly(std::move(c));
}

json meta_to_json(const std::map<std::string, std::string>& meta) {
  json m = json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

OpDocument parse_opfile(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  try {
    OpDocument doc;
    doc.name = j.value("name", "");
    doc.form = j.value("form", j.contains("values") ? "sequence" : "theta");
    if (j.contains("meta"))
      for (auto it = j["meta"].begin(); it != j["meta"].end(); ++it)
        doc.meta[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();

    if (doc.form == "sequence") {
      Sequence s;
      s.name = doc.name;
      for (const auto& v : j.at("values")) s.values.push_back(rational_from_json(v));
      doc.seq = std::move(s);
      return doc;
    }
    if (doc.form == "theta") {
      std::vector<Poly> q;
      for (const auto& row : j.at("coeffs")) q.push_back(poly_from_json(row));
      doc.op = ThetaOperator(std::move(q));
      return doc;
    }
    if (doc.form == "dz") {
      const auto& rows = j.at("coeffs");
      std::vector<RationalFunction> c;
      for (const auto& row : rows) {
        Poly num = poly_from_json(row.at("num"));
        Poly den = row.contains("den") ? poly_from_json(row.at("den")) : Poly(Rational(1));
        c.emplace_back(num, den);
      }
      doc.op = theta_from_dop(DOperator(std::move(c)));
      return doc;
    }
    if (doc.form == "recurrence") {
      std::vector<Poly> q;
      for (const auto& row : j.at("coeffs")) q.push_back(poly_from_json(row));
      doc.rec = Recurrence(std::move(q));
      return doc;
    }
    throw ParseError("unknown form: " + doc.form);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
}

OpDocument load_opfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_opfile(buf.str());
}

std::string serialize_operator(const std::string& name, const ThetaOperator& op,
                               const std::map<std::string, std::string>& meta) {
  ThetaOperator c = op.canonical();
  json j;
  j["name"] = name;
  j["form"] = "theta";
  json rows = json::array();
  for (int i = 0; i <= c.zdeg(); ++i) rows.push_back(poly_to_json(c.coeff(i)));
  j["coeffs"] = rows;
  if (!meta.empty()) j["meta"] = meta_to_json(meta);
  return dump(j);
}

std::string serialize_dz(const std::string& name, const DzOperator& op,
                         const std::map<std::string, std::string>& meta) {
  json j;
  j["name"] = name;
  j["form"] = "dz";
  json rows = json::array();
  for (int t = 0; t < op.order; ++t) {
    json row;
    row["num"] = poly_to_json(op.a[t].num());
    row["den"] = poly_to_json(op.a[t].den());
    rows.push_back(row);
  }
  json top;
  top["num"] = poly_to_json(Poly(Rational(1)));
  top["den"] = poly_to_json(Poly(Rational(1)));
  rows.push_back(top);
  j["coeffs"] = rows;
  if (!meta.empty()) j["meta"] = meta_to_json(meta);
  return dump(j);
}

std::string serialize_recurrence(const std::string& name, const Recurrence& rec,
                                 const std::map<std::string, std::string>& meta) {
  json j;
  j["name"] = name;
  j["form"] = "recurrence";
  json rows = json::array();
  for (int i = 0; i <= rec.order(); ++i) rows.push_back(poly_to_json(rec.coeff(i)));
  j["coeffs"] = rows;
  if (!meta.empty()) j["meta"] = meta_to_json(meta);
  return dump(j);
}

std::string serialize_sequence(const Sequence& seq, const std::map<std::string, std::string>& meta) {
  json j;
  j["name"] = seq.name;
  j["form"] = "sequence";
  json vals = json::array();
  for (const auto& v : seq.values) vals.push_back(rational_to_json(v));
  j["values"] = vals;
  if (!meta.empty()) j["meta"] = meta_to_json(meta);
  return dump(j);
}

std::string data_dir() {
  if (const char* env = std::getenv("CYOP_DATA")) return env;
#ifdef CYOP_DATA_DIR
  return CYOP_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace cyop
