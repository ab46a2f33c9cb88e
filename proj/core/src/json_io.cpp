#include "prymlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "prymlab/error.hpp"

namespace prymlab {

namespace {

Rational scalar(const json& v, const std::string& what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(what + " entries must be strings \"p/q\" or integers");
}

std::vector<Rational> scalars(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw InputError(std::string("missing array \"") + key + "\"");
  std::vector<Rational> out;
  for (const auto& v : j[key]) out.push_back(scalar(v, key));
  return out;
}

std::string poly_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
  if (!j[key].is_string()) throw InputError(std::string("\"") + key + "\" must be a polynomial string");
  return j[key].get<std::string>();
}

}  // namespace

std::vector<json> to_json_list(const std::vector<Rational>& v) {
  std::vector<json> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

TodaPointQ toda_from_json(const json& j) {
  if (!j.is_object()) throw InputError("a Toda point must be a JSON object");
  TodaPointQ p;
  p.a = scalars(j, "a");
  if (j.contains("b"))
    p.b = scalars(j, "b");
  else
    p.b.assign(p.a.size(), Rational(0));
  if (j.contains("n") && j["n"].get<int>() != p.n())
    throw InputError("\"n\" is " + std::to_string(j["n"].get<int>()) + " but a has " + std::to_string(p.n()) +
                     " entries");
  validate(p);
  return p;
}

json to_json(const TodaPointQ& p) {
  return json{{"n", p.n()}, {"a", to_json_list(p.a)}, {"b", to_json_list(p.b)}};
}

Triple triple_from_json(const json& j) {
  if (!j.is_object()) throw InputError("a triple must be a JSON object");
  if (!j.contains("flavor") || !j["flavor"].is_string()) throw InputError("missing \"flavor\"");
  Triple t;
  t.flavor = parse_flavor(j["flavor"].get<std::string>());
  t.u = parse_poly(poly_field(j, "u"));
  t.v = parse_poly(poly_field(j, "v"));
  t.w = parse_poly(poly_field(j, "w"));
  if (j.contains("g"))
    t.g = j["g"].get<int>();
  else if (j.contains("n"))
    t.g = j["n"].get<int>();
  else {
    int d = t.u.degree();
    switch (t.flavor) {
      case Flavor::OddMumford:
      case Flavor::EvenMumford: t.g = d; break;
      case Flavor::OddPrym: t.g = d / 2; break;
      case Flavor::EvenPrym: t.g = (d - 1) / 2; break;
    }
  }
  validate(t);
  return t;
}

json to_json(const Triple& t) {
  json j{{"flavor", to_string(t.flavor)}, {"u", to_string(t.u)}, {"v", to_string(t.v)}, {"w", to_string(t.w)}};
  j[is_prym(t.flavor) ? "n" : "g"] = t.g;
  return j;
}

json to_json(const PhiImage<Rational>& img) {
  return json{{"m", img.m}, {"u", to_string(img.u)}, {"v", to_string(img.v)}, {"w", to_string(img.w)},
              {"p", to_string(img.p)}};
}

json to_json(const Balance& b) {
  return json{{"n", b.n}, {"A", b.A}, {"alpha", to_json_list(b.alpha)}, {"r", b.r}, {"order", b.order()}};
}

json to_json(const KowalevskiReport& r) {
  json j{{"n", r.n}, {"A", r.A}, {"alpha", to_json_list(r.alpha)}, {"r", r.r}};
  json m = json::array();
  for (const auto& row : r.matrix) m.push_back(to_json_list(row));
  j["matrix"] = m;
  json blocks = json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(json{{"kind", std::string(1, b.kind)}, {"indices", b.indices}, {"spectrum", b.spectrum}});
  j["blocks"] = blocks;
  j["spectrum"] = r.spectrum;
  j["nonneg_count"] = r.nonneg_count;
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << r.float_max_deviation;
  j["float_check"] = json{{"max_deviation", os.str()}, {"tolerance", "1e-8"}, {"ok", r.float_max_deviation <= 1e-8}};
  return j;
}

json load_json_arg(const std::string& text) {
  std::string body = text;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty JSON argument");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text);
    if (!in) throw InputError("cannot open " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace prymlab
