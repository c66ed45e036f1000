#include "jacobi/serialize.hpp"

#include "jacobi/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <fstream>
#include <sstream>

namespace jacobi {

namespace {

using Json = nlohmann::ordered_json;

Json encode_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer decode_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string& text = j.get_ref<const std::string&>();
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError(where, "expected a decimal integer string, got '" + text + "'");
    return Integer(text);
  }
  throw ParseError(where, "expected an integer");
}

Rational decode_rational(const Json& num, const Json& den, const std::string& where) {
  const Integer n = decode_integer(num, where);
  const Integer d = decode_integer(den, where);
  if (d == 0) throw ParseError(where, "zero denominator");
  return make_rational(n, d);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, "missing field '" + key + "'");
  return *it;
}

long small_integer(const Json& j, const std::string& where) {
  const Integer z = decode_integer(j, where);
  if (!z.fits_slong_p()) throw ParseError(where, "integer out of range");
  return z.get_si();
}

int small_int(const Json& j, const std::string& where) {
  const long v = small_integer(j, where);
  if (v < INT_MIN || v > INT_MAX) throw ParseError(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<long> integer_vector(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len) throw ParseError(where, "expected an array of " + std::to_string(len) + " integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(small_integer(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

void check_kind(const Json& doc, const std::string& expected) {
  auto it = doc.find("kind");
  if (it == doc.end()) {
    if (expected == "form") return;
    throw ParseError("/kind", "missing field 'kind'");
  }
  if (!it->is_string() || it->get<std::string>() != expected) throw ParseError("/kind", "expected kind '" + expected + "'");
}

Json encode_index(const HalfIntSymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.twice()) rows.push_back(row);
  return rows;
}

struct Header {
  std::size_t h;
  long level;
  HalfIntSymMatrix m;
};

Header decode_header(const Json& doc) {
  const long h = small_integer(field(doc, "h", "/"), "/h");
  if (h <= 0) throw ParseError("/h", "cogenus must be positive");
  const long level = small_integer(field(doc, "level", "/"), "/level");
  if (level <= 0) throw ParseError("/level", "level must be positive");
  const Json& two_m = field(doc, "two_m", "/");
  if (!two_m.is_array() || two_m.size() != static_cast<std::size_t>(h)) throw ParseError("/two_m", "expected an h x h matrix");
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < two_m.size(); ++i) rows.push_back(integer_vector(two_m[i], h, "/two_m/" + std::to_string(i)));
  try {
    return {static_cast<std::size_t>(h), level, HalfIntSymMatrix::from_twice(rows)};
  } catch (const Error& e) {
    throw ParseError("/two_m", e.what());
  }
}

Json encode_mode_entry(const FourierMode& mode, const SymPoly<Rational>& value) {
  Json entry;
  entry["n_num"] = encode_integer(mode.n.get_num());
  entry["n_den"] = encode_integer(mode.n.get_den());
  entry["r"] = mode.r;
  Json values = Json::array();
  for (const auto& [mono, c] : value.coeffs()) {
    Json v = Json::array();
    v.push_back(mono.x);
    for (int y : mono.y) v.push_back(y);
    v.push_back(encode_integer(c.get_num()));
    v.push_back(encode_integer(c.get_den()));
    values.push_back(std::move(v));
  }
  entry["value"] = std::move(values);
  return entry;
}

Json encode_fourier(const FourierPoly& f) {
  Json out = Json::array();
  for (const auto& [mode, value] : f.coeffs()) out.push_back(encode_mode_entry(mode, value));
  return out;
}

/// One coefficient entry: the mode and its V_s value; alpha/beta exponents when present.
void decode_entry(const Json& entry, const std::string& where, std::size_t h, int s, NearlyHoloElt* f,
                  FourierPoly* fp, bool allow_nearly_holomorphic) {
  const Rational n = decode_rational(field(entry, "n_num", where), field(entry, "n_den", where), where + "/n_num");
  if (sgn(decode_integer(entry["n_den"], where + "/n_den")) <= 0) throw ParseError(where + "/n_den", "denominator must be positive");
  FourierMode mode{n, integer_vector(field(entry, "r", where), h, where + "/r")};
  MultiIndexPair pair = MultiIndexPair::zero(h);
  if (entry.contains("alpha") || entry.contains("beta")) {
    if (!allow_nearly_holomorphic) throw ParseError(where, "alpha/beta exponents are not allowed here");
    if (entry.contains("alpha")) {
      for (std::size_t j = 0; const long a : integer_vector(entry["alpha"], h, where + "/alpha")) {
        if (a < 0 || a > INT_MAX) throw ParseError(where + "/alpha", "exponent out of range");
        pair.nu[j++] = static_cast<int>(a);
      }
    }
    if (entry.contains("beta")) {
      pair.r = small_int(entry["beta"], where + "/beta");
      if (pair.r < 0) throw ParseError(where + "/beta", "exponent must be non-negative");
    }
  }
  const Json& values = field(entry, "value", where);
  if (!values.is_array()) throw ParseError(where + "/value", "expected an array");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string at = where + "/value/" + std::to_string(i);
    const Json& v = values[i];
    if (!v.is_array() || v.size() != h + 3) throw ParseError(at, "expected [a, nu_1..nu_h, num, den]");
    SymMonomial mono{small_int(v[0], at + "/0"), std::vector<int>(h)};
    for (std::size_t j = 0; j < h; ++j) mono.y[j] = small_int(v[j + 1], at + "/" + std::to_string(j + 1));
    if (mono.x < 0 || std::any_of(mono.y.begin(), mono.y.end(), [](int y) { return y < 0; }))
      throw ParseError(at, "negative exponent");
    if (mono.degree() != s) throw ParseError(at, "monomial is not of degree " + std::to_string(s));
    const Rational c = decode_rational(v[h + 1], v[h + 2], at);
    try {
      if (f) f->add_term(pair, mode, mono, c);
      if (fp) fp->add(mode, mono, c);
    } catch (const Error& e) {
      throw ParseError(at, e.what());
    }
  }
}

FourierPoly decode_scalar_fourier(const Json& coeffs, const std::string& where, std::size_t h, long level) {
  if (!coeffs.is_array()) throw ParseError(where, "expected an array");
  FourierPoly out(h, 0, level);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    decode_entry(coeffs[i], where + "/" + std::to_string(i), h, 0, nullptr, &out, false);
  return out;
}

}  // namespace

std::string serialize(const NearlyHoloElt& f, long trunc) {
  Json doc;
  doc["kind"] = "form";
  doc["h"] = f.h();
  doc["k"] = f.k();
  doc["s"] = f.s();
  doc["level"] = f.level();
  doc["two_m"] = encode_index(f.index());
  doc["trunc"] = trunc;
  Json coeffs = Json::array();
  for (const auto& [pair, fp] : f.terms())
    for (const auto& [mode, value] : fp.coeffs()) {
      Json entry = encode_mode_entry(mode, value);
      if (!pair.is_zero()) {
        entry["alpha"] = pair.nu;
        entry["beta"] = pair.r;
      }
      coeffs.push_back(std::move(entry));
    }
  doc["coeffs"] = std::move(coeffs);
  return doc.dump(1) + "\n";
}

std::string serialize(const JacobiFormData& form) { return serialize(form.as_function(), form.trunc); }

std::string serialize(const ComponentTuple& t) {
  Json doc;
  doc["kind"] = "component_tuple";
  doc["h"] = t.h();
  doc["k"] = t.k;
  doc["s"] = t.s;
  doc["level"] = t.level;
  doc["two_m"] = encode_index(t.m);
  Json levels = Json::array();
  for (int l = 0; l <= t.s; ++l) {
    Json level = Json::array();
    const auto basis = quotient_basis(t.s - l, t.h());
    for (std::size_t b = 0; b < t.parts[l].size(); ++b) {
      Json part;
      part["weight"] = t.k + l;
      part["nu"] = basis[b].y;
      part["coeffs"] = encode_fourier(t.parts[l][b]);
      level.push_back(std::move(part));
    }
    levels.push_back(std::move(level));
  }
  doc["parts"] = std::move(levels);
  return doc.dump(1) + "\n";
}

std::string serialize(const NHDecomposition& c) {
  Json doc;
  doc["kind"] = "nh_decomposition";
  doc["h"] = c.h();
  doc["k"] = c.k;
  doc["d"] = c.d;
  doc["level"] = c.level;
  doc["two_m"] = encode_index(c.m);
  Json components = Json::array();
  for (const auto& [pair, g] : c.components) {
    Json part;
    part["nu"] = pair.nu;
    part["r"] = pair.r;
    part["weight"] = c.k - pair.degree();
    part["coeffs"] = encode_fourier(g);
    components.push_back(std::move(part));
  }
  doc["components"] = std::move(components);
  return doc.dump(1) + "\n";
}

FormDocument deserialize_form(std::string_view text, bool strict) {
  const Json doc = parse(text);
  check_kind(doc, "form");
  const Header hd = decode_header(doc);
  const int k = small_int(field(doc, "k", "/"), "/k");
  const int s = small_int(field(doc, "s", "/"), "/s");
  if (s < 0) throw ParseError("/s", "value degree must be non-negative");
  const long trunc = small_integer(field(doc, "trunc", "/"), "/trunc");
  NearlyHoloElt f(k, s, hd.m, hd.level);
  const Json& coeffs = field(doc, "coeffs", "/");
  if (!coeffs.is_array()) throw ParseError("/coeffs", "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "/coeffs/" + std::to_string(i);
    NearlyHoloElt entry(k, s, hd.m, hd.level);
    decode_entry(coeffs[i], where, hd.h, s, &entry, nullptr, true);
    for (const auto& [pair, fp] : entry.terms()) {
      for (const auto& [mode, value] : fp.coeffs()) {
        if (mode.n > trunc) throw ParseError(where, "mode beyond the truncation bound");
        if (strict && !psd_support_check(mode.n, mode.r, hd.m))
          throw ParseError(where, "mode " + mode.to_string() + " violates the support condition");
      }
    }
    f += entry;
  }
  return {std::move(f), trunc};
}

JacobiFormData deserialize_jacobi_form(std::string_view text, bool strict) {
  FormDocument doc = deserialize_form(text, strict);
  if (!doc.f.is_holomorphic()) throw ParseError("/coeffs", "expected a holomorphic form (no alpha/beta exponents)");
  return JacobiFormData(doc.f.k(), doc.f.s(), doc.f.index(), doc.f.level(), doc.trunc, doc.f.holomorphic_part());
}

ComponentTuple deserialize_component_tuple(std::string_view text) {
  const Json doc = parse(text);
  check_kind(doc, "component_tuple");
  const Header hd = decode_header(doc);
  const int k = small_int(field(doc, "k", "/"), "/k");
  const int s = small_int(field(doc, "s", "/"), "/s");
  if (s < 0) throw ParseError("/s", "value degree must be non-negative");
  ComponentTuple out(k, s, hd.m, hd.level);
  const Json& levels = field(doc, "parts", "/");
  if (!levels.is_array() || levels.size() != static_cast<std::size_t>(s + 1)) throw ParseError("/parts", "expected s + 1 levels");
  for (int l = 0; l <= s; ++l) {
    const std::string lw = "/parts/" + std::to_string(l);
    const auto basis = quotient_basis(s - l, hd.h);
    if (!levels[l].is_array() || levels[l].size() != basis.size())
      throw ParseError(lw, "expected " + std::to_string(basis.size()) + " parts");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::string where = lw + "/" + std::to_string(b);
      const Json& part = levels[l][b];
      if (small_int(field(part, "weight", where), where + "/weight") != k + l) throw ParseError(where + "/weight", "unexpected weight");
      std::vector<long> nu = integer_vector(field(part, "nu", where), hd.h, where + "/nu");
      if (!std::equal(nu.begin(), nu.end(), basis[b].y.begin())) throw ParseError(where + "/nu", "parts out of basis order");
      out.parts[l][b] = decode_scalar_fourier(field(part, "coeffs", where), where + "/coeffs", hd.h, hd.level);
    }
  }
  return out;
}

NHDecomposition deserialize_nh_decomposition(std::string_view text) {
  const Json doc = parse(text);
  check_kind(doc, "nh_decomposition");
  const Header hd = decode_header(doc);
  const int k = small_int(field(doc, "k", "/"), "/k");
  const int d = small_int(field(doc, "d", "/"), "/d");
  if (d < 0) throw ParseError("/d", "depth must be non-negative");
  NHDecomposition out(k, hd.m, d, hd.level);
  const Json& components = field(doc, "components", "/");
  if (!components.is_array()) throw ParseError("/components", "expected an array");
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string where = "/components/" + std::to_string(i);
    const Json& part = components[i];
    MultiIndexPair pair{std::vector<int>(hd.h), small_int(field(part, "r", where), where + "/r")};
    const std::vector<long> nu = integer_vector(field(part, "nu", where), hd.h, where + "/nu");
    for (std::size_t j = 0; j < hd.h; ++j) {
      if (nu[j] < 0 || nu[j] > INT_MAX) throw ParseError(where + "/nu", "exponent out of range");
      pair.nu[j] = static_cast<int>(nu[j]);
    }
    auto it = out.components.find(pair);
    if (pair.r < 0 || it == out.components.end()) throw ParseError(where, "pair " + pair.to_string() + " outside depth " + std::to_string(d));
    it->second = decode_scalar_fourier(field(part, "coeffs", where), where + "/coeffs", hd.h, hd.level);
  }
  return out;
}

std::string serialize_index(const HalfIntSymMatrix& m) {
  Json doc;
  doc["two_m"] = encode_index(m);
  return doc.dump() + "\n";
}

HalfIntSymMatrix deserialize_index(std::string_view text) {
  const Json doc = parse(text);
  const Json& two_m = field(doc, "two_m", "/");
  if (!two_m.is_array() || two_m.empty()) throw ParseError("/two_m", "expected a non-empty square matrix");
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < two_m.size(); ++i) rows.push_back(integer_vector(two_m[i], two_m.size(), "/two_m/" + std::to_string(i)));
  try {
    return HalfIntSymMatrix::from_twice(rows);
  } catch (const Error& e) {
    throw ParseError("/two_m", e.what());
  }
}

LatticeSpec deserialize_lattice(std::string_view text) {
  const Json doc = parse(text);
  const Json& gram = field(doc, "gram", "/");
  if (!gram.is_array() || gram.empty()) throw ParseError("/gram", "expected a non-empty square matrix");
  std::vector<std::vector<long>> g;
  for (std::size_t i = 0; i < gram.size(); ++i) g.push_back(integer_vector(gram[i], gram.size(), "/gram/" + std::to_string(i)));
  const Json& vectors = field(doc, "vectors", "/");
  if (!vectors.is_array()) throw ParseError("/vectors", "expected an array of vectors");
  std::vector<std::vector<long>> v;
  for (std::size_t i = 0; i < vectors.size(); ++i) v.push_back(integer_vector(vectors[i], gram.size(), "/vectors/" + std::to_string(i)));
  return LatticeSpec(std::move(g), std::move(v));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace jacobi
