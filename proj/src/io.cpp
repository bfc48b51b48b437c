#include "rmatrix/io.hpp"

#include <json.hpp>

namespace rmatrix {

using nlohmann::json;

namespace {

// ---- writers ----

json write_cyclotomic(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(rat_to_string(r));
  return json{{"coeffs", coeffs}, {"order", c.order()}};
}

json write_mlaurent(const MLaurent& m) {
  json terms = json::array();
  for (const auto& [e, c] : m.terms()) {
    json exps = json::array();
    for (int k = 0; k < kNumVars; ++k) exps.push_back(e[static_cast<std::size_t>(k)]);
    terms.push_back(json{{"c", write_cyclotomic(c)}, {"e", exps}});
  }
  return terms;
}

json write_ratfun(const RatFun& r) {
  json den = json::array();
  for (const auto& [f, p] : r.den())
    den.push_back(json{{"a", var_name(f.a)}, {"b", var_name(f.b)}, {"pow", p}});
  return json{{"den", den}, {"num", write_mlaurent(r.num())}};
}

json write_tensor2(const Tensor2& t) {
  json entries = json::array();
  for (const auto& [key, v] : t.e)
    entries.push_back(json{{"a", key.first.name()},
                           {"b", key.second.name()},
                           {"value", write_ratfun(v)}});
  return json{{"entries", entries}, {"n", t.n}, {"vars", json::array({"x", "y"})}};
}

json write_tensor3(const Tensor3& t) {
  json entries = json::array();
  for (const auto& [key, v] : t.e)
    entries.push_back(json{{"a", std::get<0>(key).name()},
                           {"b", std::get<1>(key).name()},
                           {"c", std::get<2>(key).name()},
                           {"value", write_ratfun(v)}});
  return json{{"entries", entries}, {"n", t.n}, {"vars", json::array({"x1", "x2", "x3"})}};
}

json write_combo(const LieCombo<Cyclotomic>& combo) {
  json out = json::array();
  for (const auto& [b, v] : combo) out.push_back(json{{"b", b.name()}, {"c", write_cyclotomic(v)}});
  return out;
}

json write_series(const SeriesTensor& s) {
  json coeff = json::array();
  for (const auto& [key, f] : s.coeff) {
    json terms = json::array();
    for (const auto& [exp, elem] : f)
      terms.push_back(json{{"elem", write_combo(elem)}, {"exp", exp}});
    coeff.push_back(json{{"a", key.second.name()}, {"k", key.first}, {"terms", terms}});
  }
  return json{{"canonical", s.canonical}, {"coeff", coeff}, {"n", s.n}, {"order", s.order}};
}

json write_rmat(const RMat& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rat_to_string(v));
    rows.push_back(r);
  }
  return rows;
}

json write_triple(const MatTriple& t) {
  return json{{"curve", curve_name(t.curve)},
              {"first", write_rmat(t.first)},
              {"m", t.m},
              {"n", t.n},
              {"second", write_rmat(t.second)}};
}

json write_verdicts(const std::vector<Verdict>& vs) {
  json out = json::array();
  for (const auto& v : vs)
    out.push_back(json{{"identity", v.identity}, {"pass", v.pass}, {"witness", v.witness}});
  return out;
}

// ---- strict readers ----

void expect_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  if (j.size() != keys.size()) throw ParseError(std::string(what) + ": unexpected key set");
  for (const char* k : keys)
    if (!j.contains(k)) throw ParseError(std::string(what) + ": missing key '" + k + "'");
}

int read_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::string read_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

Cyclotomic read_cyclotomic(const json& j) {
  expect_keys(j, {"coeffs", "order"}, "cyclotomic");
  int order = read_int(j["order"], "cyclotomic order");
  if (order < 1) throw ParseError("cyclotomic order must be positive");
  if (!j["coeffs"].is_array()) throw ParseError("cyclotomic coeffs: expected an array");
  QPoly coeffs;
  for (const auto& item : j["coeffs"]) coeffs.push_back(parse_rational(read_string(item, "coefficient")));
  if (!coeffs.empty() && coeffs.back() == 0)
    throw ParseError("cyclotomic coeffs: trailing zero is not canonical");
  if (coeffs.size() > euler_phi(static_cast<unsigned>(order)))
    throw ParseError("cyclotomic coeffs: longer than phi(order)");
  Cyclotomic out = Cyclotomic::from_poly(static_cast<unsigned>(order), coeffs);
  if (static_cast<int>(out.order()) != order || out.coeffs() != coeffs)
    throw ParseError("cyclotomic value is not in canonical form");
  return out;
}

BasisIndex read_basis(const json& j, int n, const char* what) {
  BasisIndex b = BasisIndex::from_name(read_string(j, what));
  if (b.kind == BasisIndex::Kind::E) {
    if (b.i > n || b.j > n) throw ParseError(std::string(what) + ": index exceeds n");
  } else if (b.i > n - 1) {
    throw ParseError(std::string(what) + ": index exceeds n-1");
  }
  return b;
}

MLaurent read_mlaurent(const json& j, std::initializer_list<Var> allowed) {
  if (!j.is_array()) throw ParseError("numerator: expected an array of terms");
  MLaurent out;
  for (const auto& term : j) {
    expect_keys(term, {"c", "e"}, "term");
    Cyclotomic c = read_cyclotomic(term["c"]);
    if (c.is_zero()) throw ParseError("term with zero coefficient is not canonical");
    if (!term["e"].is_array() || term["e"].size() != kNumVars)
      throw ParseError("term exponent vector must have 6 entries");
    ExpVec e{};
    for (int k = 0; k < kNumVars; ++k) {
      e[static_cast<std::size_t>(k)] = read_int(term["e"][static_cast<std::size_t>(k)], "exponent");
      if (e[static_cast<std::size_t>(k)] != 0) {
        bool ok = false;
        for (Var v : allowed)
          if (static_cast<int>(v) == k) ok = true;
        if (!ok) throw ParseError("term uses a variable outside the payload's variable list");
      }
    }
    if (out.terms().count(e)) throw ParseError("duplicate term exponent is not canonical");
    out.add_term(e, c);
  }
  return out;
}

RatFun read_ratfun(const json& j, std::initializer_list<Var> allowed) {
  expect_keys(j, {"den", "num"}, "value");
  MLaurent num = read_mlaurent(j["num"], allowed);
  if (!j["den"].is_array()) throw ParseError("den: expected an array");
  std::map<DiffFactor, int> den;
  for (const auto& fac : j["den"]) {
    expect_keys(fac, {"a", "b", "pow"}, "den factor");
    auto a = var_from_name(read_string(fac["a"], "den var"));
    auto b = var_from_name(read_string(fac["b"], "den var"));
    if (!a || !b) throw ParseError("unknown denominator variable");
    int pow = read_int(fac["pow"], "den pow");
    if (pow < 1) throw ParseError("denominator power must be >= 1");
    if (!(*a < *b)) throw ParseError("denominator factor must be in canonical order");
    if (den.count(DiffFactor{*a, *b})) throw ParseError("duplicate denominator factor");
    den.emplace(DiffFactor{*a, *b}, pow);
  }
  RatFun out(num, den);
  if (!(out.num() == num) || out.den() != den)
    throw ParseError("rational value is not in canonical (cancelled) form");
  return out;
}

Tensor2 read_tensor2(const json& j) {
  expect_keys(j, {"entries", "n", "vars"}, "tensor2");
  Tensor2 out;
  out.n = read_int(j["n"], "n");
  if (out.n < 2) throw ParseError("tensor2: n must be >= 2");
  if (j["vars"] != json::array({"x", "y"})) throw ParseError("tensor2: vars must be [x, y]");
  if (!j["entries"].is_array()) throw ParseError("tensor2: entries must be an array");
  for (const auto& entry : j["entries"]) {
    expect_keys(entry, {"a", "b", "value"}, "entry");
    BasisIndex a = read_basis(entry["a"], out.n, "entry a");
    BasisIndex b = read_basis(entry["b"], out.n, "entry b");
    RatFun v = read_ratfun(entry["value"], {Var::x, Var::y});
    if (v.is_zero()) throw ParseError("zero entry is not canonical");
    if (out.e.count({a, b})) throw ParseError("duplicate tensor entry");
    out.e.emplace(std::make_pair(a, b), v);
  }
  return out;
}

Tensor3 read_tensor3(const json& j) {
  expect_keys(j, {"entries", "n", "vars"}, "tensor3");
  Tensor3 out;
  out.n = read_int(j["n"], "n");
  if (out.n < 2) throw ParseError("tensor3: n must be >= 2");
  if (j["vars"] != json::array({"x1", "x2", "x3"}))
    throw ParseError("tensor3: vars must be [x1, x2, x3]");
  if (!j["entries"].is_array()) throw ParseError("tensor3: entries must be an array");
  for (const auto& entry : j["entries"]) {
    expect_keys(entry, {"a", "b", "c", "value"}, "entry");
    BasisIndex a = read_basis(entry["a"], out.n, "entry a");
    BasisIndex b = read_basis(entry["b"], out.n, "entry b");
    BasisIndex c = read_basis(entry["c"], out.n, "entry c");
    RatFun v = read_ratfun(entry["value"], {Var::x1, Var::x2, Var::x3});
    if (v.is_zero()) throw ParseError("zero entry is not canonical");
    if (out.e.count({a, b, c})) throw ParseError("duplicate tensor entry");
    out.e.emplace(std::make_tuple(a, b, c), v);
  }
  return out;
}

LieCombo<Cyclotomic> read_combo(const json& j, int n) {
  if (!j.is_array()) throw ParseError("element: expected an array");
  LieCombo<Cyclotomic> out;
  for (const auto& item : j) {
    expect_keys(item, {"b", "c"}, "element term");
    BasisIndex b = read_basis(item["b"], n, "element basis");
    Cyclotomic c = read_cyclotomic(item["c"]);
    if (c.is_zero()) throw ParseError("zero element coefficient is not canonical");
    if (out.count(b)) throw ParseError("duplicate element basis index");
    out.emplace(b, c);
  }
  return out;
}

SeriesTensor read_series(const json& j) {
  expect_keys(j, {"canonical", "coeff", "n", "order"}, "series");
  SeriesTensor out;
  out.n = read_int(j["n"], "n");
  if (out.n < 2) throw ParseError("series: n must be >= 2");
  out.order = read_int(j["order"], "order");
  if (out.order < 0) throw ParseError("series: order must be >= 0");
  if (!j["canonical"].is_boolean()) throw ParseError("series: canonical must be a boolean");
  out.canonical = j["canonical"].get<bool>();
  if (!j["coeff"].is_array()) throw ParseError("series: coeff must be an array");
  for (const auto& item : j["coeff"]) {
    expect_keys(item, {"a", "k", "terms"}, "series coefficient");
    int k = read_int(item["k"], "k");
    if (k < 0 || k > out.order) throw ParseError("series: k out of range");
    BasisIndex a = read_basis(item["a"], out.n, "series a");
    if (!item["terms"].is_array()) throw ParseError("series terms must be an array");
    GLaurent f;
    for (const auto& term : item["terms"]) {
      expect_keys(term, {"elem", "exp"}, "series term");
      int exp = read_int(term["exp"], "exp");
      if (exp < -out.order - 1 || exp > out.order)
        throw ParseError("series: exponent outside the truncation window");
      LieCombo<Cyclotomic> elem = read_combo(term["elem"], out.n);
      if (elem.empty()) throw ParseError("empty series term is not canonical");
      if (f.count(exp)) throw ParseError("duplicate series exponent");
      f.emplace(exp, std::move(elem));
    }
    if (f.empty()) throw ParseError("empty series coefficient is not canonical");
    if (out.coeff.count({k, a})) throw ParseError("duplicate series coefficient");
    out.coeff.emplace(std::make_pair(k, a), std::move(f));
  }
  return out;
}

RMat read_rmat(const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(std::string(what) + ": wrong row count");
  RMat out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(std::string(what) + ": wrong column count");
    std::vector<BigRat> r;
    for (const auto& v : row) r.push_back(parse_rational(read_string(v, what)));
    out.push_back(std::move(r));
  }
  return out;
}

MatTriple read_triple(const json& j) {
  expect_keys(j, {"curve", "first", "m", "n", "second"}, "triple");
  MatTriple out;
  out.n = read_int(j["n"], "n");
  out.m = read_int(j["m"], "m");
  if (out.n < 1 || out.m < 1) throw ParseError("triple: sizes must be positive");
  out.curve = curve_from_name(read_string(j["curve"], "curve"));
  out.first = read_rmat(j["first"], out.n, out.m, "first");
  out.second = read_rmat(j["second"], out.n, out.m, "second");
  return out;
}

std::vector<Verdict> read_verdicts(const json& j) {
  if (!j.is_array()) throw ParseError("verdicts: expected an array");
  std::vector<Verdict> out;
  for (const auto& item : j) {
    expect_keys(item, {"identity", "pass", "witness"}, "verdict");
    Verdict v;
    v.identity = read_string(item["identity"], "identity");
    if (!item["pass"].is_boolean()) throw ParseError("verdict pass must be a boolean");
    v.pass = item["pass"].get<bool>();
    v.witness = read_string(item["witness"], "witness");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string Document::kind() const {
  struct Visitor {
    std::string operator()(const Tensor2&) const { return "tensor2"; }
    std::string operator()(const Tensor3&) const { return "tensor3"; }
    std::string operator()(const SeriesTensor&) const { return "series"; }
    std::string operator()(const MatTriple&) const { return "triple"; }
    std::string operator()(const std::vector<Verdict>&) const { return "verdicts"; }
  };
  return std::visit(Visitor{}, payload);
}

std::string serialize(const Document& doc) {
  json payload;
  struct Visitor {
    json operator()(const Tensor2& t) const { return write_tensor2(t); }
    json operator()(const Tensor3& t) const { return write_tensor3(t); }
    json operator()(const SeriesTensor& s) const { return write_series(s); }
    json operator()(const MatTriple& t) const { return write_triple(t); }
    json operator()(const std::vector<Verdict>& v) const { return write_verdicts(v); }
  };
  payload = std::visit(Visitor{}, doc.payload);
  json root{{"kind", doc.kind()}, {"payload", payload}, {"schema", kSchemaVersion}};
  return root.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) throw ParseError("malformed JSON");
  if (!root.is_object() || !root.contains("schema"))
    throw SchemaError("missing schema version");
  if (!root["schema"].is_string() || root["schema"].get<std::string>() != kSchemaVersion)
    throw SchemaError("schema-version mismatch (expected '" + std::string(kSchemaVersion) + "')");
  expect_keys(root, {"kind", "payload", "schema"}, "document");
  std::string kind = read_string(root["kind"], "kind");
  const json& payload = root["payload"];
  Document doc;
  if (kind == "tensor2")
    doc.payload = read_tensor2(payload);
  else if (kind == "tensor3")
    doc.payload = read_tensor3(payload);
  else if (kind == "series")
    doc.payload = read_series(payload);
  else if (kind == "triple")
    doc.payload = read_triple(payload);
  else if (kind == "verdicts")
    doc.payload = read_verdicts(payload);
  else
    throw ParseError("unknown document kind '" + kind + "'");
  return doc;
}

}  // namespace rmatrix
