#include "darboux/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace darboux {

namespace {

// ---------------------------------------------------------------------------
// Expression parser for polynomials and polynomial forms.

struct Token {
  enum Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, wedge, end } kind;
  std::string text;
  std::size_t col;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    const std::size_t col = i + 1;
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::ident, s.substr(i, j - i), col});
      i = j;
    } else if (s.compare(i, 3, "\xE2\x88\xA7") == 0) {
      out.push_back({Token::wedge, "∧", col});
      i += 3;
    } else if (s.compare(i, 2, "/\\") == 0) {
      out.push_back({Token::wedge, "/\\", col});
      i += 2;
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::plus; break;
        case '-': k = Token::minus; break;
        case '*': k = Token::star; break;
        case '/': k = Token::slash; break;
        case '^': k = Token::caret; break;
        case '(': k = Token::lparen; break;
        case ')': k = Token::rparen; break;
        default: throw InputError("unexpected character '" + std::string(1, s[i]) + "' at column " + std::to_string(col));
      }
      out.push_back({k, std::string(1, s[i]), col});
      ++i;
    }
  }
  out.push_back({Token::end, "", s.size() + 1});
  return out;
}

class FormParser {
 public:
  FormParser(const std::string& text, const Chart& chart) : tokens_(tokenize(text)), chart_(chart) {}

  PolyForm parse() {
    PolyForm v = expr();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " at column " + std::to_string(peek().col));
  }

  PolyForm constant(const Rat& c) const { return PolyForm::function(chart_, Poly::constant(chart_.size(), c)); }

  static PolyForm add(const PolyForm& a, const PolyForm& b, std::size_t col) {
    if (a.is_zero() && a.degree() != b.degree()) return b;
    if (b.is_zero() && a.degree() != b.degree()) return a;
    if (a.degree() != b.degree())
      throw InputError("adding forms of degree " + std::to_string(a.degree()) + " and " +
                       std::to_string(b.degree()) + " at column " + std::to_string(col));
    return a + b;
  }

  PolyForm expr() {
    PolyForm v = term();
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      const Token op = next();
      PolyForm rhs = term();
      v = add(v, op.kind == Token::plus ? rhs : -rhs, op.col);
    }
    return v;
  }

  PolyForm term() {
    PolyForm v = unary();
    while (peek().kind == Token::star || peek().kind == Token::wedge || peek().kind == Token::slash) {
      const Token op = next();
      PolyForm rhs = unary();
      if (op.kind == Token::slash) {
        if (rhs.degree() != 0 || !rhs.coefficient({}).is_constant())
          throw InputError("division only by numeric constants, at column " + std::to_string(op.col));
        const Rat c = rhs.coefficient({}).constant_term();
        if (c == 0) throw InputError("zero denominator at column " + std::to_string(op.col));
        v = Poly::constant(chart_.size(), Rat(1) / c) * v;
      } else {
        v = wedge(v, rhs);
      }
    }
    return v;
  }

  PolyForm unary() {
    if (peek().kind == Token::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Token::plus) {
      next();
      return unary();
    }
    return power();
  }

  PolyForm power() {
    PolyForm base = primary();
    if (peek().kind != Token::caret) return base;
    const Token op = next();
    if (peek().kind != Token::number) fail("exponent must be a nonnegative integer");
    const unsigned long e = std::stoul(next().text);
    if (base.degree() != 0) throw InputError("cannot raise a form of positive degree to a power, at column " +
                                             std::to_string(op.col));
    const Poly b = base.coefficient({});
    Poly out = Poly::constant(chart_.size(), Rat(1));
    for (unsigned long i = 0; i < e; ++i) out = out * b;
    return PolyForm::function(chart_, out);
  }

  PolyForm primary() {
    const Token t = peek();
    switch (t.kind) {
      case Token::number: {
        next();
        return constant(Rat(mpz_class(t.text)));
      }
      case Token::ident: {
        next();
        for (std::size_t i = 0; i < chart_.size(); ++i)
          if (chart_[i] == t.text) return PolyForm::function(chart_, Poly::variable(chart_.size(), i));
        if (t.text.size() > 1 && t.text[0] == 'd') {
          const std::string rest = t.text.substr(1);
          for (std::size_t i = 0; i < chart_.size(); ++i)
            if (chart_[i] == rest) return PolyForm::differential(chart_, i);
        }
        throw InputError("unknown identifier '" + t.text + "' at column " + std::to_string(t.col));
      }
      case Token::lparen: {
        next();
        PolyForm v = expr();
        if (peek().kind != Token::rparen) fail("expected ')'");
        next();
        return v;
      }
      default: fail(t.kind == Token::end ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

// ---------------------------------------------------------------------------
// JSON helpers with field paths in error messages.

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) bad(path, "unknown field '" + k + "'");
  }
}

const Json& need(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rat as_rat(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rat(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const InputError& e) {
    bad(path, e.what());
  }
  bad(path, "expected a rational written as a string such as \"3/2\"");
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

Vec as_vec(const Json& j, const std::string& path, std::size_t dim) {
  as_array(j, path);
  if (j.size() != dim) bad(path, "expected " + std::to_string(dim) + " entries");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_rat(j[i], path + "/" + std::to_string(i)));
  return v;
}

std::vector<Vec> as_vectors(const Json& j, const std::string& path, std::size_t dim) {
  as_array(j, path);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_vec(j[i], path + "/" + std::to_string(i), dim));
  return out;
}

Subspace as_subspace(const Json& j, const std::string& path, std::size_t dim) {
  const auto vs = as_vectors(j, path, dim);
  Subspace s = Subspace::span(dim, vs);
  if (s.dim() != vs.size()) bad(path, "basis vectors are linearly dependent");
  return s;
}

AltForm as_altform(const Json& j, const std::string& path, std::size_t dim, std::optional<std::size_t> degree) {
  as_array(j, path);
  if (j.empty()) {
    if (!degree) bad(path, "cannot infer the degree of an empty form");
    return AltForm(dim, *degree);
  }
  std::optional<std::size_t> deg = degree;
  std::set<Multi> seen;
  std::vector<std::pair<Multi, Rat>> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = path + "/" + std::to_string(t);
    allow_keys(j[t], tp, {"indices", "coeff"});
    const Json& idx = as_array(need(j[t], tp, "indices"), tp + "/indices");
    Multi m;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const std::size_t v = as_size(idx[i], tp + "/indices/" + std::to_string(i));
      if (v < 1 || v > dim) bad(tp + "/indices", "index out of range 1.." + std::to_string(dim));
      m.push_back(v - 1);
    }
    if (deg && m.size() != *deg) bad(tp + "/indices", "expected " + std::to_string(*deg) + " indices");
    deg = m.size();
    Multi sorted = m;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) bad(tp + "/indices", "repeated index");
    if (!seen.insert(sorted).second) bad(tp + "/indices", "duplicate index tuple");
    Rat c = as_rat(need(j[t], tp, "coeff"), tp + "/coeff");
    terms.emplace_back(m, c);
  }
  AltForm a(dim, *deg);
  for (auto& [m, c] : terms) a.add(m, c);
  return a;
}

Chart as_chart(const Json& j, const std::string& path) {
  as_array(j, path);
  Chart c;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = as_string(j[i], path + "/" + std::to_string(i));
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      bad(path, "chart variable '" + name + "' is not an identifier");
    for (char ch : name)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        bad(path, "chart variable '" + name + "' is not an identifier");
    if (!seen.insert(name).second) bad(path, "duplicate chart variable '" + name + "'");
    c.push_back(name);
  }
  return c;
}

PolyForm as_polyform(const Json& j, const std::string& path, const Chart& chart) {
  try {
    return parse_polyform(as_string(j, path), chart);
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

Poly as_poly(const Json& j, const std::string& path, const Chart& chart) {
  if (j.is_number_integer()) return Poly::constant(chart.size(), as_rat(j, path));
  try {
    return parse_poly(as_string(j, path), chart);
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

std::map<std::string, PolyForm> as_form_table(const Json& j, const std::string& path, const Chart& chart) {
  if (!j.is_object()) bad(path, "expected an object of named forms");
  std::map<std::string, PolyForm> out;
  for (const auto& [name, v] : j.items()) out.emplace(name, as_polyform(v, path + "/" + name, chart));
  return out;
}

std::vector<Vec> as_points(const Json& j, const std::string& path, std::size_t dim) { return as_vectors(j, path, dim); }

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json parse_json_strict(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  std::optional<std::string> duplicate;
  auto cb = [&](int, nlohmann::json::parse_event_t ev, Json& parsed) {
    using E = nlohmann::json::parse_event_t;
    if (ev == E::object_start) keys.emplace_back();
    if (ev == E::object_end && !keys.empty()) keys.pop_back();
    if (ev == E::key && !keys.empty() && !keys.back().insert(parsed.get<std::string>()).second && !duplicate)
      duplicate = parsed.get<std::string>();
    return true;
  };
  try {
    Json j = Json::parse(text, cb);
    if (duplicate) throw InputError("duplicate key '" + *duplicate + "'");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

void parse_linear(const Json& j, SpecDocument& doc, StructureKind kind) {
  allow_keys(j, "", {"version", "kind", "dim", "forms", "V", "splitting", "metric", "params", "isotropy",
                     "description"});
  StructureSpec& s = doc.linear;
  s.kind = kind;
  s.dim = as_size(need(j, "", "dim"), "/dim");
  const std::size_t N = s.dim;
  const Json& forms = need(j, "", "forms");
  allow_keys(forms, "/forms", {"eta", "omega", "Omega"});
  if (forms.contains("eta")) {
    const Json& a = as_array(forms["eta"], "/forms/eta");
    for (std::size_t i = 0; i < a.size(); ++i)
      s.etas.push_back(as_altform(a[i], "/forms/eta/" + std::to_string(i), N, 1));
  }
  if (forms.contains("omega")) {
    const Json& a = as_array(forms["omega"], "/forms/omega");
    for (std::size_t i = 0; i < a.size(); ++i)
      s.omegas.push_back(as_altform(a[i], "/forms/omega/" + std::to_string(i), N, 2));
  }
  if (forms.contains("Omega")) s.big_omega = as_altform(forms["Omega"], "/forms/Omega", N, std::nullopt);
  if (j.contains("V")) s.V = as_subspace(j["V"], "/V", N);
  if (j.contains("splitting")) {
    const Json& sp = j["splitting"];
    allow_keys(sp, "/splitting", {"V_alpha", "D"});
    Splitting split;
    const Json& va = as_array(need(sp, "/splitting", "V_alpha"), "/splitting/V_alpha");
    for (std::size_t i = 0; i < va.size(); ++i)
      split.v_alpha.push_back(as_subspace(va[i], "/splitting/V_alpha/" + std::to_string(i), N));
    split.d = sp.contains("D") ? as_subspace(sp["D"], "/splitting/D", N) : Subspace(N);
    s.splitting = split;
  }
  if (j.contains("metric")) {
    const auto rows = as_vectors(j["metric"], "/metric", N);
    if (rows.size() != N) bad("/metric", "expected " + std::to_string(N) + " rows");
    s.metric = Mat::from_rows(rows, N);
  }
  if (j.contains("params")) {
    const Json& p = j["params"];
    allow_keys(p, "/params", {"k", "n", "r", "d", "degree"});
    if (p.contains("k")) s.declared.k = as_size(p["k"], "/params/k");
    if (p.contains("n")) s.declared.n = as_size(p["n"], "/params/n");
    if (p.contains("d")) s.declared.d = as_size(p["d"], "/params/d");
    if (p.contains("degree")) s.declared.degree = as_size(p["degree"], "/params/degree");
    if (p.contains("r")) {
      const Json& r = as_array(p["r"], "/params/r");
      std::vector<std::size_t> rs;
      for (std::size_t i = 0; i < r.size(); ++i) rs.push_back(as_size(r[i], "/params/r/" + std::to_string(i)));
      s.declared.r = rs;
    }
  }
  if (j.contains("isotropy")) {
    const Json& q = j["isotropy"];
    allow_keys(q, "/isotropy", {"W", "r"});
    IsotropyQuery iq;
    iq.W = as_subspace(need(q, "/isotropy", "W"), "/isotropy/W", N);
    iq.r = q.contains("r") ? as_size(q["r"], "/isotropy/r") : 1;
    doc.isotropy = iq;
  }
  for (const auto* group : {&s.etas, &s.omegas})
    for (const auto& f : *group)
      if (f.dim() != N) bad("/forms", "form dimension differs from dim");
}

void parse_chart(const Json& j, SpecDocument& doc) {
  allow_keys(j, "", {"version", "kind", "chart", "forms", "vector_fields", "distributions", "maps", "points",
                     "description"});
  ChartBundle& b = doc.chart;
  b.chart = as_chart(need(j, "", "chart"), "/chart");
  const std::size_t n = b.chart.size();
  if (j.contains("forms")) b.forms = as_form_table(j["forms"], "/forms", b.chart);
  if (j.contains("vector_fields")) {
    const Json& vf = j["vector_fields"];
    if (!vf.is_object()) bad("/vector_fields", "expected an object");
    for (const auto& [name, comps] : vf.items()) {
      const std::string p = "/vector_fields/" + name;
      as_array(comps, p);
      if (comps.size() != n) bad(p, "expected " + std::to_string(n) + " components");
      PolyVectorField X{b.chart, {}};
      for (std::size_t i = 0; i < n; ++i) X.components.push_back(as_poly(comps[i], p + "/" + std::to_string(i), b.chart));
      b.vector_fields.emplace(name, std::move(X));
    }
  }
  if (j.contains("distributions")) {
    const Json& ds = j["distributions"];
    if (!ds.is_object()) bad("/distributions", "expected an object");
    for (const auto& [name, gens] : ds.items()) {
      const std::string p = "/distributions/" + name;
      as_array(gens, p);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string g = as_string(gens[i], p + "/" + std::to_string(i));
        if (!b.vector_fields.count(g)) bad(p, "unknown vector field '" + g + "'");
        names.push_back(g);
      }
      b.distributions.emplace(name, std::move(names));
    }
  }
  if (j.contains("maps")) {
    const Json& ms = j["maps"];
    if (!ms.is_object()) bad("/maps", "expected an object");
    for (const auto& [name, m] : ms.items()) {
      const std::string p = "/maps/" + name;
      allow_keys(m, p, {"source", "components", "pullback", "points"});
      MapEntry e;
      e.map.source = as_chart(need(m, p, "source"), p + "/source");
      e.map.target = b.chart;
      const Json& comps = as_array(need(m, p, "components"), p + "/components");
      if (comps.size() != n) bad(p + "/components", "expected one component per chart variable");
      for (std::size_t i = 0; i < n; ++i)
        e.map.components.push_back(as_poly(comps[i], p + "/components/" + std::to_string(i), e.map.source));
      if (m.contains("pullback")) {
        const Json& pb = as_array(m["pullback"], p + "/pullback");
        for (std::size_t i = 0; i < pb.size(); ++i) {
          const std::string f = as_string(pb[i], p + "/pullback/" + std::to_string(i));
          if (!b.forms.count(f)) bad(p + "/pullback", "unknown form '" + f + "'");
          e.pullback.push_back(f);
        }
      }
      if (m.contains("points")) e.points = as_points(m["points"], p + "/points", e.map.source.size());
      b.maps.emplace(name, std::move(e));
    }
  }
  if (j.contains("points")) b.points = as_points(j["points"], "/points", n);
}

void parse_connection(const Json& j, SpecDocument& doc) {
  allow_keys(j, "", {"version", "kind", "chart", "christoffel", "forms", "description"});
  ConnectionBundle& b = doc.connection;
  const Chart chart = as_chart(need(j, "", "chart"), "/chart");
  b.connection = Connection(chart);
  std::set<std::vector<std::size_t>> seen;
  if (j.contains("christoffel")) {
    const Json& cs = as_array(j["christoffel"], "/christoffel");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = "/christoffel/" + std::to_string(i);
      allow_keys(cs[i], p, {"upper", "lower", "value"});
      auto index = [&](const Json& v, const std::string& vp) {
        const std::string name = as_string(v, vp);
        try {
          return chart_index(chart, name);
        } catch (const InputError& e) {
          bad(vp, e.what());
        }
      };
      const std::size_t c = index(need(cs[i], p, "upper"), p + "/upper");
      const Json& lower = as_array(need(cs[i], p, "lower"), p + "/lower");
      if (lower.size() != 2) bad(p + "/lower", "expected two lower indices");
      const std::size_t a = index(lower[0], p + "/lower/0");
      const std::size_t bb = index(lower[1], p + "/lower/1");
      if (!seen.insert({c, a, bb}).second) bad(p, "duplicate Christoffel symbol");
      b.connection.gamma(c, a, bb) = as_poly(need(cs[i], p, "value"), p + "/value", chart);
    }
  }
  if (j.contains("forms")) b.forms = as_form_table(j["forms"], "/forms", chart);
}

}  // namespace

Poly parse_poly(const std::string& text, const Chart& chart) {
  const PolyForm f = FormParser(text, chart).parse();
  if (f.degree() != 0) throw InputError("expected a polynomial, got a form of degree " + std::to_string(f.degree()));
  return f.coefficient({});
}

PolyForm parse_polyform(const std::string& text, const Chart& chart) { return FormParser(text, chart).parse(); }

SpecDocument parse_spec(const std::string& text) {
  const Json j = parse_json_strict(text);
  if (!j.is_object()) throw InputError("top level must be an object");
  SpecDocument doc;
  const Json& version = need(j, "", "version");
  if (!version.is_number_integer() || version.get<long long>() != kSpecVersion)
    bad("/version", "unsupported version (expected " + std::to_string(kSpecVersion) + ")");
  const std::string kind = as_string(need(j, "", "kind"), "/kind");
  if (kind == "chart") {
    doc.type = SpecDocument::Type::chart;
    parse_chart(j, doc);
  } else if (kind == "connection") {
    doc.type = SpecDocument::Type::connection;
    parse_connection(j, doc);
  } else {
    StructureKind sk;
    try {
      sk = parse_structure_kind(kind);
    } catch (const InputError& e) {
      bad("/kind", e.what());
    }
    doc.type = SpecDocument::Type::linear;
    parse_linear(j, doc, sk);
  }
  return doc;
}

SpecDocument read_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json vectors_to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

Json matrix_to_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

Json altform_to_json(const AltForm& f) {
  Json a = Json::array();
  for (const auto& [idx, c] : f.terms()) {
    Json ix = Json::array();
    for (auto i : idx) ix.push_back(i + 1);
    a.push_back(Json{{"indices", ix}, {"coeff", to_string(c)}});
  }
  return a;
}

Json serialize_spec(const StructureSpec& s) {
  Json j;
  j["version"] = kSpecVersion;
  j["kind"] = to_string(s.kind);
  j["dim"] = s.dim;
  Json forms = Json::object();
  if (!s.etas.empty()) {
    forms["eta"] = Json::array();
    for (const auto& e : s.etas) forms["eta"].push_back(altform_to_json(e));
  }
  if (!s.omegas.empty()) {
    forms["omega"] = Json::array();
    for (const auto& w : s.omegas) forms["omega"].push_back(altform_to_json(w));
  }
  if (s.big_omega) forms["Omega"] = altform_to_json(*s.big_omega);
  j["forms"] = forms;
  if (s.V) j["V"] = vectors_to_json(s.V->basis());
  if (s.splitting) {
    Json va = Json::array();
    for (const auto& v : s.splitting->v_alpha) va.push_back(vectors_to_json(v.basis()));
    j["splitting"] = Json{{"V_alpha", va}, {"D", vectors_to_json(s.splitting->d.basis())}};
  }
  if (s.metric) j["metric"] = matrix_to_json(*s.metric);
  Json p = Json::object();
  if (s.declared.k) p["k"] = *s.declared.k;
  if (s.declared.n) p["n"] = *s.declared.n;
  if (s.declared.d) p["d"] = *s.declared.d;
  if (s.declared.degree) p["degree"] = *s.declared.degree;
  if (s.declared.r) p["r"] = *s.declared.r;
  if (!p.empty()) j["params"] = p;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Vec> parse_points(const std::string& text, std::size_t dim) {
  std::vector<Vec> out;
  std::stringstream all(text);
  std::string point;
  while (std::getline(all, point, ';')) {
    Vec v;
    std::stringstream ps(point);
    std::string coord;
    while (std::getline(ps, coord, ',')) v.push_back(parse_rat(coord));
    if (v.size() != dim) throw InputError("point '" + point + "' needs " + std::to_string(dim) + " coordinates");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace darboux
