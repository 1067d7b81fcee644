#include "darboux/poly.hpp"

#include <sstream>

namespace darboux {

namespace {

Rat power(const Rat& x, unsigned e) {
  Rat out = 1;
  Rat base = x;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

void check_same(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw InputError("polynomials over different variable sets");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  Poly p(nvars);
  p.add_term(e, Rat(1));
  return p;
}

bool Poly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x) return false;
  return true;
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Poly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

void Poly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw InputError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= nvars_) throw InputError("derivative variable out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

Rat Poly::evaluate(const Vec& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has the wrong dimension");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i)
      if (e[i]) t *= power(point[i], e[i]);
    total += t;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  if (values.size() != nvars_) throw InputError("substitution needs one polynomial per variable");
  const std::size_t m = values.empty() ? 0 : values.front().nvars();
  for (const auto& v : values)
    if (v.nvars() != m) throw InputError("substituted polynomials over different variable sets");
  Poly out(m);
  std::vector<std::vector<Poly>> powers(nvars_);
  auto pow_of = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(m, Rat(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * pow_of(i, e[i]);
    out += t;
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  Poly out(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const Rat& s, const Poly& a) {
  Poly out(a.nvars());
  if (s == 0) return out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, s * c);
  return out;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  Poly rem = a;
  Poly q(a.nvars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent e = re;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lead_e[i]) return std::nullopt;
      e[i] -= lead_e[i];
    }
    Poly t(a.nvars());
    t.add_term(e, rc / lead_c);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool has_var = false;
    for (auto x : e) has_var = has_var || x;
    bool wrote = false;
    if (mag != 1 || !has_var) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) out << "*";
      out << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace darboux
