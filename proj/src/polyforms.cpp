#include "darboux/polyforms.hpp"

#include <algorithm>
#include <sstream>

namespace darboux {

std::size_t chart_index(const Chart& chart, const std::string& name) {
  auto it = std::find(chart.begin(), chart.end(), name);
  if (it == chart.end()) throw InputError("'" + name + "' is not a chart variable");
  return static_cast<std::size_t>(it - chart.begin());
}

namespace {

void same_chart(const Chart& a, const Chart& b) {
  if (a != b) throw InputError("objects live on different charts");
}

Poly zero_poly(const Chart& c) { return Poly(c.size()); }

}  // namespace

PolyForm PolyForm::function(Chart chart, Poly f) {
  if (f.nvars() != chart.size()) throw InputError("coefficient ring does not match the chart");
  PolyForm a(std::move(chart), 0);
  a.add({}, f);
  return a;
}

PolyForm PolyForm::differential(Chart chart, std::size_t i) {
  if (i >= chart.size()) throw InputError("differential index out of range");
  const std::size_t n = chart.size();
  PolyForm a(std::move(chart), 1);
  a.add({i}, Poly::constant(n, Rat(1)));
  return a;
}

void PolyForm::add(Multi idx, const Poly& c) {
  if (idx.size() != degree_) throw InputError("index tuple length differs from the form degree");
  if (c.nvars() != chart_.size()) throw InputError("coefficient ring does not match the chart");
  for (auto i : idx)
    if (i >= chart_.size()) throw InputError("form index out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0 || c.is_zero()) return;
  Poly term = sign > 0 ? c : -c;
  auto [it, inserted] = terms_.emplace(idx, term);
  if (!inserted) {
    it->second += term;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly PolyForm::coefficient(Multi idx) const {
  const int sign = sort_with_sign(idx);
  if (sign == 0) return zero_poly(chart_);
  auto it = terms_.find(idx);
  if (it == terms_.end()) return zero_poly(chart_);
  return sign > 0 ? it->second : -it->second;
}

AltForm PolyForm::evaluate(const Vec& point) const {
  AltForm out(dim(), degree_);
  for (const auto& [idx, c] : terms_) out.add(idx, c.evaluate(point));
  return out;
}

PolyForm PolyForm::operator-() const {
  PolyForm out = *this;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  same_chart(a.chart(), b.chart());
  if (a.degree() != b.degree()) throw InputError("adding forms of different degree");
  PolyForm out = a;
  for (const auto& [idx, c] : b.terms()) out.add(idx, c);
  return out;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }

PolyForm operator*(const Poly& f, const PolyForm& a) {
  PolyForm out(a.chart(), a.degree());
  for (const auto& [idx, c] : a.terms()) out.add(idx, f * c);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  same_chart(a.chart(), b.chart());
  PolyForm out(a.chart(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      Multi idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, ca * cb);
    }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm out(a.chart(), a.degree() + 1);
  if (out.degree() > a.dim()) return out;
  for (const auto& [idx, c] : a.terms())
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Poly dc = c.derivative(j);
      if (dc.is_zero()) continue;
      Multi m{j};
      m.insert(m.end(), idx.begin(), idx.end());
      out.add(m, dc);
    }
  return out;
}

bool is_closed(const PolyForm& a) { return exterior_derivative(a).is_zero(); }

std::string to_string(const PolyForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    std::string coeff = to_string(c, a.chart());
    const bool simple = c.terms().size() == 1;
    const bool negative = simple && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    if (idx.empty()) {
      out << coeff;
      continue;
    }
    if (coeff != "1") out << (simple ? coeff : "(" + coeff + ")") << " * ";
    for (std::size_t t = 0; t < idx.size(); ++t) out << (t ? "∧" : "") << "d" << a.chart()[idx[t]];
  }
  return out.str();
}

Vec PolyVectorField::evaluate(const Vec& point) const {
  Vec v;
  for (const auto& c : components) v.push_back(c.evaluate(point));
  return v;
}

PolyVectorField coordinate_field(const Chart& chart, std::size_t i) {
  PolyVectorField X{chart, std::vector<Poly>(chart.size(), Poly(chart.size()))};
  X.components.at(i) = Poly::constant(chart.size(), Rat(1));
  return X;
}

PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y) {
  same_chart(X.chart, Y.chart);
  const std::size_t n = X.chart.size();
  if (X.components.size() != n || Y.components.size() != n) throw InputError("vector field has the wrong length");
  PolyVectorField Z{X.chart, std::vector<Poly>(n, Poly(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Z.components[i] += X.components[j] * Y.components[i].derivative(j);
      Z.components[i] -= Y.components[j] * X.components[i].derivative(j);
    }
  return Z;
}

std::string to_string(const PolyVectorField& X) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < X.components.size(); ++i) {
    const auto& c = X.components[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const std::string s = to_string(c, X.chart);
    if (s != "1") out << (c.terms().size() == 1 ? s : "(" + s + ")") << "*";
    out << "d/d" << X.chart[i];
  }
  return first ? "0" : out.str();
}

PolyForm pullback_map(const PolyMap& phi, const PolyForm& a) {
  same_chart(phi.target, a.chart());
  const std::size_t m = phi.source.size();
  if (phi.components.size() != phi.target.size()) throw InputError("map needs one component per target variable");
  for (const auto& c : phi.components)
    if (c.nvars() != m) throw InputError("map components must be polynomials in the source chart");
  std::vector<PolyForm> d_phi;
  for (const auto& c : phi.components) {
    PolyForm f(phi.source, 1);
    for (std::size_t j = 0; j < m; ++j) f.add({j}, c.derivative(j));
    d_phi.push_back(std::move(f));
  }
  PolyForm out(phi.source, a.degree());
  for (const auto& [idx, c] : a.terms()) {
    PolyForm term = PolyForm::function(phi.source, c.substitute(phi.components));
    for (auto i : idx) term = wedge(term, d_phi[i]);
    out = out + term;
  }
  return out;
}

std::size_t generic_rank(PolyMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  const std::size_t nv = cols && !m.front().empty() ? m.front().front().nvars() : 0;
  Poly prev = Poly::constant(nv, Rat(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("fraction-free elimination produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][c] = Poly(nv);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t generic_rank(const PolyForm& omega) {
  if (omega.degree() != 2) throw InputError("rank is defined here for two-forms");
  const std::size_t n = omega.dim();
  PolyMatrix m(n, std::vector<Poly>(n, Poly(n)));
  for (const auto& [idx, c] : omega.terms()) {
    m[idx[0]][idx[1]] = c;
    m[idx[1]][idx[0]] = -c;
  }
  return generic_rank(std::move(m));
}

std::vector<std::size_t> rank_profile(const PolyForm& omega, const std::vector<Vec>& points) {
  if (omega.degree() != 2) throw InputError("rank is defined here for two-forms");
  std::vector<std::size_t> out;
  for (const auto& p : points) out.push_back(rank(omega.evaluate(p).matrix()));
  return out;
}

Subspace kernel_distribution(const PolyForm& omega, const Vec& point) {
  if (omega.degree() == 0) throw InputError("kernel of a function is undefined");
  return one_kernel(omega.evaluate(point));
}

FrobeniusReport frobenius_involutive(const std::vector<PolyVectorField>& D, const std::vector<Vec>& points) {
  FrobeniusReport rep;
  rep.at_points.assign(points.size(), true);
  if (D.empty()) return rep;
  const Chart& chart = D.front().chart;
  for (const auto& X : D) same_chart(chart, X.chart);
  const std::size_t n = chart.size();
  auto point_rank = [&](const std::vector<PolyVectorField>& fields, const Vec& p) {
    std::vector<Vec> rows;
    for (const auto& X : fields) rows.push_back(X.evaluate(p));
    return rank(Mat::from_rows(rows, n));
  };
  auto symbolic_rank = [&](const std::vector<PolyVectorField>& fields) {
    PolyMatrix m;
    for (const auto& X : fields) m.push_back(X.components);
    return generic_rank(std::move(m));
  };
  const std::size_t base_rank = symbolic_rank(D);
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = i + 1; j < D.size(); ++j) {
      std::vector<PolyVectorField> stacked = D;
      stacked.push_back(lie_bracket(D[i], D[j]));
      if (symbolic_rank(stacked) != base_rank) {
        rep.generic = false;
        rep.escaping.emplace_back(i, j);
      }
      for (std::size_t p = 0; p < points.size(); ++p)
        if (point_rank(stacked, points[p]) != point_rank(D, points[p])) rep.at_points[p] = false;
    }
  return rep;
}

}  // namespace darboux
