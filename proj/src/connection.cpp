#include "darboux/connection.hpp"

#include <algorithm>

namespace darboux {

Connection::Connection(Chart chart) : chart_(std::move(chart)) {
  const std::size_t n = chart_.size();
  gamma_.assign(n * n * n, Poly(n));
}

Poly& Connection::gamma(std::size_t c, std::size_t a, std::size_t b) {
  const std::size_t n = dim();
  if (c >= n || a >= n || b >= n) throw InputError("Christoffel index out of range");
  return gamma_[(c * n + a) * n + b];
}

const Poly& Connection::gamma(std::size_t c, std::size_t a, std::size_t b) const {
  const std::size_t n = dim();
  if (c >= n || a >= n || b >= n) throw InputError("Christoffel index out of range");
  return gamma_[(c * n + a) * n + b];
}

TensorField::TensorField(Chart c, std::size_t up, std::size_t down)
    : chart(std::move(c)), contravariant(up), covariant(down) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < up + down; ++i) count *= chart.size();
  components.assign(count, Poly(chart.size()));
}

namespace {

std::size_t flat_index(const TensorField& t, const std::vector<std::size_t>& idx) {
  if (idx.size() != t.rank()) throw InputError("tensor index has the wrong length");
  std::size_t pos = 0;
  for (auto i : idx) {
    if (i >= t.chart.size()) throw InputError("tensor index out of range");
    pos = pos * t.chart.size() + i;
  }
  return pos;
}

// Every index tuple of length k over {0..n-1}, in row-major order.
std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(k, 0);
  if (n == 0 && k > 0) return out;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0) {
      if (++t[i - 1] < n) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace

Poly& TensorField::at(const std::vector<std::size_t>& idx) { return components[flat_index(*this, idx)]; }
const Poly& TensorField::at(const std::vector<std::size_t>& idx) const { return components[flat_index(*this, idx)]; }

bool TensorField::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Poly& p) { return p.is_zero(); });
}

TensorField covariant_derivative_form(const Connection& nabla, const PolyForm& a) {
  if (nabla.chart() != a.chart()) throw InputError("connection and form live on different charts");
  const std::size_t n = nabla.dim();
  const std::size_t k = a.degree();
  TensorField out(nabla.chart(), 0, k + 1);
  for (const auto& slots : all_tuples(n, k)) {
    const Poly coeff = a.coefficient(slots);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> idx{b};
      idx.insert(idx.end(), slots.begin(), slots.end());
      Poly value = coeff.derivative(b);
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> moved = slots;
        for (std::size_t c = 0; c < n; ++c) {
          const Poly& g = nabla.gamma(c, b, slots[j]);
          if (g.is_zero()) continue;
          moved[j] = c;
          value -= g * a.coefficient(moved);
        }
      }
      out.at(idx) = std::move(value);
    }
  }
  return out;
}

bool is_parallel(const Connection& nabla, const PolyForm& a) { return covariant_derivative_form(nabla, a).is_zero(); }

TensorField torsion(const Connection& nabla) {
  const std::size_t n = nabla.dim();
  TensorField t(nabla.chart(), 1, 2);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.at({c, a, b}) = nabla.gamma(c, a, b) - nabla.gamma(c, b, a);
  return t;
}

TensorField curvature(const Connection& nabla) {
  const std::size_t n = nabla.dim();
  TensorField r(nabla.chart(), 1, 3);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Poly v = nabla.gamma(d, b, c).derivative(a) - nabla.gamma(d, a, c).derivative(b);
          for (std::size_t e = 0; e < n; ++e) {
            v += nabla.gamma(d, a, e) * nabla.gamma(e, b, c);
            v -= nabla.gamma(d, b, e) * nabla.gamma(e, a, c);
          }
          r.at({d, c, a, b}) = std::move(v);
        }
  return r;
}

bool is_flat(const Connection& nabla) { return curvature(nabla).is_zero(); }

}  // namespace darboux
