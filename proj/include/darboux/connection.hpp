#pragma once

#include <vector>

#include "darboux/polyforms.hpp"

namespace darboux {

// Linear connection on a chart: Christoffel symbols Gamma^c_{ab}, stored with
// the upper index first. Absent entries are zero.
class Connection {
 public:
  Connection() = default;
  explicit Connection(Chart chart);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.size(); }
  Poly& gamma(std::size_t c, std::size_t a, std::size_t b);
  const Poly& gamma(std::size_t c, std::size_t a, std::size_t b) const;

 private:
  Chart chart_;
  std::vector<Poly> gamma_;
};

// Components in row-major order over `contravariant` upper indices followed
// by `covariant` lower indices.
struct TensorField {
  Chart chart;
  std::size_t contravariant = 0;
  std::size_t covariant = 0;
  std::vector<Poly> components;

  TensorField() = default;
  TensorField(Chart c, std::size_t up, std::size_t down);
  std::size_t rank() const noexcept { return contravariant + covariant; }
  Poly& at(const std::vector<std::size_t>& idx);
  const Poly& at(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
};

// (nabla a)_{b; a_1..a_k} = d_b a_{a_1..a_k} - sum_j Gamma^c_{b a_j} a_{a_1..c..a_k}
TensorField covariant_derivative_form(const Connection& nabla, const PolyForm& a);
bool is_parallel(const Connection& nabla, const PolyForm& a);

// T^c_{ab} = Gamma^c_{ab} - Gamma^c_{ba}
TensorField torsion(const Connection& nabla);

// R^d_{cab} = d_a Gamma^d_{bc} - d_b Gamma^d_{ac} + Gamma^d_{ae} Gamma^e_{bc} - Gamma^d_{be} Gamma^e_{ac}
TensorField curvature(const Connection& nabla);
bool is_flat(const Connection& nabla);

}  // namespace darboux
