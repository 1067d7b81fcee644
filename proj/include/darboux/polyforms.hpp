#pragma once

#include <map>
#include <string>
#include <vector>

#include "darboux/exterior.hpp"
#include "darboux/poly.hpp"

namespace darboux {

using Chart = std::vector<std::string>;

std::size_t chart_index(const Chart& chart, const std::string& name);

// Differential form on a chart with polynomial coefficients.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}
  static PolyForm function(Chart chart, Poly f);
  static PolyForm differential(Chart chart, std::size_t i);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Multi, Poly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Multi idx, const Poly& c);
  Poly coefficient(Multi idx) const;
  AltForm evaluate(const Vec& point) const;

  PolyForm operator-() const;
  bool operator==(const PolyForm& o) const = default;

 private:
  Chart chart_;
  std::size_t degree_ = 0;
  std::map<Multi, Poly> terms_;
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm operator*(const Poly& f, const PolyForm& a);

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& a);
bool is_closed(const PolyForm& a);
std::string to_string(const PolyForm& a);

struct PolyVectorField {
  Chart chart;
  std::vector<Poly> components;

  Vec evaluate(const Vec& point) const;
  bool operator==(const PolyVectorField& o) const = default;
};

PolyVectorField coordinate_field(const Chart& chart, std::size_t i);
PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y);
std::string to_string(const PolyVectorField& X);

// Polynomial map from `source` coordinates to `target` coordinates.
struct PolyMap {
  Chart source;
  Chart target;
  std::vector<Poly> components;
};

PolyForm pullback_map(const PolyMap& phi, const PolyForm& a);

using PolyMatrix = std::vector<std::vector<Poly>>;

// Rank over the field of rational functions, by fraction-free elimination.
std::size_t generic_rank(PolyMatrix m);
std::size_t generic_rank(const PolyForm& omega);
std::vector<std::size_t> rank_profile(const PolyForm& omega, const std::vector<Vec>& points);
Subspace kernel_distribution(const PolyForm& omega, const Vec& point);

struct FrobeniusReport {
  std::vector<bool> at_points;
  bool generic = true;
  std::vector<std::pair<std::size_t, std::size_t>> escaping;  // generator pairs whose bracket leaves the span
};

FrobeniusReport frobenius_involutive(const std::vector<PolyVectorField>& D, const std::vector<Vec>& points);

}  // namespace darboux
