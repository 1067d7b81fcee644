#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

using Exponent = std::vector<unsigned>;

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// in lexicographic order of exponent vectors; zero coefficients are dropped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  unsigned total_degree() const;

  void add_term(const Exponent& e, const Rat& c);

  Poly derivative(std::size_t i) const;
  Rat evaluate(const Vec& point) const;
  // Replace variable i by values[i]; all values share one variable count.
  Poly substitute(const std::vector<Poly>& values) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rat> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

std::string to_string(const Poly& p, const std::vector<std::string>& names);

}  // namespace darboux
