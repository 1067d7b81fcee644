#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace darboux {

// Exact rational scalar. GMP keeps every value in lowest terms with a
// positive denominator once canonicalized; all constructors below do so.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Malformed input: syntax, shape or dimension mismatch. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of an operation does not hold for the given data.
// `clause` names the violated condition. Maps to CLI exit code 1.
class StructureError : public std::domain_error {
 public:
  StructureError(std::string clause, const std::string& what)
      : std::domain_error(what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

Rat make_rat(long num, long den = 1);

// Parses "p", "-p" or "p/q" exactly. Throws InputError on a zero denominator
// or anything that is not an integer ratio.
Rat parse_rat(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rat& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);

}  // namespace darboux
