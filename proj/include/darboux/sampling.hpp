#pragma once

#include <random>

#include "darboux/normal_form.hpp"
#include "darboux/verifier.hpp"

namespace darboux {

// Rational in [-bound, bound] with denominator in {1..max_den}.
Rat random_rat(std::mt19937_64& rng, long bound = 5, long max_den = 3);
Mat random_invertible(std::mt19937_64& rng, std::size_t n, long bound = 5, long max_den = 3);

StructureKind structure_kind_of(TemplateKind kind);

// The template's own data: model forms, polarisation, splitting, identity metric.
StructureSpec template_spec(const CanonicalTemplate& t);

struct Instance {
  CanonicalTemplate tmpl;
  Mat L;  // input = pullback(L, template)
  StructureSpec spec;
};

Instance random_instance(const CanonicalTemplate& t, std::mt19937_64& rng);

}  // namespace darboux
