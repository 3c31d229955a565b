#pragma once

#include <memory>
#include <string>

#include "gseq/algebra.hpp"

namespace gseq {

// Builtin model library, resolved by name:
//   S<n>   sphere models (odd: one generator; even: two, d x_{2n-1} = x_n^2)
//   CP<n>  complex projective space
//   HP<n>  quaternionic projective space
//   KQ<n>  Eilenberg-Mac Lane model Lambda(z_n), zero differential
//   A x B  products spelled with a literal 'x', e.g. S3xS5
// Returns nullptr when the name matches no pattern.
std::shared_ptr<FreeDGAlgebra> builtin_model(const std::string& name);

}  // namespace gseq
