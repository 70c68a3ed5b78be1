#pragma once

#include <map>
#include <span>

#include "bivar/common.hpp"
#include "bivar/root_systems.hpp"

namespace bivar {

/*
  Reference evaluators used to cross-check the formula engine. Nothing in
  here calls into multiplicity.hpp.
*/

/*
  Dominant-weight diagram of an irreducible representation. Keys are
  dominant for the actual Weyl group (type D keys may have a negative last
  coordinate). Type-A keys keep the coordinate sum of the highest weight.
*/
struct WeightDiagram {
  AlgebraSpec spec;
  Weight highest;
  std::map<Weight, BigInt> entries;

  /// Multiplicity of an arbitrary integral weight (0 if it is not a weight).
  BigInt at(const Weight& mu) const;

  /// Sum over entries of (Weyl orbit size) * multiplicity.
  BigInt dimension() const;
};

/*
  Freudenthal's recursion
      (|lambda+rho|^2 - |mu+rho|^2) m(mu)
          = 2 sum_{alpha>0} sum_{t>=1} m(mu + t alpha) <mu + t alpha, alpha>,
  over dominant weights in order of increasing depth below lambda. All
  arithmetic is on integers scaled so that rho and the type-A sum-zero
  projection stay integral.
*/
WeightDiagram freudenthal_diagram(const AlgebraSpec& spec, const Weight& lambda);

/*
  m_{tau_{k,l}}(mu) = sum_eta m_{pi_{k e1}}(mu - eta) m_{pi_{l e1}}(eta) by
  direct summation over the weights eta of pi_{l e1}; the single-row
  multiplicities come from Freudenthal diagrams.
*/
BigInt convolution_tensor_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu);

/// Bivariate multiplicity from convolution_tensor_mult and the virtual-ring identity.
BigInt convolution_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu);

/*
  Number of semistandard tableaux of the given shape (weakly decreasing row
  lengths) with content[i] entries equal to i+1. Throws
  ShapeContentMismatch when the content does not fill the shape.
*/
BigInt kostka_count(std::span<const int> shape, std::span<const int> content);

}  // namespace bivar
