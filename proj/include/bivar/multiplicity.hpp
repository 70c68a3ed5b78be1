#pragma once

#include <span>

#include "bivar/common.hpp"
#include "bivar/root_systems.hpp"

namespace bivar {

/// Exact half-integer value twice/2.
struct HalfInteger {
  long twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  long floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
  HalfInteger operator-(long v) const { return {twice - 2 * v}; }
  friend bool operator==(HalfInteger, HalfInteger) = default;
};

/*
  Weight multiplicities of the bivariate representations pi_{k e1 + l e2}
  of so(2n+1), sp(n), so(2n) and sl(n+1).

  Every query reduces to the virtual-ring identity
      pi_{k,l} = tau_{k,l} - tau_{k+1,l-1} - tau_{k-1,l-1} + tau_{k,l-2}
  (types B, C, D) or pi_{k,l} = tau_{k,l} - tau_{k+1,l-1} (type A), where
  tau_{k,l} = pi_{k e1} (x) pi_{l e1}. The multiplicity of mu in tau_{k,l}
  depends on mu only through r(mu) = (k + l - ||mu||)/2 and the level
  counts l_t(mu), t < l, and is a sum over partitions q of N <= l with at
  most n parts and the nested index arrays beta, alpha attached to q.

  Type-A weights may be given in any shift representative; they are
  shifted to the representative with coordinate sum k + l before the
  formulas are applied, and the multiplicity is 0 when no such
  representative has non-negative coordinates.

  Half-integral (spin) weights are not representable; their multiplicity
  in every pi_{k e1 + l e2} is 0.
*/

/// Multiplicity of mu in pi_{k e1}.
BigInt mult_single_row(const AlgebraSpec& spec, int k, const Weight& mu);

/*
  The partition-indexed function X_n(l, r, l_0, ..., l_{l-1}) for X in
  {B, C, D}: the multiplicity of a weight with statistics (r, levels) in
  tau_{k,l}. Zero for l < 0. `levels` must hold at least l entries; extra
  entries are ignored.
*/
BigInt tensor_function(Family family, int n, int l, HalfInteger r, std::span<const int> levels);

/*
  Type-A analogue: number of compositions eta of l into n+1 parts with
  eta <= mu coordinatewise, as a sum over partitions q of l with at most
  n+1 parts. `levels[t]` counts coordinates equal to t.
*/
BigInt tensor_function_a(int n, int l, std::span<const int> levels);

/// Multiplicity of mu in tau_{k,l} = pi_{k e1} (x) pi_{l e1}.
BigInt tensor_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu);

/// Multiplicity of mu in pi_{k e1 + l e2}.
BigInt mult_bivariate(const AlgebraSpec& spec, int k, int l, const Weight& mu);

/// Closed single-sum formula for the multiplicity of the zero weight (B, C, D).
BigInt mult_zero_weight(const AlgebraSpec& spec, int k, int l);

/// Closed form for pi_{k e1 + 2 e2} of so(2n), n >= 3, k >= 2.
BigInt mult_l2_D(int n, int k, const Weight& mu);

/// Closed form for pi_{k e1 + 2 e2} of sl(n+1), n >= 2, k >= 2.
BigInt mult_l2_A(int n, int k, const Weight& mu);

/// Closed form for pi_{k e1 + e2}, k >= 1, all four families.
BigInt mult_l1(const AlgebraSpec& spec, int k, const Weight& mu);

/*
  Shifts a type-A weight to the representative with coordinate sum
  `total`. Returns false when that representative is not integral or has
  a negative coordinate.
*/
bool normalize_type_a(const Weight& mu, int total, Weight& out);

}  // namespace bivar
