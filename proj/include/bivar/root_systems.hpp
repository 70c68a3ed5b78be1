#pragma once

#include <set>
#include <string>
#include <vector>

#include "bivar/common.hpp"

namespace bivar {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct AlgebraSpec {
  Family family;
  int rank;

  /// Number of epsilon coordinates: rank+1 for type A, rank otherwise.
  int weight_length() const { return family == Family::A ? rank + 1 : rank; }
  std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Throws Error(RankOutOfRange) unless B/C/A have rank >= 2 and D has rank >= 3.
void validate(const AlgebraSpec& spec);

void check_length(const AlgebraSpec& spec, const Weight& mu);

struct WeightStats {
  int one_norm = 0;
  std::vector<int> level_counts;  // level_counts[t] = #{i : |a_i| = t}, t < l
};

/*
  One-norm and level counts of mu. For type A the coordinates are taken
  as given (no absolute value): callers pass the non-negative
  representative the formulas expect.
*/
WeightStats weight_stats(const AlgebraSpec& spec, const Weight& mu, int l);

/*
  Type-A canonical representative: shifted so that the minimum coordinate
  is 0. Identity for B/C/D. Equality and ordering of type-A weights go
  through this.
*/
Weight canonical_weight(const AlgebraSpec& spec, Weight mu);

/*
  Canonical form under W_n = Sym(n) x {+-1}^n for B/C/D (absolute values
  sorted weakly decreasing) and under Sym(n+1) for A (sorted after
  normalization). For D this is coarser than the Weyl group; it is
  multiplicity-safe for highest weights k*e1 + l*e2 with n >= 3.
*/
Weight dominant_representative(const AlgebraSpec& spec, const Weight& mu);

/*
  Dominant representative under the actual Weyl group. Same as
  dominant_representative except for type D, where the sign of the last
  coordinate is the product of all signs when no coordinate vanishes.
*/
Weight weyl_dominant(const AlgebraSpec& spec, const Weight& mu);

bool is_dominant(const AlgebraSpec& spec, const Weight& mu);

/// Full W_n orbit (Sym(n+1) orbit for type A), lexicographically ordered.
std::set<Weight> orbit(const AlgebraSpec& spec, const Weight& dominant);

/*
  Orbit under the actual Weyl group, in the coordinates given (no type-A
  normalization). For type D with no zero coordinate only sign changes of
  even parity are applied.
*/
std::set<Weight> weyl_orbit(const AlgebraSpec& spec, const Weight& mu);

/// Size of the W_n orbit of mu (Sym(n+1) orbit for type A).
BigInt orbit_size(const AlgebraSpec& spec, const Weight& mu);

/// Size of the orbit of mu under the Weyl group itself (differs from orbit_size only for D).
BigInt weyl_orbit_size(const AlgebraSpec& spec, const Weight& mu);

/// Positive roots as integer epsilon-coordinate vectors.
std::vector<Weight> positive_roots(const AlgebraSpec& spec);

/// 2*rho in epsilon coordinates (integral for every classical type).
Weight twice_rho(const AlgebraSpec& spec);

/// Embeds a weight as k*e1 + l*e2 in the right coordinate length.
Weight bivariate_highest_weight(const AlgebraSpec& spec, int k, int l);

/// Weyl dimension formula for pi_{k e1 + l e2}; throws InvalidHighestWeight if k < l.
BigInt weyl_dimension(const AlgebraSpec& spec, int k, int l);

/// Weyl dimension formula for an arbitrary dominant weight.
BigInt weyl_dimension(const AlgebraSpec& spec, const Weight& lambda);

}  // namespace bivar
