#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace bivar {

using BigInt = mpz_class;
using Rational = mpq_class;

/*
  Weights are integer coordinate vectors in the epsilon basis. Types B, C
  and D use n coordinates; type A uses n+1 coordinates, and two type-A
  vectors describe the same weight iff they differ by a constant vector
  (see canonical_weight in root_systems.hpp).
*/
using Weight = std::vector<int>;

enum class ErrorKind {
  RankOutOfRange,
  LengthMismatch,
  NotDominant,
  InvalidHighestWeight,
  ShapeContentMismatch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string to_string(const Weight& w);

}  // namespace bivar
