#include "bivar/root_systems.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace bivar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::InvalidHighestWeight: return "InvalidHighestWeight";
    case ErrorKind::ShapeContentMismatch: return "ShapeContentMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "' (expected A, B, C or D)");
}

std::string AlgebraSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const AlgebraSpec& spec) {
  const int min_rank = spec.family == Family::D ? 3 : 2;
  if (spec.rank < min_rank) {
    throw Error(ErrorKind::RankOutOfRange,
                "rank out of range: " + spec.name() + " requires rank >= " +
                    std::to_string(min_rank));
  }
}

void check_length(const AlgebraSpec& spec, const Weight& mu) {
  if (static_cast<int>(mu.size()) != spec.weight_length()) {
    throw Error(ErrorKind::LengthMismatch,
                "weight " + to_string(mu) + " has length " + std::to_string(mu.size()) +
                    ", " + spec.name() + " expects " + std::to_string(spec.weight_length()));
  }
}

WeightStats weight_stats(const AlgebraSpec& spec, const Weight& mu, int l) {
  check_length(spec, mu);
  WeightStats st;
  st.level_counts.assign(std::max(l, 0), 0);
  const bool absolute = spec.family != Family::A;
  for (int a : mu) {
    const int v = absolute ? std::abs(a) : a;
    st.one_norm += std::abs(a);
    if (v >= 0 && v < l) ++st.level_counts[v];
  }
  return st;
}

Weight canonical_weight(const AlgebraSpec& spec, Weight mu) {
  if (spec.family == Family::A && !mu.empty()) {
    const int m = *std::min_element(mu.begin(), mu.end());
    for (int& a : mu) a -= m;
  }
  return mu;
}

Weight dominant_representative(const AlgebraSpec& spec, const Weight& mu) {
  check_length(spec, mu);
  Weight out = canonical_weight(spec, mu);
  if (spec.family != Family::A) {
    for (int& a : out) a = std::abs(a);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Weight weyl_dominant(const AlgebraSpec& spec, const Weight& mu) {
  Weight out = dominant_representative(spec, mu);
  if (spec.family == Family::D) {
    int negatives = 0;
    bool has_zero = false;
    for (int a : mu) {
      if (a < 0) ++negatives;
      if (a == 0) has_zero = true;
    }
    if (!has_zero && negatives % 2 == 1) out.back() = -out.back();
  }
  return out;
}

bool is_dominant(const AlgebraSpec& spec, const Weight& mu) {
  check_length(spec, mu);
  const int len = static_cast<int>(mu.size());
  for (int i = 0; i + 1 < len; ++i) {
    if (spec.family == Family::D && i == len - 2) {
      if (mu[i] < std::abs(mu[i + 1])) return false;
    } else if (mu[i] < mu[i + 1]) {
      return false;
    }
  }
  if ((spec.family == Family::B || spec.family == Family::C) && mu.back() < 0) return false;
  return true;
}

std::set<Weight> orbit(const AlgebraSpec& spec, const Weight& dominant) {
  if (!is_dominant(spec, dominant)) {
    throw Error(ErrorKind::NotDominant, "orbit: " + to_string(dominant) + " is not dominant");
  }
  std::set<Weight> out;
  Weight base = canonical_weight(spec, dominant);
  if (spec.family != Family::A) {
    for (int& a : base) a = std::abs(a);
  }
  std::sort(base.begin(), base.end());
  do {
    if (spec.family == Family::A) {
      out.insert(base);
      continue;
    }
    std::vector<int> nonzero;
    for (int i = 0; i < static_cast<int>(base.size()); ++i) {
      if (base[i] != 0) nonzero.push_back(i);
    }
    const unsigned long masks = 1ul << nonzero.size();
    for (unsigned long m = 0; m < masks; ++m) {
      Weight w = base;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (m >> b & 1ul) w[nonzero[b]] = -w[nonzero[b]];
      }
      out.insert(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::set<Weight> weyl_orbit(const AlgebraSpec& spec, const Weight& mu) {
  check_length(spec, mu);
  const int shift = spec.family == Family::A ? *std::min_element(mu.begin(), mu.end()) : 0;
  std::set<Weight> full = orbit(spec, dominant_representative(spec, mu));
  std::set<Weight> out;
  const bool parity = spec.family == Family::D &&
                      std::none_of(mu.begin(), mu.end(), [](int a) { return a == 0; });
  const auto negatives = [](const Weight& w) {
    return std::count_if(w.begin(), w.end(), [](int a) { return a < 0; });
  };
  const long want = negatives(mu) % 2;
  for (Weight w : full) {
    if (parity && negatives(w) % 2 != want) continue;
    for (int& a : w) a += shift;
    out.insert(std::move(w));
  }
  return out;
}

namespace {

BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt distinct_permutations(const Weight& values) {
  std::map<int, int> counts;
  for (int v : values) ++counts[v];
  BigInt out = factorial(static_cast<int>(values.size()));
  for (const auto& [v, c] : counts) out /= factorial(c);
  return out;
}

}  // namespace

BigInt orbit_size(const AlgebraSpec& spec, const Weight& mu) {
  Weight d = dominant_representative(spec, mu);
  BigInt out = distinct_permutations(d);
  if (spec.family != Family::A) {
    for (int a : d) {
      if (a != 0) out *= 2;
    }
  }
  return out;
}

BigInt weyl_orbit_size(const AlgebraSpec& spec, const Weight& mu) {
  BigInt out = orbit_size(spec, mu);
  if (spec.family == Family::D &&
      std::none_of(mu.begin(), mu.end(), [](int a) { return a == 0; })) {
    out /= 2;
  }
  return out;
}

std::vector<Weight> positive_roots(const AlgebraSpec& spec) {
  const int len = spec.weight_length();
  std::vector<Weight> roots;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      Weight r(len, 0);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
      if (spec.family != Family::A) {
        r[j] = 1;
        roots.push_back(r);
      }
    }
  }
  if (spec.family == Family::B || spec.family == Family::C) {
    for (int i = 0; i < len; ++i) {
      Weight r(len, 0);
      r[i] = spec.family == Family::B ? 1 : 2;
      roots.push_back(r);
    }
  }
  return roots;
}

Weight twice_rho(const AlgebraSpec& spec) {
  const int n = spec.rank;
  const int len = spec.weight_length();
  Weight rho(len);
  for (int i = 0; i < len; ++i) {
    switch (spec.family) {
      case Family::A: rho[i] = 2 * (n - i); break;
      case Family::B: rho[i] = 2 * (n - i) - 1; break;
      case Family::C: rho[i] = 2 * (n - i); break;
      case Family::D: rho[i] = 2 * (n - 1 - i); break;
    }
  }
  return rho;
}

Weight bivariate_highest_weight(const AlgebraSpec& spec, int k, int l) {
  Weight w(spec.weight_length(), 0);
  w[0] = k;
  if (w.size() > 1) w[1] = l;
  return w;
}

BigInt weyl_dimension(const AlgebraSpec& spec, const Weight& lambda) {
  validate(spec);
  if (!is_dominant(spec, lambda)) {
    throw Error(ErrorKind::NotDominant, "weyl_dimension: " + to_string(lambda) + " is not dominant");
  }
  const Weight rho2 = twice_rho(spec);
  BigInt num = 1, den = 1;
  for (const Weight& alpha : positive_roots(spec)) {
    long a = 0, b = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      a += static_cast<long>(2 * lambda[i] + rho2[i]) * alpha[i];
      b += static_cast<long>(rho2[i]) * alpha[i];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

BigInt weyl_dimension(const AlgebraSpec& spec, int k, int l) {
  if (k < l || l < 0) {
    throw Error(ErrorKind::InvalidHighestWeight,
                "highest weight requires k >= l >= 0, got k=" + std::to_string(k) +
                    ", l=" + std::to_string(l));
  }
  return weyl_dimension(spec, bivariate_highest_weight(spec, k, l));
}

}  // namespace bivar
