#include "bivar/multiplicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "bivar/partitions.hpp"

namespace bivar {

namespace {

int row_dimension(Family f, int n) { return f == Family::D ? n - 2 : n - 1; }

void require_highest_weight(int k, int l) {
  if (l < 0 || k < l) {
    throw Error(ErrorKind::InvalidHighestWeight,
                "highest weight requires k >= l >= 0, got k=" + std::to_string(k) +
                    ", l=" + std::to_string(l));
  }
}

void require_bcd(const AlgebraSpec& spec, const char* what) {
  if (spec.family == Family::A) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is defined for types B, C, D only");
  }
}

/*
  Product over rows j of the beta-dependent factors:
    2^{s_j - |beta^j|} C(n - sum_{t<j} l_t - sum_{r>j} sum_{s<=r-j+1} beta^r_s, beta^j_1)
    C(l_0 - sum_{h>j} (s_h - |beta^h|), s_j - |beta^j|)
    prod_{i=2}^{j} C(l_{j-i+1} - sum_{t=1}^{N-j} beta^{j+t}_{i+1}, beta^j_i)
*/
BigInt beta_factor(int n, const PartCounts& s, const Triangle& beta, std::span<const int> levels,
                   std::span<const int> prefix, BinomialTable& C) {
  const int N = beta.rows();
  BigInt out = 1;
  for (int j = 1; j <= N; ++j) {
    const int free_j = s[j] - beta.row_sum(j);
    long shifted = 0;
    long free_after = 0;
    for (int r = j + 1; r <= N; ++r) {
      for (int t = 1; t <= r - j + 1; ++t) shifted += beta(r, t);
      free_after += s[r] - beta.row_sum(r);
    }
    out *= C(n - prefix[j] - shifted, beta(j, 1));
    if (out == 0) return out;
    out *= C(levels[0] - free_after, free_j);
    if (out == 0) return out;
    for (int i = 2; i <= j; ++i) {
      long below = 0;
      for (int t = 1; t <= N - j; ++t) below += beta(j + t, i + 1);
      out *= C(levels[j - i + 1] - below, beta(j, i));
      if (out == 0) return out;
    }
    out <<= free_j;
  }
  return out;
}

/// sum over alpha in A^q_beta of prod C(beta, alpha) * C(base + sum (j+1-i) alpha^j_i + dim, dim)
BigInt alpha_sum(const Triangle& beta, long base, int dim, BinomialTable& C) {
  const int N = beta.rows();
  std::vector<int> weight_of;
  for (int j = 1; j <= N; ++j) {
    for (int i = 1; i <= j; ++i) weight_of.push_back(j + 1 - i);
  }
  BigInt total = 0;
  BigInt term;
  const auto& b = beta.flat();
  for (const Triangle& alpha : alpha_indices(beta)) {
    const auto& a = alpha.flat();
    long w = 0;
    for (std::size_t e = 0; e < a.size(); ++e) w += static_cast<long>(weight_of[e]) * a[e];
    const BigInt& head = C(base + w + dim, dim);
    if (head == 0) continue;
    term = head;
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (a[e] != 0 && a[e] != b[e]) term *= C(b[e], a[e]);
    }
    total += term;
  }
  return total;
}

}  // namespace

bool normalize_type_a(const Weight& mu, int total, Weight& out) {
  const long len = static_cast<long>(mu.size());
  const long sum = std::accumulate(mu.begin(), mu.end(), 0L);
  const long diff = total - sum;
  if (diff % len != 0) return false;
  const long shift = diff / len;
  out.resize(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const long v = mu[i] + shift;
    if (v < 0) return false;
    out[i] = static_cast<int>(v);
  }
  return true;
}

BigInt mult_single_row(const AlgebraSpec& spec, int k, const Weight& mu) {
  check_length(spec, mu);
  if (k < 0) throw Error(ErrorKind::InvalidHighestWeight, "k must be non-negative");
  const int n = spec.rank;
  if (spec.family == Family::A) {
    Weight norm;
    return normalize_type_a(mu, k, norm) ? 1 : 0;
  }
  const HalfInteger r{static_cast<long>(k) - weight_stats(spec, mu, 0).one_norm};
  if (spec.family == Family::B) return binom(r.floor() + n - 1, n - 1);
  if (!r.is_integer() || r.twice < 0) return 0;
  const int dim = row_dimension(spec.family, n);
  return binom(r.twice / 2 + dim, dim);
}

BigInt tensor_function(Family family, int n, int l, HalfInteger r, std::span<const int> levels) {
  if (l < 0) return 0;
  if (family == Family::A) {
    throw Error(ErrorKind::InvalidArgument, "tensor_function: use tensor_function_a for type A");
  }
  if (static_cast<int>(levels.size()) < l) {
    throw Error(ErrorKind::InvalidArgument, "tensor_function: need level counts l_0..l_{l-1}");
  }
  const bool floors = family == Family::B;
  if (!floors && !r.is_integer()) return 0;
  const int dim = row_dimension(family, n);

  std::vector<int> prefix(static_cast<std::size_t>(l) + 1, 0);
  for (int j = 1; j <= l; ++j) prefix[j] = prefix[j - 1] + levels[j - 1];

  BinomialTable C;
  BigInt total = 0;
  for (int N = 0; N <= l; ++N) {
    if (!floors && (l - N) % 2 != 0) continue;
    const BigInt outer = C((l - N) / 2 + dim, dim);
    const long base = HalfInteger{r.twice - (l + N)}.floor();
    BigInt over_q = 0;
    for (const Partition& q : partitions_le_length(N, n)) {
      const PartCounts s = part_counts(q);
      for (const Triangle& beta : CursorRange<BetaCursor>(BetaCursor(s))) {
        BigInt f = beta_factor(n, s, beta, levels, prefix, C);
        if (f == 0) continue;
        f *= alpha_sum(beta, base, dim, C);
        over_q += f;
      }
    }
    total += outer * over_q;
  }
  return total;
}

BigInt tensor_function_a(int n, int l, std::span<const int> levels) {
  if (l < 0) return 0;
  if (static_cast<int>(levels.size()) < l) {
    throw Error(ErrorKind::InvalidArgument, "tensor_function_a: need level counts l_0..l_{l-1}");
  }
  BinomialTable C;
  BigInt total = 0;
  for (const Partition& q : partitions_le_length(l, n + 1)) {
    const PartCounts s = part_counts(q);
    BigInt term = 1;
    int below = 0;  // sum_{t<j} l_t
    for (int j = 1; j <= l && term != 0; ++j) {
      below += levels[j - 1];
      int larger = 0;  // sum_{i>j} s_i
      for (int i = j + 1; i <= l; ++i) larger += s[i];
      term *= C(n + 1 - below - larger, s[j]);
    }
    total += term;
  }
  return total;
}

BigInt tensor_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu) {
  validate(spec);
  check_length(spec, mu);
  require_highest_weight(k, l);
  if (spec.family == Family::A) {
    Weight norm;
    if (!normalize_type_a(mu, k + l, norm)) return 0;
    return tensor_function_a(spec.rank, l, weight_stats(spec, norm, l).level_counts);
  }
  const WeightStats st = weight_stats(spec, mu, l);
  return tensor_function(spec.family, spec.rank, l, HalfInteger{static_cast<long>(k) + l - st.one_norm},
                         st.level_counts);
}

BigInt mult_bivariate(const AlgebraSpec& spec, int k, int l, const Weight& mu) {
  validate(spec);
  check_length(spec, mu);
  require_highest_weight(k, l);
  const int n = spec.rank;

  if (spec.family == Family::A) {
    Weight norm;
    if (!normalize_type_a(mu, k + l, norm)) return 0;
    if (std::any_of(norm.begin(), norm.end(), [k](int a) { return a > k; })) return 0;
    const auto levels = weight_stats(spec, norm, l).level_counts;
    BigInt m = tensor_function_a(n, l, levels) - tensor_function_a(n, l - 1, levels);
    return m;
  }

  const WeightStats st = weight_stats(spec, mu, l);
  const HalfInteger r{static_cast<long>(k) + l - st.one_norm};
  if (r.twice < 0) return 0;
  if (spec.family != Family::B && !r.is_integer()) return 0;
  const auto& lv = st.level_counts;
  const Family f = spec.family;
  BigInt m = tensor_function(f, n, l, r, lv) - tensor_function(f, n, l - 1, r, lv) -
             tensor_function(f, n, l - 1, r - 1, lv) + tensor_function(f, n, l - 2, r - 1, lv);
  return m;
}

// ---------------------------------------------------------------------------
// Closed forms.

BigInt mult_zero_weight(const AlgebraSpec& spec, int k, int l) {
  validate(spec);
  require_bcd(spec, "mult_zero_weight");
  require_highest_weight(k, l);
  const int n = spec.rank;
  const auto floor_half = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };

  if (spec.family == Family::B) {
    Rational total = 0;
    for (int N = 0; N <= l; ++N) {
      const int a = floor_half(l - N);
      const int b = floor_half(k + 1 - N);
      Rational S;
      if ((k + l) % 2 == 0) {
        S = Rational(1) - Rational(BigInt(a) * b, BigInt(a + n - 1) * (b + n - 1));
      } else {
        S = Rational(b, b + n - 1) - Rational(a, a + n - 1);
      }
      S.canonicalize();
      Rational term = S * Rational(binom(a + n - 1, n - 1) * binom(b + n - 1, n - 1) *
                                   count_one_norm_sphere(n, N));
      if ((N + l) % 2 != 0) term = -term;
      total += term;
    }
    if (total.get_den() != 1) {
      throw Error(ErrorKind::InvalidArgument, "mult_zero_weight: non-integral B_n sum");
    }
    return total.get_num();
  }

  if ((k + l) % 2 != 0) return 0;
  // Type C uses R(n+1, ...) and binomials of bottom n-1; type D R(n, ...) and n-2.
  const int rn = spec.family == Family::C ? n + 1 : n;
  const int dim = row_dimension(spec.family, n);
  Rational total = 0;
  for (int N = 0; N <= l; ++N) {
    Rational R = (N - l) % 2 == 0 ? Rational(l - N + rn - 2, l - N + 2 * rn - 4)
                                   : Rational(k + 1 - N + rn - 2, k + 1 - N + 2 * rn - 4);
    R.canonicalize();
    Rational term = 2 * R *
                    Rational(binom(floor_half(l - N) + dim, dim) *
                             binom(floor_half(k - N + 1) + dim, dim) * count_one_norm_sphere(n, N));
    if ((N + l) % 2 != 0) term = -term;
    total += term;
  }
  if (total.get_den() != 1) {
    throw Error(ErrorKind::InvalidArgument, "mult_zero_weight: non-integral sum");
  }
  return total.get_num();
}

BigInt mult_l2_D(int n, int k, const Weight& mu) {
  const AlgebraSpec spec{Family::D, n};
  validate(spec);
  check_length(spec, mu);
  require_highest_weight(k, 2);
  const WeightStats st = weight_stats(spec, mu, 2);
  const long twice_r = static_cast<long>(k) + 2 - st.one_norm;
  if (twice_r < 0 || twice_r % 2 != 0) return 0;
  const long r = twice_r / 2;
  const long l0 = st.level_counts[0];
  const long l1 = st.level_counts[1];
  const BigInt pairs = binom(n - l0, 2);
  return binom(r + n - 4, n - 2) * (2 * l0 * (n - 1) + pairs) +
         binom(r + n - 3, n - 2) * (2 * l0 * (n - l0) + l1 - n + 2 * pairs) +
         binom(r + n - 2, n - 2) * (pairs - l1);
}

BigInt mult_l2_A(int n, int k, const Weight& mu) {
  const AlgebraSpec spec{Family::A, n};
  validate(spec);
  check_length(spec, mu);
  require_highest_weight(k, 2);
  Weight norm;
  if (!normalize_type_a(mu, k + 2, norm)) return 0;
  if (std::any_of(norm.begin(), norm.end(), [k](int a) { return a > k; })) return 0;
  const WeightStats st = weight_stats(spec, norm, 2);
  return binom(n + 1 - st.level_counts[0], 2) - st.level_counts[1];
}

BigInt mult_l1(const AlgebraSpec& spec, int k, const Weight& mu) {
  validate(spec);
  check_length(spec, mu);
  require_highest_weight(k, 1);
  const int n = spec.rank;

  if (spec.family == Family::A) {
    Weight norm;
    if (!normalize_type_a(mu, k + 1, norm)) return 0;
    if (std::any_of(norm.begin(), norm.end(), [k](int a) { return a > k; })) return 0;
    return n - weight_stats(spec, norm, 1).level_counts[0];
  }

  const WeightStats st = weight_stats(spec, mu, 1);
  const HalfInteger r{static_cast<long>(k) + 1 - st.one_norm};
  if (r.twice < 0) return 0;
  if (spec.family != Family::B && !r.is_integer()) return 0;
  const int dim = row_dimension(spec.family, n);
  const long l0 = st.level_counts[0];

  // X(0, r): only N = 0, so the single-row value.
  const auto single = [&](HalfInteger x) { return binom(x.floor() + dim, dim); };
  // X(1, r): N = 1 with q = (1, 0, ..., 0), beta^1_1 in {0, 1}, alpha^1_1 <= beta^1_1;
  // type B adds the N = 0 term with argument floor(r - 1/2).
  const long below = HalfInteger{r.twice - 2}.floor();
  BigInt x1 = 2 * l0 * binom(below + dim, dim) +
              (n - l0) * (binom(below + dim, dim) + binom(below + 1 + dim, dim));
  if (spec.family == Family::B) x1 += binom(HalfInteger{r.twice - 1}.floor() + dim, dim);
  return x1 - single(r) - single(r - 1);
}

}  // namespace bivar
