#include "bivar/partitions.hpp"

#include <numeric>

namespace bivar {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

PartCounts part_counts(const Partition& q) {
  PartCounts pc;
  pc.s.assign(static_cast<std::size_t>(q.total()) + 1, 0);
  for (int p : q.parts) {
    if (p > 0) ++pc.s[p];
  }
  return pc;
}

int Triangle::row_sum(int j) const {
  int s = 0;
  for (int t = 1; t <= j; ++t) s += (*this)(j, t);
  return s;
}

// ---------------------------------------------------------------------------

PartitionCursor::PartitionCursor(int N, int n) {
  if (N < 0 || n < 1) return;
  q_.parts.assign(n, 0);
  q_.parts[0] = N;
  valid_ = true;
}

bool PartitionCursor::advance() {
  auto& q = q_.parts;
  const int n = static_cast<int>(q.size());
  // Rightmost position whose part can drop by one while the remainder still
  // fits into the positions after it.
  int tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    const int lowered = q[i] - 1;
    if (lowered >= 0 && i < n - 1 && lowered * (n - 1 - i) >= tail + 1) {
      q[i] = lowered;
      int rest = tail + 1;
      for (int j = i + 1; j < n; ++j) {
        q[j] = std::min(lowered, rest);
        rest -= q[j];
      }
      return true;
    }
    tail += q[i];
  }
  valid_ = false;
  return false;
}

CursorRange<PartitionCursor> partitions_le_length(int N, int n) {
  return CursorRange<PartitionCursor>(PartitionCursor(N, n));
}

// ---------------------------------------------------------------------------

BetaCursor::BetaCursor(const PartCounts& s) : beta_(s.total()) {
  const int N = s.total();
  for (int j = 1; j <= N; ++j) {
    for (int t = 1; t <= j; ++t) {
      bound_.push_back(s[j]);
      row_of_.push_back(j);
    }
  }
  row_sum_.assign(static_cast<std::size_t>(N) + 1, 0);
}

bool BetaCursor::advance() {
  auto& v = beta_.flat();
  for (std::size_t e = 0; e < v.size(); ++e) {
    const int j = row_of_[e];
    if (row_sum_[j] < bound_[e]) {
      ++v[e];
      ++row_sum_[j];
      return true;
    }
    row_sum_[j] -= v[e];
    v[e] = 0;
  }
  return false;
}

CursorRange<BetaCursor> beta_indices(const Partition& q) {
  return CursorRange<BetaCursor>(BetaCursor(part_counts(q)));
}

AlphaCursor::AlphaCursor(const Triangle& beta) : beta_(beta), alpha_(beta.rows()) {}

bool AlphaCursor::advance() {
  auto& a = alpha_.flat();
  const auto& b = beta_.flat();
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e] < b[e]) {
      ++a[e];
      return true;
    }
    a[e] = 0;
  }
  return false;
}

CursorRange<AlphaCursor> alpha_indices(const Triangle& beta) {
  return CursorRange<AlphaCursor>(AlphaCursor(beta));
}

// ---------------------------------------------------------------------------

#ifdef BIVAR_FAULT_INJECTION
// Test-only corruption: the generalized convention C(b, a) = (-1)^a C(a-b-1, a) for b < 0.
namespace {
BigInt negative_top(long b, long a) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a - b - 1), static_cast<unsigned long>(a));
  return a % 2 == 0 ? out : BigInt(-out);
}
}  // namespace
#endif

BigInt binom(long b, long a) {
#ifdef BIVAR_FAULT_INJECTION
  if (b < 0 && a >= 0) return negative_top(b, a);
#endif
  if (a < 0 || b < a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(a));
  return out;
}

const BigInt& BinomialTable::operator()(long b, long a) {
#ifdef BIVAR_FAULT_INJECTION
  if (b < 0 && a >= 0) return scratch_ = negative_top(b, a);
#endif
  if (a < 0 || b < a) return zero_;
  while (static_cast<long>(rows_.size()) <= b) {
    const std::size_t m = rows_.size();
    std::vector<BigInt> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
    rows_.push_back(std::move(row));
  }
  return rows_[b][a];
}

BigInt count_one_norm_sphere(int n, int N) {
  if (n < 1 || N < 0) return 0;
  BigInt total = 0;
  for (int t = 0; t <= n; ++t) total += binom(n, t) * binom(N - t + n - 1, n - 1);
  return total;
}

}  // namespace bivar
