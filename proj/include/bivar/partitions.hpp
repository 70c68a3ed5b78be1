#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "bivar/common.hpp"

namespace bivar {

/// Weakly decreasing non-negative parts (q_1, ..., q_n), zero padded to length n.
struct Partition {
  std::vector<int> parts;
  int total() const;
};

/// s_j = #{i : q_i = j} for 1 <= j <= N (N = total of q). Index 0 is unused.
struct PartCounts {
  std::vector<int> s;
  int total() const { return static_cast<int>(s.size()) - 1; }
  int operator[](int j) const { return j < static_cast<int>(s.size()) ? s[j] : 0; }
};

PartCounts part_counts(const Partition& q);

/*
  Triangular array x^j_t, 1 <= t <= j <= N, stored row by row in the
  order (x^1_1, x^2_1, x^2_2, x^3_1, ...).
*/
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(int rows) : rows_(rows), v_(static_cast<std::size_t>(rows * (rows + 1) / 2), 0) {}

  int rows() const { return rows_; }
  int& operator()(int j, int t) { return v_[offset(j, t)]; }
  int operator()(int j, int t) const { return v_[offset(j, t)]; }
  int row_sum(int j) const;
  const std::vector<int>& flat() const { return v_; }
  std::vector<int>& flat() { return v_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  static std::size_t offset(int j, int t) {
    return static_cast<std::size_t>(j * (j - 1) / 2 + (t - 1));
  }
  int rows_ = 0;
  std::vector<int> v_;
};

/*
  Minimal single-pass range over a cursor type providing
  `const value_type& current() const` and `bool advance()`.
*/
template <typename Cursor>
class CursorRange {
 public:
  using value_type = std::decay_t<decltype(std::declval<const Cursor&>().current())>;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CursorRange::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(Cursor* c) : c_(c) {}
    reference operator*() const { return c_->current(); }
    pointer operator->() const { return &c_->current(); }
    iterator& operator++() {
      if (!c_->advance()) c_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.c_ == b.c_; }

   private:
    Cursor* c_ = nullptr;
  };

  explicit CursorRange(Cursor c) : cursor_(std::move(c)) {}
  iterator begin() { return cursor_.valid() ? iterator(&cursor_) : iterator(); }
  iterator end() { return iterator(); }

 private:
  Cursor cursor_;
};

/// Q_n(N) in reverse-lexicographic order. Empty when N < 0.
class PartitionCursor {
 public:
  PartitionCursor(int N, int n);
  bool valid() const { return valid_; }
  const Partition& current() const { return q_; }
  bool advance();

 private:
  Partition q_;
  bool valid_ = false;
};

CursorRange<PartitionCursor> partitions_le_length(int N, int n);

/*
  B^q: triangular beta with beta^j_t >= 0 and row sums bounded by s_j.
  Odometer order with beta^1_1 varying fastest.
*/
class BetaCursor {
 public:
  explicit BetaCursor(const PartCounts& s);
  bool valid() const { return true; }
  const Triangle& current() const { return beta_; }
  bool advance();

 private:
  std::vector<int> bound_;  // per flat entry: s_j of its row
  std::vector<int> row_of_;
  std::vector<int> row_sum_;
  Triangle beta_;
};

CursorRange<BetaCursor> beta_indices(const Partition& q);

/// A^q_beta: the box product of {0..beta^j_t}, odometer order.
class AlphaCursor {
 public:
  explicit AlphaCursor(const Triangle& beta);
  bool valid() const { return true; }
  const Triangle& current() const { return alpha_; }
  bool advance();

 private:
  Triangle beta_;
  Triangle alpha_;
};

CursorRange<AlphaCursor> alpha_indices(const Triangle& beta);

/// Binomial coefficient with C(b, a) = 0 whenever a < 0 or b < a.
BigInt binom(long b, long a);

/*
  Cached binomials for the hot loops of the multiplicity formulas. Same
  convention as binom(). Not thread-safe; use one per evaluation.
*/
class BinomialTable {
 public:
  const BigInt& operator()(long b, long a);

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
  BigInt scratch_;
};

/// #{eta in Z^n : ||eta|| = N} = sum_t C(n,t) C(N-t+n-1, n-1).
BigInt count_one_norm_sphere(int n, int N);

}  // namespace bivar
