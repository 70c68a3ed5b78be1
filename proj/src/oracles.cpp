#include "bivar/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

namespace bivar {

namespace {

long dot(const Weight& a, const Weight& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

long coordinate_sum(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0L); }

/*
  Dominant key inside a diagram. Type A keeps the representative's sum,
  so only sorting is needed; B/C/D use the Weyl chamber.
*/
Weight chamber_key(const AlgebraSpec& spec, const Weight& mu) {
  if (spec.family == Family::A) {
    Weight w = mu;
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  }
  return weyl_dominant(spec, mu);
}

/*
  c^2 * |mu + rho|^2 as an integer, with c = 2 for B/C/D and c = n+1 for
  A (where the norm is taken on the sum-zero projection).
*/
long scaled_norm(const AlgebraSpec& spec, const Weight& mu, const Weight& rho2) {
  const std::size_t len = mu.size();
  if (spec.family == Family::A) {
    const long c = static_cast<long>(len);
    std::vector<long> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = mu[i] + rho2[i] / 2;
    const long total = std::accumulate(v.begin(), v.end(), 0L);
    long s = 0;
    for (long x : v) {
      const long y = c * x - total;
      s += y * y;
    }
    return s;
  }
  long s = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const long y = 2L * mu[i] + rho2[i];
    s += y * y;
  }
  return s;
}

long scale_squared(const AlgebraSpec& spec) {
  const long c = spec.family == Family::A ? spec.rank + 1 : 2;
  return c * c;
}

/// 2 * rho-check, so that <x, 2 rho-check> / 2 is the height of a root-lattice vector x.
Weight twice_rho_check(const AlgebraSpec& spec) {
  const int n = spec.rank;
  Weight out(spec.weight_length());
  for (int i = 0; i < spec.weight_length(); ++i) {
    switch (spec.family) {
      case Family::A: out[i] = 2 * (n - i); break;
      case Family::B: out[i] = 2 * (n - i); break;
      case Family::C: out[i] = 2 * (n - i) - 1; break;
      case Family::D: out[i] = 2 * (n - 1 - i); break;
    }
  }
  return out;
}

}  // namespace

BigInt WeightDiagram::at(const Weight& mu) const {
  check_length(spec, mu);
  Weight query = mu;
  if (spec.family == Family::A) {
    const long len = static_cast<long>(mu.size());
    const long diff = coordinate_sum(highest) - coordinate_sum(mu);
    if (diff % len != 0) return 0;
    for (int& a : query) a += static_cast<int>(diff / len);
  }
  const auto it = entries.find(chamber_key(spec, query));
  return it == entries.end() ? BigInt(0) : it->second;
}

BigInt WeightDiagram::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : entries) total += weyl_orbit_size(spec, w) * m;
  return total;
}

WeightDiagram freudenthal_diagram(const AlgebraSpec& spec, const Weight& lambda) {
  validate(spec);
  check_length(spec, lambda);
  if (!is_dominant(spec, lambda)) {
    throw Error(ErrorKind::NotDominant, "freudenthal_diagram: " + to_string(lambda) + " is not dominant");
  }
  const std::vector<Weight> roots = positive_roots(spec);
  const Weight rho2 = twice_rho(spec);
  const Weight rho_check2 = twice_rho_check(spec);

  // Saturation: dominant weights below lambda, reached by subtracting
  // positive roots.
  std::map<Weight, bool> seen;
  std::vector<Weight> frontier{lambda};
  seen[lambda] = true;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& mu : frontier) {
      for (const Weight& alpha : roots) {
        Weight nu = mu;
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= alpha[i];
        if (dot(mu, alpha) <= 0 && !is_dominant(spec, nu)) continue;
        Weight key = chamber_key(spec, nu);
        if (seen.emplace(key, true).second) next.push_back(std::move(key));
      }
    }
    frontier = std::move(next);
  }

  struct Item {
    long level;
    Weight mu;
  };
  std::vector<Item> order;
  for (const auto& [mu, unused] : seen) {
    Weight diff = lambda;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
    order.push_back({dot(diff, rho_check2) / 2, mu});
  }
  std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
    return std::tie(a.level, a.mu) < std::tie(b.level, b.mu);
  });

  WeightDiagram diagram{spec, lambda, {}};
  const long top = scaled_norm(spec, lambda, rho2);
  const long c2 = scale_squared(spec);
  for (const Item& item : order) {
    if (item.level == 0) {
      diagram.entries[item.mu] = 1;
      continue;
    }
    BigInt sum = 0;
    for (const Weight& alpha : roots) {
      Weight w = item.mu;
      for (;;) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += alpha[i];
        const auto it = diagram.entries.find(chamber_key(spec, w));
        if (it == diagram.entries.end()) break;
        sum += it->second * dot(w, alpha);
      }
    }
    const long denom = top - scaled_norm(spec, item.mu, rho2);
    if (denom <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "freudenthal_diagram: non-positive denominator at " + to_string(item.mu));
    }
    BigInt numer = 2 * c2 * sum;
    if (numer % denom != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "freudenthal_diagram: non-integral multiplicity at " + to_string(item.mu));
    }
    BigInt m = numer / denom;
    if (m != 0) diagram.entries[item.mu] = std::move(m);
  }
  return diagram;
}

// ---------------------------------------------------------------------------

namespace {

class SingleRowCache {
 public:
  BigInt at(const AlgebraSpec& spec, int k, const Weight& mu) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_tuple(static_cast<int>(spec.family), spec.rank, k);
    auto it = diagrams_.find(key);
    if (it == diagrams_.end()) {
      it = diagrams_.emplace(key, freudenthal_diagram(spec, bivariate_highest_weight(spec, k, 0))).first;
    }
    return it->second.at(mu);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, WeightDiagram> diagrams_;
};

SingleRowCache& single_row_cache() {
  static SingleRowCache cache;
  return cache;
}

/// Calls f(eta) for every candidate weight eta of pi_{l e1}.
void for_each_small_weight(const AlgebraSpec& spec, int l, const std::function<void(const Weight&)>& f) {
  const int len = spec.weight_length();
  Weight eta(len, 0);
  if (spec.family == Family::A) {
    // Compositions of l into len non-negative parts.
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == len - 1) {
        eta[i] = left;
        f(eta);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        eta[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, l);
    return;
  }
  // Integer vectors of one-norm at most l.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == len) {
      f(eta);
      return;
    }
    for (int v = -left; v <= left; ++v) {
      eta[i] = v;
      rec(i + 1, left - std::abs(v));
    }
  };
  rec(0, l);
}

}  // namespace

BigInt convolution_tensor_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu) {
  validate(spec);
  check_length(spec, mu);
  if (l < 0 || k < l) return 0;
  Weight target = mu;
  if (spec.family == Family::A) {
    // Representative of sum k + l, so that mu - eta has sum k.
    const long len = static_cast<long>(mu.size());
    const long diff = static_cast<long>(k) + l - coordinate_sum(mu);
    if (diff % len != 0) return 0;
    for (int& a : target) a += static_cast<int>(diff / len);
  }
  auto& cache = single_row_cache();
  BigInt total = 0;
  Weight rest(target.size());
  for_each_small_weight(spec, l, [&](const Weight& eta) {
    const BigInt small = cache.at(spec, l, eta);
    if (small == 0) return;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = target[i] - eta[i];
    const BigInt big = cache.at(spec, k, rest);
    if (big != 0) total += small * big;
  });
  return total;
}

BigInt convolution_mult(const AlgebraSpec& spec, int k, int l, const Weight& mu) {
  if (l < 0 || k < l) {
    throw Error(ErrorKind::InvalidHighestWeight, "convolution_mult: requires k >= l >= 0");
  }
  BigInt m = convolution_tensor_mult(spec, k, l, mu) - convolution_tensor_mult(spec, k + 1, l - 1, mu);
  if (spec.family != Family::A) {
    m -= convolution_tensor_mult(spec, k - 1, l - 1, mu);
    m += convolution_tensor_mult(spec, k, l - 2, mu);
  }
  return m;
}

// ---------------------------------------------------------------------------

BigInt kostka_count(std::span<const int> shape, std::span<const int> content) {
  long boxes = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] < 0 || (r > 0 && shape[r] > shape[r - 1])) {
      throw Error(ErrorKind::InvalidArgument, "kostka_count: shape must be a partition");
    }
    boxes += shape[r];
  }
  long filled = 0;
  for (int c : content) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "kostka_count: negative content");
    filled += c;
  }
  if (boxes != filled) {
    throw Error(ErrorKind::ShapeContentMismatch,
                "kostka_count: content sums to " + std::to_string(filled) + " but shape has " +
                    std::to_string(boxes) + " boxes");
  }

  // Fill column by column, top to bottom: each entry is strictly larger
  // than the one above and at least the one to its left.
  std::vector<std::vector<int>> tab(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(shape[r], 0);
  std::vector<std::pair<int, int>> cells;
  const int width = shape.empty() ? 0 : shape[0];
  for (int c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < shape.size() && shape[r] > c; ++r) cells.emplace_back(static_cast<int>(r), c);
  }
  std::vector<int> left(content.begin(), content.end());
  const int letters = static_cast<int>(content.size());

  BigInt count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      tab[r][c] = v;
      place(idx + 1);
      ++left[v - 1];
    }
    tab[r][c] = 0;
  };
  place(0);
  return count;
}

}  // namespace bivar
