#include "bivar/weight_tables.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <thread>

#include "bivar/multiplicity.hpp"
#include "bivar/oracles.hpp"
#include "bivar/partitions.hpp"

namespace bivar {

const char* to_string(Engine e) { return e == Engine::Bivariate ? "bivariate" : "freudenthal"; }

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/*
  Appends every signed permutation of `w` (plain permutations when
  `signs` is false). With `even_only`, only sign patterns whose number of
  negative entries has the parity of `w` are kept (type D Weyl group on
  weights without zero coordinates).
*/
void append_orbit(Weight w, bool signs, bool even_only, const BigInt& mult, std::vector<TableRow>& out) {
  long parity = 0;
  for (int& a : w) {
    if (a < 0) ++parity;
    if (signs) a = std::abs(a);
  }
  parity %= 2;
  std::sort(w.begin(), w.end());
  std::vector<int> nonzero;
  do {
    if (!signs) {
      out.push_back({w, mult, false});
      continue;
    }
    nonzero.clear();
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      if (w[i] != 0) nonzero.push_back(i);
    }
    const bool filter = even_only && nonzero.size() == w.size();
    const unsigned long masks = 1ul << nonzero.size();
    for (unsigned long m = 0; m < masks; ++m) {
      if (filter && static_cast<long>(__builtin_popcountl(m) % 2) != parity) continue;
      Weight v = w;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (m >> b & 1ul) v[nonzero[b]] = -v[nonzero[b]];
      }
      out.push_back({std::move(v), mult, false});
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<BigInt> evaluate(const AlgebraSpec& spec, int k, int l, const std::vector<Weight>& candidates,
                             int threads) {
  std::vector<BigInt> mults(candidates.size());
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(candidates.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) mults[i] = mult_bivariate(spec, k, l, candidates[i]);
    return mults;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < candidates.size(); i += workers) {
        mults[i] = mult_bivariate(spec, k, l, candidates[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return mults;
}

void sort_rows(std::vector<TableRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.mu < b.mu; });
}

}  // namespace

std::vector<Weight> candidate_dominants(const AlgebraSpec& spec, int k, int l) {
  validate(spec);
  if (l < 0 || k < l) {
    throw Error(ErrorKind::InvalidHighestWeight,
                "highest weight requires k >= l >= 0, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  }
  std::vector<Weight> out;
  const int len = spec.weight_length();
  if (spec.family == Family::A) {
    for (const Partition& q : partitions_le_length(k + l, len)) out.push_back(q.parts);
    return out;
  }
  const bool parity = spec.family != Family::B;
  for (int N = 0; N <= k + l; ++N) {
    if (parity && (k + l - N) % 2 != 0) continue;
    for (const Partition& q : partitions_le_length(N, len)) out.push_back(q.parts);
  }
  return out;
}

MultiplicityTable build_table(const AlgebraSpec& spec, int k, int l, bool dominant_only,
                              const BuildOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MultiplicityTable table;
  table.spec = spec;
  table.k = k;
  table.l = l;
  table.dominant_only = dominant_only;
  table.meta.generated_at = utc_now();
  table.meta.engine = options.engine;

  const bool signs = spec.family != Family::A;
  if (options.engine == Engine::Bivariate) {
    const std::vector<Weight> candidates = candidate_dominants(spec, k, l);
    const std::vector<BigInt> mults = evaluate(spec, k, l, candidates, options.threads);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mults[i] <= 0) continue;
      const Weight& mu = candidates[i];
      if (!dominant_only) {
        append_orbit(mu, signs, false, mults[i], table.rows);
        continue;
      }
      table.rows.push_back({mu, mults[i], false});
      if (spec.family == Family::D && mu.back() > 0) {
        Weight bar = mu;
        bar.back() = -bar.back();
        table.rows.push_back({std::move(bar), mults[i], true});
      }
    }
  } else {
    const WeightDiagram diagram = freudenthal_diagram(spec, bivariate_highest_weight(spec, k, l));
    for (const auto& [mu, m] : diagram.entries) {
      if (dominant_only) {
        table.rows.push_back({mu, m, spec.family == Family::D && mu.back() < 0});
      } else {
        append_orbit(mu, signs, spec.family == Family::D, m, table.rows);
      }
    }
  }
  sort_rows(table.rows);
  table.meta.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

DimensionAudit dimension_audit(const MultiplicityTable& table) {
  DimensionAudit audit;
  audit.computed = 0;
  for (const TableRow& row : table.rows) {
    audit.computed += table.dominant_only ? weyl_orbit_size(table.spec, row.mu) * row.mult : row.mult;
  }
  audit.expected = weyl_dimension(table.spec, table.k, table.l);
  audit.ok = audit.computed == audit.expected;
  return audit;
}

}  // namespace bivar
