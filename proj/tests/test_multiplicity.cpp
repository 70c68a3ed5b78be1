#include <map>

#include "bivar/multiplicity.hpp"
#include "bivar/oracles.hpp"
#include "bivar/weight_tables.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bivar;
using bivar::testing::for_each_in_ball;
using bivar::testing::one_norm;

namespace {

const std::vector<AlgebraSpec> kSmallBCD = {{Family::B, 2}, {Family::B, 3}, {Family::C, 2},
                                            {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};

BigInt freudenthal(const AlgebraSpec& spec, int k, int l, const Weight& mu) {
  return freudenthal_diagram(spec, bivariate_highest_weight(spec, k, l)).at(mu);
}

}  // namespace

TEST_CASE("HalfInteger floor") {
  CHECK(HalfInteger{3}.floor() == 1);
  CHECK(HalfInteger{-1}.floor() == -1);
  CHECK(HalfInteger{-4}.floor() == -2);
  CHECK(HalfInteger{0}.is_integer());
  CHECK_FALSE(HalfInteger{5}.is_integer());
}

TEST_CASE("mult_single_row examples") {
  CHECK(mult_single_row({Family::B, 2}, 1, {0, 0}) == 1);
  CHECK(mult_single_row({Family::C, 2}, 2, {0, 0}) == 2);
  CHECK(mult_single_row({Family::D, 3}, 2, {1, 1, 1}) == 0);
  CHECK(mult_single_row({Family::B, 2}, 1, {0, 0}) == freudenthal({Family::B, 2}, 1, 0, {0, 0}));
  CHECK(mult_single_row({Family::C, 2}, 2, {0, 0}) == freudenthal({Family::C, 2}, 2, 0, {0, 0}));
}

TEST_CASE("tensor_mult examples") {
  CHECK(tensor_mult({Family::C, 2}, 1, 1, {0, 0}) == 4);
  CHECK(tensor_mult({Family::C, 2}, 1, 1, {0, 0}) == convolution_tensor_mult({Family::C, 2}, 1, 1, {0, 0}));
  CHECK(tensor_mult({Family::D, 3}, 2, 2, {3, 3, 0}) == 0);
  for (int k = 0; k <= 5; ++k) {
    for_each_in_ball(3, k + 1, [&](const Weight& mu) {
      CHECK(tensor_mult({Family::B, 3}, k, 0, mu) == mult_single_row({Family::B, 3}, k, mu));
    });
  }
  CHECK(tensor_function(Family::C, 2, -1, HalfInteger{2}, std::vector<int>{}) == 0);
}

TEST_CASE("mult_bivariate examples") {
  for (const AlgebraSpec& spec : kSmallBCD) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= k; ++l) CHECK(mult_bivariate(spec, k, l, bivariate_highest_weight(spec, k, l)) == 1);
    }
  }
  CHECK(mult_bivariate({Family::A, 3}, 3, 2, {3, 2, 0, 0}) == 1);
  CHECK(mult_bivariate({Family::C, 2}, 1, 1, {0, 0}) == 1);
  CHECK(mult_bivariate({Family::C, 2}, 1, 1, {0, 0}) == freudenthal({Family::C, 2}, 1, 1, {0, 0}));
  CHECK(mult_bivariate({Family::A, 2}, 2, 2, {2, 1, 1}) == 1);
  const int shape[] = {2, 2};
  const int content[] = {2, 1, 1};
  CHECK(mult_bivariate({Family::A, 2}, 2, 2, {2, 1, 1}) == kostka_count(shape, content));
  CHECK(mult_bivariate({Family::C, 3}, 2, 1, {0, 0, 0}) == 0);
}

TEST_CASE("type A shift representatives") {
  const AlgebraSpec a2{Family::A, 2};
  // (2,1,1), (3,2,2) and (1,0,0) describe the same weight; (1,1,0) has the wrong sum class.
  CHECK(mult_bivariate(a2, 2, 2, {3, 2, 2}) == 1);
  CHECK(mult_bivariate(a2, 2, 2, {1, 0, 0}) == 1);
  CHECK(mult_bivariate(a2, 2, 2, {1, 1, 0}) == 0);
  CHECK(mult_bivariate(a2, 2, 2, {4, 0, 0}) == 0);  // a_1 > k
  Weight out;
  CHECK(normalize_type_a({1, 0, 0}, 4, out));
  CHECK(out == Weight{2, 1, 1});
  CHECK_FALSE(normalize_type_a({1, 0, 0}, 3, out));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(mult_bivariate({Family::D, 2}, 1, 1, {0, 0}), Error);
  CHECK_THROWS_AS(mult_bivariate({Family::C, 2}, 1, 2, {0, 0}), Error);
  CHECK_THROWS_AS(mult_bivariate({Family::C, 2}, 1, 1, {0, 0, 0}), Error);
}

TEST_CASE("virtual-ring identity") {
  for (const AlgebraSpec& spec : kSmallBCD) {
    for (int s = 0; s <= 6; ++s) {
      for (int l = 0; 2 * l <= s; ++l) {
        const int k = s - l;
        for_each_in_ball(spec.rank, s, [&](const Weight& mu) {
          if (one_norm(mu) > 3 && spec.rank == 4) return;
          BigInt expected = tensor_mult(spec, k, l, mu);
          if (l >= 1) expected -= tensor_mult(spec, k + 1, l - 1, mu) + tensor_mult(spec, k - 1, l - 1, mu);
          if (l >= 2) expected += tensor_mult(spec, k, l - 2, mu);
          CHECK(mult_bivariate(spec, k, l, mu) == expected);
        });
      }
    }
  }
}

TEST_CASE("tensor identity against single-row convolution") {
  for (const AlgebraSpec& spec : {AlgebraSpec{Family::B, 2}, AlgebraSpec{Family::C, 3}, AlgebraSpec{Family::D, 3}}) {
    for (int s = 0; s <= 6; ++s) {
      for (int l = 0; 2 * l <= s; ++l) {
        const int k = s - l;
        for (const Weight& mu : candidate_dominants(spec, k, l)) {
          BigInt sum = 0;
          for_each_in_ball(spec.rank, l, [&](const Weight& eta) {
            Weight diff = mu;
            for (int i = 0; i < spec.rank; ++i) diff[i] -= eta[i];
            sum += mult_single_row(spec, k, diff) * mult_single_row(spec, l, eta);
          });
          CHECK(tensor_mult(spec, k, l, mu) == sum);
        }
      }
    }
  }
}

TEST_CASE("Weyl invariance and vanishing") {
  for (const AlgebraSpec& spec : kSmallBCD) {
    if (spec.rank > 3) continue;
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= k && k + l <= 5; ++l) {
        std::map<Weight, BigInt> by_class;
        for_each_in_ball(spec.rank, k + l + 2, [&](const Weight& mu) {
          const BigInt m = mult_bivariate(spec, k, l, mu);
          const int norm = one_norm(mu);
          if (norm > k + l) CHECK(m == 0);
          if (spec.family != Family::B && (norm - k - l) % 2 != 0) CHECK(m == 0);
          auto [it, fresh] = by_class.emplace(dominant_representative(spec, mu), m);
          if (!fresh) CHECK(it->second == m);
        });
      }
    }
  }
  const AlgebraSpec a3{Family::A, 3};
  Weight mu{3, 1, 1, 0};
  const BigInt m = mult_bivariate(a3, 3, 2, mu);
  std::sort(mu.begin(), mu.end());
  do {
    CHECK(mult_bivariate(a3, 3, 2, mu) == m);
  } while (std::next_permutation(mu.begin(), mu.end()));
}

TEST_CASE("multiplicity depends only on norm and level counts") {
  // Independent of the full D4 (5,3) run in the acceptance binary.
  const AlgebraSpec b3{Family::B, 3};
  const int k = 3, l = 2;
  std::map<std::vector<int>, BigInt> by_signature;
  for_each_in_ball(3, k + l, [&](const Weight& mu) {
    std::vector<int> sig{one_norm(mu)};
    for (int t = 0; t < l; ++t) sig.push_back(static_cast<int>(std::count_if(mu.begin(), mu.end(), [t](int a) { return std::abs(a) == t; })));
    const BigInt m = mult_bivariate(b3, k, l, mu);
    auto [it, fresh] = by_signature.emplace(sig, m);
    if (!fresh) CHECK(it->second == m);
  });
}

TEST_CASE("mult_zero_weight examples") {
  CHECK(mult_zero_weight({Family::D, 3}, 2, 1) == 0);
  CHECK(mult_zero_weight({Family::C, 2}, 1, 1) == 1);
  CHECK(mult_zero_weight({Family::C, 2}, 1, 1) == mult_bivariate({Family::C, 2}, 1, 1, {0, 0}));
  CHECK(mult_zero_weight({Family::B, 2}, 1, 0) == 1);
  CHECK(mult_zero_weight({Family::B, 2}, 1, 0) == freudenthal({Family::B, 2}, 1, 0, {0, 0}));
  CHECK(mult_zero_weight({Family::D, 4}, 1, 1) == 4);  // rank of so(8)
  CHECK(mult_zero_weight({Family::B, 3}, 1, 1) == 3);  // rank of so(7)
  CHECK_THROWS_AS(mult_zero_weight({Family::A, 2}, 1, 1), Error);
}

TEST_CASE("multiplicities beyond 64 bits") {
  const AlgebraSpec d16{Family::D, 16};
  const BigInt z = mult_zero_weight(d16, 80, 8);
  CHECK(z > BigInt("18446744073709551616"));
  CHECK(z == mult_bivariate(d16, 80, 8, Weight(16, 0)));
}

TEST_CASE("mult_l2_D examples") {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= 5; ++k) {
      Weight hw(n, 0);
      hw[0] = k;
      hw[1] = 2;
      CHECK(mult_l2_D(n, k, hw) == 1);
    }
  }
  const AlgebraSpec d3{Family::D, 3};
  // r = 1, l_0 = 0, l_1 = 3: 0 + 1*(0 + 3 - 3 + 6) + 0.
  CHECK(mult_l2_D(3, 3, {1, 1, 1}) == 6);
  CHECK(mult_l2_D(3, 3, {1, 1, 1}) == mult_bivariate(d3, 3, 2, {1, 1, 1}));
  CHECK(mult_l2_D(3, 3, {1, 1, 1}) == freudenthal(d3, 3, 2, {1, 1, 1}));
  CHECK(mult_l2_D(4, 3, {4, 2, 1, 0}) == 0);
}

TEST_CASE("mult_l2_A examples") {
  CHECK(mult_l2_A(2, 2, {2, 1, 1}) == 1);
  CHECK(mult_l2_A(2, 2, {2, 2, 0}) == 1);
  CHECK(mult_l2_A(2, 2, {4, 0, 0}) == 0);
  const int shape[] = {2, 2};
  const int content[] = {2, 2, 0};
  CHECK(mult_l2_A(2, 2, {2, 2, 0}) == kostka_count(shape, content));
}

TEST_CASE("mult_l1 examples") {
  CHECK(mult_l1({Family::A, 2}, 1, {1, 1, 0}) == 1);
  const int shape[] = {1, 1};
  const int content[] = {1, 1, 0};
  CHECK(mult_l1({Family::A, 2}, 1, {1, 1, 0}) == kostka_count(shape, content));
  CHECK(mult_l1({Family::D, 3}, 1, {1, 1, 1}) == 0);
  CHECK(mult_l1({Family::D, 3}, 1, {1, 1, 1}) == freudenthal({Family::D, 3}, 1, 1, {1, 1, 1}));
  for (const AlgebraSpec& spec : kSmallBCD) {
    for (int k = 1; k <= 4; ++k) CHECK(mult_l1(spec, k, bivariate_highest_weight(spec, k, 1)) == 1);
  }
}

TEST_CASE("fast paths agree with the general formula") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = (f == Family::D ? 3 : 2); n <= 5; ++n) {
      const AlgebraSpec spec{f, n};
      for (int s = 0; s <= 9; ++s) {
        for (int l = 0; 2 * l <= s; ++l) {
          CHECK(mult_zero_weight(spec, s - l, l) == mult_bivariate(spec, s - l, l, Weight(n, 0)));
          if ((s % 2) && f != Family::B) CHECK(mult_zero_weight(spec, s - l, l) == 0);
        }
      }
      for (int k = 1; k <= 7; ++k) {
        for (const Weight& mu : candidate_dominants(spec, k, 1)) CHECK(mult_l1(spec, k, mu) == mult_bivariate(spec, k, 1, mu));
      }
      if (f == Family::D) {
        for (int k = 2; k <= 7; ++k) {
          for (const Weight& mu : candidate_dominants(spec, k, 2)) CHECK(mult_l2_D(n, k, mu) == mult_bivariate(spec, k, 2, mu));
        }
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const AlgebraSpec spec{Family::A, n};
    for (int k = 2; k <= 7; ++k) {
      for (const Weight& mu : candidate_dominants(spec, k, 2)) CHECK(mult_l2_A(n, k, mu) == mult_bivariate(spec, k, 2, mu));
      for (const Weight& mu : candidate_dominants(spec, k, 1)) CHECK(mult_l1(spec, k, mu) == mult_bivariate(spec, k, 1, mu));
    }
  }
}

TEST_CASE("normalization against the Weyl dimension") {
  for (const AlgebraSpec& spec : kSmallBCD) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= k && k + l <= 5; ++l) {
        BigInt total = 0;
        for (const Weight& mu : candidate_dominants(spec, k, l)) total += orbit_size(spec, mu) * mult_bivariate(spec, k, l, mu);
        CHECK(total == weyl_dimension(spec, k, l));
      }
    }
  }
}
