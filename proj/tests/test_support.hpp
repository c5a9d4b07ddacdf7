#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "metafib/linear_recurrence.hpp"
#include "metafib/nested_recurrence.hpp"

namespace metafib::testing {

inline std::vector<Int> make_ints(std::initializer_list<long> values) {
  std::vector<Int> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

/// k <= max_k, coefficients in [0, max_coeff] summing to >= 2, initial terms
/// in [1, max_initial].
inline LinearRecurrence random_linear_recurrence(std::mt19937_64& rng, int max_k = 4,
                                                 int max_coeff = 3, int max_initial = 50) {
  std::uniform_int_distribution<int> k_dist(1, max_k);
  const int k = k_dist(rng);
  std::uniform_int_distribution<int> coeff_dist(0, max_coeff);
  std::vector<Int> coeffs;
  while (true) {
    coeffs.clear();
    long sum = 0;
    for (int i = 0; i < k; ++i) {
      const int c = coeff_dist(rng);
      coeffs.emplace_back(c);
      sum += c;
    }
    if (sum >= 2) break;
  }
  std::uniform_int_distribution<int> init_dist(1, max_initial);
  std::vector<Int> initial;
  for (int i = 0; i < k; ++i) initial.emplace_back(init_dist(rng));
  return LinearRecurrence(std::move(coeffs), std::move(initial));
}

struct RandomNested {
  MetaFibRecurrence rec;
  InitialCondition init;
};

/// K <= 5, coefficients in [0, 3] with at least one positive, initial values
/// in [0, 10] (length between K and K+3), start index in [-1, 2]. The
/// distribution leans toward small coefficients and positive values so that a
/// useful share of samples survives hundreds of terms; most uniform samples
/// die almost immediately.
inline RandomNested random_nested(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k_dist(1, 5);
  const int K = k_dist(rng);
  std::discrete_distribution<int> coeff_dist({55, 33, 9, 3});
  std::vector<Int> coeffs;
  while (true) {
    coeffs.clear();
    long sum = 0;
    for (int i = 0; i < K; ++i) {
      const int c = coeff_dist(rng);
      coeffs.emplace_back(c);
      sum += c;
    }
    if (sum >= 1) break;
  }
  std::uniform_int_distribution<Index> n0_dist(-1, 2);
  const Index n0 = n0_dist(rng);
  std::uniform_int_distribution<int> extra_dist(0, 3);
  std::uniform_int_distribution<int> value_dist(1, 6);
  std::uniform_int_distribution<int> zero_roll(0, 99);
  std::vector<Int> values;
  const int len = K + extra_dist(rng);
  for (int i = 0; i < len; ++i) {
    values.emplace_back(zero_roll(rng) < 8 ? 0 : value_dist(rng));
  }
  return RandomNested{MetaFibRecurrence(n0, std::move(coeffs)),
                      InitialCondition(n0, std::move(values))};
}

}  // namespace metafib::testing
