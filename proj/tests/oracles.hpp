#pragma once

// Independent reference routines used only by the tests. These stay
// deliberately naive so they cannot share bugs with the library code.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "spt/partition.hpp"
#include "spt/weyl.hpp"

namespace oracles {

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / prod lambda_i!
inline long long multinomial(const spt::Partition& shape) {
  long long m = factorial(shape.size());
  for (int p : shape.parts()) m /= factorial(p);
  return m;
}

// hook length formula for the number of standard tableaux
inline long long hook_length_count(const spt::Partition& shape) {
  long long hooks = 1;
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c <= shape.row_length(r); ++c) {
      int arm = shape.row_length(r) - c;
      int leg = shape.col_height(c) - r;
      hooks *= arm + leg + 1;
    }
  return factorial(shape.size()) / hooks;
}

inline std::vector<spt::Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<spt::Permutation> out;
  do {
    out.push_back(spt::Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// every monotone-factorization length tuple whose product is w
inline std::vector<std::vector<int>> brute_force_factorizations(const spt::Permutation& w) {
  const int n = w.rank();
  std::vector<std::vector<int>> found;
  std::vector<int> lengths(n - 1, 0);
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (spt::MonotoneFactorization(n, lengths).to_permutation() == w)
        found.push_back(lengths);
      return;
    }
    for (int len = 0; len <= i; ++len) {
      lengths[i - 1] = len;
      self(self, i + 1);
    }
  };
  if (n == 1) {
    if (w.is_identity()) found.push_back({});
    return found;
  }
  recurse(recurse, 1);
  return found;
}

// all permutations reachable as subwords of one fixed reduced word of w;
// by the subword property this is exactly the lower Bruhat ideal
inline std::set<std::vector<int>> subword_ideal(const spt::Permutation& w) {
  spt::Word reduced = spt::canonical_factorization(w).word();
  const int n = w.rank();
  std::set<std::vector<int>> out;
  const std::size_t k = reduced.size();
  for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
    spt::Word sub;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (1ull << b)) sub.push_back(reduced[b]);
    out.insert(spt::word_to_permutation(sub, n).one_line());
  }
  return out;
}

}  // namespace oracles
