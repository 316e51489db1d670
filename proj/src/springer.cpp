#include "spt/springer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spt {

std::string NilpotentMatrix::to_string() const {
  std::ostringstream out;
  out << n << ':';
  for (const auto& [k, j] : ones) out << " (" << k << ',' << j << ')';
  return out.str();
}

NilpotentMatrix nilpotent_matrix(const Partition& shape) {
  BaseFilling base(shape);
  NilpotentMatrix x;
  x.n = shape.size();
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c + 1 <= shape.row_length(r); ++c)
      x.ones.emplace_back(base.label(r, c), base.label(r, c + 1));
  std::sort(x.ones.begin(), x.ones.end());
  return x;
}

Permutation springer_permutation(const RowStrictTableau& tableau) {
  BaseFilling base(tableau.shape());
  const int n = tableau.size();
  std::vector<int> w_inv(n);
  for (int i = 1; i <= n; ++i) {
    auto [r, c] = base.box_of(i);
    w_inv[i - 1] = tableau.entry(r, c);
  }
  return Permutation(std::move(w_inv)).inverse();
}

std::optional<RowStrictTableau> tableau_from_springer_permutation(const Permutation& w,
                                                                  const Partition& shape) {
  if (w.rank() != shape.size())
    throw std::invalid_argument("permutation rank does not match shape size");
  BaseFilling base(shape);
  Permutation w_inv = w.inverse();
  std::vector<std::vector<int>> rows(shape.num_rows());
  for (int r = 1; r <= shape.num_rows(); ++r) rows[r - 1].assign(shape.row_length(r), 0);
  for (int i = 1; i <= shape.size(); ++i) {
    auto [r, c] = base.box_of(i);
    rows[r - 1][c - 1] = w_inv(i);
  }
  for (const auto& row : rows)
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return std::nullopt;
  return RowStrictTableau(shape, std::move(rows));
}

std::vector<DimensionPair> dimension_pairs(const RowStrictTableau& tableau) {
  const int n = tableau.size();
  std::vector<DimensionPair> pairs;
  for (int p = 1; p <= n; ++p) {
    const int pr = tableau.row_of(p);
    const int pc = tableau.col_of(p);
    const bool has_right = tableau.shape().contains_box(pr, pc + 1);
    const int right = has_right ? tableau.entry(pr, pc + 1) : 0;
    for (int q = p + 1; q <= n; ++q) {
      const int qr = tableau.row_of(q), qc = tableau.col_of(q);
      // same column strictly below p, or any column strictly left of p
      if (!(qc < pc || (qc == pc && qr > pr))) continue;
      if (has_right && q >= right) continue;
      pairs.push_back({p, q});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

EllVector ell_vector(const RowStrictTableau& tableau) {
  const int n = tableau.size();
  const int rows = tableau.shape().num_rows();
  std::vector<int> len(rows + 1, 0);  // lengths of the rows of T[q], 1-based
  EllVector ell(n - 1, 0);
  for (int q = 1; q <= n; ++q) {
    const int r = tableau.row_of(q);
    ++len[r];
    if (q == 1) continue;
    int count = 0;
    for (int r2 = 1; r2 <= rows; ++r2) {
      if (r2 == r) continue;
      if (len[r2] > len[r] || (len[r2] == len[r] && r2 < r)) ++count;
    }
    ell[q - 2] = count;
  }
  return ell;
}

PoincarePolynomial springer_poincare(const Partition& shape) {
  PoincarePolynomial poly;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) {
    EllVector ell = ell_vector(t);
    poly.add_term(std::accumulate(ell.begin(), ell.end(), 0), 1);
  });
  return poly;
}

}  // namespace spt
