#include "spt/schubert_points.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spt {

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (int i = n; i >= 2; --i) {
    int e = exponents[i - 2];
    if (e == 0) continue;
    if (any) out << ' ';
    any = true;
    out << 'x' << i;
    if (e > 1) out << '^' << e;
  }
  return any ? out.str() : "1";
}

MonotoneFactorization factorization_from_ell(const EllVector& ell, int n) {
  if (static_cast<int>(ell.size()) != n - 1)
    throw std::invalid_argument("ell-vector must have n-1 entries");
  for (int q = 2; q <= n; ++q)
    if (ell[q - 2] < 0 || ell[q - 2] > q - 1)
      throw std::invalid_argument("ell-vector entry out of range");
  return MonotoneFactorization(n, ell);
}

Permutation schubert_point_from_ell(const EllVector& ell, int n) {
  return factorization_from_ell(ell, n).to_permutation();
}

Permutation schubert_point(const RowStrictTableau& tableau) {
  return schubert_point_from_ell(ell_vector(tableau), tableau.size());
}

Permutation standard_shortcut(const RowStrictTableau& tableau) {
  if (!tableau.is_standard())
    throw std::invalid_argument("standard_shortcut requires a standard tableau");
  const int n = tableau.size();
  Word word;
  for (int i = n; i >= 2; --i) {
    int k = tableau.row_of(i);
    for (int s = i - k + 1; s <= i - 1; ++s) word.push_back(s);
  }
  return word_to_permutation(word, n);
}

Monomial monomial(const RowStrictTableau& tableau) {
  return Monomial{tableau.size(), ell_vector(tableau)};
}

SchubertPointIndex::SchubertPointIndex(Partition shape) : shape_(std::move(shape)) {
  for_each_row_strict(shape_, [&](const RowStrictTableau& t) {
    auto [it, inserted] = by_ell_.try_emplace(ell_vector(t), t);
    if (!inserted) throw std::logic_error("ell-vector collision between tableaux");
  });
}

const RowStrictTableau* SchubertPointIndex::find(const EllVector& ell) const {
  auto it = by_ell_.find(ell);
  return it == by_ell_.end() ? nullptr : &it->second;
}

const RowStrictTableau* SchubertPointIndex::find(const Permutation& w) const {
  if (w.rank() != shape_.size()) return nullptr;
  return find(canonical_factorization(w).string_lengths());
}

std::vector<Permutation> SchubertPointIndex::points() const {
  std::vector<Permutation> out;
  out.reserve(by_ell_.size());
  for (const auto& [ell, t] : by_ell_) out.push_back(schubert_point_from_ell(ell, shape_.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> SchubertPointIndex::standard_points() const {
  std::vector<Permutation> out;
  for (const auto& [ell, t] : by_ell_)
    if (t.is_standard()) out.push_back(schubert_point_from_ell(ell, shape_.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EllVector> ell_vector_set(const Partition& shape) {
  std::vector<EllVector> out;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) { out.push_back(ell_vector(t)); });
  return out;
}

std::map<std::vector<int>, RowStrictTableau> schubert_point_set(const Partition& shape) {
  std::map<std::vector<int>, RowStrictTableau> out;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) {
    auto [it, inserted] = out.try_emplace(schubert_point(t).one_line(), t);
    if (!inserted) throw std::logic_error("Schubert point collision between tableaux");
  });
  return out;
}

namespace {

// Depth-first search for a row assignment realizing the ell-vector: value
// q goes into a row where the truncation count matches ell_{q-1}. Prunes
// the enumeration at the first mismatching prefix.
bool assign_rows(const Partition& shape, const EllVector& ell, int q, std::vector<int>& len,
                 std::vector<int>& row_of) {
  if (q > shape.size()) return true;
  for (int r = shape.num_rows(); r >= 1; --r) {
    if (len[r - 1] == shape.row_length(r)) continue;
    const int grown = len[r - 1] + 1;
    if (q >= 2) {
      int count = 0;
      for (int r2 = 1; r2 <= shape.num_rows(); ++r2) {
        if (r2 == r) continue;
        const int l2 = len[r2 - 1];
        if (l2 > grown || (l2 == grown && r2 < r)) ++count;
      }
      if (count != ell[q - 2]) continue;
    }
    len[r - 1] = grown;
    row_of[q - 1] = r;
    if (assign_rows(shape, ell, q + 1, len, row_of)) return true;
    len[r - 1] = grown - 1;
  }
  return false;
}

}  // namespace

std::optional<RowStrictTableau> find_tableau_with_ell(const Partition& shape,
                                                      const EllVector& ell) {
  if (static_cast<int>(ell.size()) != shape.size() - 1)
    throw std::invalid_argument("ell-vector must have n-1 entries");
  std::vector<int> len(shape.num_rows(), 0), row_of(shape.size(), 0);
  if (!assign_rows(shape, ell, 1, len, row_of)) return std::nullopt;
  std::vector<std::vector<int>> rows(shape.num_rows());
  for (int v = 1; v <= shape.size(); ++v) rows[row_of[v - 1] - 1].push_back(v);
  return RowStrictTableau(shape, std::move(rows));
}

std::optional<RowStrictTableau> is_schubert_point(const Permutation& w, const Partition& shape) {
  if (w.rank() != shape.size())
    throw std::invalid_argument("permutation rank does not match shape size");
  return find_tableau_with_ell(shape, canonical_factorization(w).string_lengths());
}

}  // namespace spt
