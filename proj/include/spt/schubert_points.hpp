#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spt/partition.hpp"
#include "spt/springer.hpp"
#include "spt/tableau.hpp"
#include "spt/weyl.hpp"

namespace spt {

/// Monomial x_2^{e_2} x_3^{e_3} ... x_n^{e_n}; x_1 never appears.
struct Monomial {
  int n = 0;
  std::vector<int> exponents;  // exponents[i-2] = exponent of x_i

  std::string to_string() const;  // "x5^2 x4 x3", "1" when constant
  bool operator==(const Monomial&) const = default;
};

/// Builds the factorization whose string w_{q-1} is
/// s_{q-ell_{q-1}} ... s_{q-1}, empty when ell_{q-1} = 0.
MonotoneFactorization factorization_from_ell(const EllVector& ell, int n);

Permutation schubert_point_from_ell(const EllVector& ell, int n);

/// The Schubert point of a row-strict tableau; its length equals the
/// cell dimension of the tableau.
Permutation schubert_point(const RowStrictTableau& tableau);

/// Shortcut for standard tableaux: i in row k contributes the string
/// s_{i-k+1} ... s_{i-1}. Throws if the tableau is not standard.
Permutation standard_shortcut(const RowStrictTableau& tableau);

Monomial monomial(const RowStrictTableau& tableau);

/// Lookup structure from Schubert points back to tableaux of one shape,
/// built by full enumeration. Keys are ell-vectors, which determine the
/// point uniquely.
class SchubertPointIndex {
public:
  explicit SchubertPointIndex(Partition shape);

  const Partition& shape() const { return shape_; }
  std::size_t size() const { return by_ell_.size(); }
  const RowStrictTableau* find(const EllVector& ell) const;
  const RowStrictTableau* find(const Permutation& w) const;

  /// All Schubert points of the shape, sorted by one-line notation.
  std::vector<Permutation> points() const;
  /// Points of the standard tableaux only, sorted by one-line notation.
  std::vector<Permutation> standard_points() const;

private:
  Partition shape_;
  std::unordered_map<EllVector, RowStrictTableau, VectorHash> by_ell_;
};

/// The set of ell-vectors realized by row-strict tableaux of the shape.
/// Lighter than the full index; used by the large verification scans.
std::vector<EllVector> ell_vector_set(const Partition& shape);

/// One entry per row-strict tableau, keyed by the point's one-line
/// notation (so iteration order is lexicographic).
std::map<std::vector<int>, RowStrictTableau> schubert_point_set(const Partition& shape);

/// The row-strict tableau of the shape with the given ell-vector, if one
/// exists. Searches the enumeration with pruning, so single lookups do
/// not pay for a full index.
std::optional<RowStrictTableau> find_tableau_with_ell(const Partition& shape,
                                                      const EllVector& ell);

/// The unique preimage tableau of w if one exists.
std::optional<RowStrictTableau> is_schubert_point(const Permutation& w, const Partition& shape);

}  // namespace spt
