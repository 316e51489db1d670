#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spt/partition.hpp"
#include "spt/tableau.hpp"
#include "spt/weyl.hpp"

namespace spt {

/// Sparse nilpotent matrix with X[k][j] = 1 exactly for the listed (k, j)
/// pairs. Kept for documentation of the fixed operator; no linear algebra
/// is performed on it.
struct NilpotentMatrix {
  int n = 0;
  std::vector<std::pair<int, int>> ones;  // sorted

  std::string to_string() const;  // "5: (1,3) (2,4) (4,5)"
  bool operator==(const NilpotentMatrix&) const = default;
};

/// The matrix whose ones come from horizontal adjacencies of the base
/// filling: (k, j) whenever j sits directly right of k.
NilpotentMatrix nilpotent_matrix(const Partition& shape);

/// The permutation w with w^{-1}(i) equal to the entry of T in the box
/// whose base-filling label is i.
Permutation springer_permutation(const RowStrictTableau& tableau);

/// Inverse direction: fills box i of the base filling with w^{-1}(i) and
/// returns the tableau when the filling is row-strict, nothing otherwise.
std::optional<RowStrictTableau> tableau_from_springer_permutation(const Permutation& w,
                                                                  const Partition& shape);

struct DimensionPair {
  int p = 0;
  int q = 0;
  auto operator<=>(const DimensionPair&) const = default;
};

/// All pairs p < q with q below p in the same or a strictly left column,
/// and q < r_p whenever p has a right neighbor r_p. Their count is the
/// affine cell dimension.
std::vector<DimensionPair> dimension_pairs(const RowStrictTableau& tableau);

/// (ell_1, ..., ell_{n-1}); ell_{q-1} counts dimension pairs ending at q.
using EllVector = std::vector<int>;

/// Computes the ell-vector by row counting in the truncations: rows above
/// q's row of equal length plus all rows of strictly greater length.
EllVector ell_vector(const RowStrictTableau& tableau);

/// Sum of t^{cell dimension} over all row-strict tableaux of the shape.
PoincarePolynomial springer_poincare(const Partition& shape);

}  // namespace spt
