#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spt/partition.hpp"
#include "spt/tableau.hpp"
#include "spt/weyl.hpp"

namespace spt {

/// Residual monotone string s_lo s_{lo+1} ... s_hi carried while a
/// deleted letter is commuted down the factorization.
struct StarString {
  int lo = 0;
  int hi = 0;
  bool operator==(const StarString&) const = default;
};

/// Result of moving a star past the string at level i. Case 2 glues the
/// star into the string and case 3 may dissolve it; in both situations
/// star is empty and the case id tells them apart.
struct CommuteOutcome {
  int case_id = 0;    // 1..4
  int new_length = 0;  // length of the transformed string w'_{i-1}
  std::optional<StarString> star;
};

/// Rewrites (s_lo ... s_hi)(s_{i-ell} ... s_{i-1}) as
/// (s_{i-ell'} ... s_{i-1})(star'), where ell is the current string
/// length (0 for an empty string). Requires hi <= i-1.
CommuteOutcome commute_star(const StarString& star, int i, int ell);

struct PropagationStep {
  int level = 0;  // the i in star_i
  int case_id = 0;
  StarString star_before;
  int string_length_before = 0;
  int string_length_after = 0;
  std::optional<StarString> star_after;
};

struct DeletionResult {
  MonotoneFactorization factorization;
  std::vector<PropagationStep> steps;
};

/// Deletes the pos-th letter (1-based, from the left) of the string
/// w_{string_index} and renormalizes to monotone form by star
/// propagation. The product of the result equals the product of the
/// original word with that letter removed.
MonotoneFactorization delete_and_normalize(const MonotoneFactorization& f, int string_index,
                                           int pos);
DeletionResult delete_with_steps(const MonotoneFactorization& f, int string_index, int pos);

/// One step of the shaded-box walk for shapes with at most two columns.
/// shape is the sorted truncation lambda[i]; shaded_rows are the rows of
/// lambda[i] carrying the star; c and c_prime are the second-column
/// lengths of lambda[i] and of the diagram being rebuilt.
struct TwoColumnTraceStep {
  int level = 0;
  Partition shape;
  std::vector<int> shaded_rows;
  int c = 0;
  int c_prime = 0;
  int case_id = 0;
};

/// Runs the deletion on the Schubert point of the tableau and records
/// the box-level walk. Requires a shape with at most two columns.
std::vector<TwoColumnTraceStep> two_column_trace(const RowStrictTableau& tableau,
                                                 int string_index, int pos);

/// ASCII rendering of a trace: per step, the truncated tableau and its
/// sorted diagram side by side, shaded rows marked with '*' and the box
/// being moved marked with its value.
std::string render_trace(const RowStrictTableau& tableau,
                         const std::vector<TwoColumnTraceStep>& steps);

}  // namespace spt
