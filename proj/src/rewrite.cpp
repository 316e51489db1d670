#include "spt/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spt/springer.hpp"

namespace spt {

CommuteOutcome commute_star(const StarString& star, int i, int ell) {
  if (star.lo < 1 || star.lo > star.hi)
    throw std::invalid_argument("malformed star string");
  if (star.hi >= i)
    throw std::invalid_argument("star must end below the current level");
  if (ell < 0 || ell > i - 1)
    throw std::invalid_argument("string length out of range for level");

  const int p_lo = star.lo, p_hi = star.hi;
  const int m = i - ell;  // index of the string's first letter (i when empty)
  if (p_hi < m - 1) return {1, ell, star};
  if (p_hi == m - 1) return {2, ell + (p_hi - p_lo + 1), std::nullopt};
  if (p_lo <= m) {
    std::optional<StarString> next;
    if (p_hi - 1 >= p_lo) next = StarString{p_lo, p_hi - 1};
    return {3, ell - 1, next};
  }
  return {4, ell, StarString{p_lo - 1, p_hi - 1}};
}

DeletionResult delete_with_steps(const MonotoneFactorization& f, int string_index, int pos) {
  const int n = f.rank();
  if (string_index < 1 || string_index > n - 1)
    throw std::invalid_argument("string index out of range");
  const int len = f.string_length(string_index);
  if (len == 0) throw std::invalid_argument("cannot delete from an empty string");
  if (pos < 1 || pos > len) throw std::invalid_argument("letter position out of range");

  const int start = f.string_start(string_index);
  const int deleted = start + pos - 1;

  std::vector<int> lengths = f.string_lengths();
  lengths[string_index - 1] = string_index - deleted;  // suffix right of the gap

  std::vector<PropagationStep> steps;
  if (deleted > start) {
    // prefix left of the gap becomes the star and walks down
    StarString star{start, deleted - 1};
    bool terminated = false;
    for (int i = string_index; i >= 2 && !terminated; --i) {
      CommuteOutcome o = commute_star(star, i, lengths[i - 2]);
      steps.push_back({i, o.case_id, star, lengths[i - 2], o.new_length, o.star});
      lengths[i - 2] = o.new_length;
      if (o.star)
        star = *o.star;
      else
        terminated = true;
    }
    if (!terminated) throw std::logic_error("star propagation failed to terminate");
  }
  return {MonotoneFactorization(n, std::move(lengths)), std::move(steps)};
}

MonotoneFactorization delete_and_normalize(const MonotoneFactorization& f, int string_index,
                                           int pos) {
  return delete_with_steps(f, string_index, pos).factorization;
}

namespace {

int second_column_length(const Partition& shape) {
  int c = 0;
  for (int p : shape.parts())
    if (p >= 2) ++c;
  return c;
}

Partition remove_box(const Partition& shape, int row) {
  if (row < 1 || row > shape.num_rows())
    throw std::logic_error("trace walk placed a value outside the diagram");
  std::vector<int> parts = shape.parts();
  parts[row - 1] -= 1;
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

// Original row indices of T[i], stably ordered by decreasing length;
// zero-length rows are dropped. Entry s of the result is the row of the
// tableau occupying row s+1 of the sorted diagram.
std::vector<int> sorted_row_order(const Composition& comp) {
  std::vector<int> order;
  for (int r = 1; r <= comp.num_rows(); ++r)
    if (comp.row_length(r) > 0) order.push_back(r);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return comp.row_length(a) > comp.row_length(b);
  });
  return order;
}

}  // namespace

std::vector<TwoColumnTraceStep> two_column_trace(const RowStrictTableau& tableau,
                                                 int string_index, int pos) {
  if (tableau.shape().num_cols() > 2)
    throw std::invalid_argument("trace requires a shape with at most two columns");
  const int n = tableau.size();
  MonotoneFactorization point(n, ell_vector(tableau));
  DeletionResult deletion = delete_with_steps(point, string_index, pos);

  std::vector<TwoColumnTraceStep> steps;
  if (deletion.steps.empty()) return steps;

  // diagram of the rebuilt tableau, one truncation ahead of the walk
  Partition rebuilt = sorted_shape(truncate(tableau, string_index + 1).shape);
  rebuilt = remove_box(rebuilt, deletion.factorization.string_length(string_index) + 1);

  for (const PropagationStep& step : deletion.steps) {
    const int i = step.level;
    Partition lam = sorted_shape(truncate(tableau, i).shape);
    std::vector<int> shaded;
    for (int row = i - step.star_before.hi + 1; row <= i - step.star_before.lo + 1; ++row) {
      if (row < 1 || row > lam.num_rows())
        throw std::logic_error("shaded row outside the truncated diagram");
      shaded.push_back(row);
    }
    steps.push_back({i, lam, shaded, second_column_length(lam), second_column_length(rebuilt),
                     step.case_id});
    rebuilt = remove_box(rebuilt, step.string_length_after + 1);
  }
  return steps;
}

std::string render_trace(const RowStrictTableau& tableau,
                         const std::vector<TwoColumnTraceStep>& steps) {
  std::ostringstream out;
  for (const TwoColumnTraceStep& step : steps) {
    const int i = step.level;
    TruncatedTableau trunc = truncate(tableau, i);
    std::vector<int> order = sorted_row_order(trunc.shape);

    std::vector<bool> shaded_sorted(order.size() + 1, false);
    std::vector<bool> shaded_orig(trunc.shape.num_rows() + 1, false);
    for (int row : step.shaded_rows) {
      shaded_sorted[row] = true;
      shaded_orig[order[row - 1]] = true;
    }
    const int bold_row_orig = tableau.row_of(i);

    out << "i=" << i << "  case " << step.case_id << "  c=" << step.c
        << "  c'=" << step.c_prime << "  shaded rows {";
    for (std::size_t s = 0; s < step.shaded_rows.size(); ++s) {
      if (s) out << ',';
      out << step.shaded_rows[s];
    }
    out << "}\n";

    const int height = std::max(trunc.shape.num_rows(), step.shape.num_rows());
    for (int line = 1; line <= height; ++line) {
      std::ostringstream left;
      if (line <= trunc.shape.num_rows()) {
        left << (shaded_orig[line] ? " *" : "  ");
        const auto& row = trunc.rows[line - 1];
        if (row.empty())
          left << " --";
        else
          for (int v : row) {
            left << '[' << (v < 10 ? " " : "") << v << ']';
          }
      }
      std::string left_str = left.str();
      left_str.resize(24, ' ');
      out << left_str << "|";
      if (line <= step.shape.num_rows()) {
        out << (shaded_sorted[line] ? " *" : "  ");
        int sorted_row_of_i =
            1 + static_cast<int>(std::find(order.begin(), order.end(), bold_row_orig) -
                                 order.begin());
        for (int c = 1; c <= step.shape.row_length(line); ++c) {
          bool bold = line == sorted_row_of_i && c == step.shape.row_length(line);
          if (bold)
            out << '[' << (i < 10 ? " " : "") << i << ']';
          else
            out << "[  ]";
        }
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace spt
