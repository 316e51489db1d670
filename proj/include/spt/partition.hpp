#pragma once

#include <compare>
#include <string>
#include <vector>

namespace spt {

/// A partition of n: weakly decreasing positive row lengths, drawn as a
/// Young diagram with row 1 on top. Immutable after construction.
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }  // total number of boxes n
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int num_cols() const { return parts_.empty() ? 0 : parts_.front(); }

  // rows and columns are 1-based throughout
  int row_length(int r) const { return parts_[r - 1]; }
  int col_height(int c) const;
  bool contains_box(int r, int c) const;

  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;  // "2,2,1"

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Row lengths of a truncated diagram; parts may be zero and the
/// sequence need not be monotone.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int sum() const { return sum_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int r) const { return parts_[r - 1]; }
  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Parses "3,2" into a partition; rejects empty input, nonpositive parts
/// and sequences that are not weakly decreasing.
Partition parse_partition(const std::string& text);

/// Sorts the nonzero parts decreasingly.
Partition sorted_shape(const Composition& c);

/// True iff mu <= lambda in dominance order (prefix sums of lambda
/// dominate those of mu). Both must partition the same n.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of n in reverse lexicographic order: (n) first,
/// (1,...,1) last.
std::vector<Partition> partitions_of(int n);

}  // namespace spt
