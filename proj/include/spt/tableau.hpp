#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spt/partition.hpp"

namespace spt {

/// A bijective filling of a Young diagram by 1..n whose rows strictly
/// increase left to right. Standard tableaux are the row-strict tableaux
/// whose columns also increase top to bottom; see is_standard().
class RowStrictTableau {
public:
  RowStrictTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int entry(int r, int c) const { return rows_[r - 1][c - 1]; }
  int row_of(int value) const { return pos_[value - 1].first; }
  int col_of(int value) const { return pos_[value - 1].second; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool is_standard() const;
  std::string to_string() const;  // "1,2/3,4/5"

  bool operator==(const RowStrictTableau& other) const { return rows_ == other.rows_; }

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> pos_;  // pos_[v-1] = (row, col) of value v
};

/// Parses "1,2/3,4/5"; the shape is implied by the row lengths.
RowStrictTableau parse_tableau(const std::string& text);

/// The canonical labeling of a diagram: 1..n placed bottom-to-top within
/// each column, columns left to right.
class BaseFilling {
public:
  explicit BaseFilling(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int label(int r, int c) const { return labels_[r - 1][c - 1]; }
  std::pair<int, int> box_of(int label) const { return pos_[label - 1]; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }

private:
  Partition shape_;
  std::vector<std::vector<int>> labels_;
  std::vector<std::pair<int, int>> pos_;
};

inline BaseFilling base_filling(const Partition& shape) { return BaseFilling(shape); }

/// Visits every row-strict tableau of the given shape, in lexicographic
/// order of the row-reading word (row 1 left to right, then row 2, ...).
void for_each_row_strict(const Partition& shape,
                         const std::function<void(const RowStrictTableau&)>& visit);

std::vector<RowStrictTableau> enumerate_row_strict(const Partition& shape);
std::vector<RowStrictTableau> enumerate_standard(const Partition& shape);

/// The tableau with all boxes labeled > i deleted. Rows keep their
/// original positions, so the shape is a composition with zeros.
struct TruncatedTableau {
  std::vector<std::vector<int>> rows;
  Composition shape;
};

TruncatedTableau truncate(const RowStrictTableau& tableau, int i);

/// Sorts each column increasingly top to bottom; the result is standard.
RowStrictTableau standardize(const RowStrictTableau& tableau);

}  // namespace spt
