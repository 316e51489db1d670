#include "spt/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spt {

RowStrictTableau::RowStrictTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.num_rows())
    throw std::invalid_argument("tableau row count does not match shape");
  pos_.assign(n, {0, 0});
  for (int r = 1; r <= shape_.num_rows(); ++r) {
    const auto& row = rows_[r - 1];
    if (static_cast<int>(row.size()) != shape_.row_length(r))
      throw std::invalid_argument("tableau row length does not match shape");
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      int v = row[c - 1];
      if (v < 1 || v > n) throw std::invalid_argument("tableau entry out of range");
      if (pos_[v - 1].first != 0) throw std::invalid_argument("tableau entry repeated");
      if (c > 1 && row[c - 2] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      pos_[v - 1] = {r, c};
    }
  }
}

bool RowStrictTableau::is_standard() const {
  for (int r = 2; r <= shape_.num_rows(); ++r)
    for (int c = 1; c <= shape_.row_length(r); ++c)
      if (entry(r, c) <= entry(r - 1, c)) return false;
  return true;
}

std::string RowStrictTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
  }
  return out.str();
}

RowStrictTableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  std::string row_text;
  std::istringstream in(text);
  while (std::getline(in, row_text, '/')) {
    std::vector<int> row;
    std::string token;
    std::istringstream row_in(row_text);
    while (std::getline(row_in, token, ',')) {
      try {
        row.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse tableau entry '" + token + "'");
      }
    }
    if (row.empty()) throw std::invalid_argument("empty tableau row");
    parts.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty tableau");
  return RowStrictTableau(Partition(std::move(parts)), std::move(rows));
}

BaseFilling::BaseFilling(const Partition& shape) : shape_(shape) {
  labels_.resize(shape.num_rows());
  for (int r = 1; r <= shape.num_rows(); ++r)
    labels_[r - 1].assign(shape.row_length(r), 0);
  pos_.assign(shape.size(), {0, 0});
  int next = 1;
  for (int c = 1; c <= shape.num_cols(); ++c)
    for (int r = shape.col_height(c); r >= 1; --r) {
      labels_[r - 1][c - 1] = next;
      pos_[next - 1] = {r, c};
      ++next;
    }
}

namespace {

// Chooses the entries of each row in turn; candidate rows are ascending
// subsequences of the still-unused values, enumerated in lexicographic
// order so the reading words come out sorted.
void fill_rows(const Partition& shape, int row, std::vector<int>& unused,
               std::vector<std::vector<int>>& rows,
               const std::function<void(const RowStrictTableau&)>& visit) {
  if (row > shape.num_rows()) {
    visit(RowStrictTableau(shape, rows));
    return;
  }
  const int len = shape.row_length(row);
  const int m = static_cast<int>(unused.size());
  std::vector<int> pick(len);
  // iterate over index combinations 0 <= idx[0] < ... < idx[len-1] < m
  std::vector<int> idx(len);
  for (int j = 0; j < len; ++j) idx[j] = j;
  while (true) {
    std::vector<int> rest;
    rest.reserve(m - len);
    {
      int j = 0;
      for (int a = 0; a < m; ++a) {
        if (j < len && idx[j] == a) {
          pick[j] = unused[a];
          ++j;
        } else {
          rest.push_back(unused[a]);
        }
      }
    }
    rows[row - 1] = pick;
    fill_rows(shape, row + 1, rest, rows, visit);

    // advance the combination
    int j = len - 1;
    while (j >= 0 && idx[j] == m - len + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int a = j + 1; a < len; ++a) idx[a] = idx[a - 1] + 1;
  }
}

}  // namespace

void for_each_row_strict(const Partition& shape,
                         const std::function<void(const RowStrictTableau&)>& visit) {
  std::vector<int> values(shape.size());
  for (int v = 1; v <= shape.size(); ++v) values[v - 1] = v;
  std::vector<std::vector<int>> rows(shape.num_rows());
  fill_rows(shape, 1, values, rows, visit);
}

std::vector<RowStrictTableau> enumerate_row_strict(const Partition& shape) {
  std::vector<RowStrictTableau> out;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) { out.push_back(t); });
  return out;
}

std::vector<RowStrictTableau> enumerate_standard(const Partition& shape) {
  std::vector<RowStrictTableau> out;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) {
    if (t.is_standard()) out.push_back(t);
  });
  return out;
}

TruncatedTableau truncate(const RowStrictTableau& tableau, int i) {
  if (i < 1 || i > tableau.size())
    throw std::invalid_argument("truncation index out of range");
  TruncatedTableau out;
  std::vector<int> parts;
  for (const auto& row : tableau.rows()) {
    std::vector<int> kept;
    for (int v : row) {
      if (v > i) break;  // rows increase, so entries <= i form a prefix
      kept.push_back(v);
    }
    parts.push_back(static_cast<int>(kept.size()));
    out.rows.push_back(std::move(kept));
  }
  out.shape = Composition(std::move(parts));
  return out;
}

RowStrictTableau standardize(const RowStrictTableau& tableau) {
  const Partition& shape = tableau.shape();
  std::vector<std::vector<int>> rows = tableau.rows();
  for (int c = 1; c <= shape.num_cols(); ++c) {
    std::vector<int> column;
    for (int r = 1; r <= shape.col_height(c); ++r) column.push_back(rows[r - 1][c - 1]);
    std::sort(column.begin(), column.end());
    for (int r = 1; r <= shape.col_height(c); ++r) rows[r - 1][c - 1] = column[r - 1];
  }
  return RowStrictTableau(shape, std::move(rows));
}

}  // namespace spt
