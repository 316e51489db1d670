#include "spt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("partition must have at least one row");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::col_height(int c) const {
  int h = 0;
  for (int p : parts_)
    if (p >= c) ++h;
  return h;
}

bool Partition::contains_box(int r, int c) const {
  return r >= 1 && r <= num_rows() && c >= 1 && c <= parts_[r - 1];
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse partition part '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("cannot parse partition part '" + token + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

Partition sorted_shape(const Composition& c) {
  std::vector<int> parts;
  for (int p : c.parts())
    if (p > 0) parts.push_back(p);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (parts.empty()) throw std::invalid_argument("composition has no nonzero part");
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("dominance order requires partitions of the same n");
  int rows = std::max(mu.num_rows(), lambda.num_rows());
  int mu_sum = 0, la_sum = 0;
  for (int r = 1; r <= rows; ++r) {
    mu_sum += r <= mu.num_rows() ? mu.row_length(r) : 0;
    la_sum += r <= lambda.num_rows() ? lambda.row_length(r) : 0;
    if (mu_sum > la_sum) return false;
  }
  return true;
}

namespace {

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partitions(n, n, prefix, out);
  return out;
}

}  // namespace spt
