#include "spt/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace spt {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  const int n = rank();
  if (n == 0) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("one-line notation is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(rank());
  for (int i = 1; i <= rank(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv), unchecked{});
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.rank() != w.rank()) throw std::invalid_argument("rank mismatch in product");
  std::vector<int> images(v.rank());
  for (int i = 1; i <= v.rank(); ++i) images[i - 1] = v(w(i));
  return Permutation(std::move(images), Permutation::unchecked{});
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

Permutation word_to_permutation(const Word& word, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (int letter : word) {
    if (letter < 1 || letter >= n)
      throw std::invalid_argument("word letter out of range for rank");
    std::swap(images[letter - 1], images[letter]);
  }
  return Permutation(std::move(images));
}

Word parse_word(const std::string& text) {
  Word word;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    std::string digits = token;
    if (digits.size() > 1 && (digits[0] == 's' || digits[0] == 'S'))
      digits = digits.substr(digits[1] == '_' ? 2 : 1);
    try {
      std::size_t pos = 0;
      int letter = std::stoi(digits, &pos);
      if (pos != digits.size() || letter < 1) throw std::invalid_argument("");
      word.push_back(letter);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse word letter '" + token + "'");
    }
  }
  return word;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << 's' << word[i];
  }
  return out.str();
}

Permutation parse_one_line(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in one-line");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> images;
  std::istringstream in(body);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      images.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse one-line entry '" + token + "'");
    }
  }
  return Permutation(std::move(images));
}

int length(const Permutation& w) {
  int inv = 0;
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

MonotoneFactorization::MonotoneFactorization(int n, std::vector<int> string_lengths)
    : n_(n), lengths_(std::move(string_lengths)) {
  if (n_ < 1) throw std::invalid_argument("factorization rank must be >= 1");
  if (static_cast<int>(lengths_.size()) != n_ - 1)
    throw std::invalid_argument("factorization needs n-1 string lengths");
  for (int i = 1; i < n_; ++i)
    if (lengths_[i - 1] < 0 || lengths_[i - 1] > i)
      throw std::invalid_argument("string length out of range");
}

int MonotoneFactorization::total_length() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

Word MonotoneFactorization::word() const {
  Word out;
  out.reserve(total_length());
  for (int i = n_ - 1; i >= 1; --i)
    for (int s = string_start(i); s <= i; ++s) out.push_back(s);
  return out;
}

Permutation MonotoneFactorization::to_permutation() const {
  return word_to_permutation(word(), n_);
}

std::string MonotoneFactorization::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (int i = n_ - 1; i >= 1; --i) {
    if (lengths_[i - 1] == 0) continue;
    any = true;
    out << '(';
    for (int s = string_start(i); s <= i; ++s) {
      if (s > string_start(i)) out << ' ';
      out << 's' << s;
    }
    out << ')';
  }
  return any ? out.str() : "e";
}

// Peels strings top-down: the last entry of the working permutation
// determines k_i, then w_i^{-1} is applied on values and the rank drops.
MonotoneFactorization canonical_factorization(const Permutation& w) {
  const int n = w.rank();
  std::vector<int> cur = w.one_line();
  std::vector<int> lengths(n - 1, 0);
  for (int i = n - 1; i >= 1; --i) {
    int k = cur[i];  // w'(i+1)
    if (k == i + 1) continue;
    lengths[i - 1] = i - k + 1;
    // strip w_i = s_k s_{k+1} ... s_i, the cycle j -> j+1 (k <= j <= i), i+1 -> k
    for (int& v : cur) {
      if (v == k)
        v = i + 1;
      else if (v > k && v <= i + 1)
        v -= 1;
    }
    // afterwards cur fixes i+1 and permutes 1..i
  }
  return MonotoneFactorization(n, std::move(lengths));
}

Permutation factorization_to_permutation(const MonotoneFactorization& f) {
  return f.to_permutation();
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = v.rank();
  if (n != w.rank()) throw std::invalid_argument("rank mismatch in Bruhat comparison");
  // v <= w iff the dot-count matrices satisfy rv(i,j) >= rw(i,j) everywhere
  std::vector<int> rv(n, 0), rw(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = v(i) - 1; j < n; ++j) ++rv[j];
    for (int j = w(i) - 1; j < n; ++j) ++rw[j];
    for (int j = 0; j < n; ++j)
      if (rv[j] < rw[j]) return false;
  }
  return true;
}

std::size_t VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// One-line vectors of the covers of w in Bruhat order: w (a,b) with
// w(a) > w(b) and no witness in between.
std::vector<std::vector<int>> covers_below(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (w[a] <= w[b]) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c)
        if (w[b] < w[c] && w[c] < w[a]) blocked = true;
      if (blocked) continue;
      std::vector<int> v = w;
      std::swap(v[a], v[b]);
      out.push_back(std::move(v));
    }
  return out;
}

std::mutex ideal_cache_mutex;
std::unordered_map<std::vector<int>, std::vector<Permutation>, VectorHash> ideal_cache;

}  // namespace

std::vector<Permutation> lower_ideal(const Permutation& w) {
  {
    std::lock_guard<std::mutex> lock(ideal_cache_mutex);
    auto it = ideal_cache.find(w.one_line());
    if (it != ideal_cache.end()) return it->second;
  }

  // breadth-first descent by single-letter deletions from reduced words
  const int n = w.rank();
  Word root = canonical_factorization(w).word();
  std::unordered_set<std::vector<int>, VectorHash> visited;
  std::vector<std::pair<Permutation, Word>> queue;
  visited.insert(w.one_line());
  queue.emplace_back(w, root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Word word = queue[head].second;  // copy: queue may reallocate below
    for (std::size_t p = 0; p < word.size(); ++p) {
      Word shorter;
      shorter.reserve(word.size() - 1);
      for (std::size_t q = 0; q < word.size(); ++q)
        if (q != p) shorter.push_back(word[q]);
      Permutation v = word_to_permutation(shorter, n);
      if (length(v) != static_cast<int>(shorter.size())) continue;  // not reduced
      if (visited.insert(v.one_line()).second) queue.emplace_back(std::move(v), std::move(shorter));
    }
  }

  std::vector<Permutation> ideal;
  ideal.reserve(queue.size());
  for (auto& entry : queue) ideal.push_back(std::move(entry.first));
  std::sort(ideal.begin(), ideal.end(), [](const Permutation& a, const Permutation& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a.one_line() < b.one_line();
  });

  std::lock_guard<std::mutex> lock(ideal_cache_mutex);
  return ideal_cache.try_emplace(w.one_line(), std::move(ideal)).first->second;
}

std::vector<std::vector<Permutation>> bruhat_lower_closure(const std::vector<Permutation>& ws) {
  if (ws.empty()) return {};
  const int n = ws.front().rank();
  int max_len = 0;
  for (const auto& w : ws) {
    if (w.rank() != n) throw std::invalid_argument("rank mismatch in closure");
    max_len = std::max(max_len, length(w));
  }
  std::vector<std::unordered_set<std::vector<int>, VectorHash>> levels(max_len + 1);
  for (const auto& w : ws) levels[length(w)].insert(w.one_line());
  for (int d = max_len; d >= 1; --d)
    for (const auto& v : levels[d])
      for (auto& u : covers_below(v)) levels[d - 1].insert(std::move(u));

  std::vector<std::vector<Permutation>> out(max_len + 1);
  for (int d = 0; d <= max_len; ++d) {
    std::vector<std::vector<int>> sorted(levels[d].begin(), levels[d].end());
    std::sort(sorted.begin(), sorted.end());
    out[d].reserve(sorted.size());
    for (auto& v : sorted) out[d].push_back(Permutation(std::move(v)));
  }
  return out;
}

PoincarePolynomial::PoincarePolynomial(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (long long c : coeffs_)
    if (c < 0) throw std::invalid_argument("coefficients must be nonnegative");
  normalize();
}

void PoincarePolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void PoincarePolynomial::add_term(int degree, long long coefficient) {
  if (degree < 0 || coefficient < 0) throw std::invalid_argument("bad polynomial term");
  if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += coefficient;
  normalize();
}

long long PoincarePolynomial::coefficient(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[d];
}

long long PoincarePolynomial::evaluate_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0ll);
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    long long c = coeffs_[d];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (d == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << 't';
      if (d > 1) out << '^' << d;
    }
  }
  return out.str();
}

PoincarePolynomial union_poincare(const std::vector<Permutation>& ws) {
  auto levels = bruhat_lower_closure(ws);
  PoincarePolynomial poly;
  for (int d = 0; d < static_cast<int>(levels.size()); ++d)
    if (!levels[d].empty()) poly.add_term(d, static_cast<long long>(levels[d].size()));
  return poly;
}

}  // namespace spt
