#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace spt {

/// Element of S_n in one-line notation: one_line()[i-1] = w(i).
/// Products compose as functions, (v*w)(x) = v(w(x)).
class Permutation {
public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& v, const Permutation& w);

  std::string to_string() const;  // "[3,5,2,4,1]"
  auto operator<=>(const Permutation&) const = default;

private:
  struct unchecked {};
  Permutation(std::vector<int> one_line, unchecked) : images_(std::move(one_line)) {}
  std::vector<int> images_;
};

/// A word in simple reflections; the letter i stands for s_i = (i, i+1).
using Word = std::vector<int>;

/// Evaluates a word in S_n, multiplying the letters in written order.
/// Words need not be reduced.
Permutation word_to_permutation(const Word& word, int n);

/// Accepts "3 4 3 2", "s3 s4 s3 s2", or "e" for the empty word.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& word);  // "s3 s4 s3 s2", "e" if empty

/// Accepts "[3,5,2,4,1]" or "3,5,2,4,1".
Permutation parse_one_line(const std::string& text);

/// The number of inversions of w, which is the Coxeter length.
int length(const Permutation& w);

/// The unique factorization w = w_{n-1} w_{n-2} ... w_1 into
/// monotone-increasing strings w_i = s_{k_i} s_{k_i+1} ... s_i (or e).
/// Lengths are additive: length(w) = sum of string lengths, so word()
/// is always reduced.
class MonotoneFactorization {
public:
  MonotoneFactorization(int n, std::vector<int> string_lengths);

  int rank() const { return n_; }
  /// Length of the string w_i, 1 <= i <= n-1; zero means w_i = e.
  int string_length(int i) const { return lengths_[i - 1]; }
  /// First letter k_i of a nonempty string w_i.
  int string_start(int i) const { return i - lengths_[i - 1] + 1; }
  /// The string lengths (ell_1, ..., ell_{n-1}) low index first.
  const std::vector<int>& string_lengths() const { return lengths_; }

  int total_length() const;
  Word word() const;
  Permutation to_permutation() const;
  std::string to_string() const;  // "(s3 s4)(s3)(s2)" style, e strings skipped

  auto operator<=>(const MonotoneFactorization&) const = default;

private:
  int n_;
  std::vector<int> lengths_;  // lengths_[i-1] = length of w_i, in [0, i]
};

MonotoneFactorization canonical_factorization(const Permutation& w);
Permutation factorization_to_permutation(const MonotoneFactorization& f);

/// Bruhat order via the rank-matrix criterion; throws on rank mismatch.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// All v <= w, sorted by (length, one-line). Memoized per element.
std::vector<Permutation> lower_ideal(const Permutation& w);

/// Downward Bruhat closure of a set, stratified by length: result[d]
/// holds the elements of length d, each sorted by one-line.
std::vector<std::vector<Permutation>> bruhat_lower_closure(const std::vector<Permutation>& ws);

/// Polynomial in t with nonnegative integer coefficients, exact arithmetic.
class PoincarePolynomial {
public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<long long> coefficients);
  static PoincarePolynomial one() { return PoincarePolynomial({1}); }

  void add_term(int degree, long long coefficient);
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coefficient(int d) const;
  const std::vector<long long>& coefficients() const { return coeffs_; }
  long long evaluate_at_one() const;

  std::string to_string() const;  // "5t^4+11t^3+9t^2+4t+1"
  bool operator==(const PoincarePolynomial&) const = default;

private:
  void normalize();
  std::vector<long long> coeffs_;  // low degree first, no trailing zeros
};

/// Poincare polynomial of the union of the lower ideals of ws: each
/// permutation in the union contributes t^length once.
PoincarePolynomial union_poincare(const std::vector<Permutation>& ws);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

}  // namespace spt
