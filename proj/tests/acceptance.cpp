// Acceptance suite: runs every criterion exactly, zero tolerance, and
// prints one pass/fail line per criterion with the elapsed time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spt/rewrite.hpp"
#include "spt/schubert_points.hpp"
#include "spt/springer.hpp"
#include "spt/verify.hpp"

using namespace spt;

namespace {

int failures = 0;

struct Checker {
  std::ostringstream log;
  bool ok = true;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Checker&)>& body) {
  Checker check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.ok = false;
    check.log << "    exception: " << e.what() << "\n";
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= budget_seconds) {
    check.ok = false;
    check.log << "    over budget: " << elapsed << " s >= " << budget_seconds << " s\n";
  }
  std::printf("%s criterion %d (%7.3f s): %s\n", check.ok ? "PASS" : "FAIL", id, elapsed,
              title.c_str());
  if (!check.ok) {
    std::fputs(check.log.str().c_str(), stdout);
    ++failures;
  }
}

long long multinomial(const Partition& shape) {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long long m = factorial(shape.size());
  for (int p : shape.parts()) m /= factorial(p);
  return m;
}

Permutation from_word(const Word& w, int n) { return word_to_permutation(w, n); }

}  // namespace

int main() {
  criterion(1, "golden Schubert points of (2,2,1)", 1.0, [](Checker& check) {
    const std::vector<std::pair<std::string, Word>> standard = {
        {"1,2/3,4/5", {3, 4, 3, 2}}, {"1,2/3,5/4", {4, 2, 3, 2}}, {"1,3/2,4/5", {3, 4, 3, 1}},
        {"1,3/2,5/4", {4, 2, 3, 1}}, {"1,4/2,5/3", {4, 1, 2, 1}}};
    auto tableaux = enumerate_standard(Partition({2, 2, 1}));
    check.require(tableaux.size() == 5, "five standard tableaux of (2,2,1)");
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
      check.require(tableaux[i].to_string() == standard[i].first, "tableau order");
      check.require(schubert_point(tableaux[i]) == from_word(standard[i].second, 5),
                    "standard point " + standard[i].first);
      check.require(standard_shortcut(tableaux[i]) == from_word(standard[i].second, 5),
                    "shortcut " + standard[i].first);
    }
    const std::vector<std::pair<std::string, Word>> row_strict = {
        {"2,3/1,4/5", {3, 4, 3}}, {"1,3/4,5/2", {4, 3, 1}}, {"3,4/1,2/5", {3, 4, 2}},
        {"1,5/2,4/3", {1, 2, 1}}, {"2,4/1,3/5", {3, 4}},    {"2,5/3,4/1", {2}},
        {"3,5/1,4/2", {1}},       {"3,5/2,4/1", {}}};
    for (const auto& [text, word] : row_strict)
      check.require(schubert_point(parse_tableau(text)) == from_word(word, 5),
                    "row-strict point " + text);
  });

  criterion(2, "golden lower ideals in S_5", 1.0, [](Checker& check) {
    auto as_set = [](const std::vector<Permutation>& ps) {
      std::set<std::vector<int>> s;
      for (const auto& p : ps) s.insert(p.one_line());
      return s;
    };
    const std::vector<Word> list16 = {{4, 2, 3, 1}, {4, 2, 3}, {4, 2, 1}, {4, 3, 1},
                                      {2, 3, 1},    {4, 2},    {4, 3},    {2, 3},
                                      {4, 1},       {3, 1},    {2, 1},    {4},
                                      {3},          {2},       {1},       {}};
    std::set<std::vector<int>> expect16;
    for (const Word& w : list16) expect16.insert(from_word(w, 5).one_line());
    auto got16 = lower_ideal(from_word({4, 2, 3, 1}, 5));
    check.require(got16.size() == 16, "|ideal(s4 s2 s3 s1)| = 16");
    check.require(as_set(got16) == expect16, "ideal(s4 s2 s3 s1) contents");

    const std::vector<Word> list12 = {{3, 4, 3, 2}, {3, 4, 3}, {3, 4, 2}, {4, 3, 2},
                                      {3, 4},       {4, 3},    {4, 2},    {3, 2},
                                      {4},          {3},       {2},       {}};
    std::set<std::vector<int>> expect12;
    for (const Word& w : list12) expect12.insert(from_word(w, 5).one_line());
    auto got12 = lower_ideal(from_word({3, 4, 3, 2}, 5));
    check.require(got12.size() == 12, "|ideal(s3 s4 s3 s2)| = 12");
    check.require(as_set(got12) == expect12, "ideal(s3 s4 s3 s2) contents");
  });

  criterion(3, "golden Poincare polynomial of (2,2,1)", 1.0, [](Checker& check) {
    PoincarePolynomial expected({1, 4, 9, 11, 5});
    check.require(springer_poincare(Partition({2, 2, 1})) == expected, "Springer side");
    std::vector<Permutation> points = {
        from_word({3, 4, 3, 2}, 5), from_word({4, 2, 3, 2}, 5), from_word({3, 4, 3, 1}, 5),
        from_word({4, 2, 3, 1}, 5), from_word({4, 1, 2, 1}, 5)};
    check.require(union_poincare(points) == expected, "Schubert side");
    check.require(expected.to_string() == "5t^4+11t^3+9t^2+4t+1", "printed form");
  });

  criterion(4, "base filling of (3,2)", 1.0, [](Checker& check) {
    check.require(BaseFilling(Partition({3, 2})).labels() ==
                      std::vector<std::vector<int>>{{2, 4, 5}, {1, 3}},
                  "rows [2,4,5]/[1,3]");
  });

  criterion(5, "counterexample outside the family: (3,1,1,1)", 1.0, [](Checker& check) {
    RowStrictTableau t = parse_tableau("1,3,5/2/4/6");
    MonotoneFactorization point(6, ell_vector(t));
    check.require(point.word() == Word{3, 4, 5, 2, 3, 1}, "point word s3 s4 s5 s2 s3 s1");

    MonotoneFactorization after = delete_and_normalize(point, 5, 2);
    Permutation expected = from_word({5, 2, 3, 2, 1}, 6);
    check.require(after.to_permutation() == expected, "deletion gives s5 s2 s3 s2 s1");
    check.require(!is_schubert_point(expected, Partition({3, 1, 1, 1})).has_value(),
                  "no preimage tableau");

    VerificationReport closure = check_closure(Partition({3, 1, 1, 1}));
    check.require(!closure.holds, "closure fails");
    bool witnessed = false;
    for (const Witness& w : closure.witnesses)
      if (w.permutation == expected) witnessed = true;
    check.require(witnessed, "failure witness contains the permutation");
  });

  criterion(6, "worked rewrite trace for (2,2,2,2,1,1,1)", 1.0, [](Checker& check) {
    RowStrictTableau t = parse_tableau("1,2/3,5/4,10/6,8/7/11/9");
    MonotoneFactorization point(11, ell_vector(t));
    DeletionResult result = delete_with_steps(point, 10, 4);

    check.require(result.factorization.string_length(10) == 1, "w'_10 = s10");
    const int levels[] = {10, 9, 8, 7, 6, 5};
    const int cases[] = {3, 4, 3, 4, 4, 2};
    const int before[] = {2, 5, 2, 4, 3, 1};
    const int after[] = {1, 5, 1, 4, 3, 2};
    check.require(result.steps.size() == 6, "six propagation steps");
    if (result.steps.size() == 6) {
      for (int s = 0; s < 6; ++s) {
        check.require(result.steps[s].level == levels[s], "step level");
        check.require(result.steps[s].case_id == cases[s], "step case");
        check.require(result.steps[s].string_length_before == before[s], "string before");
        check.require(result.steps[s].string_length_after == after[s], "string after");
      }
      check.require(result.steps[0].star_after == StarString{6, 7}, "star (6,7) at i=10");
      check.require(result.steps[5].case_id == 2 && result.steps[5].string_length_after == 2,
                    "glue at i=5 producing s3 s4");
    }
    check.require(result.factorization.string_lengths() ==
                      std::vector<int>{0, 1, 2, 2, 3, 4, 1, 5, 1, 1},
                  "final strings match");
    check.require(result.factorization.to_string() ==
                      "(s10)(s9)(s4 s5 s6 s7 s8)(s7)(s3 s4 s5 s6)(s3 s4 s5)(s3 s4)(s2 s3)(s2)",
                  "final factorization printout");

    auto steps = two_column_trace(t, 10, 4);
    check.require(steps.size() == 6, "trace length");
    for (std::size_t s = 0; s < steps.size(); ++s)
      check.require(steps[s].case_id == cases[s] && steps[s].level == levels[s], "trace cases");
  });

  criterion(7, "theorem equality for every valid shape up to n = 9", 300.0, [](Checker& check) {
    for (int n = 1; n <= 9; ++n)
      for (const Partition& shape : partitions_of(n)) {
        if (!in_valid_family(shape)) continue;
        VerificationReport r = check_theorem1(shape);
        check.require(r.holds, "theorem1 holds for " + shape.to_string());
      }
  });

  criterion(8, "closure both ways for every valid shape up to n = 7", 120.0, [](Checker& check) {
    for (int n = 1; n <= 7; ++n)
      for (const Partition& shape : partitions_of(n)) {
        if (!in_valid_family(shape)) continue;
        VerificationReport ideal = check_closure(shape);
        VerificationReport deletion = check_deletion_closure(shape);
        check.require(ideal.holds, "ideal closure for " + shape.to_string());
        check.require(deletion.holds, "deletion closure for " + shape.to_string());
        check.require(ideal.holds == deletion.holds, "closure routes agree");
      }
  });

  criterion(9, "property suites", 180.0, [](Checker& check) {
    // (a) ell-vector row counting vs dimension-pair tally, n <= 7
    for (int n = 1; n <= 7; ++n)
      for (const Partition& shape : partitions_of(n))
        for_each_row_strict(shape, [&](const RowStrictTableau& t) {
          EllVector ell = ell_vector(t);
          EllVector tally(std::max(n - 1, 0), 0);
          for (const DimensionPair& pair : dimension_pairs(t)) ++tally[pair.q - 2];
          check.require(ell == tally, "ell tally for " + t.to_string());
        });

    // (b) canonical factorization round-trips and is length-additive on S_6
    {
      std::vector<int> images = {1, 2, 3, 4, 5, 6};
      do {
        Permutation w(images);
        MonotoneFactorization f = canonical_factorization(w);
        check.require(f.to_permutation() == w, "round trip " + w.to_string());
        check.require(f.total_length() == length(w), "length additivity " + w.to_string());
      } while (std::next_permutation(images.begin(), images.end()));
    }

    // (c) commute_star against direct multiplication, 1000 random instances
    {
      std::mt19937 rng(20240542);
      for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + int(rng() % 8);
        int i = 2 + int(rng() % (n - 1));
        int hi = 1 + int(rng() % (i - 1));
        int lo = 1 + int(rng() % hi);
        int ell = int(rng() % i);
        CommuteOutcome o = commute_star({lo, hi}, i, ell);
        Word lhs, rhs;
        for (int s = lo; s <= hi; ++s) lhs.push_back(s);
        for (int s = i - ell; s <= i - 1; ++s) lhs.push_back(s);
        for (int s = i - o.new_length; s <= i - 1; ++s) rhs.push_back(s);
        if (o.star)
          for (int s = o.star->lo; s <= o.star->hi; ++s) rhs.push_back(s);
        check.require(word_to_permutation(lhs, n) == word_to_permutation(rhs, n),
                      "commute case " + std::to_string(o.case_id));
      }
    }

    // (d) springer_poincare at t = 1 counts row-strict tableaux, n <= 8
    for (int n = 1; n <= 8; ++n)
      for (const Partition& shape : partitions_of(n))
        check.require(springer_poincare(shape).evaluate_at_one() == multinomial(shape),
                      "betti sum for " + shape.to_string());

    // (e) maximality and dominance, exhaustive for n <= 7
    for (int n = 1; n <= 7; ++n) {
      auto shapes = partitions_of(n);
      for (const Partition& shape : shapes)
        check.require(check_maximality(shape).holds, "maximality for " + shape.to_string());
      for (const Partition& lambda : shapes)
        for (const Partition& mu : shapes) {
          if (!dominance_leq(mu, lambda)) continue;
          check.require(check_dominance(lambda, mu).holds,
                        "dominance " + lambda.to_string() + " >= " + mu.to_string());
        }
    }
  });

  if (failures == 0)
    std::printf("all %d criteria hold\n", 9);
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
