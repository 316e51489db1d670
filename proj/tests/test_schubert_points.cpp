#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spt/schubert_points.hpp"

using namespace spt;

namespace {

Permutation from_word(const Word& word, int n) { return word_to_permutation(word, n); }

}  // namespace

TEST_CASE("points of the standard tableaux of (2,2,1)") {
  const std::vector<std::pair<std::string, Word>> table = {
      {"1,2/3,4/5", {3, 4, 3, 2}}, {"1,2/3,5/4", {4, 2, 3, 2}}, {"1,3/2,4/5", {3, 4, 3, 1}},
      {"1,3/2,5/4", {4, 2, 3, 1}}, {"1,4/2,5/3", {4, 1, 2, 1}}};
  for (const auto& [text, word] : table) {
    RowStrictTableau t = parse_tableau(text);
    CHECK(schubert_point(t) == from_word(word, 5));
    CHECK(standard_shortcut(t) == from_word(word, 5));
  }
}

TEST_CASE("points of further row-strict fillings of (2,2,1)") {
  const std::vector<std::pair<std::string, Word>> table = {
      {"2,3/1,4/5", {3, 4, 3}}, {"1,3/4,5/2", {4, 3, 1}}, {"3,4/1,2/5", {3, 4, 2}},
      {"1,5/2,4/3", {1, 2, 1}}, {"2,4/1,3/5", {3, 4}},    {"2,5/3,4/1", {2}},
      {"3,5/1,4/2", {1}},       {"3,5/2,4/1", {}}};
  for (const auto& [text, word] : table)
    CHECK(schubert_point(parse_tableau(text)) == from_word(word, 5));
}

TEST_CASE("schubert point from an ell vector") {
  CHECK(schubert_point_from_ell({0, 1, 1, 2}, 5) == from_word({3, 4, 3, 2}, 5));
  CHECK(schubert_point_from_ell({0, 0, 0, 0}, 5) == Permutation::identity(5));
  CHECK(schubert_point_from_ell({1, 0, 2, 1}, 5) == from_word({4, 2, 3, 1}, 5));
  CHECK_THROWS_AS(schubert_point_from_ell({2, 0, 0, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(schubert_point_from_ell({0, 0}, 5), std::invalid_argument);
}

TEST_CASE("standard shortcut") {
  CHECK(standard_shortcut(parse_tableau("1,4/2,5/3")) == from_word({4, 1, 2, 1}, 5));
  CHECK(standard_shortcut(parse_tableau("1,2,3,4")) == Permutation::identity(4));
  CHECK_THROWS_AS(standard_shortcut(parse_tableau("2,3/1,4/5")), std::invalid_argument);
}

TEST_CASE("standard shortcut agrees with the general construction") {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& shape : partitions_of(n))
      for (const RowStrictTableau& t : enumerate_standard(shape))
        CHECK(standard_shortcut(t) == schubert_point(t));
}

TEST_CASE("monomials attached to tableaux") {
  CHECK(monomial(parse_tableau("1,2/3,4/5")).to_string() == "x5^2 x4 x3");
  CHECK(monomial(parse_tableau("1,3/2,5/4")).to_string() == "x5 x4^2 x2");
  CHECK(monomial(parse_tableau("3,5/2,4/1")).to_string() == "1");
  CHECK(monomial(parse_tableau("1,2/3,4/5")).exponents == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("the point set is injective on tableaux") {
  CHECK(schubert_point_set(Partition({2, 2, 1})).size() == 30);
  auto single = schubert_point_set(Partition({4}));
  REQUIRE(single.size() == 1);
  CHECK(single.begin()->first == Permutation::identity(4).one_line());

  auto full = schubert_point_set(Partition({1, 1, 1}));
  CHECK(full.size() == 6);

  for (int n = 1; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n))
      CHECK(schubert_point_set(shape).size() == std::size_t(oracles::multinomial(shape)));
}

TEST_CASE("point length equals the cell dimension") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n))
      for_each_row_strict(shape, [&](const RowStrictTableau& t) {
        CHECK(length(schubert_point(t)) ==
              static_cast<int>(dimension_pairs(t).size()));
      });
}

TEST_CASE("inverse lookup of points") {
  // deleting s_4 from the point of the (3,1,1,1) tableau leaves no point
  Permutation missing = from_word({5, 2, 3, 2, 1}, 6);
  CHECK_FALSE(is_schubert_point(missing, Partition({3, 1, 1, 1})).has_value());

  for (const Partition& shape : partitions_of(4))
    CHECK(is_schubert_point(Permutation::identity(4), shape).has_value());

  auto t = is_schubert_point(from_word({3, 4, 3, 2}, 5), Partition({2, 2, 1}));
  REQUIRE(t.has_value());
  CHECK(t->to_string() == "1,2/3,4/5");
}

TEST_CASE("pruned lookup agrees with the full index on every ell tuple") {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n)) {
      SchubertPointIndex index(shape);
      EllVector ell(n - 1, 0);
      auto sweep = [&](auto&& self, int q) -> void {
        if (q > n) {
          auto found = find_tableau_with_ell(shape, ell);
          const RowStrictTableau* indexed = index.find(ell);
          CHECK(found.has_value() == (indexed != nullptr));
          if (found && indexed) {
            CHECK(ell_vector(*found) == ell);
            CHECK(*found == *indexed);
          }
          return;
        }
        for (int v = 0; v <= q - 1; ++v) {
          ell[q - 2] = v;
          self(self, q + 1);
        }
      };
      sweep(sweep, 2);
    }
}

TEST_CASE("index lookups match the point set") {
  SchubertPointIndex index(Partition({2, 2, 1}));
  CHECK(index.size() == 30);
  CHECK(index.points().size() == 30);
  CHECK(index.standard_points().size() == 5);
  CHECK(index.find(EllVector{0, 1, 1, 2}) != nullptr);
  CHECK(index.find(EllVector{4, 0, 0, 0}) == nullptr);

  auto points = schubert_point_set(Partition({2, 2, 1}));
  for (const auto& [one_line, tableau] : points) {
    const RowStrictTableau* found = index.find(Permutation(one_line));
    REQUIRE(found != nullptr);
    CHECK(*found == tableau);
  }
}

TEST_CASE("row-strict points lie below their standardization") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n))
      for_each_row_strict(shape, [&](const RowStrictTableau& t) {
        CHECK(bruhat_leq(schubert_point(t), schubert_point(standardize(t))));
      });
}

TEST_CASE("point sets shrink along dominance order") {
  for (int n = 1; n <= 6; ++n) {
    auto shapes = partitions_of(n);
    std::map<Partition, std::set<EllVector>> sets;
    for (const Partition& shape : shapes) {
      std::set<EllVector> ells;
      for (EllVector& e : ell_vector_set(shape)) ells.insert(std::move(e));
      sets.emplace(shape, std::move(ells));
    }
    for (const Partition& lambda : shapes)
      for (const Partition& mu : shapes) {
        if (!dominance_leq(mu, lambda)) continue;
        for (const EllVector& e : sets.at(lambda)) CHECK(sets.at(mu).count(e));
      }
  }
}

TEST_CASE("shrinking any string of a point yields another point") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n)) {
      std::set<EllVector> ells;
      for (EllVector& e : ell_vector_set(shape)) ells.insert(std::move(e));
      for (const EllVector& ell : ells) {
        EllVector reduced(ell.size(), 0);
        auto recurse = [&](auto&& self, std::size_t i) -> void {
          if (i == ell.size()) {
            CHECK(ells.count(reduced));
            return;
          }
          for (int v = 0; v <= ell[i]; ++v) {
            reduced[i] = v;
            self(self, i + 1);
          }
        };
        recurse(recurse, 0);
      }
    }
}
