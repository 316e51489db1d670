#include "spt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "spt/rewrite.hpp"
#include "spt/schubert_points.hpp"
#include "spt/tableau.hpp"

namespace spt {

bool in_valid_family(const Partition& shape) {
  return shape.num_rows() <= 3 || shape.num_cols() <= 2;
}

namespace {

PoincarePolynomial closure_poincare(const std::vector<std::vector<Permutation>>& levels) {
  PoincarePolynomial poly;
  for (int d = 0; d < static_cast<int>(levels.size()); ++d)
    if (!levels[d].empty()) poly.add_term(d, static_cast<long long>(levels[d].size()));
  return poly;
}

std::unordered_set<EllVector, VectorHash> ell_set_of(const Partition& shape) {
  std::unordered_set<EllVector, VectorHash> set;
  for (EllVector& ell : ell_vector_set(shape)) set.insert(std::move(ell));
  return set;
}

}  // namespace

VerificationReport check_theorem1(const Partition& shape) {
  if (!in_valid_family(shape))
    throw std::invalid_argument("shape " + shape.to_string() +
                                " has more than three rows and more than two columns; "
                                "the equality is only claimed inside that family");
  VerificationReport report{shape, "theorem1", false, {}, {}};

  PoincarePolynomial springer = springer_poincare(shape);
  std::vector<Permutation> points, standard;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) {
    Permutation point = schubert_point(t);
    if (t.is_standard()) standard.push_back(point);
    points.push_back(std::move(point));
  });

  auto closure_all = bruhat_lower_closure(points);
  auto closure_standard = bruhat_lower_closure(standard);
  PoincarePolynomial all_poly = closure_poincare(closure_all);
  PoincarePolynomial standard_poly = closure_poincare(closure_standard);

  report.polynomials = PolynomialTriple{springer, all_poly, standard_poly};
  report.holds = springer == all_poly && all_poly == standard_poly;

  if (!report.holds) {
    // witnesses: closure elements that are not points, and elements the
    // standard closure misses
    std::unordered_set<std::vector<int>, VectorHash> point_set, standard_set, reported;
    for (const auto& w : points) point_set.insert(w.one_line());
    for (const auto& level : closure_standard)
      for (const auto& w : level) standard_set.insert(w.one_line());
    for (const auto& level : closure_all)
      for (const auto& w : level)
        if ((!point_set.count(w.one_line()) || !standard_set.count(w.one_line())) &&
            reported.insert(w.one_line()).second)
          report.witnesses.push_back(
              {w, std::nullopt, canonical_factorization(w).string_lengths()});
  }
  return report;
}

VerificationReport check_closure(const Partition& shape) {
  VerificationReport report{shape, "closure", false, {}, {}};
  auto ells = ell_set_of(shape);
  std::vector<Permutation> points;
  points.reserve(ells.size());
  for (const EllVector& ell : ells) points.push_back(schubert_point_from_ell(ell, shape.size()));
  for (const auto& level : bruhat_lower_closure(points))
    for (const Permutation& w : level) {
      EllVector ell = canonical_factorization(w).string_lengths();
      if (!ells.count(ell)) report.witnesses.push_back({w, std::nullopt, std::move(ell)});
    }
  report.holds = report.witnesses.empty();
  return report;
}

VerificationReport check_deletion_closure(const Partition& shape) {
  VerificationReport report{shape, "deletion", false, {}, {}};
  const int n = shape.size();
  auto ells = ell_set_of(shape);
  std::vector<EllVector> sorted(ells.begin(), ells.end());
  std::sort(sorted.begin(), sorted.end());
  for (const EllVector& ell : sorted) {
    MonotoneFactorization point(n, ell);
    for (int j = 1; j <= n - 1; ++j)
      for (int pos = 1; pos <= point.string_length(j); ++pos) {
        MonotoneFactorization result = delete_and_normalize(point, j, pos);
        if (!ells.count(result.string_lengths()))
          report.witnesses.push_back({result.to_permutation(),
                                      DeletionSite{point.to_permutation(), j, pos},
                                      result.string_lengths()});
      }
  }
  report.holds = report.witnesses.empty();
  return report;
}

VerificationReport check_maximality(const Partition& shape) {
  VerificationReport report{shape, "maximality", false, {}, {}};
  std::vector<Permutation> standard;
  std::vector<Witness>& witnesses = report.witnesses;
  for_each_row_strict(shape, [&](const RowStrictTableau& t) {
    Permutation point = schubert_point(t);
    Permutation standard_point = schubert_point(standardize(t));
    if (!bruhat_leq(point, standard_point))
      witnesses.push_back({point, std::nullopt, ell_vector(t)});
    if (t.is_standard()) standard.push_back(std::move(point));
  });
  // no point may lie strictly above a standard point
  std::vector<Permutation> points = SchubertPointIndex(shape).points();
  for (const Permutation& s : standard)
    for (const Permutation& v : points)
      if (!(v == s) && bruhat_leq(s, v))
        witnesses.push_back({v, std::nullopt, canonical_factorization(v).string_lengths()});
  report.holds = witnesses.empty();
  return report;
}

VerificationReport check_dominance(const Partition& lambda, const Partition& mu) {
  if (!dominance_leq(mu, lambda))
    throw std::invalid_argument("dominance check requires lambda >= mu in dominance order");
  VerificationReport report{lambda, "dominance", false, {}, {}};
  auto mu_ells = ell_set_of(mu);
  std::vector<EllVector> lambda_ells = ell_vector_set(lambda);
  std::sort(lambda_ells.begin(), lambda_ells.end());
  for (const EllVector& ell : lambda_ells)
    if (!mu_ells.count(ell))
      report.witnesses.push_back(
          {schubert_point_from_ell(ell, lambda.size()), std::nullopt, ell});
  report.holds = report.witnesses.empty();
  return report;
}

ScanFamily parse_scan_family(const std::string& name) {
  if (name == "three-row") return ScanFamily::three_row;
  if (name == "two-column") return ScanFamily::two_column;
  if (name == "all") return ScanFamily::all;
  if (name == "invalid-only") return ScanFamily::invalid_only;
  throw std::invalid_argument("unknown scan family '" + name + "'");
}

namespace {

bool in_family(const Partition& shape, ScanFamily family) {
  switch (family) {
    case ScanFamily::three_row: return shape.num_rows() <= 3;
    case ScanFamily::two_column: return shape.num_cols() <= 2;
    case ScanFamily::all: return in_valid_family(shape);
    case ScanFamily::invalid_only: return !in_valid_family(shape);
  }
  return false;
}

}  // namespace

std::vector<VerificationReport> scan(ScanFamily family, int max_n, int jobs) {
  if (max_n < 1) throw std::invalid_argument("scan requires max_n >= 1");
  std::vector<Partition> shapes;
  for (int n = 1; n <= max_n; ++n)
    for (Partition& shape : partitions_of(n))
      if (in_family(shape, family)) shapes.push_back(std::move(shape));

  std::vector<std::function<VerificationReport()>> tasks;
  for (const Partition& shape : shapes) {
    if (in_valid_family(shape))
      tasks.push_back([shape] { return check_theorem1(shape); });
    tasks.push_back([shape] { return check_closure(shape); });
  }

  std::vector<std::optional<VerificationReport>> slots(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        slots[i] = tasks[i]();
      }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  std::vector<VerificationReport> reports;
  reports.reserve(slots.size());
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

namespace {

nlohmann::ordered_json witness_to_json(const Witness& witness) {
  nlohmann::ordered_json j;
  j["permutation"] = witness.permutation.one_line();
  if (witness.site) {
    nlohmann::ordered_json site;
    site["point"] = witness.site->point.one_line();
    site["string"] = witness.site->string_index;
    site["pos"] = witness.site->pos;
    j["site"] = site;
  } else {
    j["site"] = nullptr;
  }
  j["missing_ell"] = witness.missing_ell;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["shape"] = report.shape.parts();
  j["claim"] = report.claim;
  j["verdict"] = report.holds ? "holds" : "fails";
  if (report.polynomials) {
    nlohmann::ordered_json polys;
    polys["springer"] = report.polynomials->springer.coefficients();
    polys["schubert_all"] = report.polynomials->schubert_all.coefficients();
    polys["schubert_standard"] = report.polynomials->schubert_standard.coefficients();
    j["polynomials"] = polys;
  } else {
    j["polynomials"] = nullptr;
  }
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(witness_to_json(w));
  j["witnesses"] = witnesses;
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "shape " << report.shape.to_string() << "  claim " << report.claim << "  "
      << (report.holds ? "holds" : "FAILS");
  if (report.polynomials) {
    out << "\n  springer          " << report.polynomials->springer.to_string()
        << "\n  schubert all      " << report.polynomials->schubert_all.to_string()
        << "\n  schubert standard " << report.polynomials->schubert_standard.to_string();
  }
  if (!report.witnesses.empty()) {
    out << "\n  witnesses " << report.witnesses.size() << ", first "
        << report.witnesses.front().permutation.to_string();
    if (report.witnesses.front().site)
      out << " from point " << report.witnesses.front().site->point.to_string() << " string "
          << report.witnesses.front().site->string_index << " pos "
          << report.witnesses.front().site->pos;
  }
  return out.str();
}

}  // namespace spt
