#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spt/partition.hpp"
#include "spt/springer.hpp"
#include "spt/weyl.hpp"

namespace spt {

struct DeletionSite {
  Permutation point;
  int string_index = 0;
  int pos = 0;
};

struct Witness {
  Permutation permutation;          // the element with no preimage tableau
  std::optional<DeletionSite> site;  // set by the deletion check
  EllVector missing_ell;             // its ell-vector
};

struct PolynomialTriple {
  PoincarePolynomial springer;
  PoincarePolynomial schubert_all;
  PoincarePolynomial schubert_standard;
};

struct VerificationReport {
  Partition shape;
  std::string claim;
  bool holds = false;
  std::vector<Witness> witnesses;
  std::optional<PolynomialTriple> polynomials;
};

/// Shapes covered by the equality theorem: at most three rows or at most
/// two columns.
bool in_valid_family(const Partition& shape);

/// Compares the Springer-side polynomial with the Poincare polynomials of
/// the union of Schubert varieties over all points and over standard
/// points only. Throws outside the valid family.
VerificationReport check_theorem1(const Partition& shape);

/// Every element of every lower ideal of every Schubert point must again
/// be a Schubert point of the shape.
VerificationReport check_closure(const Partition& shape);

/// Every single-letter deletion from every Schubert point, renormalized,
/// must again be a Schubert point of the shape.
VerificationReport check_deletion_closure(const Partition& shape);

/// Every row-strict point lies below the point of its standardization,
/// and standard points are maximal within the point set.
VerificationReport check_maximality(const Partition& shape);

/// For lambda >= mu in dominance order, points of lambda must all be
/// points of mu. Throws if the shapes are not comparable that way.
VerificationReport check_dominance(const Partition& lambda, const Partition& mu);

enum class ScanFamily { three_row, two_column, all, invalid_only };

ScanFamily parse_scan_family(const std::string& name);

/// Runs the applicable checks on every partition of every n <= max_n in
/// the family, partitions in reverse lexicographic order per n, n
/// increasing. Valid shapes get check_theorem1 and check_closure; shapes
/// outside the theorem's family get check_closure only.
std::vector<VerificationReport> scan(ScanFamily family, int max_n, int jobs = 1);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace spt
