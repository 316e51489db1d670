// Command line front end: enumeration, Schubert points, Poincare
// polynomials, deletions with traces, verification, and family scans.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spt/rewrite.hpp"
#include "spt/schubert_points.hpp"
#include "spt/springer.hpp"
#include "spt/verify.hpp"

using namespace spt;
using nlohmann::ordered_json;

namespace {

ordered_json tableau_json(const RowStrictTableau& t) {
  ordered_json j;
  j["shape"] = t.shape().parts();
  j["rows"] = t.rows();
  return j;
}

RowStrictTableau tableau_for_shape(const std::string& shape_text,
                                   const std::string& tableau_text) {
  Partition shape = parse_partition(shape_text);
  RowStrictTableau t = parse_tableau(tableau_text);
  if (!(t.shape() == shape))
    throw std::invalid_argument("tableau has shape " + t.shape().to_string() +
                                ", expected " + shape.to_string());
  return t;
}

int run_enumerate(const std::string& shape_text, const std::string& kind,
                  const std::string& format) {
  Partition shape = parse_partition(shape_text);
  std::vector<RowStrictTableau> ts =
      kind == "standard" ? enumerate_standard(shape) : enumerate_row_strict(shape);
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const auto& t : ts) out.push_back(tableau_json(t));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& t : ts) std::cout << t.to_string() << "\n";
    std::cout << ts.size() << " tableaux\n";
  }
  return 0;
}

int run_schubert_point(const std::string& shape_text, const std::string& tableau_text,
                       bool with_monomial) {
  RowStrictTableau t = tableau_for_shape(shape_text, tableau_text);
  EllVector ell = ell_vector(t);
  MonotoneFactorization f(t.size(), ell);
  std::cout << "tableau:  " << t.to_string() << "\n";
  std::cout << "ell:      " << Composition(ell).to_string() << "\n";
  std::cout << "point:    " << f.to_string() << "\n";
  std::cout << "word:     " << word_to_string(f.word()) << "\n";
  std::cout << "one-line: " << f.to_permutation().to_string() << "\n";
  if (with_monomial) std::cout << "monomial: " << monomial(t).to_string() << "\n";
  return 0;
}

int run_poincare(const std::string& shape_text, const std::string& side,
                 const std::string& format) {
  Partition shape = parse_partition(shape_text);
  ordered_json j;
  j["shape"] = shape.parts();
  PoincarePolynomial springer, schubert;
  if (side != "schubert") springer = springer_poincare(shape);
  if (side != "springer") schubert = union_poincare(SchubertPointIndex(shape).points());
  if (format == "json") {
    if (side != "schubert") j["springer"] = springer.coefficients();
    if (side != "springer") j["schubert"] = schubert.coefficients();
    std::cout << j.dump(2) << "\n";
  } else {
    if (side != "schubert") std::cout << "springer: " << springer.to_string() << "\n";
    if (side != "springer") std::cout << "schubert: " << schubert.to_string() << "\n";
    if (side == "both")
      std::cout << (springer == schubert ? "equal" : "DIFFERENT") << "\n";
  }
  return 0;
}

ordered_json trace_json(const std::vector<TwoColumnTraceStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const auto& step : steps) {
    ordered_json j;
    j["i"] = step.level;
    j["shape"] = step.shape.parts();
    j["shaded_rows"] = step.shaded_rows;
    j["c"] = step.c;
    j["c_prime"] = step.c_prime;
    j["case"] = step.case_id;
    arr.push_back(j);
  }
  return arr;
}

int run_delete(const std::string& shape_text, const std::string& tableau_text, int string_index,
               int pos, bool trace, const std::string& format) {
  RowStrictTableau t = tableau_for_shape(shape_text, tableau_text);
  const int n = t.size();
  MonotoneFactorization point(n, ell_vector(t));
  if (trace && t.shape().num_cols() > 2)
    throw std::invalid_argument("--trace requires a shape with at most two columns");
  DeletionResult result = delete_with_steps(point, string_index, pos);
  int deleted_letter = point.string_start(string_index) + pos - 1;

  if (format == "json") {
    ordered_json j;
    j["shape"] = t.shape().parts();
    j["tableau"] = tableau_json(t);
    j["point"] = point.string_lengths();
    j["deleted"] = {{"string", string_index}, {"pos", pos}, {"letter", deleted_letter}};
    j["result"] = result.factorization.string_lengths();
    j["result_one_line"] = result.factorization.to_permutation().one_line();
    auto preimage = is_schubert_point(result.factorization.to_permutation(), t.shape());
    j["result_tableau"] = preimage ? tableau_json(*preimage) : ordered_json(nullptr);
    if (trace) j["trace"] = trace_json(two_column_trace(t, string_index, pos));
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "point:     " << point.to_string() << "\n";
  std::cout << "deleted:   s" << deleted_letter << " (string " << string_index << ", pos " << pos
            << ")\n";
  std::cout << "result:    " << result.factorization.to_string() << "\n";
  std::cout << "one-line:  " << result.factorization.to_permutation().to_string() << "\n";
  auto preimage = is_schubert_point(result.factorization.to_permutation(), t.shape());
  if (preimage)
    std::cout << "tableau:   " << preimage->to_string() << "\n";
  else
    std::cout << "tableau:   none (not a point of this shape)\n";
  if (trace) {
    auto steps = two_column_trace(t, string_index, pos);
    std::cout << "\n";
    for (const auto& step : steps)
      std::cout << "i=" << step.level << "  case " << step.case_id << "  c=" << step.c
                << "  c'=" << step.c_prime << "\n";
    std::cout << "\n" << render_trace(t, steps);
  }
  return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  bool all_hold = true;
  if (format == "json") {
    std::cout << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "\n" << report_to_json(reports[i]);
      all_hold = all_hold && reports[i].holds;
    }
    std::cout << "\n]\n";
  } else {
    for (const auto& r : reports) {
      std::cout << report_to_text(r) << "\n";
      all_hold = all_hold && r.holds;
    }
  }
  return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert points of Springer fibers: construction and verification"};
  app.require_subcommand(1);

  std::string shape_text, tableau_text, versus_text;
  std::string kind = "row-strict", format = "text", side = "both", claim, family = "all";
  int string_index = 0, pos = 0, max_n = 6, jobs = 1;
  bool with_monomial = false, with_trace = false;

  auto* enumerate = app.add_subcommand("enumerate", "List tableaux of a shape");
  enumerate->add_option("--shape", shape_text, "partition, e.g. 2,2,1")->required();
  enumerate->add_option("--kind", kind, "row-strict or standard")
      ->check(CLI::IsMember({"row-strict", "standard"}));
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* point = app.add_subcommand("schubert-point", "Schubert point of one tableau");
  point->add_option("--shape", shape_text)->required();
  point->add_option("--tableau", tableau_text, "e.g. 1,2/3,4/5")->required();
  point->add_flag("--monomial", with_monomial, "also print the attached monomial");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials of a shape");
  poincare->add_option("--shape", shape_text)->required();
  poincare->add_option("--side", side)->check(CLI::IsMember({"springer", "schubert", "both"}));
  poincare->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* del = app.add_subcommand("delete", "Delete one letter from a point and renormalize");
  del->add_option("--shape", shape_text)->required();
  del->add_option("--tableau", tableau_text)->required();
  del->add_option("--string", string_index, "string index j of w_j")->required();
  del->add_option("--pos", pos, "letter position inside the string, from the left")->required();
  del->add_flag("--trace", with_trace, "record the shaded-box walk (two columns only)");
  del->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run one verification claim on a shape");
  verify->add_option("--shape", shape_text);
  verify->add_option("--claim", claim)
      ->check(CLI::IsMember({"theorem1", "closure", "deletion", "maximality"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* dominance = verify->add_subcommand("dominance", "Compare point sets along dominance");
  dominance->add_option("--shape", shape_text)->required();
  dominance->add_option("--versus", versus_text, "the dominated shape")->required();
  dominance->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* scan_cmd = app.add_subcommand("scan", "Verify whole families of shapes");
  scan_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"three-row", "two-column", "all", "invalid-only"}));
  scan_cmd->add_option("--max-n", max_n)->required();
  scan_cmd->add_option("--jobs", jobs, "parallel workers");
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate) return run_enumerate(shape_text, kind, format);
    if (*point) return run_schubert_point(shape_text, tableau_text, with_monomial);
    if (*poincare) return run_poincare(shape_text, side, format);
    if (*del) return run_delete(shape_text, tableau_text, string_index, pos, with_trace, format);
    if (*verify) {
      if (*dominance) {
        VerificationReport r =
            check_dominance(parse_partition(shape_text), parse_partition(versus_text));
        return emit_reports({r}, format);
      }
      if (claim.empty() || shape_text.empty()) {
        std::cerr << "verify needs --shape and --claim, or the dominance subcommand\n";
        return 2;
      }
      Partition shape = parse_partition(shape_text);
      VerificationReport r = claim == "theorem1"    ? check_theorem1(shape)
                             : claim == "closure"   ? check_closure(shape)
                             : claim == "deletion"  ? check_deletion_closure(shape)
                                                    : check_maximality(shape);
      return emit_reports({r}, format);
    }
    if (*scan_cmd)
      return emit_reports(scan(parse_scan_family(family), max_n, jobs), format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
