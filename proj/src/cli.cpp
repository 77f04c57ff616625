#include "chowbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "chowbound/bernoulli.hpp"
#include "chowbound/bounds.hpp"
#include "chowbound/bounds_io.hpp"
#include "chowbound/char_classes.hpp"
#include "chowbound/verify.hpp"

namespace chowbound::cli {

namespace {

using json = nlohmann::ordered_json;

struct NkTableRow {
  unsigned k;
  FactoredInt value;
  Rational b2k;
};

std::vector<NkTableRow> nk_table_rows(unsigned k_max) {
  std::vector<NkTableRow> rows;
  for (unsigned k = 1; k <= k_max; ++k) {
    NkCrossCheck rec = nk_cross_validated(k);
    if (!rec.agree)
      throw std::runtime_error(
          "n_k cross-validation mismatch at k = " + std::to_string(k) + ": formula " +
          rec.formula.value.str() + ", denominator " + rec.denominator.str() + ", gcd sample " +
          rec.gcd_sample.str());
    rows.push_back({k, rec.formula, bernoulli(2 * k)});
  }
  return rows;
}

int cmd_bernoulli(unsigned n, std::ostream& out) {
  out << bernoulli(n).to_string() << "\n";
  return 0;
}

int cmd_nk(std::optional<unsigned> k, std::optional<unsigned> table_max,
           const std::string& format, std::ostream& out) {
  if (table_max) {
    std::vector<NkTableRow> rows = nk_table_rows(*table_max);
    if (format == "csv") {
      out << "k,n_k,factorization,B_2k\n";
      for (const NkTableRow& r : rows)
        out << r.k << "," << r.value.value.str() << "," << r.value.to_string("*") << ","
            << r.b2k.to_string() << "\n";
    } else if (format == "json") {
      json j = json::array();
      for (const NkTableRow& r : rows) {
        json factors = json::object();
        for (const auto& [p, e] : r.value.factors) factors[p.str()] = e;
        j.push_back(json{{"k", r.k},
                         {"n_k", r.value.value.str()},
                         {"factors", std::move(factors)},
                         {"B_2k", r.b2k.to_string()}});
      }
      out << j.dump(2) << "\n";
    } else {
      out << "k\tn_k\tfactorization\tB_2k\n";
      for (const NkTableRow& r : rows)
        out << r.k << "\t" << r.value.value.str() << "\t" << r.value.to_string() << "\t"
            << r.b2k.to_string() << "\n";
    }
    return 0;
  }
  NkCrossCheck rec = nk_cross_validated(*k);
  if (!rec.agree)
    throw std::runtime_error("n_k cross-validation mismatch at k = " + std::to_string(*k));
  out << "n_" << *k << " = " << rec.formula.value.str() << " = " << rec.formula.to_string()
      << "\n";
  return 0;
}

int cmd_factor(const std::string& n_text, std::ostream& out) {
  FactoredInt f = factor(BigInt(n_text));
  out << f.to_string() << "\n";
  return 0;
}

int cmd_todd(unsigned degree, std::optional<unsigned> rank, const std::string& coeff,
             unsigned degree_cap, std::ostream& out) {
  if (degree > degree_cap)
    throw std::invalid_argument("todd: degree " + std::to_string(degree) +
                                " exceeds the cap " + std::to_string(degree_cap) +
                                " (raise it with --degree-cap)");
  unsigned r = rank.value_or(degree);
  if (!coeff.empty()) {
    GradedPoly mono_poly = GradedPoly::parse(coeff, degree);
    if (mono_poly.terms().size() != 1 ||
        !(mono_poly.terms().begin()->second == Rational(1)))
      throw std::invalid_argument("todd: --coeff expects a single monomial like c12^2");
    const Monomial& m = mono_poly.terms().begin()->first;
    if (m.weight() != degree)
      throw std::invalid_argument("todd: monomial weight " + std::to_string(m.weight()) +
                                  " does not match --degree " + std::to_string(degree));
    Rational c = todd_coefficient(degree, m, r);
    out << "coefficient of " << m.to_string() << " in the weight-" << degree
        << " Todd polynomial (rank " << r << "): " << c.to_string() << "\n";
    out << "verdict: " << (c.is_zero() ? "zero" : "nonzero") << "\n";
    return 0;
  }
  out << todd_class({r, degree}).to_string() << "\n";
  return 0;
}

int cmd_derham(unsigned g, unsigned degree, const std::string& basis, std::ostream& out) {
  if (basis == "newton") {
    for (unsigned i = 1; 2 * i <= std::min(degree, 2 * g); ++i)
      out << "c" << 2 * i << "(H) = " << pretty_string(derham_chern_in_newton(i, g), 'N')
          << "\n";
    return 0;
  }
  out << derham_total_chern(g, degree).to_string() << "\n";
  return 0;
}

int cmd_ledger(unsigned g, std::optional<unsigned> level, std::optional<unsigned> d,
               const std::string& char_p, const std::string& format, bool published_comparison,
               std::ostream& out) {
  std::optional<BigInt> p;
  if (!char_p.empty()) p = BigInt(char_p);
  Context ctx = Context::make(g, d, level, p);
  Ledger ledger = build_ledger(ctx);
  if (format == "json")
    out << ledger_to_json(ledger);
  else
    out << ledger_to_text(ledger, published_comparison);
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<unsigned> max_degree, std::ostream& out) {
  std::vector<CheckResult> results = run_verify_suite(suite, max_degree);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all checks passed" : "some checks FAILED") << " (" << results.size()
      << " checks)\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "exact characteristic-class calculator: Todd classes, Chern characters, "
      "Bernoulli/n_k tables, and torsion-order bound ledgers for the de Rham "
      "bundle of an abelian scheme"};
  app.require_subcommand(1);

  // bernoulli
  unsigned bern_n = 0;
  CLI::App* bernoulli_cmd = app.add_subcommand("bernoulli", "print the exact Bernoulli number B_n");
  bernoulli_cmd->add_option("n", bern_n, "index n")->required();

  // nk
  std::optional<unsigned> nk_k;
  std::optional<unsigned> nk_table;
  std::string nk_format = "text";
  CLI::App* nk_cmd = app.add_subcommand(
      "nk", "the integer n_k (gcd of p^2k - 1 over primes p > 2k+1), cross-validated");
  nk_cmd->add_option("k", nk_k, "single index k");
  nk_cmd->add_option("--table", nk_table, "emit the table for k = 1..k_max");
  nk_cmd->add_option("--format", nk_format, "text | json | csv (tables only)")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // factor
  std::string factor_n;
  CLI::App* factor_cmd = app.add_subcommand("factor", "certified prime factorization");
  factor_cmd->add_option("n", factor_n, "positive integer")->required();

  // todd
  unsigned todd_degree = 0;
  std::optional<unsigned> todd_rank;
  std::string todd_coeff;
  unsigned todd_cap = 30;
  CLI::App* todd_cmd =
      app.add_subcommand("todd", "Todd class of a generic bundle, or one exact coefficient");
  todd_cmd->add_option("--degree", todd_degree, "truncation weight N")->required();
  todd_cmd->add_option("--rank", todd_rank, "bundle rank (default: N)");
  todd_cmd->add_option("--coeff", todd_coeff, "extract one monomial coefficient, e.g. c12^2");
  todd_cmd->add_option("--degree-cap", todd_cap, "safety cap on --degree (default 30)");

  // derham
  unsigned derham_g = 0;
  unsigned derham_degree = 0;
  std::string derham_basis = "lambda";
  CLI::App* derham_cmd = app.add_subcommand(
      "derham", "Chern classes of the de Rham bundle E + E^dual of a rank-g Hodge bundle");
  derham_cmd->add_option("--g", derham_g, "Hodge bundle rank g")->required();
  derham_cmd->add_option("--degree", derham_degree, "truncation weight N")->required();
  derham_cmd->add_option("--basis", derham_basis, "lambda | newton")
      ->check(CLI::IsMember({"lambda", "newton"}));

  // ledger
  unsigned ledger_g = 0;
  std::optional<unsigned> ledger_level;
  std::optional<unsigned> ledger_d;
  std::string ledger_char;
  std::string ledger_format = "text";
  bool ledger_published = false;
  CLI::App* ledger_cmd = app.add_subcommand(
      "ledger", "torsion-order bound ledger for the classes c_2i of the de Rham bundle");
  ledger_cmd->add_option("--g", ledger_g, "relative dimension g")->required();
  CLI::Option* level_opt =
      ledger_cmd->add_option("--level", ledger_level, "level structure n (implies d = g(g+1)/2)");
  ledger_cmd->add_option("--d", ledger_d, "base dimension d")->excludes(level_opt);
  ledger_cmd->add_option("--char", ledger_char, "positive characteristic p (a prime)");
  ledger_cmd->add_option("--format", ledger_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  ledger_cmd->add_flag("--paper-comparison", ledger_published,
                       "append the published worked example's pairings next to the strict values");

  // verify
  std::string verify_suite = "all";
  std::optional<unsigned> verify_max;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the built-in verification suites");
  verify_cmd->add_option("--suite", verify_suite,
                         "all | duality | odd-vanishing | hirzebruch | nk | newton | oracle")
      ->check(CLI::IsMember(
          {"all", "duality", "odd-vanishing", "hirzebruch", "nk", "newton", "oracle"}));
  verify_cmd->add_option("--max-degree", verify_max, "override the suite's size parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bernoulli_cmd->parsed()) return cmd_bernoulli(bern_n, out);
    if (nk_cmd->parsed()) {
      if (!nk_k && !nk_table) throw std::invalid_argument("nk: give an index k or --table k_max");
      if (nk_k && nk_table) throw std::invalid_argument("nk: k and --table are exclusive");
      return cmd_nk(nk_k, nk_table, nk_format, out);
    }
    if (factor_cmd->parsed()) return cmd_factor(factor_n, out);
    if (todd_cmd->parsed()) return cmd_todd(todd_degree, todd_rank, todd_coeff, todd_cap, out);
    if (derham_cmd->parsed()) return cmd_derham(derham_g, derham_degree, derham_basis, out);
    if (ledger_cmd->parsed())
      return cmd_ledger(ledger_g, ledger_level, ledger_d, ledger_char, ledger_format,
                        ledger_published, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_max, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chowbound::cli
