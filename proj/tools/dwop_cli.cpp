// Command-line front end: deterministic suite runs with JSON reports, and a
// single-instance check mode for debugging and regression fixtures.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwop/checks.hpp"
#include "dwop/kernels.hpp"
#include "dwop/matrix_io.hpp"
#include "dwop/runner.hpp"
#include "dwop/saito_tominaga.hpp"

namespace {

using dwop::Matrixcd;
using nlohmann::json;

json spectrum(const Matrixcd& H) {
  const auto eig = dwop::hermitian_eig<double>(H);
  json out = json::array();
  for (dwop::Index i = 0; i < eig.eigenvalues.size(); ++i)
    out.push_back(eig.eigenvalues(i));
  return out;
}

json to_json(const dwop::CheckReport<double>& rep) {
  json j = {{"variant", rep.variant},
            {"holds", rep.holds},
            {"gap_min_eig", rep.gap_min_eig},
            {"equality_residual", rep.equality_residual},
            {"equality_predicted", rep.equality_predicted},
            {"equality_attained", rep.equality_attained},
            {"scale", rep.scale},
            {"lhs_spectrum", spectrum(rep.lhs)},
            {"rhs_spectrum", spectrum(rep.rhs)}};
  if (rep.abstract_gap_min_eig)
    j["abstract_gap_min_eig"] = *rep.abstract_gap_min_eig;
  return j;
}

json to_json(const dwop::OrderVerdict& v) {
  return {{"holds", v.holds}, {"gap_min_eig", v.gap_min_eig}, {"scale", v.scale}};
}

struct CheckArgs {
  std::string path_a, path_b, suite;
  double p = 0, t = 1, r = 2, conj_p = 2;
  bool report_abstract_form = false;
};

json run_check(const CheckArgs& args, const dwop::TolerancePolicy& pol) {
  const Matrixcd A = dwop::read_matrix(args.path_a);
  const Matrixcd B = dwop::read_matrix(args.path_b);
  const std::string& s = args.suite;
  if (s == "gpl") {
    const double res = dwop::gpl_residual(A, B, args.t);
    return {{"variant", "gpl"},
            {"residual", res},
            {"scale", dwop::pair_scale(A, B)}};
  }
  if (s == "lemma21") return to_json(dwop::lemma21_check(A, B, args.t, pol));
  if (s == "thm22") return to_json(dwop::thm22_check(A, B, args.p, args.t, pol));
  if (s == "thm23")
    return to_json(dwop::thm23_check(A, B, args.p, args.r, pol,
                                     args.report_abstract_form));
  if (s == "cor24") return to_json(dwop::cor24_check(A, B, args.r, pol));
  if (s == "prop25") {
    const auto rep = dwop::prop25_predicates(A, B, args.p, args.r, pol);
    return {{"variant", "prop25"},
            {"residuals", rep.residuals},
            {"all_hold", rep.all_hold},
            {"none_hold", rep.none_hold}};
  }
  if (s == "prop26") {
    const auto rep = dwop::prop26_consequences(A, B, args.p, args.r, pol);
    return {{"variant", "prop26"},
            {"identity_residual", rep.identity_residual},
            {"order", to_json(rep.order)},
            {"equality_residual", rep.equality_residual},
            {"scale", rep.scale}};
  }
  if (s == "thm31") return to_json(dwop::thm31_check(A, B, args.conj_p, pol));
  if (s == "thm32") return to_json(dwop::thm32_check(A, B, args.t, pol));
  if (s == "lemma33") {
    const auto rep = dwop::lemma33_consequences(A, B, args.t, pol);
    return {{"variant", "lemma33"},
            {"weighted_gap", to_json(rep.weighted_gap)},
            {"abs_order", to_json(rep.abs_order)},
            {"support_order", to_json(rep.support_order)},
            {"supports_equal", rep.supports_equal},
            {"identity_residual", rep.identity_residual},
            {"scale", rep.scale}};
  }
  if (s == "lemma35") {
    const auto rep = dwop::lemma35_equivalence(A, B, args.t, pol);
    return {{"variant", "lemma35"},
            {"forward_residual", rep.forward_residual},
            {"backward_residuals", rep.backward_residuals},
            {"forward_holds", rep.forward_holds},
            {"backward_holds", rep.backward_holds},
            {"equivalent", rep.equivalent},
            {"scale", rep.scale}};
  }
  if (s == "lemma36") {
    const double res = dwop::lemma36_check(A, B, args.t, pol);
    return {{"variant", "lemma36"},
            {"identity_residual", res},
            {"scale", dwop::pair_scale(A, B)}};
  }
  if (s == "thm34") {
    const auto cls = dwop::thm34_characterize(A, B, args.t, pol);
    const char* kind =
        cls.kind == dwop::STEqualityClass::Kind::structured ? "structured"
        : cls.kind == dwop::STEqualityClass::Kind::trivial_AB_equal
            ? "trivial_AB_equal"
            : "not_equal_case";
    return {{"variant", "thm34"},
            {"kind", kind},
            {"structural_residuals", cls.structural_residuals},
            {"scale", cls.scale}};
  }
  throw CLI::ValidationError("--suite", "unknown check suite '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Dunkl-Williams-type operator "
               "inequalities on dense complex matrices"};
  app.require_subcommand(1);

  dwop::TrialConfig config;
  auto* run = app.add_subcommand("run", "Run a verification suite");
  run->add_option("--suite", config.suite, "Suite name (or 'all')")
      ->required()
      ->check(CLI::IsMember(dwop::suite_names()));
  std::string dims = "1..8";
  run->add_option("--dims", dims, "Dimension range LO..HI");
  run->add_option("--trials", config.trials, "Trials per suite");
  run->add_option("--seed", config.seed, "Master seed");
  run->add_option("--tol-psd", config.tol.eps_psd, "PSD slack");
  run->add_option("--tol-eq", config.tol.eps_eq, "Equality threshold");
  run->add_option("--out", config.out_path, "Report file");
  run->add_option("--dump-failures", config.dump_dir, "Failure dump directory");
  run->add_flag("--report-abstract-form", config.report_abstract_form,
                "Also evaluate the adjoint middle-term variant");

  CheckArgs check_args;
  dwop::TolerancePolicy check_tol;
  auto* check = app.add_subcommand("check", "Check one matrix pair");
  check->add_option("--a", check_args.path_a, "Matrix file A")->required();
  check->add_option("--b", check_args.path_b, "Matrix file B")->required();
  check->add_option("--suite", check_args.suite, "Check to run")->required();
  check->add_option("--p", check_args.p, "Exponent p");
  check->add_option("--t", check_args.t, "Weight t");
  check->add_option("--r", check_args.r, "Conjugate exponent r");
  check->add_option("--conj-p", check_args.conj_p, "Exponent for thm31");
  check->add_option("--tol-psd", check_tol.eps_psd, "PSD slack");
  check->add_option("--tol-eq", check_tol.eps_eq, "Equality threshold");
  check->add_flag("--report-abstract-form", check_args.report_abstract_form,
                  "Also evaluate the adjoint middle-term variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      const auto sep = dims.find("..");
      if (sep == std::string::npos)
        throw std::invalid_argument("--dims must look like LO..HI");
      config.dim_lo = std::stoi(dims.substr(0, sep));
      config.dim_hi = std::stoi(dims.substr(sep + 2));
      const dwop::SuiteReport report = dwop::run_suite(config);
      std::cout << dwop::report_to_json(report).dump(2) << '\n';
      return report.total_failed() == 0 ? 0 : 1;
    }
    const json result = run_check(check_args, check_tol);
    std::cout << result.dump(2) << '\n';
    return 0;
  } catch (const dwop::SingularPower& e) {
    std::cout << json{{"verdict", "skipped-precondition"}, {"reason", e.what()}}.dump(2)
              << '\n';
    return 0;
  } catch (const dwop::HypothesisNotSatisfied& e) {
    std::cout << json{{"verdict", "skipped-precondition"}, {"reason", e.what()}}.dump(2)
              << '\n';
    return 0;
  } catch (const dwop::SupportMismatch& e) {
    std::cout << json{{"verdict", "skipped-precondition"}, {"reason", e.what()}}.dump(2)
              << '\n';
    return 0;
  } catch (const dwop::EqualityNotAttained& e) {
    std::cout << json{{"verdict", "skipped-precondition"}, {"reason", e.what()}}.dump(2)
              << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
