#include "dwop/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "dwop/checks.hpp"
#include "dwop/kernels.hpp"
#include "dwop/matrix_io.hpp"
#include "dwop/saito_tominaga.hpp"
#include "dwop/sampler.hpp"
#include "dwop/scalar_ref.hpp"
#include "dwop/witnesses.hpp"

namespace dwop {
namespace {

struct TrialOutcome {
  char verdict = 'P';  // P / F / S
  double norm_gap = std::numeric_limits<double>::infinity();
  double norm_identity_residual = 0;
  Matrixcd A, B;  // dumped on failure
  nlohmann::json params;
};

void track_gap(TrialOutcome& out, double gap, double scale) {
  out.norm_gap = std::min(out.norm_gap, gap / scale);
}

void track_identity(TrialOutcome& out, double res, double scale) {
  out.norm_identity_residual = std::max(out.norm_identity_residual, res / scale);
}

// Equality soundness on a random trial: the bound holds, and a predicted
// equality (residual-based) must actually be attained.
bool sound(const CheckReport<double>& rep) {
  return rep.holds && (!rep.equality_predicted || rep.equality_attained);
}

Index draw_dim(SeededStream& s, const TrialConfig& cfg) {
  return static_cast<Index>(s.next_int(cfg.dim_lo, cfg.dim_hi));
}

// Rank-deficient draws on a fixed 25%/25% cadence so the coverage mix is
// honest and reproducible.
Matrixcd draw_operand(SeededStream& s, Index n, bool allow_deficient, int trial,
                      int slot) {
  if (allow_deficient && n > 1 && trial % 4 == slot)
    return rank_deficient(n, s.next_int(0, n - 1), s);
  return ginibre(n, s);
}

DiagonalSpec random_spec(SeededStream& s, Index n, bool allow_negative,
                         double active_prob) {
  DiagonalSpec spec;
  spec.dimension = n;
  for (Index i = 0; i < n; ++i) {
    spec.b_values.push_back(s.next_log_uniform(0.5, 1.5));
    const bool neg = allow_negative && s.next_double() < 0.5;
    spec.signs.push_back(neg ? -1 : 1);
    if (s.next_double() < active_prob) spec.active_set.push_back(i);
  }
  return spec;
}

struct PangularWitness {
  Matrixcd A, B;
  double p = 0;
  double r = 2;
};

// p = 0 needs opposite-sign entries and r < 2 for a nontrivial solution;
// otherwise p > 1 with mixed signs gives solvable entries for generic r.
PangularWitness draw_thm23_witness(SeededStream& s, Index n, bool conjugated,
                                   bool force_p0) {
  PangularWitness w;
  const bool p0 = force_p0 || s.next_double() < 1.0 / 3.0;
  DiagonalSpec spec = random_spec(s, n, true, 0.8);
  if (p0) {
    w.p = 0;
    w.r = 1.05 + 0.9 * s.next_double();  // (1, 2)
    for (auto& sg : spec.signs) sg = -1;
  } else {
    w.p = 1.25 + 1.75 * s.next_double();
    w.r = 1.0 + s.next_log_uniform(0.25, 4.0);
  }
  std::tie(w.A, w.B) = make_thm23_equality<double>(spec, w.p, w.r);
  if (conjugated) {
    const Matrixcd Q = random_unitary(n, s);
    w.A = unitary_conjugate(w.A, Q);
    w.B = unitary_conjugate(w.B, Q);
  }
  return w;
}

struct StructuredWitness {
  Matrixcd A, B;
  double t = 0.5;
};

StructuredWitness draw_thm34_witness(SeededStream& s, Index n, bool conjugated,
                                     double active_prob = 0.7) {
  StructuredWitness w;
  w.t = s.next_log_uniform(0.15, 0.85);
  const DiagonalSpec spec = random_spec(s, n, true, active_prob);
  std::tie(w.A, w.B) = make_thm34_pair<double>(spec, w.t);
  if (conjugated) {
    const Matrixcd Q = random_unitary(n, s);
    w.A = unitary_conjugate(w.A, Q);
    w.B = unitary_conjugate(w.B, Q);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Per-suite trial bodies.

TrialOutcome trial_gpl(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = ginibre(n, s);
  out.B = ginibre(n, s);
  double t = s.next_log_uniform(0.1, 10.0);
  if (trial % 2 == 1) t = -t;  // the identity holds for any nonzero real t
  out.params = {{"t", t}};
  const double scale = pair_scale(out.A, out.B);
  const double res = gpl_residual(out.A, out.B, t);
  track_identity(out, res, scale);
  out.verdict = res <= cfg.tol.eps_identity * scale ? 'P' : 'F';
  return out;
}

TrialOutcome trial_lemma21(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = draw_operand(s, n, true, trial, 0);
  out.B = draw_operand(s, n, true, trial, 1);
  const double t = draw_params(s, ParamKind::t);
  out.params = {{"t", t}};
  const auto rep = lemma21_check(out.A, out.B, t, cfg.tol);
  track_gap(out, rep.gap_min_eig, rep.scale);
  out.verdict = sound(rep) ? 'P' : 'F';
  return out;
}

TrialOutcome trial_thm22(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = draw_operand(s, n, true, trial, 0);
  out.B = draw_operand(s, n, true, trial, 1);
  const double p = draw_params(s, ParamKind::p_t0);
  const double t = draw_params(s, ParamKind::t);
  out.params = {{"p", p}, {"t", t}};
  const auto rep = thm22_check(out.A, out.B, p, t, cfg.tol);
  track_gap(out, rep.gap_min_eig, rep.scale);
  out.verdict = sound(rep) ? 'P' : 'F';
  return out;
}

TrialOutcome trial_thm23(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = ginibre(n, s);
  out.B = ginibre(n, s);
  const double p = draw_params(s, ParamKind::p_t1);
  const double r = draw_params(s, ParamKind::r);
  out.params = {{"p", p}, {"r", r}};
  try {
    const auto rep =
        thm23_check(out.A, out.B, p, r, cfg.tol, cfg.report_abstract_form);
    track_gap(out, rep.gap_min_eig, rep.scale);
    out.verdict = sound(rep) ? 'P' : 'F';
  } catch (const SingularPower&) {
    out.verdict = 'S';
  }
  return out;
}

TrialOutcome trial_cor24(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = ginibre(n, s);
  out.B = ginibre(n, s);
  const double r = draw_params(s, ParamKind::r);
  out.params = {{"r", r}};
  try {
    const auto rep = cor24_check(out.A, out.B, r, cfg.tol);
    const auto rep23 = thm23_check(out.A, out.B, 0.0, r, cfg.tol);
    track_gap(out, rep.gap_min_eig, rep.scale);
    // The corollary is the p = 0 case; the two evaluations must agree.
    const double agree = std::max((rep.rhs - rep23.rhs).norm(),
                                  (rep.lhs - rep23.lhs).norm());
    track_identity(out, agree, rep.scale);
    out.verdict =
        sound(rep) && agree <= cfg.tol.eps_identity * rep.scale ? 'P' : 'F';
  } catch (const SingularPower&) {
    out.verdict = 'S';
  }
  return out;
}

TrialOutcome trial_prop25(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  if (trial % 2 == 0) {
    // Constructed equality witness: all four conditions hold together.
    const PangularWitness w = draw_thm23_witness(s, n, true, false);
    out.A = w.A;
    out.B = w.B;
    out.params = {{"p", w.p}, {"r", w.r}, {"kind", "witness"}};
    const auto rep = prop25_predicates(out.A, out.B, w.p, w.r, cfg.tol);
    const double scale = pair_scale(out.A, out.B);
    for (double res : rep.residuals) track_identity(out, res, scale);
    out.verdict = rep.all_hold ? 'P' : 'F';
  } else {
    // Generic pair: all four must fail together, with margin.
    out.A = ginibre(n, s);
    out.B = ginibre(n, s);
    const double p = draw_params(s, ParamKind::p_t1);
    const double r = draw_params(s, ParamKind::r);
    out.params = {{"p", p}, {"r", r}, {"kind", "generic"}};
    try {
      const auto rep = prop25_predicates(out.A, out.B, p, r, cfg.tol);
      const double scale = pair_scale(out.A, out.B);
      bool margin = rep.none_hold;
      for (double res : rep.residuals) margin = margin && res > 1e-4 * scale;
      out.verdict = margin ? 'P' : 'F';
    } catch (const SingularPower&) {
      out.verdict = 'S';
    }
  }
  return out;
}

TrialOutcome trial_prop26(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  const bool p0 = trial % 3 == 0;
  const PangularWitness w = draw_thm23_witness(s, n, true, p0);
  out.A = w.A;
  out.B = w.B;
  out.params = {{"p", w.p}, {"r", w.r}};
  const auto rep = prop26_consequences(out.A, out.B, w.p, w.r, cfg.tol);
  track_identity(out, rep.identity_residual, rep.scale);
  bool ok = rep.identity_residual <= cfg.tol.eps_identity * rep.scale &&
            rep.order.holds &&
            rep.equality_residual <= cfg.tol.eps_eq * rep.scale;
  if (p0) {
    // |A| = |B| + (r/s)|A-B| in the angular-distance case.
    const double rs = w.r - 1;  // r/s with 1/r + 1/s = 1
    const double remark =
        (abs_op(out.A) - abs_op(out.B) - rs * abs_op<double>((out.A - out.B).eval()))
            .norm();
    track_identity(out, remark, rep.scale);
    ok = ok && remark <= cfg.tol.eps_eq * rep.scale;
  }
  out.verdict = ok ? 'P' : 'F';
  return out;
}

TrialOutcome trial_thm32(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  out.A = draw_operand(s, n, true, trial, 0);
  out.B = draw_operand(s, n, true, trial, 1);
  const double t = draw_params(s, ParamKind::t);
  out.params = {{"t", t}};
  const auto rep = thm32_check(out.A, out.B, t, cfg.tol);
  track_gap(out, rep.gap_min_eig, rep.scale);
  out.verdict = sound(rep) ? 'P' : 'F';
  return out;
}

TrialOutcome trial_lemma33(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  const StructuredWitness w = draw_thm34_witness(s, n, true);
  out.A = w.A;
  out.B = w.B;
  out.params = {{"t", w.t}};
  const auto rep = lemma33_consequences(out.A, out.B, w.t, cfg.tol);
  track_gap(out, rep.weighted_gap.gap_min_eig, rep.scale);
  track_gap(out, rep.abs_order.gap_min_eig, rep.scale);
  track_gap(out, rep.support_order.gap_min_eig, rep.scale);
  bool ok = rep.weighted_gap.holds && rep.abs_order.holds &&
            rep.support_order.holds;
  if (rep.supports_equal) {
    track_identity(out, rep.identity_residual, rep.scale);
    ok = ok && rep.identity_residual <= cfg.tol.eps_identity * rep.scale;
  }
  out.verdict = ok ? 'P' : 'F';
  return out;
}

TrialOutcome trial_lemma35(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  if (trial % 2 == 0) {
    const StructuredWitness w = draw_thm34_witness(s, n, true);
    out.A = w.A;
    out.B = w.B;
    out.params = {{"t", w.t}, {"kind", "witness"}};
    const auto rep = lemma35_equivalence(out.A, out.B, w.t, cfg.tol);
    out.verdict =
        rep.equivalent && rep.forward_holds && rep.backward_holds ? 'P' : 'F';
  } else {
    // Generic invertible pair: both directions must fail together.
    out.A = ginibre(n, s);
    out.B = ginibre(n, s);
    const double t = draw_params(s, ParamKind::t);
    out.params = {{"t", t}, {"kind", "generic"}};
    try {
      const auto rep = lemma35_equivalence(out.A, out.B, t, cfg.tol);
      out.verdict = rep.equivalent ? 'P' : 'F';
    } catch (const SupportMismatch&) {
      out.verdict = 'S';
    }
  }
  return out;
}

TrialOutcome trial_lemma36(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  const StructuredWitness w = draw_thm34_witness(s, n, true);
  out.A = w.A;
  out.B = w.B;
  out.params = {{"t", w.t}};
  const double scale = pair_scale(out.A, out.B);
  const double res = lemma36_check(out.A, out.B, w.t, cfg.tol);
  track_identity(out, res, scale);
  out.verdict = res <= cfg.tol.eps_identity * scale ? 'P' : 'F';
  return out;
}

TrialOutcome trial_thm34(SeededStream& s, const TrialConfig& cfg, int trial) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  if (trial % 3 != 2) {
    const StructuredWitness w = draw_thm34_witness(s, n, true);
    out.A = w.A;
    out.B = w.B;
    out.params = {{"t", w.t}, {"kind", "witness"}};
    const auto cls = thm34_characterize(out.A, out.B, w.t, cfg.tol);
    if (cls.kind == STEqualityClass::Kind::structured) {
      track_identity(out, cls.structural_residuals[0], cls.scale);
      track_identity(out, cls.structural_residuals[1], cls.scale);
      out.verdict =
          cls.structural_residuals[0] <= cfg.tol.eps_eq * cls.scale &&
                  cls.structural_residuals[1] <= cfg.tol.eps_eq * cls.scale
              ? 'P'
              : 'F';
    } else {
      out.verdict =
          cls.kind == STEqualityClass::Kind::trivial_AB_equal ? 'P' : 'F';
    }
  } else {
    // t >= 1: equality is impossible for genuinely distinct pairs.
    out.A = ginibre(n, s);
    out.B = ginibre(n, s);
    const double ts[] = {1.0, 1.5, 2.0};
    const double t_used = ts[static_cast<size_t>(trial / 3) % 3];
    out.params = {{"t", t_used}, {"kind", "impossibility"}};
    const double scale = pair_scale(out.A, out.B);
    if ((out.A - out.B).norm() < 0.1 * scale) {
      out.verdict = 'S';
      return out;
    }
    const auto rep = thm32_check(out.A, out.B, t_used, cfg.tol);
    out.verdict = !rep.equality_attained &&
                          rep.equality_residual > cfg.tol.eps_eq * rep.scale
                      ? 'P'
                      : 'F';
  }
  return out;
}

TrialOutcome trial_constructors(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  const Index n = draw_dim(s, cfg);
  const Matrixcd Q = random_unitary(n, s);
  bool ok = true;

  auto equality_ok = [](const CheckReport<double>& rep) {
    return rep.equality_attained && rep.equality_predicted;
  };

  {
    const Matrixcd B = ginibre(n, s);
    const double t = s.next_log_uniform(0.25, 4.0);
    const Matrixcd A = make_lemma21_equality(B, t);
    ok = ok && equality_ok(lemma21_check(A, B, t, cfg.tol));
    ok = ok && equality_ok(lemma21_check(unitary_conjugate(A, Q),
                                         unitary_conjugate(B, Q), t, cfg.tol));
  }
  {
    const DiagonalSpec spec = random_spec(s, n, true, 0.8);
    const double p = draw_params(s, ParamKind::p_t0);
    const double t = s.next_log_uniform(0.25, 4.0);
    const auto [A, B] = make_thm22_equality<double>(spec, p, t);
    ok = ok && equality_ok(thm22_check(A, B, p, t, cfg.tol));
    ok = ok && equality_ok(thm22_check(unitary_conjugate(A, Q),
                                       unitary_conjugate(B, Q), p, t, cfg.tol));
  }
  {
    const PangularWitness w = draw_thm23_witness(s, n, false, false);
    ok = ok && equality_ok(thm23_check(w.A, w.B, w.p, w.r, cfg.tol));
    ok = ok &&
         equality_ok(thm23_check(unitary_conjugate(w.A, Q),
                                 unitary_conjugate(w.B, Q), w.p, w.r, cfg.tol));
  }
  {
    const StructuredWitness w = draw_thm34_witness(s, n, false);
    auto characterized_ok = [&](const Matrixcd& A, const Matrixcd& B) {
      const auto cls = thm34_characterize(A, B, w.t, cfg.tol);
      if (cls.kind == STEqualityClass::Kind::trivial_AB_equal) return true;
      const double scale = pair_scale(A, B);
      return cls.kind == STEqualityClass::Kind::structured &&
             cls.structural_residuals[0] <= cfg.tol.eps_eq * scale &&
             cls.structural_residuals[1] <= cfg.tol.eps_eq * scale;
    };
    ok = ok && characterized_ok(w.A, w.B);
    ok = ok &&
         characterized_ok(unitary_conjugate(w.A, Q), unitary_conjugate(w.B, Q));
  }
  out.verdict = ok ? 'P' : 'F';
  return out;
}

TrialOutcome trial_scalar_oracle(SeededStream& s, const TrialConfig& cfg, int) {
  TrialOutcome out;
  auto draw_scalar = [&] {
    const double mag = s.next_log_uniform(0.3, 3.0);
    const double phase = 2.0 * std::numbers::pi * s.next_double();
    return std::complex<double>(mag * std::cos(phase), mag * std::sin(phase));
  };
  const auto a = draw_scalar();
  const auto b = draw_scalar();
  const double t = s.next_log_uniform(0.25, 4.0);
  const double p0 = draw_params(s, ParamKind::p_t0);
  const double p1 = draw_params(s, ParamKind::p_t1);
  const double r = 1.0 + s.next_log_uniform(0.25, 4.0);
  out.A = Matrixcd::Constant(1, 1, a);
  out.B = Matrixcd::Constant(1, 1, b);
  out.params = {{"t", t}, {"p0", p0}, {"p1", p1}, {"r", r}};

  const double scale = pair_scale(out.A, out.B);
  const double bar = 1e-12;
  double worst = 0;
  // relative per quantity: the compared values grow like mag^{2p}, far beyond
  // the operand scale, so an absolute bar would be meaningless
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
  };
  auto compare = [&](const CheckReport<double>& rep,
                     const scalar_ref::ScalarCheck& ref) {
    worst = std::max(worst, rel(rep.lhs(0, 0).real(), ref.lhs));
    worst = std::max(worst, rel(rep.rhs(0, 0).real(), ref.rhs));
    worst = std::max(worst, rel(rep.equality_residual, ref.equality_residual));
  };
  compare(lemma21_check(out.A, out.B, t, cfg.tol), scalar_ref::lemma21(a, b, t));
  compare(thm22_check(out.A, out.B, p0, t, cfg.tol),
          scalar_ref::thm22(a, b, p0, t));
  compare(thm23_check(out.A, out.B, p1, r, cfg.tol),
          scalar_ref::thm23(a, b, p1, r));
  compare(cor24_check(out.A, out.B, r, cfg.tol), scalar_ref::cor24(a, b, r));
  compare(thm32_check(out.A, out.B, t, cfg.tol), scalar_ref::thm32(a, b, t));
  worst = std::max(worst, std::abs(gpl_residual(out.A, out.B, t) -
                                   scalar_ref::gpl_residual(a, b, t)));
  track_identity(out, worst, scale);
  out.verdict = worst <= bar ? 'P' : 'F';
  return out;
}

using TrialFn = TrialOutcome (*)(SeededStream&, const TrialConfig&, int);

struct SuiteSpec {
  const char* name;
  TrialFn fn;
};

const SuiteSpec kSuites[] = {
    {"gpl", trial_gpl},           {"lemma21", trial_lemma21},
    {"thm22", trial_thm22},       {"thm23", trial_thm23},
    {"cor24", trial_cor24},       {"prop25", trial_prop25},
    {"prop26", trial_prop26},     {"thm32", trial_thm32},
    {"lemma33", trial_lemma33},   {"lemma35", trial_lemma35},
    {"lemma36", trial_lemma36},   {"thm34", trial_thm34},
    {"constructors", trial_constructors},
    {"scalar_oracle", trial_scalar_oracle},
};

void dump_failure(const TrialConfig& cfg, const std::string& suite, int trial,
                  const TrialOutcome& out) {
  if (cfg.dump_dir.empty()) return;
  std::filesystem::create_directories(cfg.dump_dir);
  nlohmann::json j = {{"suite", suite},
                      {"trial", trial},
                      {"params", out.params},
                      {"A", matrix_to_json(out.A)},
                      {"B", matrix_to_json(out.B)}};
  std::ofstream f(cfg.dump_dir + "/" + suite + "_trial" +
                  std::to_string(trial) + ".json");
  f << j.dump(2) << '\n';
}

SuiteResult run_one_suite(const TrialConfig& cfg, size_t suite_index) {
  const SuiteSpec& spec = kSuites[suite_index];
  SuiteResult res;
  res.suite = spec.name;
  res.verdicts.reserve(static_cast<size_t>(cfg.trials));
  double worst_gap = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SeededStream stream(cfg.seed,
                        suite_index * 1000003ull + static_cast<std::uint64_t>(trial));
    TrialOutcome out = spec.fn(stream, cfg, trial);
    res.verdicts.push_back(out.verdict);
    if (out.verdict == 'P') ++res.passed;
    if (out.verdict == 'S') ++res.skipped;
    if (out.verdict == 'F') {
      ++res.failed;
      dump_failure(cfg, res.suite, trial, out);
    }
    worst_gap = std::min(worst_gap, out.norm_gap);
    res.worst_identity_residual =
        std::max(res.worst_identity_residual, out.norm_identity_residual);
  }
  res.worst_gap_min_eig = std::isfinite(worst_gap) ? worst_gap : 0.0;
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

void TrialConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("TrialConfig: trials must be >= 1");
  if (dim_lo < 1 || dim_hi > 64 || dim_lo > dim_hi)
    throw std::invalid_argument("TrialConfig: dims must satisfy 1 <= lo <= hi <= 64");
  tol.validate();
  for (const auto& name : suite_names())
    if (name == suite) return;
  throw std::invalid_argument("TrialConfig: unknown suite '" + suite + "'");
}

int SuiteReport::total_failed() const {
  int n = 0;
  for (const auto& s : suites) n += s.failed;
  return n;
}

SuiteReport run_suite(const TrialConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  for (size_t i = 0; i < std::size(kSuites); ++i) {
    if (config.suite == "all" || config.suite == kSuites[i].name)
      report.suites.push_back(run_one_suite(config, i));
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  if (!config.out_path.empty()) write_report(report, config.out_path);
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  const TrialConfig& c = report.config;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : report.suites) {
    suites.push_back({{"suite", s.suite},
                      {"counts",
                       {{"passed", s.passed},
                        {"failed", s.failed},
                        {"skipped", s.skipped}}},
                      {"verdicts", s.verdicts},
                      {"worst_gap_min_eig", s.worst_gap_min_eig},
                      {"worst_identity_residual", s.worst_identity_residual}});
  }
  return {{"schema", 1},
          {"generator", kGeneratorName},
          {"config",
           {{"suite", c.suite},
            {"dims", {c.dim_lo, c.dim_hi}},
            {"trials", c.trials},
            {"seed", c.seed},
            {"report_abstract_form", c.report_abstract_form},
            {"tolerances",
             {{"eps_psd", c.tol.eps_psd},
              {"eps_eq", c.tol.eps_eq},
              {"eps_identity", c.tol.eps_identity},
              {"rank_cutoff_factor", c.tol.rank_cutoff_factor}}}}},
          {"suites", suites},
          {"wall_time_ms", report.wall_time_ms}};
}

void write_report(const SuiteReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_report: cannot open " + path);
  out << report_to_json(report).dump(2) << '\n';
}

}  // namespace dwop
