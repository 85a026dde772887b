#include "wildauto/selfcheck.hpp"

#include <functional>
#include <sstream>

#include "wildauto/charpoly.hpp"
#include "wildauto/classify.hpp"
#include "wildauto/error.hpp"
#include "wildauto/frobenius.hpp"
#include "wildauto/jordan.hpp"
#include "wildauto/num_action.hpp"
#include "wildauto/sampling.hpp"
#include "wildauto/unipotency.hpp"

namespace wildauto {

namespace {

// Randomized suites never run below their base sizes; larger trial budgets
// scale them up proportionally.
unsigned long scaled(unsigned long base, unsigned long trials) {
  if (trials <= 1000) return base;
  return base * (trials / 1000) + (base * (trials % 1000)) / 1000;
}

IntMatrix gl2_sample(std::uint64_t seed, std::uint64_t tag, std::uint64_t trial) {
  TrialRng rng(seed, tag, trial);
  return random_gl2(rng, 12);
}

std::pair<IntMatrix, IntMatrix> gl2_pair_sample(std::uint64_t seed, std::uint64_t trial) {
  TrialRng rng(seed, 3, trial);
  IntMatrix m = random_gl2(rng, 12);
  IntMatrix n = random_gl2(rng, 12);
  return {m, n};
}

IntMatrix unipotent_sample(std::uint64_t seed, std::uint64_t tag, std::uint64_t trial) {
  TrialRng rng(seed, tag, trial);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
  return random_unipotent(rng, n);
}

FGAbelianGroup free_group(std::size_t rank) {
  FGAbelianGroup g;
  g.free_rank = rank;
  return g;
}

VarietyModel single_block_model(std::size_t factor_dim, std::size_t mult, std::size_t free_rank) {
  VarietyModel m;
  m.blocks.push_back(VarietyBlock{"E", factor_dim, mult, free_group(free_rank)});
  return m;
}

VarietyModel product_model(const std::vector<std::size_t>& factor_dims) {
  VarietyModel m;
  for (std::size_t i = 0; i < factor_dims.size(); ++i)
    m.blocks.push_back(VarietyBlock{"E" + std::to_string(i + 1), factor_dims[i], 1, free_group(1)});
  return m;
}

// Point with the given free coordinates (no torsion anywhere).
Point free_point(const VarietyModel& model, const std::vector<std::vector<std::vector<long>>>& coords) {
  Point p;
  for (std::size_t b = 0; b < model.blocks.size(); ++b) {
    std::vector<GroupElement> row;
    for (std::size_t i = 0; i < model.blocks[b].multiplicity; ++i) {
      std::vector<Int> f;
      for (long v : coords[b][i]) f.emplace_back(v);
      row.emplace_back(model.blocks[b].point_group, std::move(f), std::vector<Int>{});
    }
    p.entries.push_back(std::move(row));
  }
  return p;
}

const IntMatrix kRot3 = IntMatrix::from_rows({{0, -1}, {1, -1}});
const IntMatrix kRot4 = IntMatrix::from_rows({{0, -1}, {1, 0}});
const IntMatrix kUnitri = IntMatrix::from_rows({{1, 1}, {0, 1}});
const IntMatrix kFib = IntMatrix::from_rows({{2, 1}, {1, 1}});

struct Failure {
  bool failed = false;
  std::string message;

  void record(const std::string& msg) {
    if (!failed) {
      failed = true;
      message = msg;
    }
  }
};

CheckResult finish(int id, const std::string& name, const Failure& failure,
                   const std::string& summary) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.passed = !failure.failed;
  r.detail = failure.failed ? failure.message : summary;
  return r;
}

CheckResult check_det_cube(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(1000, trials);
  Failure f;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    IntMatrix m = gl2_sample(seed, 1, t);
    Int dm = m.det();
    Int dp = p_matrix(m).det();
    if (dp != dm * dm * dm) f.record("det P != (det M)^3 at trial " + std::to_string(t));
  }
  return finish(1, "det P_M = (det M)^3 on random GL2(Z)", f,
                std::to_string(n) + " samples, exact equality");
}

CheckResult check_scalar_law(std::uint64_t) {
  Failure f;
  for (long n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    IntMatrix scalar = IntMatrix::identity(2) * Int(n);
    IntMatrix expected = IntMatrix::identity(3) * Int(n * n);
    if (p_matrix(scalar, /*allow_isogeny=*/true) != expected)
      f.record("p_matrix(n*I) != n^2*I at n = " + std::to_string(n));
  }
  return finish(2, "scalar law p(n*I) = n^2 * I, n in [-10,10]\\{0}", f, "20 scalars, exact");
}

CheckResult check_contravariance(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(500, trials);
  Failure f;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    auto [m, nn] = gl2_pair_sample(seed, t);
    if (p_matrix(m * nn) != p_matrix(nn) * p_matrix(m))
      f.record("p(MN) != p(N)p(M) at trial " + std::to_string(t));
  }
  IntMatrix lower = IntMatrix::from_rows({{1, 0}, {1, 1}});
  IntMatrix pinned = IntMatrix::from_rows({{2, 0, 3}, {-1, 0, -2}, {2, 1, 6}});
  if (p_matrix(kUnitri * lower) != pinned) f.record("pinned p(MN) instance mismatch");
  if (p_matrix(lower) * p_matrix(kUnitri) != pinned) f.record("pinned p(N)p(M) instance mismatch");
  return finish(3, "contravariant composition p(MN) = p(N) p(M)", f,
                std::to_string(n) + " random pairs + pinned instance, exact");
}

CheckResult check_diagonal_eigenvalues(std::uint64_t) {
  Failure f;
  for (long a = -5; a <= 5; ++a) {
    for (long d = -5; d <= 5; ++d) {
      if (a == 0 || d == 0) continue;
      IntMatrix diag = IntMatrix::diagonal({Int(a), Int(d)});
      IntPoly expected = IntPoly({-a * a, 1}) * IntPoly({-d * d, 1}) * IntPoly({-a * d, 1});
      if (charpoly(p_matrix(diag, /*allow_isogeny=*/true)) != expected)
        f.record("charpoly(p(diag)) mismatch at a=" + std::to_string(a) +
                 ", d=" + std::to_string(d));
    }
  }
  return finish(4, "charpoly(p(diag(a,d))) = (x-a^2)(x-d^2)(x-ad)", f, "100 pairs, exact");
}

CheckResult check_gk5_chain(std::uint64_t) {
  Failure f;
  IntMatrix p = p_matrix(kUnitri);
  IntMatrix pinned = IntMatrix::from_rows({{0, 0, -1}, {0, 1, 2}, {1, 0, 2}});
  if (p != pinned) f.record("P matrix for [[1,1],[0,1]] does not match the pinned value");
  JordanProfile profile = unipotent_jordan_profile(p);
  if (profile.largest != 3 || profile.block_sizes != std::vector<std::size_t>{3})
    f.record("P does not have a single Jordan block of size 3");

  VarietyModel model = single_block_model(1, 2, 1);
  Automorphism sigma;
  sigma.alpha.blocks.push_back(kUnitri);
  sigma.b = free_point(model, {{{0}, {1}}});
  AnalysisReport report = analyze(model, sigma);
  if (!report.wild.wild) f.record("GK-5 chain instance not reported wild");
  if (!report.gk.exact || *report.gk.exact != 5) f.record("GK not exactly 5");
  if (!report.j || *report.j != 2) f.record("j != 2");
  if (report.classification_label != std::optional<std::string>("Prop 8.2(b)(2)"))
    f.record("classification label missing or wrong for the GK-5 chain");
  return finish(5, "GK-5 chain for M = [[1,1],[0,1]] on E x E", f,
                "P pinned, single block {3}, j = 2, GK = 5, labeled");
}

CheckResult check_translation_rows(std::uint64_t) {
  Failure f;
  struct Row {
    VarietyModel model;
    Point b;
    long gk;
    std::string label;
  };
  std::vector<Row> rows;
  {
    VarietyModel m = single_block_model(1, 1, 1);
    rows.push_back({m, free_point(m, {{{1}}}), 2, "Prop 8.1 / dim 1"});
  }
  {
    VarietyModel m = product_model({1, 1});
    rows.push_back({m, free_point(m, {{{1}}, {{1}}}), 3, "Prop 8.1 / dim 2"});
  }
  {
    VarietyModel m = single_block_model(1, 2, 2);
    rows.push_back({m, free_point(m, {{{1, 0}, {0, 1}}}), 3, "Prop 8.1 / dim 2"});
  }
  {
    VarietyModel m = product_model({1, 1, 1});
    rows.push_back({m, free_point(m, {{{1}}, {{1}}, {{1}}}), 4, "Prop 8.2(a)"});
  }
  {
    VarietyModel m = single_block_model(3, 1, 1);
    rows.push_back({m, free_point(m, {{{1}}}), 4, "Prop 8.2(a)"});
  }
  {
    VarietyModel m = single_block_model(4, 1, 1);
    rows.push_back({m, free_point(m, {{{1}}}), 5, "Prop 8.2(b)(1)"});
  }
  {
    VarietyModel m = product_model({1, 3});
    rows.push_back({m, free_point(m, {{{1}}, {{1}}}), 5, "Prop 8.2(b)(1)"});
  }

  for (std::size_t i = 0; i < rows.size() && !f.failed; ++i) {
    const Row& row = rows[i];
    Automorphism sigma{BlockEndomorphism::identity(row.model), row.b};
    AnalysisReport report = analyze(row.model, sigma);
    if (!report.wild.wild) f.record("translation row " + std::to_string(i) + " not wild");
    if (!report.j || *report.j != 0) f.record("translation row " + std::to_string(i) + ": j != 0");
    if (!report.gk.exact || *report.gk.exact != row.gk)
      f.record("translation row " + std::to_string(i) + ": GK mismatch");
    if (report.classification_label != std::optional<std::string>(row.label))
      f.record("translation row " + std::to_string(i) + ": label mismatch");
  }
  return finish(6, "translation rows: dims 1-4 give j = 0 and GK = dim + 1", f,
                std::to_string(rows.size()) + " model shapes, labels matched");
}

CheckResult check_route_equivalence(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(500, trials);
  Failure f;
  unsigned long wild_count = 0;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    TrialRng rng(seed, 7, t);
    VarietyModel model = random_model(rng);
    Automorphism sigma = random_unipotent_automorphism(rng, model);
    if (rng.uniform(0, 5) == 0) sigma.b = random_torsion_point(rng, model);
    WildnessVerdict quotient = is_wild(model, sigma, WildRoute::Quotient);
    WildnessVerdict set_gen = is_wild(model, sigma, WildRoute::SetGeneration);
    if (quotient.wild != set_gen.wild)
      f.record("routes disagree at trial " + std::to_string(t));
    if (quotient.wild) ++wild_count;
  }
  std::ostringstream summary;
  summary << n << " instances, 0 disagreements (" << wild_count << " wild)";
  return finish(7, "Quotient route == SetGeneration route", f, summary.str());
}

CheckResult check_power_invariant_factors(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(200, trials);
  Failure f;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    IntMatrix m = unipotent_sample(seed, 8, t);
    std::vector<IntPoly> base = frobenius_invariants(m);
    IntMatrix power = m;
    for (unsigned long p = 2; p <= 7 && !f.failed; ++p) {
      power = power * m;
      if (frobenius_invariants(power) != base)
        f.record("invariant factors changed under power p=" + std::to_string(p) + " at trial " +
                 std::to_string(t));
    }
  }
  return finish(8, "unipotent M: frobenius_invariants(M^p) constant for p in 1..7", f,
                std::to_string(n) + " random unipotent matrices (dims 2-5), exact");
}

CheckResult check_decider_agreement(std::uint64_t) {
  Failure f;
  struct Entry {
    const char* name;
    IntMatrix m;
  };
  const std::vector<Entry> suite = {
      {"I", IntMatrix::identity(2)},      {"-I", -IntMatrix::identity(2)},
      {"order-3 rotation", kRot3},        {"order-4 rotation", kRot4},
      {"[[1,1],[0,1]]", kUnitri},         {"[[2,1],[1,1]]", kFib},
  };
  // 2 t_max with t_max = 6, the largest quasi-unipotent order in GL2(Z).
  const unsigned long bound = 12;
  for (const auto& entry : suite) {
    QuasiUnipotencyVerdict verdict = quasi_unipotency(entry.m);
    auto witness = power_conjugacy_witness(entry.m, bound);
    if (verdict.quasi_unipotent() != witness.has_value())
      f.record(std::string("decider disagreement on ") + entry.name);
  }
  QuasiUnipotencyVerdict fib = quasi_unipotency(kFib);
  if (fib.quasi_unipotent() || !fib.witness || *fib.witness != IntPoly({1, -3, 1}))
    f.record("[[2,1],[1,1]] should report No with witness x^2 - 3x + 1");
  return finish(9, "cyclotomic decider agrees with power-conjugacy scan", f,
                "curated suite of 6 matrices, bound 12");
}

CheckResult check_transfer(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(500, trials);
  Failure f;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    IntMatrix m = gl2_sample(seed, 10, t);
    bool m_qu = quasi_unipotency(m).quasi_unipotent();
    bool p_qu = quasi_unipotency(p_matrix(m)).quasi_unipotent();
    if (m_qu != p_qu) f.record("quasi-unipotency transfer failed at trial " + std::to_string(t));
  }
  if (p_matrix(-IntMatrix::identity(2)) != IntMatrix::identity(3))
    f.record("regression p(-I) = I failed (unipotency converse must fail here)");
  return finish(10, "quasi-unipotent(M) <=> quasi-unipotent(P_M); p(-I) = I", f,
                std::to_string(n) + " samples + regression case");
}

CheckResult check_parity(std::uint64_t seed, unsigned long trials) {
  Failure f;
  unsigned long checked = 0;
  auto check_p = [&](const IntMatrix& p) {
    if (f.failed) return;
    if (!quasi_unipotency(p).quasi_unipotent()) return;
    long j = static_cast<long>(largest_jordan_block_quasi(p)) - 1;
    ++checked;
    if (j % 2 != 0 || (j != 0 && j != 2))
      f.record("odd or out-of-range j = " + std::to_string(j));
  };

  for (unsigned long t = 0; t < scaled(1000, trials) && !f.failed; ++t)
    check_p(p_matrix(gl2_sample(seed, 1, t)));
  for (unsigned long t = 0; t < scaled(500, trials) && !f.failed; ++t) {
    auto [m, n] = gl2_pair_sample(seed, t);
    check_p(p_matrix(m));
    check_p(p_matrix(n));
    check_p(p_matrix(m * n));
  }
  for (unsigned long t = 0; t < scaled(500, trials) && !f.failed; ++t)
    check_p(p_matrix(gl2_sample(seed, 10, t)));
  for (long a = -5; a <= 5 && !f.failed; ++a)
    for (long d = -5; d <= 5 && !f.failed; ++d)
      if (a != 0 && d != 0) check_p(p_matrix(IntMatrix::diagonal({Int(a), Int(d)}), true));
  for (long s = -10; s <= 10 && !f.failed; ++s)
    if (s != 0) check_p(p_matrix(IntMatrix::identity(2) * Int(s), true));
  for (const IntMatrix& m : {IntMatrix::identity(2), -IntMatrix::identity(2), kRot3, kRot4, kUnitri})
    check_p(p_matrix(m));

  return finish(11, "every quasi-unipotent P from suites 1-10 has even j in {0, 2}", f,
                std::to_string(checked) + " P matrices checked");
}

CheckResult check_negative_wildness(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(100, trials);
  Failure f;

  // Torsion-only translation points never generate anything positive-dim.
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    TrialRng rng(seed, 12, t);
    VarietyModel model = random_model(rng);
    Automorphism sigma = random_unipotent_automorphism(rng, model);
    sigma.b = random_torsion_point(rng, model);
    for (WildRoute route : {WildRoute::Quotient, WildRoute::SetGeneration}) {
      WildnessVerdict verdict = is_wild(model, sigma, route);
      if (verdict.wild) {
        f.record("torsion-only b reported wild at trial " + std::to_string(t));
      } else if (!verify_wildness_certificate(model, sigma, verdict)) {
        f.record("torsion-only certificate failed re-verification at trial " + std::to_string(t));
      }
    }
  }

  // Non-unipotent alpha: certificate is a charpoly cofactor.
  const std::vector<IntMatrix> bad_alphas = {kRot4, kFib, kRot3, -IntMatrix::identity(2)};
  for (const IntMatrix& alpha_block : bad_alphas) {
    if (f.failed) break;
    VarietyModel model = single_block_model(1, 2, 2);
    Automorphism sigma;
    sigma.alpha.blocks.push_back(alpha_block);
    sigma.b = free_point(model, {{{1, 0}, {0, 1}}});
    for (WildRoute route : {WildRoute::Quotient, WildRoute::SetGeneration}) {
      WildnessVerdict verdict = is_wild(model, sigma, route);
      if (verdict.wild || verdict.alpha_unipotent) {
        f.record("non-unipotent alpha reported wild/unipotent");
      } else if (!verdict.certificate ||
                 !std::holds_alternative<NonUnipotentFactor>(*verdict.certificate)) {
        f.record("non-unipotent alpha missing charpoly-factor certificate");
      } else if (!verify_wildness_certificate(model, sigma, verdict)) {
        f.record("charpoly-factor certificate failed re-verification");
      }
    }
  }
  return finish(12, "negative wildness always carries a verifiable certificate", f,
                std::to_string(n) + " torsion-only instances + 4 non-unipotent alphas, both routes");
}

CheckResult check_finite_order_unipotent(std::uint64_t seed, unsigned long trials) {
  const unsigned long n = scaled(200, trials);
  Failure f;
  for (unsigned long t = 0; t < n && !f.failed; ++t) {
    IntMatrix m = unipotent_sample(seed, 13, t);
    IntMatrix power = m;
    for (unsigned long k = 1; k <= 12 && !f.failed; ++k) {
      if (k > 1) power = power * m;
      if (power.is_identity() && !m.is_identity())
        f.record("non-identity unipotent with finite order at trial " + std::to_string(t));
    }
  }
  return finish(13, "unipotent M with M^n = I (n <= 12) must be I", f,
                std::to_string(n) + " random unipotent matrices");
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, unsigned long trials) {
  if (trials < 1) trials = 1;
  std::vector<CheckResult> results;
  results.push_back(check_det_cube(seed, trials));
  results.push_back(check_scalar_law(seed));
  results.push_back(check_contravariance(seed, trials));
  results.push_back(check_diagonal_eigenvalues(seed));
  results.push_back(check_gk5_chain(seed));
  results.push_back(check_translation_rows(seed));
  results.push_back(check_route_equivalence(seed, trials));
  results.push_back(check_power_invariant_factors(seed, trials));
  results.push_back(check_decider_agreement(seed));
  results.push_back(check_transfer(seed, trials));
  results.push_back(check_parity(seed, trials));
  results.push_back(check_negative_wildness(seed, trials));
  results.push_back(check_finite_order_unipotent(seed, trials));
  return results;
}

}  // namespace wildauto
