// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "idelic/class_field.hpp"
#include "idelic/cli.hpp"
#include "idelic/fuzz.hpp"
#include "idelic/ideles.hpp"
#include "idelic/local_theory.hpp"
#include "idelic/smith.hpp"
#include "oracles.hpp"

using namespace idelic;

namespace {

constexpr double kBudgetSeconds = 60.0;

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

const fuzz::Report& shared_fuzz_report() {
  static const fuzz::Report report = [] {
    fuzz::FuzzConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 42;
    return fuzz::fuzz_suite(cfg);
  }();
  return report;
}

bool property_clean(Check& c, const std::string& name, std::uint64_t min_passed) {
  const auto& t = shared_fuzz_report().properties.at(name);
  c.expect(t.failed == 0, name + ": " + std::to_string(t.failed) + " failures");
  c.expect(t.passed >= min_passed,
           name + ": only " + std::to_string(t.passed) + " passing trials (need " + std::to_string(min_passed) + ")");
  return c.ok;
}

Check reciprocity() {
  Check c;
  property_clean(c, "reciprocity", 1000);
  property_clean(c, "hilbert_mod_n", 1000);
  return c;
}

Check key_equality() {
  Check c;
  property_clean(c, "key_equality", 1000);
  property_clean(c, "delta_rational_route", 1000);
  property_clean(c, "representative_independence", 1000);
  property_clean(c, "corollary_consistency", 1000);
  return c;
}

// Three (alpha, h) pairs per trial, plus vanishing on principal ideles.
Check product_formula() {
  Check c;
  property_clean(c, "product_formula", 1000);
  return c;
}

Idele idele(std::initializer_list<std::tuple<const char*, long, long>> parts) {
  Idele a;
  for (const auto& [k, x, y] : parts) a.set(k, x, y);
  return a;
}

Check worked_oracles() {
  Check c;
  auto hopf = fixtures::hopf();
  const std::vector<std::string> both{"K1", "K2"};
  Idele d1 = delta_from_divisor(hopf, both, Divisor{{"K1", 1}});
  Idele d2 = delta_from_divisor(hopf, both, Divisor{{"K2", 1}});
  c.expect(d1 == idele({{"K1", 0, 1}, {"K2", -1, 0}}), "Hopf Delta(K1)");
  c.expect(d2 == idele({{"K1", -1, 0}, {"K2", 0, 1}}), "Hopf Delta(K2)");
  c.expect(global_pairing(d1, d2) == 0, "Hopf iota(Delta K1, Delta K2)");
  for (long n : {2, 3, 5}) {
    auto kc = kummer_cover(hopf, both, Divisor{{"K1", 1}}, n);
    c.expect(kc.cover.generator_value(0) == IntVector{1} && kc.cover.generator_value(1) == IntVector{0},
             "Hopf Kummer psi(mu_1) = 1, psi(mu_2) = 0 for n = " + std::to_string(n));
    c.expect(kc.branch_locus == std::vector<std::string>{"K1"}, "Hopf Kummer branch locus");
  }

  auto lens = fixtures::lens5();
  c.expect(lens.h1()->invariant_factors() == IntVector{5}, "L(5,1) H_1 = Z/5");
  c.expect(knot_class(lens, "K").order == 5, "L(5,1) n_K = 5");
  c.expect(preferred_longitude(lens, "K").lambda == PeripheralClass{"K", 1, 5}, "L(5,1) lambda = (1,5)");
  c.expect(linking_number(fixtures::lens5_pair(), "J", "K") == Rational(-1, 5), "L(5,1) lk_M = -1/5");
  c.expect(delta_from_divisor(lens, {"K"}, Divisor{{"K", 5}}) == embed_local(preferred_longitude(lens, "K").lambda),
           "L(5,1) Delta(5K) = <lambda_K>");
  return c;
}

Check local_structure() {
  Check c;
  std::mt19937_64 rng(5);
  auto r = [&] { return oracle::uniform(rng, -50, 50); };
  for (int i = 0; i < 10000 && c.ok; ++i) {
    long ax = r(), ay = r(), bx = r(), by = r(), cx = r(), cy = r(), k = r();
    PeripheralClass a{"K", ax, ay}, b{"K", bx, by}, cc{"K", cx, cy};
    c.expect(local_intersection(a, b) == -local_intersection(b, a), "antisymmetry");
    c.expect(local_intersection(a, a) == 0, "alternating");
    PeripheralClass combo{"K", ax + k * cx, ay + k * cy};
    c.expect(local_intersection(combo, b) == local_intersection(a, b) + Integer(k) * local_intersection(cc, b),
             "bilinearity");
    c.expect(local_intersection(a, b) == Integer(ax * by - bx * ay), "determinant formula");
    // Exactness of 0 -> <mu> -> H_1(dV) -> Z: v(a) = 0 iff a is a meridian multiple.
    c.expect((valuation(a) == 0) == (ay == 0), "kernel of v is the meridian span");
    c.expect(valuation(combo) == valuation(a) + Integer(k) * valuation(cc), "v additive");
  }
  c.expect(valuation({"K", 0, 1}) == 1, "v surjective");
  // n_K | v(lambda_K) on every knot of 1000 fuzzed presentations.
  fuzz::FuzzConfig cfg;
  fuzz::SplitMix64 srng(2718);
  for (int i = 0; i < 1000 && c.ok; ++i) {
    auto m = load_and_validate(fuzz::sample_presentation(srng, cfg));
    for (const auto& k : m.knot_names()) {
      Integer n = knot_class(m, k).order;
      Integer v = valuation(preferred_longitude(m, k).lambda);
      c.expect(v > 0 && mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t()), "n_K does not divide v(lambda_K)");
    }
  }
  property_clean(c, "local_structure", 1000);
  return c;
}

Check decomposition() {
  Check c;
  property_clean(c, "decomposition", 500);
  property_clean(c, "kummer_consistency", 500);
  return c;
}

IntMatrix to_int_matrix(const oracle::SmallMatrix& a, std::size_t cols) {
  IntMatrix m(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(a[i][j]);
  return m;
}

Integer det(const IntMatrix& m) {
  oracle::SmallMatrix a(m.rows(), std::vector<oracle::Small>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_si();
  return Integer(static_cast<long>(oracle::det_by_expansion(a)));
}

Check linear_algebra() {
  Check c;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000 && c.ok; ++trial) {
    const std::size_t m = oracle::uniform(rng, 1, 5), n = oracle::uniform(rng, 1, 5);
    oracle::SmallMatrix a(m, std::vector<oracle::Small>(n));
    for (auto& row : a)
      for (auto& v : row) v = oracle::uniform(rng, -9, 9);
    IntMatrix im = to_int_matrix(a, n);
    auto s = smith_normal_form(im);
    c.expect(s.U * im * s.V == s.D, "U A V != D");
    c.expect(abs(det(s.U)) == 1 && abs(det(s.V)) == 1, "U or V not unimodular");
    auto d = s.diagonal();
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) c.expect(s.D(i, j) == 0, "D not diagonal");
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) c.expect(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()), "divisibility chain");
    auto expected = oracle::invariant_factors_by_minors(a, n);
    for (std::size_t i = 0; i < d.size(); ++i)
      c.expect(d[i] == Integer(static_cast<long>(expected[i])), "invariant factors differ from minors oracle");
    if (m == n) {
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      c.expect(prod == abs(det(im)), "|det| != product of invariant factors");
    }
  }
  for (int trial = 0; trial < 2000 && c.ok; ++trial) {
    const std::size_t rows = oracle::uniform(rng, 1, 2), k = oracle::uniform(rng, 1, 2);
    oracle::SmallMatrix a(rows, std::vector<oracle::Small>(k));
    std::vector<oracle::Small> moduli(rows), rhs(rows);
    for (auto& row : a)
      for (auto& v : row) v = oracle::uniform(rng, -4, 4);
    for (auto& q : moduli) q = oracle::uniform(rng, 1, 12);
    for (auto& v : rhs) v = oracle::uniform(rng, -4, 4);
    oracle::Small lim = 1;
    for (auto q : moduli) lim = std::lcm(lim, q);
    bool expected = oracle::congruence_solvable(a, k, moduli, rhs, lim);
    IntMatrix ia = to_int_matrix(a, k), ib(rows, rows);
    IntVector ic(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      ib(i, i) = static_cast<long>(moduli[i]);
      ic[i] = static_cast<long>(rhs[i]);
    }
    auto x = solve_mod_subgroup(ia, ib, ic);
    c.expect(x.has_value() == expected, "solve_mod_subgroup disagrees with exhaustive search");
    if (x) {
      IntVector residual = ia * *x - ic;
      for (std::size_t i = 0; i < rows; ++i)
        c.expect(mpz_divisible_p(residual[i].get_mpz_t(), ib(i, i).get_mpz_t()), "returned x is not a solution");
    }
  }
  return c;
}

Check determinism() {
  Check c;
  auto once = [] {
    std::ostringstream out, err;
    int code = cli::run_command({"fuzz", "--trials", "500", "--seed", "7"}, out, err);
    return std::make_pair(code, out.str());
  };
  auto [c1, r1] = once();
  auto [c2, r2] = once();
  c.expect(c1 == 0 && c2 == 0, "fuzz run reported a violation");
  c.expect(!r1.empty() && r1 == r2, "reports differ between runs");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 reciprocity: iota(a,b) = 0 on principal pairs, 1000 fuzzed instances", reciprocity},
      {"2 key equality: Ker rho~ = Im Delta on fuzzed divisors", key_equality},
      {"3 product formula: global symbol = sum of local symbols, >= 1000 pairs", product_formula},
      {"4 worked oracles: Hopf link and L(5,1)", worked_oracles},
      {"5 local structure: 10^4 peripheral pairs, valuation, n_K | v(lambda_K)", local_structure},
      {"6 decomposition: efg = |A|, ramification exactly on the branch locus", decomposition},
      {"7 linear algebra: 10^4 Smith forms vs minors oracle, congruence solver", linear_algebra},
      {"8 determinism: two `fuzz --trials 500 --seed 7` runs are identical", determinism},
  };

  auto t0 = std::chrono::steady_clock::now();
  shared_fuzz_report();
  double fuzz_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("shared fuzz run: 1000 trials, seed 42, %.2f s, %llu non-admissible\n", fuzz_seconds,
              static_cast<unsigned long long>(shared_fuzz_report().non_admissible));

  int failures = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds) {
      result.ok = false;
      result.why = "exceeded time budget";
    }
    std::printf("%s criterion %s (%.2f s)%s%s\n", result.ok ? "PASS" : "FAIL", cr.name, secs,
                result.ok ? "" : " -- ", result.why.c_str());
    failures += result.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
