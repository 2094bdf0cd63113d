#pragma once

// Randomised checking of the reciprocity laws and structural identities on
// sampled surgery presentations, with greedy shrinking of counterexamples.
//
// Runs are reproducible from (seed, config): every trial draws from its own
// SplitMix64 stream keyed by the trial index, so the report does not depend
// on the number of worker threads.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "idelic/class_field.hpp"
#include "idelic/error.hpp"
#include "idelic/ideles.hpp"
#include "idelic/io.hpp"
#include "idelic/local_theory.hpp"
#include "idelic/presentation.hpp"
#include "idelic/smith.hpp"

namespace idelic::fuzz {

struct FuzzConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_surgery = 4;
  std::size_t max_link = 5;
  long entry_bound = 5;
  long coeff_bound = 9;
  unsigned threads = 0;         // 0: hardware concurrency
  bool corrupt_oracle = false;  // harness self-test: perturbs the pairing check
};

struct PropertyTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct Failure {
  std::uint64_t trial = 0;
  std::string property;
  std::string detail;
  SurgeryPresentation instance;
};

struct Report {
  FuzzConfig config;
  std::map<std::string, PropertyTally> properties;
  std::uint64_t non_admissible = 0;
  std::optional<Failure> failure;  // lowest-index failure, shrunk
  std::uint64_t shrink_steps = 0;
  double wall_seconds = 0;

  bool ok() const { return !failure.has_value(); }
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "class_group_cokernel", "corollary_consistency", "decomposition", "delta_rational_route",
      "hilbert_mod_n",        "key_equality",          "kummer_consistency", "linking_symmetry",
      "local_structure",      "pairing_antisymmetry_bilinearity", "product_formula", "reciprocity",
      "representative_independence"};
  return names;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline SurgeryPresentation sample_presentation(SplitMix64& rng, const FuzzConfig& cfg) {
  const std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cfg.max_surgery)));
  const std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(cfg.max_link)));
  const long b = cfg.entry_bound;
  SurgeryPresentation p;
  for (std::size_t i = 0; i < s; ++i) p.surgery_names.push_back("L" + std::to_string(i + 1));
  for (std::size_t i = 0; i < r; ++i) p.knot_names.push_back("K" + std::to_string(i + 1));
  do {
    p.lambda = IntMatrix(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i; j < s; ++j) p.lambda(i, j) = p.lambda(j, i) = rng.uniform(-b, b);
  } while (!group_from_relations(s, p.lambda)->is_finite());
  p.lk_with_surgery = IntMatrix(r, s);
  p.lk_mutual = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) p.lk_with_surgery(i, j) = rng.uniform(-b, b);
    for (std::size_t j = i + 1; j < r; ++j) p.lk_mutual(i, j) = p.lk_mutual(j, i) = rng.uniform(-b, b);
  }
  return p;
}

namespace detail {

struct TrialOutcome {
  std::map<std::string, PropertyTally> tally;
  std::optional<std::pair<std::string, std::string>> first_failure;
  bool admissible = true;
};

class Checker {
 public:
  Checker(const Manifold& m, std::uint64_t sample_seed, const FuzzConfig& cfg, TrialOutcome& out)
      : m_(m), rng_(sample_seed), cfg_(cfg), out_(out), stage_(m, m.knot_names()) {}

  void run() {
    basis_ = principal_lattice_basis(stage_);
    admissible_ = is_admissible(m_).admissible;
    out_.admissible = admissible_;
    guard("reciprocity", [&] { reciprocity(); });
    guard("pairing_antisymmetry_bilinearity", [&] { pairing_algebra(); });
    guard("key_equality", [&] { key_equality(); });
    guard("delta_rational_route", [&] { delta_rational_route(); });
    guard("representative_independence", [&] { representative_independence(); });
    guard("corollary_consistency", [&] { corollary_consistency(); });
    guard("product_formula", [&] { product_formula(); });
    guard("local_structure", [&] { local_structure(); });
    guard("decomposition", [&] { decomposition(); });
    guard("hilbert_mod_n", [&] { hilbert_mod_n(); });
    guard("kummer_consistency", [&] { kummer_consistency(); });
    guard("class_group_cokernel", [&] { class_group_cokernel(); });
    guard("linking_symmetry", [&] { linking_symmetry(); });
  }

 private:
  struct Violation {
    std::string detail;
  };
  struct Skip {};

  void guard(const std::string& name, const std::function<void()>& body) {
    auto& t = out_.tally[name];
    try {
      body();
      ++t.passed;
    } catch (const Skip&) {
      ++t.skipped;
    } catch (const Violation& v) {
      ++t.failed;
      if (!out_.first_failure) out_.first_failure = {name, v.detail};
    } catch (const std::exception& e) {
      ++t.failed;
      if (!out_.first_failure) out_.first_failure = {name, std::string("unexpected exception: ") + e.what()};
    }
  }

  static void require(bool cond, const std::string& what) {
    if (!cond) throw Violation{what};
  }

  template <class... Parts>
  static std::string describe(const Parts&... parts) {
    std::ostringstream os;
    ((os << parts), ...);
    return os.str();
  }

  long coeff() { return rng_.uniform(-cfg_.coeff_bound, cfg_.coeff_bound); }

  Idele random_principal() {
    Idele a;
    for (const auto& b : basis_) a += b * Integer(coeff());
    return a;
  }

  Idele random_idele() {
    Idele a;
    for (const auto& k : m_.knot_names()) a.set(k, coeff(), coeff());
    return a;
  }

  Divisor random_divisor() {
    Divisor d;
    for (const auto& k : m_.knot_names()) d.set(k, rng_.uniform(-cfg_.entry_bound, cfg_.entry_bound));
    return d;
  }

  Integer checked_pairing(const Idele& a, const Idele& b) const {
    Integer v = global_pairing(a, b);
    if (cfg_.corrupt_oracle)
      for (const auto& [k, c] : a.support()) v += c.x * b.at(k).x;
    return v;
  }

  IntVector divisor_class(const Divisor& d) const {
    IntVector cls(m_.surgery_count());
    for (const auto& [k, c] : d.coeffs()) cls = cls + scaled(m_.surgery_linking(m_.knot_index(k)), c);
    return cls;
  }

  void reciprocity() {
    for (int i = 0; i < 4; ++i) {
      Idele a = random_principal(), b = random_principal();
      Integer v = checked_pairing(a, b);
      require(v == 0, describe("iota(a, b) = ", v, " for principal a = ", a, ", b = ", b));
    }
  }

  void pairing_algebra() {
    for (int i = 0; i < 3; ++i) {
      Idele a = random_idele(), b = random_idele(), c = random_idele();
      Integer k = coeff();
      require(global_pairing(a, b) == -global_pairing(b, a), describe("antisymmetry fails for ", a, ", ", b));
      require(global_pairing(a + c * k, b) == global_pairing(a, b) + k * global_pairing(c, b),
              describe("bilinearity fails for ", a, ", ", b, ", ", c));
    }
  }

  void key_equality() {
    require(basis_.size() == m_.knot_count(), "principal lattice rank differs from link size");
    for (const auto& b : basis_) {
      require(is_principal(stage_, b), describe("basis element ", b, " not in Ker rho~"));
      Divisor d = longitude_divisor(b);
      require(m_.h1()->is_zero(divisor_class(d)), describe("longitude divisor of ", b, " nontrivial in H_1(M)"));
      require(delta_from_divisor(stage_, d) == b, describe("Delta(v(b)) != b for b = ", b));
    }
    for (int i = 0; i < 3; ++i) {
      Divisor d = i == 0 ? longitude_divisor(random_principal()) : random_divisor();
      const bool trivial = m_.h1()->is_zero(divisor_class(d));
      std::optional<Idele> a;
      try {
        a = delta_from_divisor(stage_, d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivisorNotPrincipal) throw;
      }
      require(a.has_value() == trivial, "Delta(D) succeeds exactly when D is trivial in H_1(M) fails");
      if (!a) continue;
      require(is_principal(stage_, *a), describe("Delta(D) = ", *a, " not in Ker rho~"));
      require(longitude_divisor(*a) == d, "Delta(D) has wrong longitude coefficients");
    }
  }

  // x = -Q D with Q(K, K') = lk_M(K, K') off the diagonal and
  // -l_K lambda^{-1} l_K on it, evaluated over Q.
  void delta_rational_route() {
    Divisor d = longitude_divisor(random_principal());
    Idele a = delta_from_divisor(stage_, d);
    const auto& link = m_.knot_names();
    for (std::size_t k = 0; k < link.size(); ++k) {
      Rational expected = 0;
      for (std::size_t j = 0; j < link.size(); ++j) {
        Rational q = j == k ? -::idelic::detail::surgery_correction(m_, k, k) : linking_number(m_, link[k], link[j]);
        expected -= q * Rational(d.at(link[j]));
      }
      require(Rational(a.at(link[k]).x) == expected,
              describe("meridian coefficient at ", link[k], " is ", a.at(link[k]).x, ", rational route gives ",
                       expected.get_str()));
    }
  }

  void representative_independence() {
    Divisor d = longitude_divisor(random_principal());
    Idele a = delta_from_divisor(stage_, d);
    std::vector<std::string> reversed(m_.knot_names().rbegin(), m_.knot_names().rend());
    ComplementHomology other(m_, reversed);
    Idele b = delta_from_divisor(other, d);
    require(is_principal(stage_, a - b), "difference of Delta representatives not principal");
    Idele beta = random_principal();
    require(global_pairing(a - b, beta) == 0, "difference of representatives pairs nontrivially");
    require(a == b, describe("Delta depends on link order: ", a, " vs ", b));
  }

  void corollary_consistency() {
    Divisor d = longitude_divisor(random_principal());
    Idele a = delta_from_divisor(stage_, d);
    for (const auto& j : m_.knot_names()) {
      if (d.at(j) != 0) continue;
      Rational expected = 0;
      for (const auto& [k, c] : d.coeffs()) expected += Rational(c) * linking_number(m_, j, k);
      Integer got = global_pairing(embed_local({j, 0, 1}), a);
      require(Rational(got) == expected,
              describe("iota(<l0_", j, ">, Delta D) = ", got, " but lk(", j, ", dS) = ", expected.get_str()));
    }
  }

  // A homomorphism to prod Z/n_f built on the Smith basis of H_1(M - L).
  CoverSpec random_cover() {
    IntVector orders{Integer(rng_.uniform(2, 6))};
    if (rng_.uniform(0, 1)) orders.push_back(Integer(rng_.uniform(2, 6)));
    SmithForm s = smith_normal_form(stage_.relations());
    const std::size_t g = stage_.generator_count();
    std::vector<IntVector> values(g, IntVector(orders.size()));
    for (std::size_t f = 0; f < orders.size(); ++f) {
      IntVector psi(g);
      for (std::size_t i = 0; i < g; ++i) {
        Integer d = i < s.rank ? s.D(i, i) : Integer(0);
        psi[i] = (orders[f] / gcd(orders[f], d)) * Integer(rng_.uniform(0, 6));
      }
      for (std::size_t j = 0; j < g; ++j)
        for (std::size_t i = 0; i < g; ++i) values[j][f] += psi[i] * s.U(i, j);
    }
    return make_cover(stage_, FiniteAbelianGroup(orders), values);
  }

  void product_formula() {
    CoverSpec h = random_cover();
    for (int i = 0; i < 3; ++i) {
      Idele alpha = random_idele();
      IntVector product = h.target().zero();
      for (const auto& k : m_.knot_names()) {
        IntVector local = local_symbol(alpha.at(k), h);
        require(global_symbol(embed_local(alpha.at(k)), h) == local, "compatibility square fails at " + k);
        product = product + local;
      }
      require(global_symbol(alpha, h) == h.target().reduce(product),
              describe("global symbol differs from product of local symbols for ", alpha));
    }
    Idele p = random_principal();
    require(is_zero_vector(global_symbol(p, h)), describe("symbol of principal ", p, " is nontrivial"));
  }

  void local_structure() {
    for (int i = 0; i < 8; ++i) {
      PeripheralClass a{"K", coeff(), coeff()}, b{"K", coeff(), coeff()}, c{"K", coeff(), coeff()};
      Integer k = coeff();
      require(local_intersection(a, b) == -local_intersection(b, a), "local antisymmetry fails");
      PeripheralClass combo{"K", a.x + k * c.x, a.y + k * c.y};
      require(local_intersection(combo, b) == local_intersection(a, b) + k * local_intersection(c, b),
              "local bilinearity fails");
      require(valuation(PeripheralClass{"K", a.x, 0}) == 0, "meridian span not in kernel of v");
      require(valuation(combo) == valuation(a) + k * valuation(c), "valuation not additive");
    }
    require(valuation({"K", 0, 1}) == 1, "valuation not surjective");
    for (const auto& k : m_.knot_names()) {
      auto d = preferred_longitude(m_, k);
      ComplementHomology single(m_, {k});
      require(single.group()->is_zero(single.image(d.lambda)), "lambda_" + k + " not in the peripheral kernel");
      Integer n = knot_class(m_, k).order;
      require(mpz_divisible_p(valuation(d.lambda).get_mpz_t(), n.get_mpz_t()),
              describe("n_K = ", n, " does not divide v(lambda) = ", valuation(d.lambda)));
      require(d.basis_flag == (abs(local_intersection({k, 1, 0}, d.lambda)) == 1), "basis flag inconsistent");
    }
  }

  void decomposition() {
    CoverSpec h = random_cover();
    if (!is_surjective(h)) throw Skip{};
    for (const auto& k : m_.knot_names()) {
      auto dd = decomposition_data(h, k);
      require(dd.e * dd.f * dd.g == h.target().order(),
              describe("e f g = ", dd.e * dd.f * dd.g, " != |A| = ", h.target().order(), " at ", k));
    }
  }

  void hilbert_mod_n() {
    Integer n = rng_.uniform(2, 12);
    Idele a = random_principal(), b = random_principal();
    Integer total = 0;
    for (const auto& k : m_.knot_names()) total += hilbert_symbol(a, b, k, n);
    require(mod_nonneg(total, n) == 0, describe("sum of Hilbert symbols mod ", n, " is ", mod_nonneg(total, n)));
  }

  void kummer_consistency() {
    if (!admissible_) throw Skip{};
    Idele b = random_principal();
    Integer n = rng_.uniform(2, 7);
    KummerCover kc = kummer_cover(stage_, longitude_divisor(b), n);
    require(kc.b == b, "Kummer cover built from a different principal idele");
    for (const auto& k : m_.knot_names()) {
      bool branched = std::find(kc.branch_locus.begin(), kc.branch_locus.end(), k) != kc.branch_locus.end();
      require((decomposition_data(kc.cover, k).e > 1) == branched, "ramification disagrees with branch locus at " + k);
    }
    for (int i = 0; i < 3; ++i) {
      Idele gamma = random_idele();
      require(global_symbol(gamma, kc.cover)[0] == mod_nonneg(global_pairing(gamma, b), n),
              describe("psi(rho(gamma)) != iota(gamma, b) mod ", n, " for gamma = ", gamma));
    }
  }

  void class_group_cokernel() {
    auto cg = idele_class_group(stage_);
    auto cert = is_admissible(m_);
    require(cg.cokernel_factors == cert.quotient_factors, "coker(rho~) differs from H_1(M) / <[K]>");
    if (admissible_) require(cg.cokernel_factors.empty(), "admissible link with nontrivial coker(rho~)");
  }

  void linking_symmetry() {
    const auto& link = m_.knot_names();
    for (std::size_t i = 0; i < link.size(); ++i)
      for (std::size_t j = i + 1; j < link.size(); ++j)
        require(linking_number(m_, link[i], link[j]) == linking_number(m_, link[j], link[i]),
                "lk not symmetric for " + link[i] + ", " + link[j]);
  }

  const Manifold& m_;
  SplitMix64 rng_;
  const FuzzConfig& cfg_;
  TrialOutcome& out_;
  ComplementHomology stage_;
  std::vector<Idele> basis_;
  bool admissible_ = true;
};

inline TrialOutcome check_instance(const SurgeryPresentation& p, std::uint64_t sample_seed, const FuzzConfig& cfg) {
  TrialOutcome out;
  Manifold m = load_and_validate(p);
  Checker(m, sample_seed, cfg, out).run();
  return out;
}

inline bool still_fails(const SurgeryPresentation& p, std::uint64_t sample_seed, const FuzzConfig& cfg) {
  try {
    return check_instance(p, sample_seed, cfg).first_failure.has_value();
  } catch (const Error&) {
    return false;  // candidate is not a valid presentation
  }
}

inline SurgeryPresentation without_knot(const SurgeryPresentation& p, std::size_t k) {
  SurgeryPresentation q;
  q.surgery_names = p.surgery_names;
  q.lambda = p.lambda;
  const std::size_t r = p.knot_names.size(), s = p.surgery_names.size();
  q.lk_with_surgery = IntMatrix(r - 1, s);
  q.lk_mutual = IntMatrix(r - 1, r - 1);
  for (std::size_t i = 0, qi = 0; i < r; ++i) {
    if (i == k) continue;
    q.knot_names.push_back(p.knot_names[i]);
    for (std::size_t j = 0; j < s; ++j) q.lk_with_surgery(qi, j) = p.lk_with_surgery(i, j);
    for (std::size_t j = 0, qj = 0; j < r; ++j) {
      if (j == k) continue;
      q.lk_mutual(qi, qj++) = p.lk_mutual(i, j);
    }
    ++qi;
  }
  return q;
}

inline SurgeryPresentation without_surgery(const SurgeryPresentation& p, std::size_t c) {
  SurgeryPresentation q;
  q.knot_names = p.knot_names;
  q.lk_mutual = p.lk_mutual;
  const std::size_t r = p.knot_names.size(), s = p.surgery_names.size();
  q.lambda = IntMatrix(s - 1, s - 1);
  q.lk_with_surgery = IntMatrix(r, s - 1);
  for (std::size_t j = 0, qj = 0; j < s; ++j) {
    if (j == c) continue;
    q.surgery_names.push_back(p.surgery_names[j]);
    for (std::size_t i = 0, qi = 0; i < s; ++i) {
      if (i == c) continue;
      q.lambda(qi++, qj) = p.lambda(i, j);
    }
    for (std::size_t i = 0; i < r; ++i) q.lk_with_surgery(i, qj) = p.lk_with_surgery(i, j);
    ++qj;
  }
  return q;
}

// Candidate simplifications, smallest structural change last.
inline std::vector<SurgeryPresentation> shrink_candidates(const SurgeryPresentation& p) {
  std::vector<SurgeryPresentation> out;
  for (std::size_t k = 0; k < p.knot_names.size() && p.knot_names.size() > 1; ++k) out.push_back(without_knot(p, k));
  for (std::size_t c = 0; c < p.surgery_names.size(); ++c) out.push_back(without_surgery(p, c));

  auto toward_zero = [](const Integer& v) {
    std::vector<Integer> steps;
    if (v == 0) return steps;
    steps.push_back(0);
    Integer half = v / 2;
    if (half != 0) steps.push_back(half);
    steps.push_back(v > 0 ? Integer(v - 1) : Integer(v + 1));
    return steps;
  };
  auto symmetric_edits = [&](IntMatrix SurgeryPresentation::*field, bool symmetric) {
    const IntMatrix& m = p.*field;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = symmetric ? i : 0; j < m.cols(); ++j)
        for (const auto& v : toward_zero(m(i, j))) {
          SurgeryPresentation q = p;
          (q.*field)(i, j) = v;
          if (symmetric) (q.*field)(j, i) = v;
          out.push_back(std::move(q));
        }
  };
  symmetric_edits(&SurgeryPresentation::lambda, true);
  symmetric_edits(&SurgeryPresentation::lk_with_surgery, false);
  symmetric_edits(&SurgeryPresentation::lk_mutual, true);
  return out;
}

}  // namespace detail

/// Greedy shrinking: repeatedly take the first simpler candidate that still
/// fails, until none does.
inline std::pair<SurgeryPresentation, std::uint64_t> shrink(SurgeryPresentation p, std::uint64_t sample_seed,
                                                            const FuzzConfig& cfg, std::uint64_t max_steps = 2000) {
  std::uint64_t steps = 0;
  bool progress = true;
  while (progress && steps < max_steps) {
    progress = false;
    for (auto& candidate : detail::shrink_candidates(p)) {
      if (detail::still_fails(candidate, sample_seed, cfg)) {
        p = std::move(candidate);
        ++steps;
        progress = true;
        break;
      }
    }
  }
  return {std::move(p), steps};
}

inline std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (trial + 1)));
  return mix.next();
}

inline Report fuzz_suite(const FuzzConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.max_surgery < 1 || cfg.max_link < 1 || cfg.entry_bound < 1 || cfg.coeff_bound < 1)
    throw Error(ErrorCode::UsageError, "fuzz bounds must be >= 1");

  struct Slot {
    SurgeryPresentation instance;
    std::uint64_t sample_seed = 0;
    detail::TrialOutcome outcome;
  };
  std::vector<Slot> slots(cfg.trials);

  auto run_trial = [&](std::uint64_t i) {
    SplitMix64 rng(trial_stream_seed(cfg.seed, i));
    Slot& slot = slots[i];
    slot.instance = sample_presentation(rng, cfg);
    slot.sample_seed = rng.next();
    slot.outcome = detail::check_instance(slot.instance, slot.sample_seed, cfg);
  };

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(cfg.trials, 1)));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < cfg.trials; ++i) run_trial(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t i = w; i < cfg.trials; i += workers) run_trial(i);
      });
    for (auto& t : pool) t.join();
  }

  Report report;
  report.config = cfg;
  for (const auto& name : property_names()) report.properties[name];
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const auto& o = slots[i].outcome;
    for (const auto& [name, t] : o.tally) {
      auto& agg = report.properties[name];
      agg.passed += t.passed;
      agg.failed += t.failed;
      agg.skipped += t.skipped;
    }
    if (!o.admissible) ++report.non_admissible;
    if (o.first_failure && !report.failure) {
      auto [small, steps] = shrink(slots[i].instance, slots[i].sample_seed, cfg);
      auto again = detail::check_instance(small, slots[i].sample_seed, cfg);
      const auto& f = again.first_failure ? *again.first_failure : *o.first_failure;
      report.failure = Failure{i, f.first, f.second, small};
      report.shrink_steps = steps;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// The report as JSON. Wall time is deliberately absent so identical runs
/// serialise identically; callers print it separately.
inline nlohmann::json report_to_json(const Report& r) {
  using nlohmann::json;
  json props = json::object();
  for (const auto& [name, t] : r.properties)
    props[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
  Rational skip_rate = r.config.trials ? Rational(Integer(std::to_string(r.non_admissible)),
                                                  Integer(std::to_string(r.config.trials)))
                                       : Rational(0);
  json out = {
      {"config",
       {{"trials", r.config.trials},
        {"seed", r.config.seed},
        {"max_surgery", r.config.max_surgery},
        {"max_link", r.config.max_link},
        {"entry_bound", r.config.entry_bound},
        {"coeff_bound", r.config.coeff_bound},
        {"corrupt_oracle", r.config.corrupt_oracle}}},
      {"properties", props},
      {"non_admissible_trials", r.non_admissible},
      {"non_admissible_rate", io::rational_string(skip_rate)},
      {"ok", r.ok()},
  };
  if (r.failure) {
    out["failure"] = {{"trial", r.failure->trial},
                      {"property", r.failure->property},
                      {"detail", r.failure->detail},
                      {"shrink_steps", r.shrink_steps},
                      {"instance", io::presentation_to_json(r.failure->instance)}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

}  // namespace idelic::fuzz
