#pragma once

// Finite abelian branched covers as homomorphisms H_1(M - L) -> A, norm
// residue symbols, decomposition data and Kummer (cyclic) covers.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idelic/abelian_group.hpp"
#include "idelic/error.hpp"
#include "idelic/ideles.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/local_theory.hpp"
#include "idelic/presentation.hpp"
#include "idelic/smith.hpp"

namespace idelic {

/// Z/n_1 x ... x Z/n_t. Elements are residue tuples with entries in [0, n_i).
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(IntVector orders) : orders_(std::move(orders)) {
    for (const auto& n : orders_)
      if (n < 1) throw Error(ErrorCode::BadModulus, "cyclic factor orders must be >= 1");
  }

  const IntVector& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }

  Integer order() const {
    Integer n = 1;
    for (const auto& o : orders_) n *= o;
    return n;
  }

  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_nonneg(v[i], orders_[i]);
    return v;
  }

  IntVector zero() const { return IntVector(orders_.size()); }

  Integer element_order(const IntVector& v) const {
    Integer n = 1;
    for (std::size_t i = 0; i < v.size(); ++i) n = lcm(n, orders_[i] / gcd(orders_[i], v[i]));
    return n;
  }

  /// Order of the subgroup generated by `gens`.
  Integer subgroup_order(const std::vector<IntVector>& gens) const {
    const std::size_t t = orders_.size();
    IntMatrix rel(t, t);
    for (std::size_t i = 0; i < t; ++i) rel(i, i) = orders_[i];
    auto quotient = group_from_relations(t, hconcat(rel, IntMatrix::from_columns(t, gens)));
    return order() / *quotient->order();
  }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  IntVector orders_;
};

/// A homomorphism phi: H_1(M - L) -> A, stored by its values on the
/// generators m_1..m_s, mu_K (K in L).
class CoverSpec {
 public:
  const ComplementHomology& stage() const noexcept { return stage_; }
  const std::vector<std::string>& branch_link() const noexcept { return stage_.sublink(); }
  const FiniteAbelianGroup& target() const noexcept { return target_; }
  /// rank(A) x generator_count; column g is phi(generator g).
  const IntMatrix& phi() const noexcept { return phi_; }

  IntVector generator_value(std::size_t g) const { return phi_.column(g); }

  IntVector apply(const IntVector& h1_coords) const { return target_.reduce(phi_ * h1_coords); }

 private:
  friend CoverSpec make_cover(ComplementHomology, FiniteAbelianGroup, const std::vector<IntVector>&);
  CoverSpec(ComplementHomology stage, FiniteAbelianGroup target, IntMatrix phi)
      : stage_(std::move(stage)), target_(std::move(target)), phi_(std::move(phi)) {}

  ComplementHomology stage_;
  FiniteAbelianGroup target_;
  IntMatrix phi_;
};

inline CoverSpec make_cover(ComplementHomology stage, FiniteAbelianGroup target,
                            const std::vector<IntVector>& phi_values) {
  const std::size_t g = stage.generator_count(), t = target.rank();
  if (phi_values.size() != g)
    throw Error(ErrorCode::BadDimensions, "phi needs " + std::to_string(g) + " generator values, got " +
                                              std::to_string(phi_values.size()));
  for (const auto& v : phi_values)
    if (v.size() != t)
      throw Error(ErrorCode::BadDimensions, "each phi value needs " + std::to_string(t) + " entries");

  IntMatrix phi(t, g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < t; ++i) phi(i, j) = mod_nonneg(phi_values[j][i], target.orders()[i]);

  IntMatrix images = phi * stage.relations();
  for (std::size_t j = 0; j < images.cols(); ++j)
    for (std::size_t i = 0; i < t; ++i)
      if (!mpz_divisible_p(images(i, j).get_mpz_t(), target.orders()[i].get_mpz_t()))
        throw Error(ErrorCode::CoverIllDefined,
                    "relation " + std::to_string(j) + " does not map to zero in the target group");
  return CoverSpec(std::move(stage), std::move(target), std::move(phi));
}

inline CoverSpec make_cover(const Manifold& m, std::vector<std::string> sublink, FiniteAbelianGroup target,
                            const std::vector<IntVector>& phi_values) {
  return make_cover(ComplementHomology(m, std::move(sublink)), std::move(target), phi_values);
}

/// (alpha, h) = phi(rho~(alpha)).
inline IntVector global_symbol(const Idele& alpha, const CoverSpec& h) {
  return h.apply(rho_tilde(h.stage(), alpha).coords);
}

/// (a, h_K) = phi of the peripheral image of a.
inline IntVector local_symbol(const PeripheralClass& a, const CoverSpec& h) {
  return h.apply(h.stage().image(a, ErrorCode::KnotOutsideL));
}

struct DecompositionData {
  Integer e;  // ramification index: order of phi(mu_K)
  Integer f;  // |phi(H_1(dV_K))| / e
  Integer g;  // [A : phi(H_1(dV_K))]
  friend bool operator==(const DecompositionData&, const DecompositionData&) = default;
};

inline DecompositionData decomposition_data(const CoverSpec& h, std::string_view knot) {
  auto t = h.stage().position(knot);
  if (!t) throw Error(ErrorCode::KnotOutsideL, "knot '" + std::string(knot) + "' is not in the branch link");
  IntVector meridian = h.apply(h.stage().meridian_image(*t));
  IntVector longitude = h.apply(h.stage().longitude_image(*t));
  const auto& a = h.target();
  Integer e = a.element_order(meridian);
  Integer decomposition = a.subgroup_order({meridian, longitude});
  return {e, decomposition / e, a.order() / decomposition};
}

/// Whether phi is onto A.
inline bool is_surjective(const CoverSpec& h) {
  std::vector<IntVector> gens;
  for (std::size_t g = 0; g < h.stage().generator_count(); ++g) gens.push_back(h.generator_value(g));
  return h.target().subgroup_order(gens) == h.target().order();
}

struct KummerCover {
  CoverSpec cover;
  Idele b;                               // Delta(D)
  std::vector<std::string> branch_locus;  // K with D(K) != 0 mod n
};

/// The Z/n cover defined by iota(., Delta(D)) mod n, factored through
/// H_1(M - L).
inline KummerCover kummer_cover(const ComplementHomology& stage, const Divisor& d, const Integer& n) {
  if (n < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  Idele b = delta_from_divisor(stage, d);

  const std::size_t l = stage.sublink().size(), g = stage.generator_count();
  auto coker = group_from_relations(g, hconcat(stage.relations(), stage.peripheral()));
  if (!coker->is_trivial())
    throw Error(ErrorCode::NotAdmissible, "knots of the sublink do not generate H_1(M)");

  // psi . P_gamma = iota(gamma, b) for the 2|L| idele generators, and
  // psi . R_j = 0 for each relation; all modulo n.
  const IntMatrix& p = stage.peripheral();
  const IntMatrix& r = stage.relations();
  IntMatrix system = hconcat(p, r).transpose();
  IntVector rhs(system.rows());
  for (std::size_t t = 0; t < l; ++t) {
    auto local = b.at(stage.sublink()[t]);
    rhs[2 * t] = local.y;       // iota((1,0), (x,y)) = y
    rhs[2 * t + 1] = -local.x;  // iota((0,1), (x,y)) = -x
  }
  IntMatrix modulus(system.rows(), system.rows());
  for (std::size_t i = 0; i < system.rows(); ++i) modulus(i, i) = n;
  auto psi = solve_mod_subgroup(system, modulus, rhs);
  if (!psi) throw std::logic_error("iota(., b) does not factor through H_1(M - L)");

  std::vector<IntVector> values;
  for (std::size_t j = 0; j < g; ++j) values.push_back({mod_nonneg((*psi)[j], n)});

  KummerCover out{make_cover(stage, FiniteAbelianGroup({n}), values), std::move(b), {}};
  for (const auto& k : stage.sublink())
    if (mod_nonneg(d.at(k), n) != 0) out.branch_locus.push_back(k);
  return out;
}

inline KummerCover kummer_cover(const Manifold& m, const std::vector<std::string>& sublink, const Divisor& d,
                                const Integer& n) {
  return kummer_cover(ComplementHomology(m, sublink), d, n);
}

/// iota_K(a_K, b_K) mod n, in [0, n).
inline Integer hilbert_symbol(const Idele& a, const Idele& b, const std::string& knot, const Integer& n) {
  if (n < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  return mod_nonneg(local_intersection(a.at(knot), b.at(knot)), n);
}

}  // namespace idelic
