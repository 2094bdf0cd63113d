#pragma once

// Ideles, principal ideles and the global intersection pairing.
//
// At a finite stage L an idele is a family of peripheral classes supported
// on knots of L, i.e. a vector in Z^{2|L|} ordered (x_K, y_K) along L.
// Principal ideles are computed as Ker(rho~), the ideles whose peripheral
// images cancel in H_1(M - L); Delta(D) constructs the representative with
// prescribed longitude coefficients.

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "idelic/abelian_group.hpp"
#include "idelic/error.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/local_theory.hpp"
#include "idelic/presentation.hpp"
#include "idelic/smith.hpp"

namespace idelic {

struct LocalCoords {
  Integer x;
  Integer y;
  friend bool operator==(const LocalCoords&, const LocalCoords&) = default;
};

/// Finite-support family of peripheral classes; zero components are never
/// stored.
class Idele {
 public:
  Idele() = default;

  const std::map<std::string, LocalCoords>& support() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  PeripheralClass at(const std::string& knot) const {
    auto it = components_.find(knot);
    if (it == components_.end()) return {knot, 0, 0};
    return {knot, it->second.x, it->second.y};
  }

  void set(const std::string& knot, Integer x, Integer y) {
    if (x == 0 && y == 0)
      components_.erase(knot);
    else
      components_[knot] = {std::move(x), std::move(y)};
  }

  Idele& operator+=(const Idele& o) {
    for (const auto& [k, c] : o.components_) {
      auto cur = at(k);
      set(k, cur.x + c.x, cur.y + c.y);
    }
    return *this;
  }
  Idele& operator-=(const Idele& o) { return *this += o * Integer(-1); }

  friend Idele operator+(Idele a, const Idele& b) { return a += b; }
  friend Idele operator-(Idele a, const Idele& b) { return a -= b; }
  friend Idele operator*(Idele a, const Integer& k) {
    Idele out;
    for (const auto& [knot, c] : a.components_) out.set(knot, c.x * k, c.y * k);
    return out;
  }
  friend bool operator==(const Idele&, const Idele&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Idele& a) {
    os << '{';
    bool first = true;
    for (const auto& [k, c] : a.components_) {
      os << (first ? "" : ", ") << k << ":(" << c.x << ',' << c.y << ')';
      first = false;
    }
    return os << '}';
  }

 private:
  std::map<std::string, LocalCoords> components_;
};

/// Finite-support integer combination of knots; zero coefficients dropped.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const std::string, long>> init) {
    for (const auto& [k, c] : init) set(k, c);
  }

  const std::map<std::string, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Integer at(const std::string& knot) const {
    auto it = coeffs_.find(knot);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  void set(const std::string& knot, Integer c) {
    if (c == 0)
      coeffs_.erase(knot);
    else
      coeffs_[knot] = std::move(c);
  }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<std::string, Integer> coeffs_;
};

inline Idele embed_local(const PeripheralClass& a) {
  Idele out;
  out.set(a.knot, a.x, a.y);
  return out;
}

/// Longitude coefficients of an idele, read as a divisor.
inline Divisor longitude_divisor(const Idele& a) {
  Divisor d;
  for (const auto& [k, c] : a.support()) d.set(k, c.y);
  return d;
}

// Coordinates (x_K, y_K) along the sublink of `stage`.
inline IntVector idele_vector(const ComplementHomology& stage, const Idele& a) {
  IntVector v(2 * stage.sublink().size());
  for (const auto& [k, c] : a.support()) {
    auto t = stage.position(k);
    if (!t) throw Error(ErrorCode::SupportOutsideL, "idele supported on '" + k + "' outside the sublink");
    v[2 * *t] = c.x;
    v[2 * *t + 1] = c.y;
  }
  return v;
}

inline Idele idele_from_vector(const ComplementHomology& stage, const IntVector& v) {
  Idele a;
  for (std::size_t t = 0; t < stage.sublink().size(); ++t) a.set(stage.sublink()[t], v[2 * t], v[2 * t + 1]);
  return a;
}

inline GroupElement rho_tilde(const ComplementHomology& stage, const Idele& a) {
  return {stage.group(), stage.peripheral() * idele_vector(stage, a)};
}

inline GroupElement rho_tilde(const Manifold& m, const std::vector<std::string>& sublink, const Idele& a) {
  return rho_tilde(ComplementHomology(m, sublink), a);
}

inline bool is_principal(const ComplementHomology& stage, const Idele& a) {
  return rho_tilde(stage, a).is_zero();
}

inline bool is_principal(const Manifold& m, const std::vector<std::string>& sublink, const Idele& a) {
  return is_principal(ComplementHomology(m, sublink), a);
}

/// The principal idele with longitude coefficients D(K); meridian
/// coefficients solved so that the peripheral images cancel.
inline Idele delta_from_divisor(const ComplementHomology& stage, const Divisor& d) {
  const std::size_t l = stage.sublink().size();
  IntVector target(stage.generator_count());
  for (const auto& [k, c] : d.coeffs()) {
    auto t = stage.position(k);
    if (!t) throw Error(ErrorCode::SupportOutsideL, "divisor supported on '" + k + "' outside the sublink");
    target = target - scaled(stage.longitude_image(*t), c);
  }
  std::vector<IntVector> meridians;
  for (std::size_t t = 0; t < l; ++t) meridians.push_back(stage.meridian_image(t));
  auto x = solve_mod_subgroup(IntMatrix::from_columns(stage.generator_count(), meridians),
                              stage.relations(), target);
  if (!x) throw Error(ErrorCode::DivisorNotPrincipal, "divisor class is nonzero in H_1(M)");
  Idele out;
  for (std::size_t t = 0; t < l; ++t) {
    const auto& k = stage.sublink()[t];
    out.set(k, (*x)[t], d.at(k));
  }
  return out;
}

inline Idele delta_from_divisor(const Manifold& m, const std::vector<std::string>& sublink, const Divisor& d) {
  return delta_from_divisor(ComplementHomology(m, sublink), d);
}

/// Lattice basis of Ker(rho~) in Z^{2|L|}, as columns. Canonical Hermite
/// form computed with longitude coordinates taking precedence.
inline IntMatrix principal_lattice_matrix(const ComplementHomology& stage) {
  const std::size_t l = stage.sublink().size();
  IntMatrix kernel = integer_kernel(hconcat(stage.peripheral(), stage.relations())).row_block(0, 2 * l);
  // Reorder rows to (y_1..y_l, x_1..x_l), normalise, and reorder back.
  IntMatrix permuted(2 * l, kernel.cols());
  for (std::size_t t = 0; t < l; ++t)
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      permuted(t, j) = kernel(2 * t + 1, j);
      permuted(l + t, j) = kernel(2 * t, j);
    }
  IntMatrix h = hermite_column_basis(permuted);
  IntMatrix out(2 * l, h.cols());
  for (std::size_t t = 0; t < l; ++t)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      out(2 * t + 1, j) = h(t, j);
      out(2 * t, j) = h(l + t, j);
    }
  return out;
}

inline std::vector<Idele> principal_lattice_basis(const ComplementHomology& stage) {
  IntMatrix basis = principal_lattice_matrix(stage);
  std::vector<Idele> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(idele_from_vector(stage, basis.column(j)));
  return out;
}

inline std::vector<Idele> principal_lattice_basis(const Manifold& m, const std::vector<std::string>& sublink) {
  return principal_lattice_basis(ComplementHomology(m, sublink));
}

struct ClassGroupData {
  std::vector<std::string> sublink;
  IntVector class_group_factors;  // J / P, isomorphic to im(rho~)
  IntVector cokernel_factors;     // H_1(M - L) / im(rho~)
};

inline ClassGroupData idele_class_group(const ComplementHomology& stage) {
  const std::size_t l = stage.sublink().size();
  ClassGroupData data;
  data.sublink = stage.sublink();
  data.class_group_factors =
      group_from_relations(2 * l, principal_lattice_matrix(stage))->invariant_factors();
  data.cokernel_factors =
      group_from_relations(stage.generator_count(), hconcat(stage.relations(), stage.peripheral()))
          ->invariant_factors();
  return data;
}

inline ClassGroupData idele_class_group(const Manifold& m, const std::vector<std::string>& sublink) {
  return idele_class_group(ComplementHomology(m, sublink));
}

/// Sum over knots of the local intersection numbers.
inline Integer global_pairing(const Idele& a, const Idele& b) {
  Integer total = 0;
  for (const auto& [k, ca] : a.support()) {
    auto cb = b.at(k);
    total += ca.x * cb.y - cb.x * ca.y;
  }
  return total;
}

}  // namespace idelic
