#pragma once

// Rational homology spheres given by integral surgery on a framed link in
// S^3, together with a finite link of "places" described by linking data.
//
// Conventions used throughout the library:
//   * H_1(M) is generated by the surgery meridians m_1..m_s with one relation
//     per row of the linking matrix.
//   * The class of a knot K is sum_j lk(K, L_j) m_j.
//   * lk_M(J, K) = lk_S3(J, K) - l_J * lambda^{-1} * l_K^T.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idelic/abelian_group.hpp"
#include "idelic/error.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/smith.hpp"

namespace idelic {

struct SurgeryPresentation {
  std::vector<std::string> surgery_names;
  IntMatrix lambda;  // s x s linking matrix, framings on the diagonal
  std::vector<std::string> knot_names;
  IntMatrix lk_with_surgery;  // r x s
  IntMatrix lk_mutual;        // r x r, symmetric, zero diagonal
};

class Manifold {
 public:
  const SurgeryPresentation& presentation() const noexcept { return presentation_; }
  const std::shared_ptr<const FgAbelianGroup>& h1() const noexcept { return h1_; }

  std::size_t surgery_count() const noexcept { return presentation_.surgery_names.size(); }
  std::size_t knot_count() const noexcept { return presentation_.knot_names.size(); }
  const std::vector<std::string>& knot_names() const noexcept { return presentation_.knot_names; }

  std::size_t knot_index(std::string_view name) const {
    const auto& names = presentation_.knot_names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::UnknownKnot, "unknown knot '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names.begin());
  }

  bool has_knot(std::string_view name) const {
    const auto& names = presentation_.knot_names;
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  /// Row of lk_with_surgery for the given knot: its class in H_1(M).
  IntVector surgery_linking(std::size_t knot) const {
    const auto r = presentation_.lk_with_surgery.row(knot);
    return IntVector(r.begin(), r.end());
  }

  const Integer& mutual_linking(std::size_t a, std::size_t b) const {
    return presentation_.lk_mutual(a, b);
  }

 private:
  friend Manifold load_and_validate(SurgeryPresentation p);
  Manifold(SurgeryPresentation p, std::shared_ptr<const FgAbelianGroup> h1)
      : presentation_(std::move(p)), h1_(std::move(h1)) {}

  SurgeryPresentation presentation_;
  std::shared_ptr<const FgAbelianGroup> h1_;
};

inline Manifold load_and_validate(SurgeryPresentation p) {
  const std::size_t s = p.surgery_names.size();
  const std::size_t r = p.knot_names.size();

  if (p.lambda.rows() != s || p.lambda.cols() != s)
    throw Error(ErrorCode::BadDimensions, "surgery matrix must be " + std::to_string(s) + "x" +
                                              std::to_string(s));
  if (p.lk_with_surgery.rows() != r || p.lk_with_surgery.cols() != s)
    throw Error(ErrorCode::BadDimensions, "lk_with_surgery must be " + std::to_string(r) + "x" +
                                              std::to_string(s));
  if (p.lk_mutual.rows() != r || p.lk_mutual.cols() != r)
    throw Error(ErrorCode::BadDimensions, "lk_mutual must be " + std::to_string(r) + "x" +
                                              std::to_string(r));

  std::set<std::string> seen;
  for (const auto* names : {&p.surgery_names, &p.knot_names})
    for (const auto& n : *names)
      if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateName, "duplicate name '" + n + "'");

  if (!p.lambda.is_symmetric())
    throw Error(ErrorCode::AsymmetricMatrix, "surgery matrix is not symmetric");
  if (!p.lk_mutual.is_symmetric())
    throw Error(ErrorCode::AsymmetricMatrix, "lk_mutual is not symmetric");
  for (std::size_t i = 0; i < r; ++i)
    if (p.lk_mutual(i, i) != 0)
      throw Error(ErrorCode::AsymmetricMatrix, "lk_mutual has a nonzero diagonal entry");

  auto h1 = group_from_relations(s, p.lambda, p.surgery_names);
  if (!h1->is_finite())
    throw Error(ErrorCode::NotQHS3, "surgery matrix is singular; H_1(M) is infinite");
  return Manifold(std::move(p), std::move(h1));
}

struct KnotClass {
  GroupElement element;
  Integer order;  // finite, since H_1(M) is finite
};

inline KnotClass knot_class(const Manifold& m, std::string_view knot) {
  GroupElement e{m.h1(), m.surgery_linking(m.knot_index(knot))};
  Order n = element_order(e);
  return {std::move(e), *n};
}

struct AdmissibilityCertificate {
  bool admissible = false;
  std::vector<std::string> knots;
  // When admissible: for each surgery meridian m_j, integer coefficients c
  // (one per entry of `knots`) with sum_K c_K [K] = m_j in H_1(M).
  std::vector<IntVector> meridian_expressions;
  // Invariant factors of the subgroup generated by the knot classes and of
  // the quotient H_1(M) / <[K]>.
  IntVector generated_factors;
  IntVector quotient_factors;
};

/// Whether the classes of `knots` (default: all declared knots) generate
/// H_1(M).
inline AdmissibilityCertificate is_admissible(const Manifold& m,
                                              std::optional<std::vector<std::string>> knots = {}) {
  AdmissibilityCertificate cert;
  cert.knots = knots ? *knots : m.knot_names();
  const std::size_t s = m.surgery_count();

  std::vector<IntVector> classes;
  for (const auto& k : cert.knots) classes.push_back(m.surgery_linking(m.knot_index(k)));
  IntMatrix class_matrix = IntMatrix::from_columns(s, classes);
  const IntMatrix& lambda = m.presentation().lambda;

  auto quotient = group_from_relations(s, hconcat(lambda, class_matrix));
  cert.quotient_factors = quotient->invariant_factors();
  cert.admissible = quotient->is_trivial();

  // Subgroup <[K]> = image of Z^k; as an abstract group it is Z^k modulo
  // {c : sum c_K [K] in colspace(lambda)}.
  IntMatrix rel_kernel = integer_kernel(hconcat(class_matrix, lambda)).row_block(0, classes.size());
  cert.generated_factors = group_from_relations(classes.size(), rel_kernel)->invariant_factors();

  if (cert.admissible) {
    for (std::size_t j = 0; j < s; ++j) {
      IntVector target(s);
      target[j] = 1;
      auto c = solve_mod_subgroup(class_matrix, lambda, target);
      cert.meridian_expressions.push_back(*c);
    }
  }
  return cert;
}

namespace detail {

// Solves lambda z = rhs over Q by fraction-based Gaussian elimination.
inline std::vector<Rational> rational_solve(const IntMatrix& lambda, const IntVector& rhs) {
  const std::size_t n = lambda.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = lambda(i, j);
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NotQHS3, "singular surgery matrix");
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = a[i][n] / a[i][i];
    z[i].canonicalize();
  }
  return z;
}

// l_J * lambda^{-1} * l_K^T
inline Rational surgery_correction(const Manifold& m, std::size_t j, std::size_t k) {
  const std::size_t s = m.surgery_count();
  if (s == 0) return 0;
  auto z = rational_solve(m.presentation().lambda, m.surgery_linking(k));
  IntVector lj = m.surgery_linking(j);
  Rational acc = 0;
  for (std::size_t i = 0; i < s; ++i) acc += Rational(lj[i]) * z[i];
  acc.canonicalize();
  return acc;
}

}  // namespace detail

inline Rational linking_number(const Manifold& m, std::string_view j, std::string_view k) {
  const std::size_t ji = m.knot_index(j);
  const std::size_t ki = m.knot_index(k);
  if (ji == ki) throw Error(ErrorCode::SelfLinking, "linking number of a knot with itself");
  Rational lk = Rational(m.mutual_linking(ji, ki)) - detail::surgery_correction(m, ji, ki);
  lk.canonicalize();
  return lk;
}

}  // namespace idelic
