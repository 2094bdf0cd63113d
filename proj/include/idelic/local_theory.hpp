#pragma once

// Local data at a knot K: H_1 of the boundary torus of a tubular
// neighbourhood, written in the basis (mu_K, l0_K) where l0_K is the
// 0-framed longitude of the S^3 picture.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "idelic/abelian_group.hpp"
#include "idelic/error.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/presentation.hpp"
#include "idelic/smith.hpp"

namespace idelic {

/// x * mu_K + y * l0_K in H_1(boundary of V_K).
struct PeripheralClass {
  std::string knot;
  Integer x;
  Integer y;

  friend bool operator==(const PeripheralClass&, const PeripheralClass&) = default;
};

/// H_1(M - L) for a finite sublink L, with the images of every peripheral
/// basis class. Generators are m_1..m_s followed by mu_K for K in L.
class ComplementHomology {
 public:
  ComplementHomology(const Manifold& m, std::vector<std::string> sublink)
      : sublink_(std::move(sublink)), surgery_(m.surgery_count()) {
    std::set<std::string> seen;
    for (const auto& k : sublink_) {
      knot_rows_.push_back(m.knot_index(k));
      if (!seen.insert(k).second) throw Error(ErrorCode::DuplicateName, "knot '" + k + "' repeated in sublink");
    }
    const std::size_t s = surgery_, l = sublink_.size(), g = s + l;
    const auto& lambda = m.presentation().lambda;

    IntMatrix relations(g, s);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t i = 0; i < s; ++i) relations(i, j) = lambda(j, i);
      for (std::size_t t = 0; t < l; ++t) relations(s + t, j) = m.presentation().lk_with_surgery(knot_rows_[t], j);
    }

    peripheral_ = IntMatrix(g, 2 * l);
    for (std::size_t t = 0; t < l; ++t) {
      peripheral_(s + t, 2 * t) = 1;
      for (std::size_t j = 0; j < s; ++j)
        peripheral_(j, 2 * t + 1) = m.presentation().lk_with_surgery(knot_rows_[t], j);
      for (std::size_t u = 0; u < l; ++u)
        if (u != t) peripheral_(s + u, 2 * t + 1) = m.mutual_linking(knot_rows_[t], knot_rows_[u]);
    }

    std::vector<std::string> labels(m.presentation().surgery_names);
    for (const auto& k : sublink_) labels.push_back("mu_" + k);
    group_ = group_from_relations(g, std::move(relations), std::move(labels));
  }

  const std::vector<std::string>& sublink() const noexcept { return sublink_; }
  const std::shared_ptr<const FgAbelianGroup>& group() const noexcept { return group_; }
  std::size_t surgery_count() const noexcept { return surgery_; }
  std::size_t generator_count() const noexcept { return group_->generator_count(); }
  const IntMatrix& relations() const noexcept { return group_->relations(); }

  /// Columns 2t, 2t+1 hold the images of mu_K and l0_K for K = sublink[t].
  const IntMatrix& peripheral() const noexcept { return peripheral_; }

  std::optional<std::size_t> position(std::string_view knot) const {
    for (std::size_t t = 0; t < sublink_.size(); ++t)
      if (sublink_[t] == knot) return t;
    return std::nullopt;
  }

  bool contains(std::string_view knot) const { return position(knot).has_value(); }

  IntVector meridian_image(std::size_t t) const { return peripheral_.column(2 * t); }
  IntVector longitude_image(std::size_t t) const { return peripheral_.column(2 * t + 1); }

  /// Image in H_1(M - L) of a peripheral class of a knot in L.
  IntVector image(const PeripheralClass& a, ErrorCode missing = ErrorCode::KnotOutsideL) const {
    auto t = position(a.knot);
    if (!t) throw Error(missing, "knot '" + a.knot + "' is not in the sublink");
    return scaled(meridian_image(*t), a.x) + scaled(longitude_image(*t), a.y);
  }

 private:
  std::vector<std::string> sublink_;
  std::vector<std::size_t> knot_rows_;
  std::size_t surgery_;
  IntMatrix peripheral_;
  std::shared_ptr<const FgAbelianGroup> group_;
};

inline ComplementHomology complement_homology(const Manifold& m, std::vector<std::string> sublink) {
  return ComplementHomology(m, std::move(sublink));
}

struct LongitudeData {
  PeripheralClass lambda;
  Integer index;  // [H_1(dV_K) : <mu_K, lambda_K>]
  bool basis_flag = false;
};

/// Primitive generator of ker(H_1(dV_K) -> H_1(M - Int V_K)), signed so its
/// image in H_1(V_K) is a positive multiple of [K].
inline LongitudeData preferred_longitude(const Manifold& m, std::string_view knot) {
  ComplementHomology ch(m, {std::string(knot)});
  IntMatrix kernel = integer_kernel(hconcat(ch.peripheral(), ch.relations()));
  // H_1(M) finite makes this kernel rank one with nonzero longitude part.
  IntMatrix periph_part = hermite_column_basis(kernel.row_block(0, 2));
  assert(periph_part.cols() == 1);
  Integer x = periph_part(0, 0), y = periph_part(1, 0);
  if (y < 0) {
    x = -x;
    y = -y;
  }
  LongitudeData data{{std::string(knot), x, y}, y, y == 1};
  return data;
}

/// Longitude coefficient: the map to Z whose kernel is the meridian span.
inline Integer valuation(const PeripheralClass& a) { return a.y; }

inline Integer local_intersection(const PeripheralClass& a, const PeripheralClass& b) {
  if (a.knot != b.knot)
    throw Error(ErrorCode::MismatchedKnot, "classes live on different knots: '" + a.knot + "', '" + b.knot + "'");
  return a.x * b.y - b.x * a.y;
}

}  // namespace idelic
