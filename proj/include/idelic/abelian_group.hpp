#pragma once

#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idelic/error.hpp"
#include "idelic/int_matrix.hpp"
#include "idelic/smith.hpp"

namespace idelic {

/// Order of a group element or group; nullopt means infinite.
using Order = std::optional<Integer>;

/// Z^g modulo the column space of a relation matrix (one relation per
/// column). Smith data is computed once at construction.
class FgAbelianGroup {
 public:
  FgAbelianGroup(std::size_t generator_count, IntMatrix relations,
                 std::vector<std::string> labels = {})
      : generators_(generator_count), relations_(std::move(relations)), labels_(std::move(labels)) {
    if (relations_.rows() != generators_)
      throw Error(ErrorCode::BadDimensions, "relation matrix must have one row per generator");
    if (!labels_.empty() && labels_.size() != generators_)
      throw Error(ErrorCode::BadDimensions, "label count differs from generator count");
    SmithForm s = smith_normal_form(relations_);
    to_smith_ = std::move(s.U);
    rank_ = s.rank;
    diagonal_.reserve(rank_);
    for (std::size_t i = 0; i < rank_; ++i) diagonal_.push_back(s.D(i, i));
    for (const auto& d : diagonal_)
      if (d != 1) invariant_factors_.push_back(d);
    invariant_factors_.resize(invariant_factors_.size() + (generators_ - rank_), Integer(0));
  }

  std::size_t generator_count() const noexcept { return generators_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Divisibility-sorted, unit factors dropped; 0 marks a free summand.
  const IntVector& invariant_factors() const noexcept { return invariant_factors_; }

  std::size_t free_rank() const noexcept { return generators_ - rank_; }
  bool is_finite() const noexcept { return rank_ == generators_; }
  bool is_trivial() const noexcept { return invariant_factors_.empty(); }

  Order order() const {
    if (!is_finite()) return std::nullopt;
    Integer n = 1;
    for (const auto& d : invariant_factors_) n *= d;
    return n;
  }

  bool is_zero(const IntVector& coords) const {
    IntVector y = to_smith_ * check(coords);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i < rank_) {
        if (!mpz_divisible_p(y[i].get_mpz_t(), diagonal_[i].get_mpz_t())) return false;
      } else if (y[i] != 0) {
        return false;
      }
    }
    return true;
  }

  bool equal(const IntVector& a, const IntVector& b) const { return is_zero(a - b); }

  Order element_order(const IntVector& coords) const {
    IntVector y = to_smith_ * check(coords);
    Integer n = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i >= rank_) {
        if (y[i] != 0) return std::nullopt;
        continue;
      }
      Integer g = gcd(diagonal_[i], y[i]);
      Integer local = diagonal_[i] / g;
      n = lcm(n, local);
    }
    return n;
  }

  /// Canonical coordinates in the Smith basis: entry i reduced modulo d_i
  /// for torsion slots, left as is for free slots.
  IntVector smith_coordinates(const IntVector& coords) const {
    IntVector y = to_smith_ * check(coords);
    for (std::size_t i = 0; i < rank_; ++i) y[i] = mod_nonneg(y[i], diagonal_[i]);
    return y;
  }

 private:
  const IntVector& check(const IntVector& coords) const {
    if (coords.size() != generators_)
      throw Error(ErrorCode::BadDimensions, "coordinate vector has wrong length");
    return coords;
  }

  std::size_t generators_;
  IntMatrix relations_;
  std::vector<std::string> labels_;
  IntMatrix to_smith_;
  std::size_t rank_ = 0;
  IntVector diagonal_;
  IntVector invariant_factors_;
};

inline std::shared_ptr<const FgAbelianGroup> group_from_relations(
    std::size_t generator_count, IntMatrix relations, std::vector<std::string> labels = {}) {
  return std::make_shared<const FgAbelianGroup>(generator_count, std::move(relations),
                                                std::move(labels));
}

struct GroupElement {
  std::shared_ptr<const FgAbelianGroup> group;
  IntVector coords;

  bool is_zero() const { return group->is_zero(coords); }
};

inline Order element_order(const GroupElement& e) { return e.group->element_order(e.coords); }

}  // namespace idelic
