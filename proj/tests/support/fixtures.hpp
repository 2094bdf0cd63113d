#pragma once

#include <string>
#include <vector>

#include "idelic/presentation.hpp"

namespace fixtures {

using idelic::IntMatrix;
using idelic::Manifold;
using idelic::SurgeryPresentation;

// Two-component Hopf link in S^3.
inline Manifold hopf() {
  return idelic::load_and_validate(
      SurgeryPresentation{{}, IntMatrix(0, 0), {"K1", "K2"}, IntMatrix(2, 0), IntMatrix{{0, 1}, {1, 0}}});
}

// L(5,1) = 5-surgery on an unknot, with K the core linking it once.
inline Manifold lens5(long lk = 1) {
  return idelic::load_and_validate(
      SurgeryPresentation{{"L1"}, IntMatrix{{5}}, {"K"}, IntMatrix{{lk}}, IntMatrix{{0}}});
}

// L(5,1) with two parallel knots J, K each linking the surgery curve once.
inline Manifold lens5_pair(long mutual = 0) {
  return idelic::load_and_validate(SurgeryPresentation{
      {"L1"}, IntMatrix{{5}}, {"J", "K"}, IntMatrix{{1}, {1}}, IntMatrix{{0, mutual}, {mutual, 0}}});
}

inline Manifold unknot_in_s3() {
  return idelic::load_and_validate(SurgeryPresentation{{}, IntMatrix(0, 0), {"U"}, IntMatrix(1, 0), IntMatrix{{0}}});
}

// H_1 = Z/3 from the linking matrix [[2,1],[1,2]], with three knots.
inline Manifold lens3_pair() {
  return idelic::load_and_validate(SurgeryPresentation{{"A", "B"},
                                                       IntMatrix{{2, 1}, {1, 2}},
                                                       {"J", "K", "T"},
                                                       IntMatrix{{1, 0}, {0, 1}, {2, -1}},
                                                       IntMatrix{{0, 1, 0}, {1, 0, 2}, {0, 2, 0}}});
}

}  // namespace fixtures

#include <random>

namespace fixtures {

// Random QHS^3 presentation: symmetric surgery matrix with entries in
// [-bound, bound] (det != 0) and r knots with random linking data.
inline SurgeryPresentation random_presentation(std::mt19937_64& rng, std::size_t s, std::size_t r, long bound = 4) {
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
  SurgeryPresentation p;
  for (std::size_t i = 0; i < s; ++i) p.surgery_names.push_back("L" + std::to_string(i + 1));
  for (std::size_t i = 0; i < r; ++i) p.knot_names.push_back("K" + std::to_string(i + 1));
  while (true) {
    p.lambda = IntMatrix(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i; j < s; ++j) p.lambda(i, j) = p.lambda(j, i) = pick(-bound, bound);
    try {
      p.lk_with_surgery = IntMatrix(r, s);
      p.lk_mutual = IntMatrix(r, r);
      idelic::load_and_validate(p);
      break;
    } catch (const idelic::Error&) {
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) p.lk_with_surgery(i, j) = pick(-bound, bound);
    for (std::size_t j = i + 1; j < r; ++j) p.lk_mutual(i, j) = p.lk_mutual(j, i) = pick(-bound, bound);
  }
  return p;
}

inline Manifold random_manifold(std::mt19937_64& rng, std::size_t max_s = 3, std::size_t max_r = 4) {
  std::size_t s = rng() % (max_s + 1);
  std::size_t r = 1 + rng() % max_r;
  return idelic::load_and_validate(random_presentation(rng, s, r));
}

}  // namespace fixtures
