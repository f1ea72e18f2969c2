#pragma once

#include <map>
#include <optional>
#include <span>

#include "dolbeault/schur.hpp"
#include "dolbeault/weight_vector.hpp"

namespace dolbeault {

/// Homogeneous bundle S_a Q ⊗ S_b S on the Grassmannian Gr(r, d), with the
/// rank-r factor Q first: the weight of the bundle is v = (a, b).
struct BottInput {
  Int r = 1;
  Int d = 2;
  WeightVector a;  // length r
  WeightVector b;  // length d - r

  /// Throws DomainError unless 1 <= r < d and the lengths match.
  void validate() const;
  Int grassmannian_dim() const { return r * (d - r); }

  friend bool operator==(const BottInput&, const BottInput&) = default;
};

struct BottNonZero {
  Int degree = 0;
  WeightVector psi;
  BigInt dim;

  friend bool operator==(const BottNonZero&, const BottNonZero&) = default;
};

/// Either every cohomology group vanishes, or exactly one degree carries
/// S_psi V.
struct BottResult {
  std::optional<BottNonZero> nonzero;

  bool is_zero() const { return !nonzero.has_value(); }

  friend bool operator==(const BottResult&, const BottResult&) = default;
};

/// card{(i, j) : i < j, v_i < v_j}.
Int inversion_count(std::span<const Int> v);

BottResult bott_cohomology(const BottInput& input);

/// S^f Q ⊗ det S^{⊗(d-1)} on Gr(r, f + r).
BottInput optimality_input(Int r, Int f);

/// The input encoding F^* ⊗ K_G, with K_G carried as a twist of the Q block.
BottInput serre_dual_input(const BottInput& input);

/// Dimensions of H^q(P^m, Ω^p(t)), keyed by q; absent degrees are zero.
std::map<Int, BigInt> pm_forms_cohomology(Int m, Int p, Int t);

}  // namespace dolbeault
