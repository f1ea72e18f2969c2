#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dolbeault/partitions.hpp"
#include "dolbeault/weight_vector.hpp"

namespace dolbeault {

using BigInt = boost::multiprecision::cpp_int;

/// Multiset of Schur functors S_λ with multiplicities. Terms iterate from
/// the lexicographically largest partition down, e.g. (4), (3,1), (2,2).
class SchurDecomposition {
 public:
  using Terms = std::map<IntPartition, std::uint64_t, std::greater<>>;

  void add(const IntPartition& lambda, std::uint64_t multiplicity = 1);

  const Terms& terms() const { return terms_; }
  std::uint64_t multiplicity(const IntPartition& lambda) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Σ multiplicity · dim S_λ(ℂ^d).
  BigInt dimension(Int d) const;

  std::string to_string() const;

  friend bool operator==(const SchurDecomposition&,
                         const SchurDecomposition&) = default;

 private:
  Terms terms_;
};

/// S_u ⊗ S_v by enumeration of Littlewood–Richardson skew tableaux.
SchurDecomposition lr_decompose(const IntPartition& u, const IntPartition& v);

/// S^α ⊗ ∧^β as a sum of hooks.
SchurDecomposition sym_wedge_decompose(Int alpha, Int beta);

/// The α-fold tensor power of the standard representation.
SchurDecomposition tensor_power_decompose(Int alpha);

/// Weyl dimension of the irreducible GL(d)-module with highest weight λ,
/// padded with zeros to length d. Returns 0 for partitions longer than d.
BigInt weyl_dim(const WeightVector& lambda, Int d);
BigInt weyl_dim(const IntPartition& lambda, Int d);

/// One summand S_u Q^* ⊗ ∧_u S of the exterior power of Q^* ⊗ S.
struct RelativeFormsTerm {
  IntPartition u;
  IntPartition u_transpose;  // ∧_u = S_{ũ}

  std::string quotient_factor() const;
  std::string sub_factor() const;

  friend bool operator==(const RelativeFormsTerm&,
                         const RelativeFormsTerm&) = default;
};

/// ∧^m (Q^* ⊗ S) for rk Q = r, rk S = s: every u of weight m inside the
/// r × s box.
std::vector<RelativeFormsTerm> relative_forms_decompose(Int m, Int r, Int s);

}  // namespace dolbeault
