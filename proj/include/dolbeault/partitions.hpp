#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dolbeault/errors.hpp"

namespace dolbeault {

/// A finite non-increasing sequence of positive integers. The empty
/// sequence is the zero-partition.
class IntPartition {
 public:
  IntPartition() = default;

  /// Validates the parts; trailing zeros are dropped, anything else that
  /// is not positive and non-increasing throws DomainError.
  explicit IntPartition(std::vector<Int> parts);
  IntPartition(std::initializer_list<Int> parts)
      : IntPartition(std::vector<Int>(parts)) {}

  static IntPartition row(Int k);
  static IntPartition column(Int k);

  std::span<const Int> parts() const { return parts_; }
  /// 0-based; returns 0 past the end.
  Int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  Int weight() const { return weight_; }
  bool is_zero() const { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
  friend auto operator<=>(const IntPartition& a, const IntPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Int> parts_;
  Int weight_ = 0;
};

/// The hook Γ^α_k: shape (α+1, 1, ..., 1) of weight k.
struct HookShape {
  Int alpha = 0;
  Int k = 1;
  IntPartition shape;

  static HookShape make(Int alpha, Int k);
};

struct PhiTriple {
  Int f1 = 0;
  Int f2 = 0;
  Int f3 = 0;

  friend auto operator<=>(const PhiTriple&, const PhiTriple&) = default;
};

/// A point (x, α) of ℕ×ℕ ordered through phi.
struct PhiPoint {
  Int x = 0;
  Int alpha = 0;
};

struct ShapeStats {
  Int rank = 0;
  bool is_hook = false;
};

enum class Dominance {
  GreaterEq,
  LessEq,
  Equivalent,
  Incomparable,
  StrictlyGreater,
  StrictlyLess,
};

std::string_view to_string(Dominance d);

/// C(m, 2) for m >= 0.
constexpr Int choose2(Int m) { return m * (m - 1) / 2; }

/// The unique m with C(m,2) <= x < C(m+1,2). Exact integer arithmetic.
Int delta(Int x);

IntPartition transpose(const IntPartition& u);

ShapeStats shape_stats(const IntPartition& u);

/// u ⪰ v in the cross-scaled dominance pre-order: |v|·u against |u|·v.
/// Both must be non-zero.
bool dominates(const IntPartition& u, const IntPartition& v);

/// Most specific relation between u and v; never returns GreaterEq/LessEq.
Dominance dominance_compare(const IntPartition& u, const IntPartition& v);

PhiTriple phi(Int x, Int alpha);

std::strong_ordering phi_compare(PhiPoint a, PhiPoint b);

/// All partitions of `weight` with at most `max_length` parts, each at most
/// `max_part`, in reverse lexicographic order.
std::vector<IntPartition> partitions_in_box(Int weight, Int max_length,
                                            Int max_part);

}  // namespace dolbeault
