#include "dolbeault/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dolbeault {

namespace {

using u128 = unsigned __int128;

// floor(sqrt(n)), exact.
std::uint64_t isqrt(u128 n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(s) * s > n) --s;
  while (static_cast<u128>(s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

IntPartition::IntPartition(std::vector<Int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw DomainError("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be non-increasing: " +
                        to_string());
    weight_ = checked::add(weight_, parts_[i]);
  }
}

IntPartition IntPartition::row(Int k) {
  require(k >= 0, "row length must be non-negative");
  return k == 0 ? IntPartition{} : IntPartition(std::vector<Int>{k});
}

IntPartition IntPartition::column(Int k) {
  require(k >= 0, "column length must be non-negative");
  return IntPartition(std::vector<Int>(static_cast<std::size_t>(k), 1));
}

std::string IntPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ')';
}

HookShape HookShape::make(Int alpha, Int k) {
  require(k >= 1, "hook weight k must be positive");
  require(alpha >= 0 && alpha <= k - 1, "hook arm must satisfy 0 <= alpha <= k-1");
  std::vector<Int> parts(static_cast<std::size_t>(k - alpha), 1);
  parts[0] = alpha + 1;
  return HookShape{alpha, k, IntPartition(std::move(parts))};
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::GreaterEq: return "GreaterEq";
    case Dominance::LessEq: return "LessEq";
    case Dominance::Equivalent: return "Equivalent";
    case Dominance::Incomparable: return "Incomparable";
    case Dominance::StrictlyGreater: return "StrictlyGreater";
    case Dominance::StrictlyLess: return "StrictlyLess";
  }
  return "?";
}

Int delta(Int x) {
  require(x >= 0, "delta is defined on non-negative integers, got " +
                      std::to_string(x));
  // floor((sqrt(8x+1)+1)/2) == floor((isqrt(8x+1)+1)/2)
  const u128 n = static_cast<u128>(x) * 8 + 1;
  return static_cast<Int>((isqrt(n) + 1) / 2);
}

IntPartition transpose(const IntPartition& u) {
  if (u.is_zero()) return {};
  std::vector<Int> cols(static_cast<std::size_t>(u.part(0)), 0);
  for (Int row : u.parts())
    for (Int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  return IntPartition(std::move(cols));
}

ShapeStats shape_stats(const IntPartition& u) {
  Int rank = 0;
  while (u.part(static_cast<std::size_t>(rank)) >= rank + 1) ++rank;
  return {rank, rank == 1};
}

bool dominates(const IntPartition& u, const IntPartition& v) {
  require(!u.is_zero() && !v.is_zero(),
          "dominance is defined on non-zero partitions only");
  const __int128 scale_u = v.weight();
  const __int128 scale_v = u.weight();
  __int128 su = 0;
  __int128 sv = 0;
  const std::size_t len = std::max(u.length(), v.length());
  for (std::size_t j = 0; j < len; ++j) {
    su += scale_u * u.part(j);
    sv += scale_v * v.part(j);
    if (su < sv) return false;
  }
  return true;
}

Dominance dominance_compare(const IntPartition& u, const IntPartition& v) {
  const bool ge = dominates(u, v);
  const bool le = dominates(v, u);
  if (ge && le) return Dominance::Equivalent;
  if (ge) return Dominance::StrictlyGreater;
  if (le) return Dominance::StrictlyLess;
  return Dominance::Incomparable;
}

PhiTriple phi(Int x, Int alpha) {
  require(alpha >= 0, "phi requires alpha >= 0");
  const Int d = delta(x);
  return {checked::add(d, alpha), x - choose2(d), alpha};
}

std::strong_ordering phi_compare(PhiPoint a, PhiPoint b) {
  return phi(a.x, a.alpha) <=> phi(b.x, b.alpha);
}

namespace {

void fill_box(Int remaining, Int max_length, Int max_part,
              std::vector<Int>& prefix, std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length == 0) return;
  for (Int part = std::min(remaining, max_part); part >= 1; --part) {
    // the remaining rows can hold at most part * (max_length - 1)
    if (part * max_length < remaining) break;
    prefix.push_back(part);
    fill_box(remaining - part, max_length - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> partitions_in_box(Int weight, Int max_length,
                                            Int max_part) {
  require(weight >= 0 && max_length >= 0 && max_part >= 0,
          "partition box bounds must be non-negative");
  std::vector<IntPartition> out;
  std::vector<Int> prefix;
  fill_box(weight, max_length, max_part, prefix, out);
  return out;
}

}  // namespace dolbeault
