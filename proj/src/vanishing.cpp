#include "dolbeault/vanishing.hpp"

#include <algorithm>

#include "dolbeault/partitions.hpp"

namespace dolbeault {

namespace {

void validate_degrees(const VanishingQuery& q) {
  require(q.n >= 1, "n = dim X must be positive");
  require(q.p >= 0 && q.p <= q.n, "p must lie in [0, n]");
  require(q.q >= 0 && q.q <= q.n, "q must lie in [0, n]");
}

void validate(const VanishingQuery& q) {
  validate_degrees(q);
  require(q.e >= 1, "rank e must be positive");
  require(q.alpha >= 0 && q.beta >= 0, "alpha and beta must be non-negative");
}

VanishingVerdict verdict(const VanishingQuery& q, Int threshold,
                         std::optional<Int> r0, std::string hypothesis) {
  const Int excess = checked::sub(q.q + q.p - q.n, threshold);
  return {excess > 0, threshold, excess, r0, std::move(hypothesis)};
}

std::string ample_sym(const std::string& power) {
  return "S^" + power + " E ⊗ L is ample";
}

}  // namespace

Int r0_bound(Int n, Int p, Int q, Int beta) {
  return std::min({beta, delta(n - p), delta(n - q)});
}

VanishingVerdict vanish_main(const VanishingQuery& query) {
  validate(query);
  require(query.alpha > 0 || query.beta > 0, "alpha and beta cannot both be 0");
  if (query.beta == 0) return vanish_sym(query);
  const Int a = query.alpha;
  const Int r0 = r0_bound(query.n, query.p, query.q, query.beta);
  const Int threshold = checked::sub(
      checked::mul(r0 + a, checked::sub(checked::add(query.e, a), query.beta)),
      checked::mul(a, a + 1));
  return verdict(query, threshold, r0,
                 ample_sym(std::to_string(a + query.beta)));
}

VanishingVerdict vanish_hook(const VanishingQuery& query) {
  validate_degrees(query);
  require(query.k.has_value(), "hook query needs k");
  const Int k = *query.k;
  const Int a = query.alpha;
  require(k >= 1, "hook weight k must be positive");
  require(query.e >= 1, "rank e must be positive");
  require(a >= 0 && a <= k - 1, "hook arm must satisfy 0 <= alpha <= k-1");
  const Int r0 = r0_bound(query.n, query.p, query.q, k - a);
  const Int threshold =
      checked::sub(checked::mul(r0 + a, checked::add(query.e - k, 2 * a)),
                   checked::mul(a, a + 1));
  return verdict(query, threshold, r0, ample_sym(std::to_string(k)));
}

VanishingVerdict vanish_wedge(const VanishingQuery& query) {
  validate(query);
  require(query.beta >= 1, "wedge predicate needs beta >= 1");
  const Int r0 = r0_bound(query.n, query.p, query.q, query.beta);
  const Int threshold = checked::mul(r0, query.e - query.beta);
  return verdict(query, threshold, r0, ample_sym(std::to_string(query.beta)));
}

VanishingVerdict vanish_sym(const VanishingQuery& query) {
  validate(query);
  require(query.alpha >= 1, "symmetric predicate needs alpha >= 1");
  const Int threshold = checked::mul(query.alpha, query.e - 1);
  return verdict(query, threshold, std::nullopt,
                 ample_sym(std::to_string(query.alpha)));
}

VanishingVerdict vanish_nagoya(const VanishingQuery& query,
                               std::span<const WedgeFactor> factors) {
  validate_degrees(query);
  require(!factors.empty(), "need at least one wedge factor");
  Int threshold = 0;
  std::string hypothesis;
  for (const auto& f : factors) {
    require(f.r >= 1 && f.r <= f.e, "each factor needs 1 <= r_i <= e_i");
    threshold = checked::add(threshold, checked::mul(f.r, f.e - f.r));
    hypothesis += "∧^" + std::to_string(f.r) + " E_" +
                  std::to_string(&f - factors.data() + 1) + " ⊗ ";
  }
  return verdict(query, threshold, std::nullopt, hypothesis + "L is ample");
}

VanishingVerdict vanish_sym_wedge_corollary(const VanishingQuery& query) {
  validate(query);
  require(query.alpha > 0 || query.beta > 0, "alpha and beta cannot both be 0");
  const Int threshold =
      checked::add(checked::mul(query.alpha, query.e - 1),
                   checked::mul(query.beta, query.e - query.beta));
  return verdict(query, threshold, std::nullopt,
                 ample_sym(std::to_string(query.alpha + query.beta)));
}

}  // namespace dolbeault
