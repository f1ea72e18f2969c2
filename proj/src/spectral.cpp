#include "dolbeault/spectral.hpp"

#include "dolbeault/partitions.hpp"

namespace dolbeault {

bool SpectralParams::in_e1_range() const {
  return P >= n + (l - 1) * choose2(r + 1) - l * (r - 1);
}

void SpectralParams::validate() const {
  require(n >= 1 && e >= 1 && r >= 1 && l >= 1,
          "n, e, r, l must all be positive");
  require(k == l * r, "spectral parameters need k = l*r");
  require(in_e1_range(), "P = " + std::to_string(P) +
                             " is below n + (l-1)C(r+1,2) - l(r-1)");
}

SpectralCell e1_term(const SpectralParams& params, Int p) {
  params.validate();
  SpectralCell cell{p, std::nullopt};
  if (p < 0 || p > params.n) return cell;
  const Int r = params.r;
  const Int numerator = (params.l - 1) * choose2(r + 1) - (params.P - p);
  if (numerator < 0 || numerator % r != 0) return cell;
  const Int alpha = numerator / r;
  cell.cohomology = E1Cohomology{alpha, (params.l - 1) * choose2(r) - (r - 1) * alpha};
  return cell;
}

DmTargets dm_targets(Int p, Int q, Int r, Int mu) {
  require(mu >= 1, "mu must be a positive integer");
  require(r >= 1, "r must be positive");
  const Int dp = checked::mul(mu, r);
  const Int dq = checked::add(checked::mul(mu, r - 1), 1);
  return {{checked::add(p, dp), checked::add(q, dq)},
          {checked::sub(p, dp), checked::sub(q, dq)}};
}

Int capital_q(Int x, Int alpha, Int e, Int k) {
  require(alpha >= 0, "alpha must be non-negative");
  const Int slope = checked::add(checked::sub(e, k), checked::mul(2, alpha));
  return checked::sub(
      checked::add(x, checked::mul(checked::add(delta(x), alpha), slope)),
      checked::mul(alpha, alpha + 1));
}

IdentityResiduals identity_residuals(Int x, Int alpha, Int mu, Int e, Int k) {
  require(x >= 0 && alpha >= 0, "x and alpha must be non-negative");
  require(mu >= 1, "mu must be a positive integer");
  IdentityResiduals out;
  const Int d = delta(x);
  const Int q0 = capital_q(x, alpha, e, k);

  // d_m target on the right: x' = x - μδ(x), α' = α + μ
  const Int x_right = x - mu * d;
  if (x_right >= 0) {
    const Int lhs = q0 - capital_q(x_right, alpha + mu, e, k) + mu * (d - 1) + 1;
    const Int rhs = (e - k + 2 * (alpha + mu)) * (d - mu - delta(x_right)) + mu * mu + 1;
    out.res6 = lhs - rhs;
    out.rhs6 = rhs;
  }

  // on the left: x' = x + μδ(x), α' = α - μ
  if (alpha - mu >= 0) {
    const Int x_left = x + mu * d;
    const Int lhs = q0 - capital_q(x_left, alpha - mu, e, k) - mu * (d - 1) - 1;
    const Int rhs = (e - k + 2 * (alpha - mu)) * (d + mu - delta(x_left)) + mu * mu - 1;
    out.res7 = lhs - rhs;
    out.rhs7 = rhs;
  }
  return out;
}

bool threshold_equivalence(Int n, Int p, Int q, Int alpha, Int e, Int k, Int l,
                           Int r) {
  require(n >= 1 && p >= 0 && p <= n, "need 0 <= p <= n, n >= 1");
  require(alpha >= 0 && r >= 1 && l >= 1, "need alpha >= 0, r >= 1, l >= 1");
  require(k == l * r, "need k = l*r");
  require(r == delta(n - p), "need r = delta(n - p)");
  const Int big_p = p + (l - 1) * choose2(r + 1) - alpha * r;
  const Int j = (l - 1) * choose2(r) - (r - 1) * alpha;
  const Int dim_y = n + r * (e - r);
  const bool below = q > capital_q(n - p, alpha, e, k);
  const bool nakano = big_p + q + j - dim_y > alpha * (e - k + alpha);
  return below == nakano;
}

Int minimal_l(Int r, Int alpha, Int n, Int p) {
  require(n >= 1 && p >= 0 && p <= n, "need 0 <= p <= n, n >= 1");
  require(alpha >= 0, "alpha must be non-negative");
  if (p == n) return 1;
  require(r >= 2, "the bound on l needs r >= 2 when p < n");
  const Int num = r * alpha + n - p;
  return (num + r - 2) / (r - 1);
}

}  // namespace dolbeault
