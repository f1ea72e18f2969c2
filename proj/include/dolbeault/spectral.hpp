#pragma once

#include <optional>

#include "dolbeault/errors.hpp"

namespace dolbeault {

// Index bookkeeping for the Borel–Le Potier spectral sequence of
// Y = G_r(E) -> X abutting to H^{P,q}(Y, det Q^l). Nothing here computes
// a cohomology group; only where E1 terms sit and where d_m sends them.

struct SpectralParams {
  Int n = 1;  // dim X
  Int e = 1;  // rk E
  Int r = 1;
  Int l = 1;
  Int k = 1;  // = l·r
  Int P = 0;

  Int total_space_dim() const { return n + r * (e - r); }
  /// P >= n + (l-1)·C(r+1,2) - l(r-1), the range where the E1 formula holds.
  bool in_e1_range() const;
  /// Throws DomainError for k != l·r or P outside the E1 range.
  void validate() const;
};

struct E1Cohomology {
  Int alpha_p = 0;
  Int j_p = 0;

  friend bool operator==(const E1Cohomology&, const E1Cohomology&) = default;
};

/// E1^{p,·} is H^{p, q-j(p)}(X, Γ^{α(p),k} E) or zero.
struct SpectralCell {
  Int p = 0;
  std::optional<E1Cohomology> cohomology;

  bool is_zero() const { return !cohomology.has_value(); }
};

struct BidegreeShift {
  Int p = 0;
  Int q = 0;

  friend bool operator==(const BidegreeShift&, const BidegreeShift&) = default;
};

struct DmTargets {
  BidegreeShift right;
  BidegreeShift left;
};

/// Residuals of the two expansion identities used to propagate the bound
/// Q across d_m; each residual is LHS - RHS and must be 0. The closed-form
/// right-hand sides are returned as well.
struct IdentityResiduals {
  std::optional<Int> res6;
  std::optional<Int> rhs6;
  std::optional<Int> res7;
  std::optional<Int> rhs7;
};

/// α(p) = [(l-1)·C(r+1,2) - (P-p)] / r and j(p) = (l-1)·C(r,2) - (r-1)·α(p);
/// zero unless α(p) is a non-negative integer and 0 <= p <= n.
SpectralCell e1_term(const SpectralParams& params, Int p);

DmTargets dm_targets(Int p, Int q, Int r, Int mu);

/// Q(x, α) = x + (δ(x)+α)(e-k+2α) - α(α+1), with x = n - p.
Int capital_q(Int x, Int alpha, Int e, Int k);

IdentityResiduals identity_residuals(Int x, Int alpha, Int mu, Int e, Int k);

/// Checks q > Q(n-p, α) <=> P + q + j(p) - dim Y > α(e-k+α) with
/// P = p + (l-1)·C(r+1,2) - αr.
bool threshold_equivalence(Int n, Int p, Int q, Int alpha, Int e, Int k, Int l,
                           Int r);

/// Smallest l with l >= (rα + n - p)/(r - 1); 1 when p = n.
Int minimal_l(Int r, Int alpha, Int n, Int p);

}  // namespace dolbeault
