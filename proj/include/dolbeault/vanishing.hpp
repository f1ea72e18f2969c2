#pragma once

#include <optional>
#include <span>
#include <string>

#include "dolbeault/errors.hpp"

namespace dolbeault {

/// Discrete data of H^{p,q}(X, S^α E ⊗ ∧^β E ⊗ L): dim X = n, rk E = e.
/// `k` is only read by vanish_hook.
struct VanishingQuery {
  Int n = 1;
  Int p = 0;
  Int q = 0;
  Int e = 1;
  Int alpha = 0;
  Int beta = 0;
  std::optional<Int> k;
};

struct VanishingVerdict {
  bool vanishes = false;
  Int threshold = 0;
  Int excess = 0;  // q + p - n - threshold
  std::optional<Int> r0;
  std::string hypothesis;

  friend bool operator==(const VanishingVerdict&,
                         const VanishingVerdict&) = default;
};

/// One factor ∧^{r_i} E_i with rk E_i = e_i.
struct WedgeFactor {
  Int r = 1;
  Int e = 1;
};

/// min{β, δ(n-p), δ(n-q)}.
Int r0_bound(Int n, Int p, Int q, Int beta);

/// S^α E ⊗ ∧^β E ⊗ L with S^{α+β}E ⊗ L ample:
/// vanishes for q+p-n > (r0+α)(e+α-β) - α(α+1). β = 0 falls back to vanish_sym.
VanishingVerdict vanish_main(const VanishingQuery& query);

/// Γ^α_k E ⊗ L with S^k E ⊗ L ample, where β := k - α enters r0:
/// vanishes for q+p-n > (r0+α)(e-k+2α) - α(α+1).
VanishingVerdict vanish_hook(const VanishingQuery& query);

/// ∧^β E ⊗ L: q+p-n > r0(e-β).
VanishingVerdict vanish_wedge(const VanishingQuery& query);

/// S^α E ⊗ L: q+p-n > α(e-1).
VanishingVerdict vanish_sym(const VanishingQuery& query);

/// ⊗ ∧^{r_i} E_i ⊗ L: q+p-n > Σ r_i(e_i - r_i). Only n, p, q of the query
/// are used.
VanishingVerdict vanish_nagoya(const VanishingQuery& query,
                               std::span<const WedgeFactor> factors);

/// S^α E ⊗ ∧^β E ⊗ L: q+p-n > α(e-1) + β(e-β).
VanishingVerdict vanish_sym_wedge_corollary(const VanishingQuery& query);

}  // namespace dolbeault
