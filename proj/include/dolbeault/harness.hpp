#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dolbeault/schur.hpp"
#include "dolbeault/vanishing.hpp"

namespace dolbeault {

/// E = ⊕ O(degrees[i]) and L = O(c) on P^m.
struct SplitBundleSpec {
  Int m = 1;
  std::vector<Int> degrees;
  Int c = 0;

  Int rank() const { return static_cast<Int>(degrees.size()); }

  friend bool operator==(const SplitBundleSpec&, const SplitBundleSpec&) = default;
};

/// S^k E ⊗ L is ample iff its smallest summand k·min(degrees) + c is positive.
bool hypothesis_split_ample(const SplitBundleSpec& spec, Int k);

/// Degrees of the line-bundle summands of S^α E ⊗ ∧^β E ⊗ L, sorted.
std::vector<Int> split_line_degrees(const SplitBundleSpec& spec, Int alpha,
                                    Int beta);

/// h^{p,q} of S^α E ⊗ ∧^β E ⊗ L on P^m, keyed by q; zero entries omitted.
std::map<Int, BigInt> split_cohomology(const SplitBundleSpec& spec, Int alpha,
                                       Int beta, Int p);

enum class Predicate { Main, Wedge, Sym, Corollary };

std::string_view to_string(Predicate pred);
Predicate predicate_from_string(std::string_view name);

struct IntRange {
  Int lo = 0;
  Int hi = 0;
};

/// Parameter box for the split-bundle sweep. p and q default to [0, m].
struct SweepBox {
  IntRange m{1, 3};
  IntRange e{1, 3};
  IntRange degree{0, 2};
  IntRange c{0, 2};
  IntRange alpha{0, 3};
  IntRange beta{0, 3};
  Int max_weight = 3;  // bound on α + β
  std::optional<IntRange> p;
  std::optional<IntRange> q;
  std::vector<Predicate> predicates{Predicate::Main, Predicate::Wedge,
                                    Predicate::Sym, Predicate::Corollary};
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Reads a box from `key = value` / `key = lo..hi` lines; `#` starts a
/// comment. Unset keys keep their defaults. Throws ConfigError.
SweepBox parse_sweep_box(std::istream& in);

struct SweepCase {
  SplitBundleSpec spec;
  Int alpha = 0;
  Int beta = 0;
  Int p = 0;
  Int q = 0;

  VanishingQuery query() const;
};

struct Violation {
  SweepCase where;
  Predicate predicate;
  VanishingVerdict verdict;
  BigInt cohomology;
};

struct BoundaryWitness {
  SweepCase where;
  Predicate predicate;
  BigInt cohomology;
};

struct SweepReport {
  std::uint64_t cases_checked = 0;
  std::vector<Violation> violations;
  std::vector<BoundaryWitness> boundary_witnesses;
};

/// Predicates that apply to S^α ⊗ ∧^β (Wedge needs α = 0, Sym needs β = 0).
bool predicate_applies(Predicate pred, Int alpha, Int beta);
VanishingVerdict evaluate(Predicate pred, const VanishingQuery& query);

/// Compares every applicable predicate against exact split-bundle
/// cohomology over the box. Output order is the enumeration order
/// (m, e, degrees, c, α, β, p, q) regardless of threading.
SweepReport sweep_validate(const SweepBox& box);

struct OptimalityReport {
  Int bott_degree = 0;
  BigInt bott_dim;
  Int verdict_excess = 0;
  bool bott_nonzero = false;
};

/// Bott cohomology of the sharpness example on Gr(r, r+f) next to the main
/// verdict at n = fr, p = n, q = n - f, e = r, α = f - 1, β = 1.
OptimalityReport optimality_reproduce(Int r, Int f);

}  // namespace dolbeault
