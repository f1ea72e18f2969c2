#include "dolbeault/bott.hpp"

#include <algorithm>
#include <functional>

namespace dolbeault {

void BottInput::validate() const {
  require(r >= 1, "Bott input needs r >= 1");
  require(d > r, "Bott input needs d > r");
  require(static_cast<Int>(a.size()) == r,
          "weight a must have r = " + std::to_string(r) + " entries");
  require(static_cast<Int>(b.size()) == d - r,
          "weight b must have d - r = " + std::to_string(d - r) + " entries");
}

Int inversion_count(std::span<const Int> v) {
  Int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] < v[j]) ++count;
  return count;
}

BottResult bott_cohomology(const BottInput& input) {
  input.validate();
  const auto d = static_cast<std::size_t>(input.d);

  // w = (a, b) - (1, 2, ..., d)
  std::vector<Int> w;
  w.reserve(d);
  for (Int x : input.a.entries()) w.push_back(x);
  for (Int x : input.b.entries()) w.push_back(x);
  for (std::size_t i = 0; i < d; ++i) w[i] = checked::sub(w[i], static_cast<Int>(i + 1));

  std::vector<Int> sorted = w;
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};

  for (std::size_t i = 0; i < d; ++i) sorted[i] += static_cast<Int>(i + 1);
  WeightVector psi(std::move(sorted));
  BigInt dim = weyl_dim(psi, input.d);
  return {BottNonZero{inversion_count(w), std::move(psi), std::move(dim)}};
}

BottInput optimality_input(Int r, Int f) {
  require(r >= 1 && f >= 1, "optimality family needs r, f >= 1");
  const Int d = checked::add(f, r);
  std::vector<Int> a(static_cast<std::size_t>(r), 0);
  a[0] = f;
  return {r, d, WeightVector(std::move(a)),
          WeightVector::constant(static_cast<std::size_t>(f), d - 1)};
}

namespace {

std::vector<Int> reverse_negate(const WeightVector& w, Int shift) {
  std::vector<Int> out;
  out.reserve(w.size());
  for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it)
    out.push_back(checked::sub(-*it, shift));
  return out;
}

}  // namespace

BottInput serre_dual_input(const BottInput& input) {
  input.validate();
  return {input.r, input.d, WeightVector(reverse_negate(input.a, input.d)),
          WeightVector(reverse_negate(input.b, 0))};
}

std::map<Int, BigInt> pm_forms_cohomology(Int m, Int p, Int t) {
  require(m >= 1, "projective space dimension must be positive");
  require(p >= 0 && p <= m, "form degree p must lie in [0, m]");
  // P^m = Gr(m, m+1) with Q of rank m; Ω^p = ∧^p Q^* ⊗ (det of the line S)^p
  std::vector<Int> a(static_cast<std::size_t>(m), t);
  for (Int i = m - p; i < m; ++i) a[static_cast<std::size_t>(i)] = checked::sub(t, 1);
  const BottResult res =
      bott_cohomology({m, m + 1, WeightVector(std::move(a)), WeightVector{p}});
  std::map<Int, BigInt> out;
  if (res.nonzero) out.emplace(res.nonzero->degree, res.nonzero->dim);
  return out;
}

}  // namespace dolbeault
