#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dolbeault/schur.hpp"

using namespace dolbeault;

namespace {

// Pieri row rule: S_λ ⊗ S^k is the sum of all μ with μ/λ a horizontal
// strip of size k, i.e. μ_1 >= λ_1 >= μ_2 >= λ_2 >= ...
void pieri_fill(const std::vector<Int>& lambda, Int k, std::size_t i,
                std::vector<Int>& mu, SchurDecomposition& out) {
  if (k == 0 || i > lambda.size()) {
    if (k == 0) {
      std::vector<Int> full = mu;
      for (std::size_t j = i; j < lambda.size(); ++j) full.push_back(lambda[j]);
      out.add(IntPartition(full));
    }
    return;
  }
  const Int lo = i < lambda.size() ? lambda[i] : 0;
  const Int hi = i == 0 ? lo + k : lambda[i - 1];
  for (Int x = lo; x <= hi && x - lo <= k; ++x) {
    mu.push_back(x);
    pieri_fill(lambda, k - (x - lo), i + 1, mu, out);
    mu.pop_back();
  }
}

SchurDecomposition pieri_row(const IntPartition& lambda, Int k) {
  SchurDecomposition out;
  std::vector<Int> lam(lambda.parts().begin(), lambda.parts().end());
  std::vector<Int> mu;
  pieri_fill(lam, k, 0, mu, out);
  return out;
}

SchurDecomposition transpose_all(const SchurDecomposition& dec) {
  SchurDecomposition out;
  for (const auto& [lambda, mult] : dec.terms()) out.add(transpose(lambda), mult);
  return out;
}

std::vector<IntPartition> all_partitions_up_to(Int max_weight) {
  std::vector<IntPartition> out;
  for (Int w = 0; w <= max_weight; ++w)
    for (auto& u : partitions_in_box(w, w, w)) out.push_back(u);
  return out;
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("lr_decompose examples") {
  SchurDecomposition a;
  a.add({2});
  a.add({1, 1});
  CHECK(lr_decompose({1}, {1}) == a);

  const auto b = lr_decompose({2}, {2});
  CHECK(b == pieri_row(IntPartition{2}, 2));
  CHECK(b.size() == 3);
  CHECK(b.multiplicity({4}) == 1);
  CHECK(b.multiplicity({3, 1}) == 1);
  CHECK(b.multiplicity({2, 2}) == 1);

  const auto c = lr_decompose({2, 1}, {1});
  CHECK(c == pieri_row(IntPartition{2, 1}, 1));
  CHECK(c.to_string() == "{(3,1):1, (2,2):1, (2,1,1):1}");

  // a multiplicity above one
  CHECK(lr_decompose({2, 1}, {2, 1}).multiplicity({3, 2, 1}) == 2);
  // zero-partition is the identity
  SchurDecomposition id;
  id.add({3, 1});
  CHECK(lr_decompose({3, 1}, {}) == id);
  CHECK(lr_decompose({}, {3, 1}) == id);
}

TEST_CASE("lr_decompose agrees with the Pieri rules") {
  for (const auto& u : all_partitions_up_to(5)) {
    for (Int k = 1; k <= 4; ++k) {
      REQUIRE(lr_decompose(u, IntPartition::row(k)) == pieri_row(u, k));
      // dual Pieri: S_u ⊗ ∧^k is the transpose of S_ũ ⊗ S^k
      REQUIRE(lr_decompose(u, IntPartition::column(k)) ==
              transpose_all(pieri_row(transpose(u), k)));
    }
  }
}

TEST_CASE("lr_decompose is commutative and weight-homogeneous") {
  const auto parts = all_partitions_up_to(4);
  for (const auto& u : parts) {
    for (const auto& v : parts) {
      const auto uv = lr_decompose(u, v);
      REQUIRE(uv == lr_decompose(v, u));
      for (const auto& [lambda, mult] : uv.terms()) {
        REQUIRE(lambda.weight() == u.weight() + v.weight());
        REQUIRE(mult >= 1);
      }
    }
  }
}

TEST_CASE("LR dimension identity for d <= 5") {
  const auto parts = all_partitions_up_to(4);
  for (Int d = 1; d <= 5; ++d)
    for (const auto& u : parts)
      for (const auto& v : parts)
        REQUIRE(weyl_dim(u, d) * weyl_dim(v, d) == lr_decompose(u, v).dimension(d));
}

TEST_CASE("weyl_dim examples") {
  CHECK(weyl_dim(WeightVector{1}, 4) == 4);
  CHECK(weyl_dim(WeightVector{2, 1}, 3) == 8);
  CHECK(weyl_dim(WeightVector{2, 2, 2, 2}, 4) == 1);
  CHECK(weyl_dim(WeightVector{-1, -1}, 2) == 1);
  CHECK(weyl_dim(IntPartition{1, 1, 1}, 2) == 0);
  CHECK(weyl_dim(WeightVector{}, 3) == 1);
  CHECK_THROWS_AS(weyl_dim(WeightVector{-1}, 2), DomainError);
  CHECK_THROWS_AS(weyl_dim(WeightVector{1, -1, -2}, 2), DomainError);
  CHECK_THROWS_AS(WeightVector({1, 2}), DomainError);
  // S^k V has dimension C(d+k-1, k); ∧^k V has C(d, k)
  for (Int d = 1; d <= 7; ++d) {
    for (Int k = 0; k <= 6; ++k) {
      REQUIRE(weyl_dim(IntPartition::row(k), d) == binomial(d + k - 1, k));
      REQUIRE(weyl_dim(IntPartition::column(k), d) == binomial(d, k));
    }
  }
  // past 64 bits
  BigInt big = weyl_dim(WeightVector{60, 50, 40, 30, 20, 10, 0, 0, 0, 0}, 10);
  CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
  // twisting by det leaves the dimension unchanged
  CHECK(weyl_dim(WeightVector{3, 1, 0}, 3) == weyl_dim(WeightVector{1, -1, -2}, 3));
}

TEST_CASE("sym_wedge_decompose") {
  SchurDecomposition a;
  a.add({3});
  a.add({2, 1});
  CHECK(sym_wedge_decompose(2, 1) == a);

  SchurDecomposition b;
  b.add({2, 1});
  b.add({1, 1, 1});
  CHECK(sym_wedge_decompose(1, 2) == b);

  SchurDecomposition c;
  c.add({1, 1, 1});
  CHECK(sym_wedge_decompose(0, 3) == c);
  CHECK_THROWS_AS(sym_wedge_decompose(0, 0), DomainError);

  for (Int alpha = 0; alpha <= 6; ++alpha) {
    for (Int beta = 0; beta <= 6; ++beta) {
      if (alpha == 0 && beta == 0) continue;
      const auto dec = sym_wedge_decompose(alpha, beta);
      REQUIRE(dec == lr_decompose(IntPartition::row(alpha), IntPartition::column(beta)));
      if (alpha >= 1 && beta >= 1) {
        REQUIRE(dec.size() == 2);
        REQUIRE(dec.multiplicity(HookShape::make(alpha, alpha + beta).shape) == 1);
        REQUIRE(dec.multiplicity(HookShape::make(alpha - 1, alpha + beta).shape) == 1);
      }
    }
  }
}

TEST_CASE("tensor_power_decompose") {
  SchurDecomposition two;
  two.add({2});
  two.add({1, 1});
  CHECK(tensor_power_decompose(2) == two);

  const auto three = tensor_power_decompose(3);
  CHECK(three.multiplicity({3}) == 1);
  CHECK(three.multiplicity({2, 1}) == 2);
  CHECK(three.multiplicity({1, 1, 1}) == 1);
  CHECK(three.size() == 3);
  CHECK(three.dimension(3) == 27);

  SchurDecomposition one;
  one.add({1});
  CHECK(tensor_power_decompose(1) == one);
  CHECK_THROWS_AS(tensor_power_decompose(0), DomainError);

  for (Int alpha = 1; alpha <= 6; ++alpha) {
    const auto dec = tensor_power_decompose(alpha);
    const auto row = IntPartition::row(alpha);
    REQUIRE(dec.multiplicity(row) == 1);
    for (const auto& [lambda, mult] : dec.terms())
      if (lambda != row) REQUIRE(dominance_compare(row, lambda) == Dominance::StrictlyGreater);
    for (Int d = 1; d <= 4; ++d) {
      BigInt power = 1;
      for (Int i = 0; i < alpha; ++i) power *= d;
      REQUIRE(dec.dimension(d) == power);
    }
  }
}

TEST_CASE("relative_forms_decompose") {
  auto one = relative_forms_decompose(1, 2, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].u == IntPartition{1});
  CHECK(one[0].u_transpose == IntPartition{1});
  CHECK(one[0].quotient_factor() == "S_(1) Q^*");
  CHECK(one[0].sub_factor() == "S_(1) S");

  auto two = relative_forms_decompose(2, 2, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0].u == IntPartition{2});
  CHECK(two[1].u == IntPartition{1, 1});
  CHECK(two[0].u_transpose == IntPartition{1, 1});

  auto zero = relative_forms_decompose(0, 4, 2);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].u.is_zero());

  CHECK(relative_forms_decompose(3, 1, 2).empty());
  CHECK_THROWS_AS(relative_forms_decompose(1, 0, 2), DomainError);

  for (Int r = 1; r <= 4; ++r) {
    for (Int s = 1; s <= 4; ++s) {
      std::size_t count = 0;
      for (Int m = 0; m <= r * s; ++m) {
        const auto terms = relative_forms_decompose(m, r, s);
        count += terms.size();
        // rank of ∧^m (Q^* ⊗ S) is C(rs, m)
        BigInt rank = 0;
        for (const auto& t : terms) rank += weyl_dim(t.u, r) * weyl_dim(t.u_transpose, s);
        REQUIRE(rank == binomial(r * s, m));
      }
      REQUIRE(static_cast<Int>(count) == binomial(r + s, r));
    }
  }
}
