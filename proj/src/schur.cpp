#include "dolbeault/schur.hpp"

#include <algorithm>
#include <limits>

namespace dolbeault {

void SchurDecomposition::add(const IntPartition& lambda,
                             std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  terms_[lambda] += multiplicity;
}

std::uint64_t SchurDecomposition::multiplicity(const IntPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

BigInt SchurDecomposition::dimension(Int d) const {
  BigInt total = 0;
  for (const auto& [lambda, mult] : terms_) total += weyl_dim(lambda, d) * mult;
  return total;
}

std::string SchurDecomposition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [lambda, mult] : terms_) {
    if (!first) out += ", ";
    first = false;
    out += lambda.to_string() + ":" + std::to_string(mult);
  }
  return out + "}";
}

namespace {

// Skew tableau of shape λ/u under construction. Cells of u carry label 0;
// label i marks the cells of the i-th horizontal strip.
class LrFiller {
 public:
  LrFiller(const IntPartition& u, const IntPartition& v)
      : content_(v.parts().begin(), v.parts().end()) {
    for (Int len : u.parts())
      rows_.emplace_back(static_cast<std::size_t>(len), Int{0});
  }

  SchurDecomposition run() {
    place_label(1);
    return result_;
  }

 private:
  void place_label(Int label) {
    if (label > static_cast<Int>(content_.size())) {
      std::vector<Int> shape;
      for (const auto& row : rows_) shape.push_back(static_cast<Int>(row.size()));
      result_.add(IntPartition(std::move(shape)));
      return;
    }
    const std::vector<std::size_t> before = row_lengths();
    add_strip(label, content_[static_cast<std::size_t>(label - 1)], 0, before);
  }

  std::vector<std::size_t> row_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& row : rows_) out.push_back(row.size());
    return out;
  }

  // Distributes `remaining` cells of `label` over rows >= row, never placing
  // a cell below a cell that did not exist before this strip.
  void add_strip(Int label, Int remaining, std::size_t row,
                 const std::vector<std::size_t>& before) {
    if (remaining == 0) {
      if (label == 1 || lattice_ok(label)) place_label(label + 1);
      return;
    }
    if (row > before.size()) return;
    const std::size_t current = row < before.size() ? before[row] : 0;
    const std::size_t cap = row == 0 ? std::numeric_limits<std::size_t>::max()
                                     : before[row - 1];
    if (current > cap) return;
    const Int room = static_cast<Int>(std::min<std::size_t>(
        cap - current, static_cast<std::size_t>(remaining)));
    const bool new_row = row == rows_.size();
    for (Int t = room; t >= 0; --t) {
      if (t > 0) {
        if (new_row) rows_.emplace_back();
        rows_[row].insert(rows_[row].end(), static_cast<std::size_t>(t), label);
      }
      add_strip(label, remaining - t, row + 1, before);
      if (t > 0) {
        rows_[row].resize(current);
        if (new_row) rows_.pop_back();
      }
    }
  }

  // Reading word (rows top to bottom, each right to left) restricted to
  // labels label-1 and label must be a lattice word.
  bool lattice_ok(Int label) const {
    Int prev = 0;
    Int cur = 0;
    for (const auto& row : rows_) {
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        if (*it == label - 1) ++prev;
        if (*it == label && ++cur > prev) return false;
      }
    }
    return true;
  }

  std::vector<Int> content_;
  std::vector<std::vector<Int>> rows_;
  SchurDecomposition result_;
};

}  // namespace

SchurDecomposition lr_decompose(const IntPartition& u, const IntPartition& v) {
  // c^λ_{u,v} = c^λ_{v,u}; filling with the shorter content is cheaper.
  if (v.weight() > u.weight()) return LrFiller(v, u).run();
  return LrFiller(u, v).run();
}

SchurDecomposition sym_wedge_decompose(Int alpha, Int beta) {
  require(alpha >= 0 && beta >= 0, "alpha and beta must be non-negative");
  require(alpha > 0 || beta > 0, "S^0 ⊗ ∧^0 is not decomposed (alpha = beta = 0)");
  SchurDecomposition out;
  const Int k = checked::add(alpha, beta);
  if (alpha == 0) {
    out.add(IntPartition::column(beta));
  } else if (beta == 0) {
    out.add(IntPartition::row(alpha));
  } else {
    out.add(HookShape::make(alpha, k).shape);
    out.add(HookShape::make(alpha - 1, k).shape);
  }
  return out;
}

SchurDecomposition tensor_power_decompose(Int alpha) {
  require(alpha >= 1, "tensor power requires alpha >= 1");
  const IntPartition box{1};
  SchurDecomposition acc;
  acc.add(box);
  for (Int step = 1; step < alpha; ++step) {
    SchurDecomposition next;
    for (const auto& [lambda, mult] : acc.terms()) {
      const SchurDecomposition grown = lr_decompose(lambda, box);
      for (const auto& [nu, c] : grown.terms()) next.add(nu, mult * c);
    }
    acc = std::move(next);
  }
  return acc;
}

BigInt weyl_dim(const WeightVector& lambda, Int d) {
  require(d >= 1, "weyl_dim requires d >= 1");
  std::vector<Int> w(lambda.entries().begin(), lambda.entries().end());
  const auto du = static_cast<std::size_t>(d);
  if (w.size() > du) {
    if (std::all_of(w.begin() + d, w.end(), [](Int x) { return x == 0; })) {
      w.resize(du);
    } else if (w.back() >= 0) {
      return 0;
    } else {
      throw DomainError("weight " + lambda.to_string() + " is longer than d = " +
                        std::to_string(d));
    }
  }
  if (w.size() < du) {
    require(w.empty() || w.back() >= 0,
            "padding " + lambda.to_string() +
                " with zeros breaks monotonicity; give all d entries");
    w.resize(du, 0);
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < du; ++i) {
    for (std::size_t j = i + 1; j < du; ++j) {
      num *= BigInt(w[i]) - w[j] + static_cast<Int>(j - i);
      den *= static_cast<Int>(j - i);
    }
  }
  return num / den;
}

BigInt weyl_dim(const IntPartition& lambda, Int d) {
  return weyl_dim(WeightVector(lambda), d);
}

std::string RelativeFormsTerm::quotient_factor() const {
  return "S_" + u.to_string() + " Q^*";
}

std::string RelativeFormsTerm::sub_factor() const {
  return "S_" + u_transpose.to_string() + " S";
}

std::vector<RelativeFormsTerm> relative_forms_decompose(Int m, Int r, Int s) {
  require(m >= 0, "form degree must be non-negative");
  require(r >= 1 && s >= 1, "bundle ranks must be positive");
  std::vector<RelativeFormsTerm> out;
  for (auto& u : partitions_in_box(m, r, s)) {
    IntPartition ut = transpose(u);
    out.push_back({std::move(u), std::move(ut)});
  }
  return out;
}

}  // namespace dolbeault
