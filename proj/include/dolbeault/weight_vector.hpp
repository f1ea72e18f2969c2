#pragma once

#include <span>
#include <string>
#include <vector>

#include "dolbeault/errors.hpp"
#include "dolbeault/partitions.hpp"

namespace dolbeault {

/// A non-increasing integer sequence; a dominant weight of GL(d) once
/// padded to length d. Negative entries are allowed.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Int> entries);
  WeightVector(std::initializer_list<Int> entries)
      : WeightVector(std::vector<Int>(entries)) {}
  explicit WeightVector(const IntPartition& u);

  /// Constant vector (c, ..., c) of the given length.
  static WeightVector constant(std::size_t length, Int c);

  std::span<const Int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Int> entries_;
};

}  // namespace dolbeault
