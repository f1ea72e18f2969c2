#include "dolbeault/weight_vector.hpp"

#include <algorithm>
#include <functional>

namespace dolbeault {

WeightVector::WeightVector(std::vector<Int> entries)
    : entries_(std::move(entries)) {
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{}))
    throw DomainError("weight vector must be non-increasing: " + to_string());
}

WeightVector::WeightVector(const IntPartition& u)
    : entries_(u.parts().begin(), u.parts().end()) {}

WeightVector WeightVector::constant(std::size_t length, Int c) {
  return WeightVector(std::vector<Int>(length, c));
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ')';
}

}  // namespace dolbeault
