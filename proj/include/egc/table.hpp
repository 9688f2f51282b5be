#pragma once

#include <string>
#include <vector>

#include "egc/scalar.hpp"

namespace egc {

/// Classes and states are addressed by dense 0-based indices. Display labels
/// live on the owning table or graph.
using ClassId = int;
using StateId = int;

/// Per-state categorical distributions over classes (rows), plus a
/// distribution over the states themselves. Every entry is strictly positive
/// and every row sums to exactly 1; so does the state distribution.
class ProbabilityTable {
 public:
  ProbabilityTable(std::vector<std::string> class_labels,
                   std::vector<std::vector<Scalar>> rows,
                   std::vector<Scalar> state_probs);

  int class_count() const { return static_cast<int>(class_labels_.size()); }
  int state_count() const { return static_cast<int>(rows_.size()); }

  const std::vector<std::string>& class_labels() const { return class_labels_; }
  const std::vector<Scalar>& row(StateId u) const;
  const Scalar& p(StateId u, ClassId i) const;
  const Scalar& d(StateId u) const;
  const std::vector<Scalar>& state_probs() const { return d_; }

 private:
  std::vector<std::string> class_labels_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<Scalar> d_;
};

/// p_i / (p_i + p_j): the conditional probability of class i given that the
/// outcome is one of {i, j}, for a single state's categorical distribution.
Scalar situational_opinion(const std::vector<Scalar>& p, ClassId i, ClassId j);

/// Checks a bare categorical distribution: strictly positive entries summing
/// to exactly 1. Throws invalid_table otherwise.
void validate_distribution(const std::vector<Scalar>& p, const char* what);

std::vector<std::string> default_class_labels(int n);

}  // namespace egc
