#include "egc/table.hpp"

#include "egc/errors.hpp"

namespace egc {

void validate_distribution(const std::vector<Scalar>& p, const char* what) {
  if (p.empty()) fail(Errc::invalid_table, std::string(what) + " is empty");
  Scalar sum(0);
  for (const Scalar& v : p) {
    if (v.sign() <= 0)
      fail(Errc::invalid_table, std::string(what) + " has a non-positive entry " + v.str());
    sum += v;
  }
  if (sum != Scalar(1))
    fail(Errc::invalid_table, std::string(what) + " sums to " + sum.str() + ", expected 1");
}

ProbabilityTable::ProbabilityTable(std::vector<std::string> class_labels,
                                   std::vector<std::vector<Scalar>> rows,
                                   std::vector<Scalar> state_probs)
    : class_labels_(std::move(class_labels)), rows_(std::move(rows)), d_(std::move(state_probs)) {
  if (class_labels_.empty()) fail(Errc::invalid_table, "table has no classes");
  for (size_t i = 0; i < class_labels_.size(); ++i)
    for (size_t j = i + 1; j < class_labels_.size(); ++j)
      if (class_labels_[i] == class_labels_[j])
        fail(Errc::invalid_table, "duplicate class label '" + class_labels_[i] + "'");
  if (rows_.empty()) fail(Errc::invalid_table, "table has no states");
  if (rows_.size() != d_.size())
    fail(Errc::invalid_table, "state distribution length does not match the number of rows");
  for (const auto& row : rows_) {
    if (row.size() != class_labels_.size())
      fail(Errc::invalid_table, "row length does not match the number of classes");
    validate_distribution(row, "table row");
  }
  validate_distribution(d_, "state distribution");
}

const std::vector<Scalar>& ProbabilityTable::row(StateId u) const {
  if (u < 0 || u >= state_count()) fail(Errc::invalid_table, "state index out of range");
  return rows_[u];
}

const Scalar& ProbabilityTable::p(StateId u, ClassId i) const {
  const auto& r = row(u);
  if (i < 0 || i >= class_count()) fail(Errc::invalid_table, "class index out of range");
  return r[i];
}

const Scalar& ProbabilityTable::d(StateId u) const {
  if (u < 0 || u >= state_count()) fail(Errc::invalid_table, "state index out of range");
  return d_[u];
}

Scalar situational_opinion(const std::vector<Scalar>& p, ClassId i, ClassId j) {
  if (i == j) fail(Errc::invalid_pair, "situational opinion needs two distinct classes");
  if (i < 0 || j < 0 || i >= static_cast<int>(p.size()) || j >= static_cast<int>(p.size()))
    fail(Errc::invalid_pair, "class index out of range");
  for (const Scalar& v : p)
    if (v.sign() <= 0)
      fail(Errc::invalid_table, "probability vector has a non-positive entry " + v.str());
  return p[i] / (p[i] + p[j]);
}

std::vector<std::string> default_class_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("Y" + std::to_string(i));
  return labels;
}

}  // namespace egc
