#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "polysym/errors.hpp"
#include "polysym/partition.hpp"
#include "polysym/rational.hpp"
#include "polysym/split_type.hpp"

namespace polysym {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Solves A X = B by exact Gauss-Jordan elimination. Scalar must be an exact
/// field. Throws DomainError when A is singular.
template <typename Scalar>
DenseMatrix<Scalar> solve_exact(DenseMatrix<Scalar> a, DenseMatrix<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  const Scalar zero(0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == zero) ++pivot;
    if (pivot == n) throw DomainError("singular matrix in exact solve");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      b.row(pivot).swap(b.row(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    a.row(col) *= inv;
    b.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == zero) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(col);
      b.row(r) -= factor * b.row(col);
    }
  }
  return b;
}

template <typename Scalar>
DenseMatrix<Scalar> inverse_exact(const DenseMatrix<Scalar>& a) {
  return solve_exact<Scalar>(a, DenseMatrix<Scalar>::Identity(a.rows(), a.cols()));
}

/// A square matrix whose rows and columns share one list of labels.
template <typename Label, typename Scalar = Rational>
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(int weight, std::vector<Label> labels, DenseMatrix<Scalar> entries)
      : weight_(weight), labels_(std::move(labels)), entries_(std::move(entries)) {
    if (entries_.rows() != static_cast<Eigen::Index>(labels_.size()) || entries_.cols() != entries_.rows()) {
      throw std::invalid_argument("labeled matrix shape does not match its labels");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<Eigen::Index>(i)).second) {
        throw std::invalid_argument("duplicate matrix label");
      }
    }
  }

  static LabeledMatrix zero(int weight, std::vector<Label> labels) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    return LabeledMatrix(weight, std::move(labels), DenseMatrix<Scalar>::Zero(n, n));
  }
  static LabeledMatrix identity(int weight, std::vector<Label> labels) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    return LabeledMatrix(weight, std::move(labels), DenseMatrix<Scalar>::Identity(n, n));
  }

  int weight() const { return weight_; }
  const std::vector<Label>& labels() const { return labels_; }
  const DenseMatrix<Scalar>& entries() const { return entries_; }
  DenseMatrix<Scalar>& entries() { return entries_; }
  Eigen::Index size() const { return entries_.rows(); }

  Eigen::Index index_of(const Label& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("label not present in matrix");
    return it->second;
  }
  bool has_label(const Label& label) const { return index_.count(label) != 0; }

  const Scalar& at(const Label& row, const Label& col) const {
    return entries_(index_of(row), index_of(col));
  }
  Scalar& at(const Label& row, const Label& col) { return entries_(index_of(row), index_of(col)); }

  /// Same matrix with rows and columns permuted to `order`, which must be a
  /// permutation of the labels.
  LabeledMatrix reordered(const std::vector<Label>& order) const {
    if (order.size() != labels_.size()) throw std::invalid_argument("order has the wrong number of labels");
    const auto n = static_cast<Eigen::Index>(order.size());
    DenseMatrix<Scalar> out(n, n);
    std::vector<Eigen::Index> idx;
    idx.reserve(order.size());
    for (const Label& l : order) idx.push_back(index_of(l));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = entries_(idx[i], idx[j]);
    }
    return LabeledMatrix(weight_, order, std::move(out));
  }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.weight_ == b.weight_ && a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

 private:
  int weight_ = 0;
  std::vector<Label> labels_;
  DenseMatrix<Scalar> entries_;
  std::map<Label, Eigen::Index> index_;
};

using ClassicalMatrix = LabeledMatrix<Partition>;
using PolyMatrix = LabeledMatrix<SplitType>;

/// M(F,K) = M(G,K)·M(F,G): `second` maps G to K, `first` maps F to G.
template <typename Label, typename Scalar>
LabeledMatrix<Label, Scalar> compose(const LabeledMatrix<Label, Scalar>& second,
                                     const LabeledMatrix<Label, Scalar>& first) {
  if (second.labels() != first.labels()) throw std::invalid_argument("compose: label mismatch");
  return LabeledMatrix<Label, Scalar>(first.weight(), first.labels(), second.entries() * first.entries());
}

template <typename Label, typename Scalar>
LabeledMatrix<Label, Scalar> inverse(const LabeledMatrix<Label, Scalar>& m) {
  return LabeledMatrix<Label, Scalar>(m.weight(), m.labels(), inverse_exact<Scalar>(m.entries()));
}

}  // namespace polysym
