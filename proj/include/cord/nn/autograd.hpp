// Copyright 2026 The CORD Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORD_NN_AUTOGRAD_HPP_
#define CORD_NN_AUTOGRAD_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace cord::nn {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// A node of the dynamically built computation graph. Leaves with
// requires_grad set are trainable parameters; their grad accumulates.
struct Node {
  Matrix value;
  Matrix grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;

  void accumulate(const Matrix& g);
};

class Var {
 public:
  Var() = default;
  explicit Var(Matrix value, bool requires_grad = false);

  const Matrix& value() const { return node_->value; }
  Matrix& mutable_value() { return node_->value; }
  const Matrix& grad() const { return node_->grad; }
  Matrix& mutable_grad() { return node_->grad; }
  bool requires_grad() const { return node_ && node_->requires_grad; }
  bool defined() const { return static_cast<bool>(node_); }
  Eigen::Index rows() const { return node_->value.rows(); }
  Eigen::Index cols() const { return node_->value.cols(); }
  double scalar() const { return node_->value(0, 0); }

  void zero_grad();

  const std::shared_ptr<Node>& node() const { return node_; }
  static Var from_node(std::shared_ptr<Node> node);

 private:
  std::shared_ptr<Node> node_;
};

// Disables graph recording on the current thread while alive.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

// Reverse-mode sweep from a 1x1 output.
void backward(const Var& output);

Var constant(Matrix value);
Var detach(const Var& x);

Var matmul(const Var& a, const Var& b);
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
// x (n x m) + bias (1 x m) broadcast over rows.
Var add_row(const Var& x, const Var& bias);
// x (n x m) scaled per row by c (n x 1).
Var mul_col(const Var& x, const Var& c);
Var scale(const Var& x, double s);
Var add_scalar(const Var& x, double s);

Var relu(const Var& x);
Var elu(const Var& x);
Var tanh(const Var& x);
Var sigmoid(const Var& x);
Var exp(const Var& x);
Var abs(const Var& x);
Var square(const Var& x);
// Hard clamp; gradient is zero outside [lo, hi].
Var clamp(const Var& x, double lo, double hi);

Var concat_cols(std::span<const Var> parts);
Var concat_rows(std::span<const Var> parts);
Var slice_cols(const Var& x, Eigen::Index start, Eigen::Index count);
Var slice_rows(const Var& x, Eigen::Index start, Eigen::Index count);
Var gather_rows(const Var& x, std::span<const int> rows);
// Picks x(r, cols[r]) for every row; result is n x 1.
Var pick(const Var& x, std::span<const int> cols);
// P * x with a constant sparse P; used for pooling and segment sums.
Var sparse_left_multiply(std::shared_ptr<const SparseMatrix> p, const Var& x);

Var sum(const Var& x);
Var mean(const Var& x);
Var row_sum(const Var& x);

// Grouped, masked multi-head scaled dot-product attention.
//
// Each group owns a contiguous block of query rows and key/value rows. The
// mask is stored per group as a row-major (query x key) block of flags; a
// query row whose mask row is empty produces a zero output row.
struct AttentionLayout {
  struct Group {
    int query_begin = 0;
    int query_count = 0;
    int key_begin = 0;
    int key_count = 0;
    std::size_t mask_offset = 0;
  };
  std::vector<Group> groups;
  std::vector<std::uint8_t> mask;
  int total_queries = 0;
  int total_keys = 0;

  // Appends a group; `allowed(q, k)` decides visibility within the group.
  template <typename Allowed>
  void add_group(int query_begin, int query_count, int key_begin, int key_count, Allowed&& allowed) {
    Group g{query_begin, query_count, key_begin, key_count, mask.size()};
    mask.resize(mask.size() + static_cast<std::size_t>(query_count) * key_count);
    for (int q = 0; q < query_count; ++q) {
      for (int k = 0; k < key_count; ++k) {
        mask[g.mask_offset + static_cast<std::size_t>(q) * key_count + k] = allowed(q, k) ? 1 : 0;
      }
    }
    groups.push_back(g);
  }
};

// Attention probabilities captured from a forward pass, one (query x key)
// matrix per group and head, ordered group-major.
struct AttentionWeights {
  int heads = 0;
  std::vector<Matrix> per_group_head;

  const Matrix& at(std::size_t group, int head) const {
    return per_group_head[group * static_cast<std::size_t>(heads) + head];
  }
};

// While alive, every masked_attention call on this thread verifies its
// probabilities: each row is non-negative, zero on masked keys, and sums to
// one (or is all zero when no key is allowed).
struct AttentionAuditStats {
  std::int64_t passes = 0;
  std::int64_t rows = 0;
  std::int64_t violations = 0;
};

class AttentionAuditScope {
 public:
  AttentionAuditScope();
  ~AttentionAuditScope();
  AttentionAuditScope(const AttentionAuditScope&) = delete;
  AttentionAuditScope& operator=(const AttentionAuditScope&) = delete;

  const AttentionAuditStats& stats() const { return stats_; }

 private:
  AttentionAuditStats stats_;
  AttentionAuditStats* previous_;
};

Var masked_attention(const Var& queries, const Var& keys, const Var& values,
                     std::shared_ptr<const AttentionLayout> layout, int heads,
                     AttentionWeights* weights_out = nullptr);

}  // namespace cord::nn

#endif  // CORD_NN_AUTOGRAD_HPP_
