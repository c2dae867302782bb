#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shan/error.hpp"

namespace shan {

/// Dense row-major tensor of a single scalar type (float for training speed,
/// double for verification). Rank 1 and 2 cover everything the pipeline needs;
/// the container itself does not restrict rank.
template <class S>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), data_(checked_numel(shape_), S(0)) {}

  Tensor(std::vector<std::size_t> shape, std::vector<S> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_numel(shape_) != data_.size()) {
      throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                           " does not match shape " + shape_str_of(shape_));
    }
  }

  static Tensor scalar(S v) { return Tensor({1}, {v}); }

  static Tensor vec(std::vector<S> v) {
    std::size_t n = v.size();
    return Tensor({n}, std::move(v));
  }

  static Tensor matrix(std::size_t r, std::size_t c, std::vector<S> data) {
    return Tensor({r, c}, std::move(data));
  }

  static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape_); }

  std::size_t rank() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t dim(std::size_t i) const { return shape_.at(i); }

  std::size_t rows() const {
    require_rank(2);
    return shape_[0];
  }
  std::size_t cols() const {
    require_rank(2);
    return shape_[1];
  }

  S& operator[](std::size_t i) { return data_[i]; }
  S operator[](std::size_t i) const { return data_[i]; }

  S& at(std::size_t r, std::size_t c) {
    require_rank(2);
    return data_[r * shape_[1] + c];
  }
  S at(std::size_t r, std::size_t c) const {
    require_rank(2);
    return data_[r * shape_[1] + c];
  }

  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }
  const std::vector<S>& storage() const { return data_; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool all_finite() const {
    for (S v : data_) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  std::string shape_str() const { return shape_str_of(shape_); }

  static std::string shape_str_of(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) os << "x";
      os << shape[i];
    }
    os << "]";
    return os.str();
  }

 private:
  static std::size_t checked_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) {
      if (e == 0) throw DimensionError("tensor extents must be positive, got " + shape_str_of(shape));
      n *= e;
    }
    return shape.empty() ? 0 : n;
  }

  void require_rank(std::size_t r) const {
    if (shape_.size() != r) {
      throw DimensionError("expected rank-" + std::to_string(r) + " tensor, got shape " + shape_str());
    }
  }

  std::vector<std::size_t> shape_;
  std::vector<S> data_;
};

template <class To, class From>
Tensor<To> tensor_cast(const Tensor<From>& t) {
  std::vector<To> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = static_cast<To>(t[i]);
  return Tensor<To>(t.shape(), std::move(out));
}

/// Throws EvalError when any entry is non-finite; `what` names the tensor in
/// the message.
template <class S>
void require_finite(const Tensor<S>& t, const std::string& what) {
  if (!t.all_finite()) throw EvalError("non-finite values in " + what);
}

}  // namespace shan
