#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace activerf::ad {

using Shape = std::vector<std::size_t>;

/// Cache-line aligned storage. Vectorized reductions peel a different number
/// of leading elements depending on the address, so a fixed alignment keeps
/// results bitwise reproducible.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlign{64};
  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}
  T* allocate(std::size_t n) { return static_cast<T*>(::operator new(n * sizeof(T), kAlign)); }
  void deallocate(T* p, std::size_t) { ::operator delete(p, kAlign); }
  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using Buffer = std::vector<double, AlignedAllocator<double>>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotScalar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string shape_string(const Shape& shape);
std::size_t shape_size(const Shape& shape);

/// Dense row-major tensor of doubles. Copies are shallow: two Tensor handles
/// may refer to the same storage. A tensor that requires grad owns a
/// same-shape gradient accumulator.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from(Shape shape, std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  std::size_t size() const { return impl_->value.size(); }
  std::size_t dim() const { return impl_->shape.size(); }
  /// Leading dimension; 1 for a scalar.
  std::size_t rows() const;
  /// Product of the trailing dimensions; 1 for scalars and vectors.
  std::size_t cols() const;

  std::span<double> data() { return impl_->value; }
  std::span<const double> data() const { return impl_->value; }
  double* ptr() { return impl_->value.data(); }
  const double* ptr() const { return impl_->value.data(); }
  double item() const;
  double operator[](std::size_t i) const { return impl_->value[i]; }

  bool requires_grad() const { return impl_ && impl_->requires_grad; }
  /// Gradient accumulator. Tensors are handles, so this is writable through
  /// a const handle as well.
  std::span<double> grad() const;
  void zero_grad();

  /// Deep copy of values; the copy does not require grad.
  Tensor clone() const;
  /// Same storage identity.
  bool same(const Tensor& other) const { return impl_ == other.impl_; }

 private:
  struct Storage {
    Shape shape;
    Buffer value;
    Buffer grad;  // allocated on first use
    bool requires_grad = false;
  };
  explicit Tensor(std::shared_ptr<Storage> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Storage> impl_;

  friend class Tape;
};

/// Records differentiable operations in execution order and replays their
/// local gradients in reverse. Operations are only recorded when an input
/// requires grad and the tape is recording. Single-threaded; use one tape per
/// worker.
class Tape {
 public:
  explicit Tape(bool recording = true) : recording_(recording) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool recording() const { return recording_; }
  std::size_t size() const { return records_.size(); }
  void clear() { records_.clear(); }

  /// [m,k] x [k,n] -> [m,n].
  Tensor matmul(const Tensor& a, const Tensor& b);
  /// x [m,k] * w [k,n] + b [1,n], fused.
  Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);
  /// Same shapes, or b of shape [1,n] broadcast over the rows of a [m,n].
  Tensor add(const Tensor& a, const Tensor& b);
  Tensor sub(const Tensor& a, const Tensor& b);
  /// Elementwise product of same-shape tensors.
  Tensor mul(const Tensor& a, const Tensor& b);
  Tensor scale(const Tensor& a, double factor);
  Tensor exp(const Tensor& a);
  Tensor negate(const Tensor& a);
  Tensor relu(const Tensor& a);
  /// log(1 + e^x), evaluated stably.
  Tensor softplus(const Tensor& a);
  Tensor sigmoid(const Tensor& a);
  /// min(x, upper). The gradient passes through where x <= upper.
  Tensor clamp_upper(const Tensor& a, double upper);
  Tensor sum(const Tensor& a);
  Tensor mean(const Tensor& a);
  /// mean((a - b)^2).
  Tensor mse(const Tensor& a, const Tensor& b);
  /// Bilinear lookup into a [H,W] grid at pixel coordinates [M,2] = (u, v)
  /// with pixel centers at integer + 0.5. Cells outside the grid read as 0, so
  /// the result is continuous everywhere and vanishes half a pixel beyond the
  /// border. Differentiable with respect to the grid and the coordinates.
  /// Returns [M,1].
  Tensor gather_bilinear(const Tensor& grid, const Tensor& coords);

  /// [m,a] ++ [m,b] -> [m,a+b].
  Tensor concat_cols(const Tensor& a, const Tensor& b);
  Tensor reshape(const Tensor& a, Shape shape);
  /// [m,n] -> [m,1].
  Tensor row_sum(const Tensor& a);

  /// Allocates an output whose requires_grad follows its inputs.
  Tensor make_output(Shape shape, std::initializer_list<Tensor> inputs) const;
  /// Registers a backward closure for `output`. The closure reads
  /// output.grad() and accumulates into the grads of inputs that require it.
  /// Ignored when `output` does not require grad.
  void record(const Tensor& output, std::function<void()> backward);

  /// Seeds d(loss)/d(loss) = 1 and accumulates gradients into every tensor
  /// that requires grad. Clears the tape afterwards.
  void backward(const Tensor& loss);

 private:
  struct Record {
    std::shared_ptr<Tensor::Storage> output;
    std::function<void()> backward;
  };
  bool recording_;
  std::vector<Record> records_;
};

}  // namespace activerf::ad
