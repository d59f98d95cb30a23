#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tcmn/error.hpp"

namespace tcmn {

// Compile with -DTCMN_REAL_FLOAT for 32-bit kernels. Gradient checking and
// the verification suites assume the default 64-bit build.
#ifdef TCMN_REAL_FLOAT
using real = float;
#else
using real = double;
#endif

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);

// Dense row-major n-d array. Element (i, j) of an (R, C) tensor lives at
// data[i*C + j]. Rank 0 is a scalar with a single value. Every dimension
// must be >= 1. All free functions below are pure: arguments are never
// mutated and results are freshly allocated.
class Tensor {
public:
    Tensor() : data_(1, real(0)) {}
    explicit Tensor(Shape shape);
    Tensor(Shape shape, std::vector<real> data);
    Tensor(Shape shape, std::initializer_list<real> data);

    static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
    static Tensor full(Shape shape, real value);
    static Tensor identity(std::size_t n);

    const Shape& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t dim(std::size_t axis) const;

    real* data() { return data_.data(); }
    const real* data() const { return data_.data(); }
    const std::vector<real>& values() const { return data_; }

    real& at(std::size_t i) { return data_[i]; }
    real at(std::size_t i) const { return data_[i]; }

    // rank-checked accessors for the common layouts
    real& operator()(std::size_t i, std::size_t j) {
        return data_[i * shape_[1] + j];
    }
    real operator()(std::size_t i, std::size_t j) const {
        return data_[i * shape_[1] + j];
    }
    real& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    real operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    void fill(real value);

private:
    Shape shape_;             // empty for rank 0
    std::vector<real> data_;  // length == product(shape_)
};

// --- arithmetic -------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);

// adds a length-C vector over the last axis of x (the one sanctioned
// broadcast)
Tensor add_bias(const Tensor& x, const Tensor& bias);

Tensor sigmoid(const Tensor& t);
Tensor tanh(const Tensor& t);
Tensor relu(const Tensor& t);

real sigmoid_scalar(real x);

// --- reductions -------------------------------------------------------------

// The axis is removed from the shape. Accumulation is strictly
// left-to-right in index order, so results are reproducible bit for bit.
Tensor reduce_sum(const Tensor& t, std::size_t axis);
Tensor reduce_max(const Tensor& t, std::size_t axis);
Tensor reduce_mean(const Tensor& t, std::size_t axis);

// --- shape ------------------------------------------------------------------

Tensor reshape(const Tensor& t, Shape new_shape);

// copy of row i of a rank>=2 tensor, with the leading axis dropped
Tensor slice_first(const Tensor& t, std::size_t i);

} // namespace tcmn
