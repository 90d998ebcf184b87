#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "repa/common/error.hpp"

namespace repa {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_numel(const Shape& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

std::string shape_to_string(const Shape& shape);

/// Dense row-major tensor. `values.size() == product(shape)` always holds.
template <typename T>
struct BasicTensor {
    Shape shape;
    std::vector<T> values;

    BasicTensor() = default;
    explicit BasicTensor(Shape s) : shape(std::move(s)), values(shape_numel(shape), T{0}) {}
    BasicTensor(Shape s, std::vector<T> v) : shape(std::move(s)), values(std::move(v)) {
        if (shape_numel(shape) != values.size()) {
            throw InputError("tensor shape " + shape_to_string(shape) + " does not match " +
                             std::to_string(values.size()) + " values");
        }
    }

    std::size_t numel() const { return values.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t dim(std::size_t i) const { return shape.at(i); }

    /// Number of elements in one slice along the leading dimension.
    std::size_t row_size() const { return shape.empty() ? 0 : numel() / shape[0]; }

    std::span<T> row(std::size_t i) { return {values.data() + i * row_size(), row_size()}; }
    std::span<const T> row(std::size_t i) const { return {values.data() + i * row_size(), row_size()}; }

    bool operator==(const BasicTensor&) const = default;
};

using Tensor = BasicTensor<float>;

/// Copies rows `indices` of `src` (along the leading dimension) into a new tensor.
template <typename T>
BasicTensor<T> gather_rows(const BasicTensor<T>& src, std::span<const std::size_t> indices) {
    Shape shape = src.shape;
    shape.at(0) = indices.size();
    BasicTensor<T> out(shape);
    const std::size_t rs = src.row_size();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto r = src.row(indices[i]);
        std::copy(r.begin(), r.end(), out.values.begin() + static_cast<std::ptrdiff_t>(i * rs));
    }
    return out;
}

template <typename U, typename T>
BasicTensor<U> tensor_cast(const BasicTensor<T>& t) {
    return BasicTensor<U>(t.shape, std::vector<U>(t.values.begin(), t.values.end()));
}

}  // namespace repa
