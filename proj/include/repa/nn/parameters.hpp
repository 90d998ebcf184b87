#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "repa/nn/tensor.hpp"

namespace repa {

struct LayoutEntry {
    std::string name;
    Shape shape;

    std::size_t numel() const { return shape_numel(shape); }
    bool operator==(const LayoutEntry&) const = default;
};

using Layout = std::vector<LayoutEntry>;

std::size_t layout_numel(const Layout& layout);

/// Flat parameter (or gradient) vector with its named layout. All layers are
/// stored back to back in layout order.
template <typename T>
struct ParamVector {
    Layout layout;
    std::vector<T> values;

    ParamVector() = default;
    explicit ParamVector(Layout l) : layout(std::move(l)), values(layout_numel(layout), T{0}) {}
    ParamVector(Layout l, std::vector<T> v);

    std::size_t size() const { return values.size(); }
    bool has(const std::string& name) const;
    std::size_t offset(const std::string& name) const;
    std::span<T> slice(const std::string& name);
    std::span<const T> slice(const std::string& name) const;

    bool operator==(const ParamVector&) const = default;
};

using ModelParameters = ParamVector<float>;
using Gradients = ParamVector<float>;

template <typename U, typename T>
ParamVector<U> param_cast(const ParamVector<T>& p) {
    return ParamVector<U>(p.layout, std::vector<U>(p.values.begin(), p.values.end()));
}

/// Throws InternalError unless both layouts match exactly.
void require_same_layout(const Layout& a, const Layout& b, const char* what);

/// Euclidean distance between two parameter vectors with identical layouts.
double l2_distance(const ModelParameters& a, const ModelParameters& b);

/// params − lr · grads, element-wise.
ModelParameters sgd_step(const ModelParameters& params, const Gradients& grads, float lr);

}  // namespace repa
