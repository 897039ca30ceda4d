#pragma once

#include <Eigen/Core>
#include <cassert>
#include <vector>

namespace urfgs {

/// Dense row-major raster. T is a scalar or a small Eigen vector.
template <typename T>
class Image {
public:
    Image() = default;
    Image(int width, int height, const T& fill = T{})
        : width_(width), height_(height),
          data_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return data_.empty(); }
    size_t pixel_count() const { return data_.size(); }

    T& at(int row, int col) {
        assert(row >= 0 && row < height_ && col >= 0 && col < width_);
        return data_[static_cast<size_t>(row) * width_ + col];
    }
    const T& at(int row, int col) const {
        assert(row >= 0 && row < height_ && col >= 0 && col < width_);
        return data_[static_cast<size_t>(row) * width_ + col];
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool same_size(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using ImageD = Image<double>;
using Image3 = Image<Eigen::Vector3d>;

} // namespace urfgs
