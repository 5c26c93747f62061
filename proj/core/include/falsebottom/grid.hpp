#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "falsebottom/error.hpp"

namespace falsebottom {

// Dense row-major 2-D grid. Throughout the library rows are samples
// (row 0 = shallowest) and columns are pings (column 0 = oldest); every
// module shares this orientation.
template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Grid(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw ShapeError("grid data size " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    bool same_shape(const Grid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline std::string shape_string(std::size_t rows, std::size_t cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

// Throws ShapeError naming both shapes when they differ.
inline void require_same_shape(std::size_t rows_a, std::size_t cols_a,
                               std::size_t rows_b, std::size_t cols_b,
                               const std::string& what_a, const std::string& what_b) {
    if (rows_a != rows_b || cols_a != cols_b) {
        throw ShapeError(what_a + " is " + shape_string(rows_a, cols_a) + " but " +
                         what_b + " is " + shape_string(rows_b, cols_b));
    }
}

}  // namespace falsebottom
