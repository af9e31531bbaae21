#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pbs {

/// Dense row-major square matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size, const T& fill = T{})
      : size_(size), cells_(size * size, fill) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : size_(rows.size()) {
    cells_.reserve(size_ * size_);
    for (const auto& row : rows) {
      if (row.size() != size_) throw std::invalid_argument("SquareMatrix: ragged initializer");
      cells_.insert(cells_.end(), row.begin(), row.end());
    }
  }

  std::size_t size() const { return size_; }

  T& operator()(std::size_t row, std::size_t col) { return cells_[row * size_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const {
    return cells_[row * size_ + col];
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<T> cells_;
};

}  // namespace pbs
