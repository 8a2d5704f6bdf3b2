#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cauchon/error.hpp"

namespace cauchon {

// Dense row-major matrix over any value type. Element access is 0-based;
// minor indices (MinorIndex) are 1-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DomainError("matrix entry count does not match its shape");
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw DomainError("matrix must have at least one row and one column");
    std::vector<T> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw DomainError("ragged matrix rows");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), rows.front().size(), std::move(flat));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<T>& entries() const { return entries_; }

  Matrix transpose() const {
    std::vector<T> out;
    out.reserve(entries_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return Matrix(cols_, rows_, std::move(out));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

}  // namespace cauchon
