#ifndef GEOCRYSTAL_MATRIX_HPP
#define GEOCRYSTAL_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "geocrystal/ratfun.hpp"

namespace geocrystal {

/// Square matrix of rational functions, row-major, 0-based entry access.
class MatRF {
public:
  MatRF() = default;
  explicit MatRF(std::size_t size) : size_(size), entries_(size * size) {}
  static MatRF identity(std::size_t size);

  std::size_t size() const { return size_; }
  const RatFun& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }
  RatFun& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }

  friend MatRF operator*(const MatRF& a, const MatRF& b);
  friend bool operator==(const MatRF& a, const MatRF& b);

  /// Laplace expansion with memoization over column subsets; exact, division-free.
  RatFun determinant() const;
  MatRF submatrix(std::size_t row0, std::size_t col0, std::size_t k) const;

  bool is_lower_triangular() const;
  bool is_lower_unitriangular() const;
  bool is_upper_unitriangular() const;

  /// First (row, col) where the two matrices differ, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const MatRF& o) const;

private:
  std::size_t size_ = 0;
  std::vector<RatFun> entries_;
};

}  // namespace geocrystal

#endif
