#include "geocrystal/matrix.hpp"

#include <stdexcept>
#include <unordered_map>

#include "geocrystal/error.hpp"

namespace geocrystal {

MatRF MatRF::identity(std::size_t size) {
  MatRF m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = RatFun(1);
  return m;
}

MatRF operator*(const MatRF& a, const MatRF& b) {
  if (a.size_ != b.size_) throw DimensionMismatch("matrix product of different sizes");
  const std::size_t n = a.size_;
  MatRF out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatFun acc;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

bool operator==(const MatRF& a, const MatRF& b) {
  return a.size_ == b.size_ && !a.first_difference(b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> MatRF::first_difference(const MatRF& o) const {
  if (size_ != o.size_) throw DimensionMismatch("comparing matrices of different sizes");
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      if (!((*this)(i, j) == o(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

RatFun MatRF::determinant() const {
  if (size_ == 0) return RatFun(1);
  if (size_ > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");
  // det of rows [r, n) restricted to the column set `mask` (|mask| = n - r).
  std::unordered_map<unsigned, RatFun> memo;
  const std::size_t n = size_;
  auto rec = [&](auto& self, std::size_t r, unsigned mask) -> RatFun {
    if (r == n) return RatFun(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    RatFun acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!(*this)(r, c).is_zero()) {
        RatFun minor = self(self, r + 1, mask & ~(1u << c));
        if (!minor.is_zero()) {
          RatFun t = (*this)(r, c) * minor;
          acc = sign > 0 ? acc + t : acc - t;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << n) - 1);
}

MatRF MatRF::submatrix(std::size_t row0, std::size_t col0, std::size_t k) const {
  if (row0 + k > size_ || col0 + k > size_) throw std::out_of_range("submatrix out of range");
  MatRF m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
  return m;
}

bool MatRF::is_lower_triangular() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool MatRF::is_lower_unitriangular() const {
  if (!is_lower_triangular()) return false;
  for (std::size_t i = 0; i < size_; ++i)
    if (!((*this)(i, i) == RatFun(1))) return false;
  return true;
}

bool MatRF::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (!((*this)(i, i) == RatFun(1))) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

}  // namespace geocrystal
