#ifndef GEOCRYSTAL_TRIANGLE_HPP
#define GEOCRYSTAL_TRIANGLE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geocrystal {

/// Values indexed by pairs (k, j) with 1 <= k <= j <= n, stored in
/// lexicographic order of (k, j).
template <class T>
class Triangle {
public:
  Triangle() = default;
  explicit Triangle(int n, const T& fill = T()) : n_(n), data_(size_for(n), fill) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
  }

  static std::size_t size_for(int n) { return n < 1 ? 0 : static_cast<std::size_t>(n) * (n + 1) / 2; }

  /// All (k, j) in storage order.
  static std::vector<std::pair<int, int>> indices(int n) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= n; ++k)
      for (int j = k; j <= n; ++j) out.emplace_back(k, j);
    return out;
  }

  int rank() const { return n_; }
  std::size_t size() const { return data_.size(); }

  bool contains(int k, int j) const { return 1 <= k && k <= j && j <= n_; }

  std::size_t offset(int k, int j) const {
    if (!contains(k, j))
      throw std::out_of_range("index (" + std::to_string(k) + "," + std::to_string(j) + ") outside 1 <= k <= j <= " +
                              std::to_string(n_));
    // Rows 1..k-1 hold n, n-1, ..., n-k+2 entries.
    return static_cast<std::size_t>((k - 1) * n_ - (k - 1) * (k - 2) / 2 + (j - k));
  }

  T& operator()(int k, int j) { return data_[offset(k, j)]; }
  const T& operator()(int k, int j) const { return data_[offset(k, j)]; }

  std::vector<T>& values() { return data_; }
  const std::vector<T>& values() const { return data_; }

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
  int n_ = 0;
  std::vector<T> data_;
};

}  // namespace geocrystal

#endif
