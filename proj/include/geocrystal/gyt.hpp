#ifndef GEOCRYSTAL_GYT_HPP
#define GEOCRYSTAL_GYT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geocrystal/triangle.hpp"

// The free crystal of generalized Young tableaux: integer points (B_{k,j}),
// 1 <= k < j <= n+1, with Kashiwara operators derived from row contents.

namespace geocrystal::gyt {

class SharpElement {
public:
  SharpElement() = default;
  /// All entries zero.
  explicit SharpElement(int n) : t_(n, 0) {}
  /// Entries listed in lexicographic order of (k, j).
  SharpElement(int n, const std::vector<std::int64_t>& entries);

  int rank() const { return t_.rank(); }
  static bool stored(int n, int k, int j) { return 1 <= k && k < j && j <= n + 1; }

  std::int64_t& B(int k, int j) { return t_(k, j - 1); }
  std::int64_t B(int k, int j) const { return t_(k, j - 1); }

  /// Entries in lexicographic order of (k, j).
  const std::vector<std::int64_t>& entries() const { return t_.values(); }
  /// (k, j) pairs matching entries().
  static std::vector<std::pair<int, int>> indices(int n);

  std::string to_string() const;

  friend bool operator==(const SharpElement&, const SharpElement&) = default;
  friend auto operator<=>(const SharpElement& a, const SharpElement& b) {
    return a.t_.values() <=> b.t_.values();
  }

private:
  Triangle<std::int64_t> t_;  // t_(k, j-1) = B_{k,j}
};

/// b_k = sum_{l<=k} B_{l,i+1} - sum_{l<=k-1} B_{l,i}, k = 1..i.
std::vector<std::int64_t> bvals(int i, const SharpElement& v);
std::int64_t epsilon(int i, const SharpElement& v);
/// Coefficients w_i of wt(v) = sum_i w_i alpha_i.
std::vector<std::int64_t> weight(const SharpElement& v);
/// <h_i, wt(v)> = sum_j a_{ij} w_j.
std::int64_t pairing(int i, const SharpElement& v);
std::int64_t phi(int i, const SharpElement& v);
/// (first, last) k where b_k attains epsilon_i.
std::pair<int, int> mi_Mi(int i, const SharpElement& v);

SharpElement etilde(int i, const SharpElement& v);
SharpElement ftilde(int i, const SharpElement& v);

/// beta_k^{(i)} for k = 1..i (beta_{i+1} = 0 is omitted). Any sign of beta is
/// accepted; beta = -1 reproduces ftilde.
std::vector<std::int64_t> beta_coefficients(int i, std::int64_t beta, const SharpElement& v);
/// B_{k,i} += beta_k and B_{k,i+1} -= beta_k, skipping the unstored B_{i,i}.
SharpElement apply_beta(int i, const std::vector<std::int64_t>& beta, const SharpElement& v);
/// etilde^beta via the closed formula; throws std::invalid_argument for beta < 0.
SharpElement etilde_pow(int i, std::int64_t beta, const SharpElement& v);
/// ftilde iterated beta >= 0 times.
SharpElement ftilde_pow(int i, std::int64_t beta, const SharpElement& v);
/// Weyl group action: etilde^{-p} if p = <h_i, wt> < 0, else ftilde^{p}.
SharpElement stilde(int i, const SharpElement& v);

}  // namespace geocrystal::gyt

#endif
