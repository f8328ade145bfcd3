#include "geocrystal/gyt.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace geocrystal::gyt {

namespace {

void check_root(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("root index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

// Max over b[lo-1 .. hi-1]; nullopt stands for the empty max (minus infinity).
std::optional<std::int64_t> range_max(const std::vector<std::int64_t>& b, int lo, int hi) {
  std::optional<std::int64_t> m;
  for (int j = lo; j <= hi; ++j)
    if (!m || b[j - 1] > *m) m = b[j - 1];
  return m;
}

std::optional<std::int64_t> shifted(std::optional<std::int64_t> x, std::int64_t s) {
  if (!x) return x;
  return *x + s;
}

std::int64_t max_of(std::optional<std::int64_t> x, std::optional<std::int64_t> y) {
  if (!x && !y) throw std::logic_error("max of two empty ranges");
  if (!x) return *y;
  if (!y) return *x;
  return std::max(*x, *y);
}

}  // namespace

SharpElement::SharpElement(int n, const std::vector<std::int64_t>& entries) : t_(n, 0) {
  if (entries.size() != t_.size())
    throw std::invalid_argument("expected " + std::to_string(t_.size()) + " entries for rank " + std::to_string(n));
  t_.values() = entries;
}

std::vector<std::pair<int, int>> SharpElement::indices(int n) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n + 1; ++j) out.emplace_back(k, j);
  return out;
}

std::string SharpElement::to_string() const {
  std::string s = "(";
  const auto& e = entries();
  for (std::size_t t = 0; t < e.size(); ++t) s += (t ? ", " : "") + std::to_string(e[t]);
  return s + ")";
}

std::vector<std::int64_t> bvals(int i, const SharpElement& v) {
  check_root(i, v.rank());
  std::vector<std::int64_t> b;
  std::int64_t up = 0, here = 0;  // running sums of B_{l,i+1} (l <= k) and B_{l,i} (l <= k-1)
  for (int k = 1; k <= i; ++k) {
    up += v.B(k, i + 1);
    if (k >= 2) here += v.B(k - 1, i);
    b.push_back(up - here);
  }
  return b;
}

std::int64_t epsilon(int i, const SharpElement& v) {
  auto b = bvals(i, v);
  return *std::max_element(b.begin(), b.end());
}

std::vector<std::int64_t> weight(const SharpElement& v) {
  const int n = v.rank();
  std::vector<std::int64_t> w(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k)
      for (int j = i + 1; j <= n + 1; ++j) w[i - 1] -= v.B(k, j);
  return w;
}

std::int64_t pairing(int i, const SharpElement& v) {
  const int n = v.rank();
  check_root(i, n);
  auto w = weight(v);
  std::int64_t s = 2 * w[i - 1];
  if (i > 1) s -= w[i - 2];
  if (i < n) s -= w[i];
  return s;
}

std::int64_t phi(int i, const SharpElement& v) { return epsilon(i, v) + pairing(i, v); }

std::pair<int, int> mi_Mi(int i, const SharpElement& v) {
  auto b = bvals(i, v);
  const std::int64_t e = *std::max_element(b.begin(), b.end());
  int lo = 0, hi = 0;
  for (int k = 1; k <= i; ++k)
    if (b[k - 1] == e) {
      if (!lo) lo = k;
      hi = k;
    }
  return {lo, hi};
}

SharpElement apply_beta(int i, const std::vector<std::int64_t>& beta, const SharpElement& v) {
  check_root(i, v.rank());
  if (beta.size() != static_cast<std::size_t>(i)) throw std::invalid_argument("apply_beta: need i coefficients");
  SharpElement out = v;
  for (int k = 1; k <= i; ++k) {
    if (k < i) out.B(k, i) += beta[k - 1];  // B_{i,i} is not stored
    out.B(k, i + 1) -= beta[k - 1];
  }
  return out;
}

SharpElement etilde(int i, const SharpElement& v) {
  std::vector<std::int64_t> beta(i, 0);
  beta[mi_Mi(i, v).first - 1] = 1;
  return apply_beta(i, beta, v);
}

SharpElement ftilde(int i, const SharpElement& v) {
  std::vector<std::int64_t> beta(i, 0);
  beta[mi_Mi(i, v).second - 1] = -1;
  return apply_beta(i, beta, v);
}

std::vector<std::int64_t> beta_coefficients(int i, std::int64_t beta, const SharpElement& v) {
  auto b = bvals(i, v);
  std::vector<std::int64_t> out;
  for (int k = 1; k <= i; ++k) {
    std::int64_t first = max_of(shifted(range_max(b, 1, k), beta), range_max(b, k + 1, i));
    std::int64_t second = max_of(shifted(range_max(b, 1, k - 1), beta), range_max(b, k, i));
    out.push_back(first - second);
  }
  return out;
}

SharpElement etilde_pow(int i, std::int64_t beta, const SharpElement& v) {
  if (beta < 0) throw std::invalid_argument("etilde_pow needs beta >= 0; use ftilde_pow");
  return apply_beta(i, beta_coefficients(i, beta, v), v);
}

SharpElement ftilde_pow(int i, std::int64_t beta, const SharpElement& v) {
  if (beta < 0) throw std::invalid_argument("ftilde_pow needs beta >= 0");
  SharpElement out = v;
  for (std::int64_t s = 0; s < beta; ++s) out = ftilde(i, out);
  return out;
}

SharpElement stilde(int i, const SharpElement& v) {
  const std::int64_t p = pairing(i, v);
  return p < 0 ? etilde_pow(i, -p, v) : ftilde_pow(i, p, v);
}

}  // namespace geocrystal::gyt
