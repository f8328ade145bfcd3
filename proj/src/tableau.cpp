#include "geocrystal/tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "geocrystal/error.hpp"

namespace geocrystal::gyt {

void Tableau::validate(int n) const {
  if (rows.size() != shape.size()) throw std::invalid_argument("tableau: rows do not match shape");
  if (shape.size() > static_cast<std::size_t>(n + 1)) throw std::invalid_argument("tableau: more than n+1 rows");
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] <= 0) throw std::invalid_argument("tableau: row lengths must be positive");
    if (r > 0 && shape[r] > shape[r - 1]) throw std::invalid_argument("tableau: shape is not a partition");
    if (rows[r].size() != static_cast<std::size_t>(shape[r])) throw std::invalid_argument("tableau: row length mismatch");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int x = rows[r][c];
      if (x < 1 || x > n + 1) throw std::invalid_argument("tableau: entry " + std::to_string(x) + " outside 1..n+1");
      if (c > 0 && x < rows[r][c - 1]) throw std::invalid_argument("tableau: row not weakly increasing");
      if (r > 0 && x <= rows[r - 1][c]) throw std::invalid_argument("tableau: column not strictly increasing");
    }
  }
}

BoxWord arabic_reading(const Tableau& t) {
  BoxWord w;
  for (const auto& row : t.rows) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

namespace {

// b_k of the tensor rule for a word of boxes: epsilon(v_k) - sum_{j<k} <h_i, wt(v_j)>.
std::vector<long> tensor_b(int i, const BoxWord& w) {
  std::vector<long> b;
  long prefix = 0;
  for (int x : w) {
    b.push_back((x == i + 1 ? 1 : 0) - prefix);
    prefix += (x == i) ? 1 : (x == i + 1 ? -1 : 0);
  }
  return b;
}

}  // namespace

int word_epsilon(int i, const BoxWord& w) {
  long e = 0;
  for (long b : tensor_b(i, w)) e = std::max(e, b);
  return static_cast<int>(e);
}

BoxWord tensor_e_pow(int i, int beta, const BoxWord& w) {
  if (i < 1) throw std::out_of_range("root index must be >= 1");
  if (beta < 0) throw std::invalid_argument("tensor_e_pow needs beta >= 0");
  if (beta == 0) return w;
  if (beta > word_epsilon(i, w)) throw Annihilated("e_" + std::to_string(i) + "^" + std::to_string(beta) + " annihilates the word");
  const auto b = tensor_b(i, w);
  const std::size_t l = b.size();
  // prefix_max[k] = max b[0..k-1], suffix_max[k] = max b[k..l-1]; LONG_MIN marks empty.
  constexpr long kEmpty = std::numeric_limits<long>::min();
  std::vector<long> prefix_max(l + 1, kEmpty), suffix_max(l + 1, kEmpty);
  for (std::size_t k = 0; k < l; ++k) prefix_max[k + 1] = std::max(prefix_max[k], b[k]);
  for (std::size_t k = l; k-- > 0;) suffix_max[k] = std::max(suffix_max[k + 1], b[k]);
  auto plus = [&](long x) { return x == kEmpty ? kEmpty : x + beta; };
  BoxWord out = w;
  for (std::size_t k = 0; k < l; ++k) {
    long c = std::max(plus(prefix_max[k + 1]), suffix_max[k + 1]) - std::max(plus(prefix_max[k]), suffix_max[k]);
    if (c == 0) continue;
    if (c != 1 || w[k] != i + 1) throw Annihilated("tensor rule sends a box to 0");
    out[k] = i;
  }
  return out;
}

SharpElement word_rowcounts(const BoxWord& w, const std::vector<int>& shape, int n) {
  SharpElement v(n);
  std::size_t pos = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const int k = static_cast<int>(r) + 1;
    for (int c = 0; c < shape[r]; ++c, ++pos) {
      if (pos >= w.size()) throw std::invalid_argument("word shorter than shape");
      if (SharpElement::stored(n, k, w[pos])) v.B(k, w[pos]) += 1;
    }
  }
  if (pos != w.size()) throw std::invalid_argument("word longer than shape");
  return v;
}

SharpElement tableau_rowcounts(const Tableau& t, int n) {
  t.validate(n);
  return word_rowcounts(arabic_reading(t), t.shape, n);
}

namespace {

void partitions_into(int max_rows, int remaining, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_rows) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(max_rows, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

const std::vector<std::vector<int>>& partitions(int max_rows, int max_size) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto [it, inserted] = cache.try_emplace({max_rows, max_size});
  if (inserted) {
    std::vector<int> cur;
    partitions_into(max_rows, max_size, max_size, cur, it->second);
  }
  return it->second;
}

}  // namespace

Tableau random_tableau(int n, int max_size, std::mt19937_64& rng) {
  const auto& all = partitions(n + 1, max_size);
  Tableau t;
  t.shape = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  const int rows = static_cast<int>(t.shape.size());
  t.rows.resize(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < t.shape[r]; ++c) {
      int height = 0;
      while (height < rows && t.shape[height] > c) ++height;
      int lo = r + 1;
      if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
      if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
      // Leave room for the strictly increasing entries still to come below.
      int hi = n + 1 - (height - 1 - r);
      t.rows[r].push_back(std::uniform_int_distribution<int>(lo, hi)(rng));
    }
  }
  return t;
}

}  // namespace geocrystal::gyt
