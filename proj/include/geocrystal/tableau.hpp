#ifndef GEOCRYSTAL_TABLEAU_HPP
#define GEOCRYSTAL_TABLEAU_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "geocrystal/gyt.hpp"

// Semistandard tableaux with entries 1..n+1, read into the tensor power of the
// box crystal. Used as an independent check of the closed formulas on B#.

namespace geocrystal::gyt {

struct Tableau {
  std::vector<int> shape;              // weakly decreasing row lengths
  std::vector<std::vector<int>> rows;  // rows[r].size() == shape[r]

  /// Throws std::invalid_argument unless rows match shape, rows weakly increase,
  /// columns strictly increase and entries lie in 1..n+1.
  void validate(int n) const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

using BoxWord = std::vector<int>;

/// Each row read right to left, top row first.
BoxWord arabic_reading(const Tableau& t);

/// ẽ_i^beta on a word of boxes by the tensor-product rule. Throws Annihilated
/// when beta exceeds epsilon_i of the word.
BoxWord tensor_e_pow(int i, int beta, const BoxWord& w);

/// epsilon_i of a box word.
int word_epsilon(int i, const BoxWord& w);

/// B_{k,j} = number of j's in row k, for k < j; diagonal counts dropped.
SharpElement tableau_rowcounts(const Tableau& t, int n);
/// Same counts for a word split into consecutive segments of the given lengths.
SharpElement word_rowcounts(const BoxWord& w, const std::vector<int>& shape, int n);

/// Uniform partition with at most n+1 rows and at most max_size boxes, filled by
/// a random semistandard completion.
Tableau random_tableau(int n, int max_size, std::mt19937_64& rng);

}  // namespace geocrystal::gyt

#endif
