#pragma once

#include <cstddef>
#include <vector>

#include "radon/root_system.hpp"

namespace radon {

// A Weyl group element, stored as its integer matrix on the root lattice
// (column j holds the root coefficients of the image of the j-th simple root)
// together with its length and canonical reduced word.  The canonical word is
// the lexicographically least reduced word, recomputed from the matrix, so
// equal elements always carry equal words.  Elements keep a pointer to their
// root system, which must outlive them.
class WeylElem {
 public:
  static WeylElem identity(const RootSystem& rs);
  // Product of simple reflections, leftmost letter applied last; the word
  // need not be reduced.  IndexOutOfRange on letters outside 1..rank.
  static WeylElem from_word(const RootSystem& rs, const std::vector<int>& word);

  const RootSystem& root_system() const { return *rs_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  // Lexicographically least reduced word, 1-based letters.
  const std::vector<int>& word() const { return word_; }
  // Row-major rank x rank matrix on root coefficients.
  const std::vector<int>& matrix() const { return mat_; }

  // Image of a root-lattice vector.
  RootVec act_root(const RootVec& v) const;
  // Linear action on fundamental-weight coordinates, computed along the word.
  Weight act(const Weight& lambda) const;
  // Shifted action w(lambda - rho) + rho.
  Weight star_act(const Weight& lambda) const;

  WeylElem inverse() const;
  friend WeylElem operator*(const WeylElem& u, const WeylElem& v);

  friend bool operator==(const WeylElem& a, const WeylElem& b) {
    return a.mat_ == b.mat_;
  }
  friend bool operator!=(const WeylElem& a, const WeylElem& b) {
    return !(a == b);
  }
  friend bool operator<(const WeylElem& a, const WeylElem& b) {
    return a.mat_ < b.mat_;
  }

  // Constructs from a raw matrix, deriving length and canonical word.
  static WeylElem from_matrix(const RootSystem& rs, std::vector<int> mat);

 private:
  WeylElem(const RootSystem& rs, std::vector<int> mat);

  const RootSystem* rs_;
  std::vector<int> mat_;
  std::vector<int> word_;
  int length_;
};

// Wrapper matching the primary operation name.
inline WeylElem element_from_word(const RootSystem& rs,
                                  const std::vector<int>& word) {
  return WeylElem::from_word(rs, word);
}

// Longest element of the standard parabolic subgroup generated by the subset
// (the whole group for the full subset); greedy ascent, no enumeration.
WeylElem longest_element(const RootSystem& rs, const ParabolicSubset& subset);

// All elements of the standard parabolic subgroup, breadth-first by length
// and deterministic within a length; GroupTooLarge beyond the cap.
std::vector<WeylElem> enumerate_group(const RootSystem& rs,
                                      const ParabolicSubset& subset,
                                      std::size_t cap = 200000);

inline std::vector<WeylElem> enumerate_group(const RootSystem& rs,
                                             std::size_t cap = 200000) {
  return enumerate_group(rs, ParabolicSubset::full(rs.rank()), cap);
}

inline Weight act(const WeylElem& w, const Weight& lambda) {
  return w.act(lambda);
}
inline Weight star_act(const WeylElem& w, const Weight& lambda) {
  return w.star_act(lambda);
}

}  // namespace radon
