#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radon/rational.hpp"
#include "radon/subset.hpp"
#include "radon/weight.hpp"

namespace radon {

// A root (or coroot) as an integer vector of coefficients over the simple
// roots (resp. simple coroots); position k holds the coefficient of the
// (k+1)-th simple root.
using RootVec = std::vector<int>;

// Cartan data: either a series label (A..G with a rank) or an explicit Cartan
// matrix.  Convention: cartan[i][j] is the pairing of the j-th simple root
// with the i-th simple coroot, so the j-th column lists the fundamental-weight
// coordinates of the j-th simple root.
struct CartanInput {
  std::optional<char> series;
  int rank = 0;
  std::optional<std::vector<std::vector<int>>> cartan;

  static CartanInput of_series(char series, int rank) {
    CartanInput in;
    in.series = series;
    in.rank = rank;
    return in;
  }
  static CartanInput of_matrix(std::vector<std::vector<int>> m) {
    CartanInput in;
    in.rank = static_cast<int>(m.size());
    in.cartan = std::move(m);
    return in;
  }
};

class RootSystem {
 public:
  // Builds the full positive system by reflection closure from the simple
  // roots.  InvalidCartan if the matrix is malformed or the closure exceeds
  // max_roots (non-finite type).
  static RootSystem build(const CartanInput& input,
                          std::size_t max_roots = 10000);

  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // 1-based indices: entry (i, j) pairs the j-th simple root with the i-th
  // simple coroot.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  std::optional<char> series() const { return series_; }

  // Positive roots sorted by (height, coefficients); the first rank() entries
  // are the simple roots in index order.
  const std::vector<RootVec>& positive_roots() const { return roots_; }
  // coroot(k) corresponds to positive_roots()[k], in simple-coroot
  // coefficients.
  const RootVec& coroot(std::size_t k) const { return coroots_[k]; }
  std::size_t num_positive_roots() const { return roots_.size(); }

  // Returns (index into positive_roots, sign) when v is plus or minus a
  // positive root, nullopt otherwise.
  std::optional<std::pair<std::size_t, int>> classify_root(
      const RootVec& v) const;

  // Fundamental-weight coordinates of an arbitrary root-lattice vector:
  // the Cartan matrix applied to the coefficient vector.
  Weight to_weight(const RootVec& v) const;

  Weight rho() const { return Weight::rho(rank_); }
  // Half the sum of the positive roots supported on the subset.
  Weight rho_of(const ParabolicSubset& subset) const;
  // rho minus rho_of: half the sum of positive roots not supported on the
  // subset (the nilradical directions of the corresponding parabolic).
  Weight rho_nil(const ParabolicSubset& subset) const;

  // Pairing of a weight with the coroot of beta, where beta must be plus or
  // minus a positive root (NotARoot otherwise).
  Rational pair(const Weight& lambda, const RootVec& beta) const;

  // Simple reflection s_i on fundamental-weight coordinates.
  Weight simple_reflection(int i, const Weight& lambda) const;
  // Simple reflection s_i on root coefficients.
  RootVec reflect_root(int i, const RootVec& v) const;
  // Simple reflection s_i on coroot coefficients (transpose convention).
  RootVec reflect_coroot(int i, const RootVec& v) const;

  bool supported_on(const RootVec& v, const ParabolicSubset& subset) const;
  // Indices into positive_roots() of the roots supported on the subset.
  std::vector<std::size_t> positive_indices_of(
      const ParabolicSubset& subset) const;

  void validate_index(int i) const;
  void validate_subset(const ParabolicSubset& subset) const;
  void validate_weight(const Weight& w) const;

  std::string label() const;

 private:
  RootSystem() = default;

  int rank_ = 0;
  std::optional<char> series_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::map<RootVec, std::size_t> index_;
};

// Convenience wrapper matching the primary operation name.
inline RootSystem build_root_system(const CartanInput& input,
                                    std::size_t max_roots = 10000) {
  return RootSystem::build(input, max_roots);
}

// The Cartan matrix of a finite series type; InvalidCartan on unknown series
// or inadmissible rank.
std::vector<std::vector<int>> series_cartan(char series, int rank);

}  // namespace radon
