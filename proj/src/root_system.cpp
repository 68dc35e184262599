#include "radon/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace radon {

namespace {

int height(const RootVec& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

// Height first, then colexicographic, so the simple roots come first in
// index order.
bool root_less(const RootVec& a, const RootVec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                      b.rend());
}

}  // namespace

std::vector<std::vector<int>> series_cartan(char series, int rank) {
  auto bad = [&](const std::string& why) {
    fail(Errc::InvalidCartan, std::string("series ") + series +
                                  std::to_string(rank) + ": " + why);
  };
  if (rank < 1) bad("rank must be positive");
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto chain = [&] {
    for (int i = 0; i + 1 < rank; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  switch (series) {
    case 'A':
      chain();
      break;
    case 'B':
      if (rank < 2) bad("rank must be at least 2");
      chain();
      // short last root: alpha_{n-1} pairs to -2 against the last coroot
      c[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) bad("rank must be at least 2");
      chain();
      c[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 3) bad("rank must be at least 3");
      for (int i = 0; i + 2 < rank; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 3] = -1;
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad("rank must be 6, 7 or 8");
      // chain 1-3-4-5-...-rank with node 2 attached to node 4
      for (int i = 2; i + 1 < rank; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[0][2] = -1;
      c[2][0] = -1;
      c[1][3] = -1;
      c[3][1] = -1;
      break;
    case 'F':
      if (rank != 4) bad("rank must be 4");
      chain();
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      if (rank != 2) bad("rank must be 2");
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      bad("unknown series");
  }
  return c;
}

RootSystem RootSystem::build(const CartanInput& input, std::size_t max_roots) {
  RootSystem rs;
  if (input.cartan) {
    rs.cartan_ = *input.cartan;
    rs.rank_ = static_cast<int>(rs.cartan_.size());
  } else if (input.series) {
    rs.cartan_ = series_cartan(*input.series, input.rank);
    rs.rank_ = input.rank;
    rs.series_ = input.series;
  } else {
    fail(Errc::InvalidCartan, "neither series nor matrix given");
  }
  const int n = rs.rank_;
  if (n < 1) fail(Errc::InvalidCartan, "rank must be positive");
  for (const auto& row : rs.cartan_)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::InvalidCartan, "Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (rs.cartan_[i][i] != 2) fail(Errc::InvalidCartan, "diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rs.cartan_[i][j] > 0)
        fail(Errc::InvalidCartan, "off-diagonal entries must be nonpositive");
      if ((rs.cartan_[i][j] == 0) != (rs.cartan_[j][i] == 0))
        fail(Errc::InvalidCartan, "zero pattern must be symmetric");
      if (rs.cartan_[i][j] * rs.cartan_[j][i] > 3)
        fail(Errc::InvalidCartan, "not of finite type");
    }
  }

  // Reflection closure of the simple roots, tracking the coroot of each root
  // in parallel: reflecting a root acts on coroot coefficients through the
  // transposed Cartan matrix.
  std::map<RootVec, RootVec> closure;  // root -> coroot
  std::deque<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0), f(n, 0);
    e[i] = 1;
    f[i] = 1;
    closure.emplace(e, f);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    const RootVec& cv = closure.at(v);
    for (int i = 1; i <= n; ++i) {
      RootVec r = rs.reflect_root(i, v);
      bool positive = std::all_of(r.begin(), r.end(),
                                  [](int x) { return x >= 0; });
      if (!positive) continue;
      auto it = closure.find(r);
      if (it != closure.end()) continue;
      closure.emplace(r, rs.reflect_coroot(i, cv));
      queue.push_back(r);
      if (closure.size() > max_roots)
        fail(Errc::InvalidCartan,
             "reflection closure exceeds " + std::to_string(max_roots) +
                 " roots; not of finite type");
    }
  }

  rs.roots_.reserve(closure.size());
  for (const auto& [root, _] : closure) rs.roots_.push_back(root);
  std::sort(rs.roots_.begin(), rs.roots_.end(), root_less);
  rs.coroots_.reserve(rs.roots_.size());
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    rs.coroots_.push_back(closure.at(rs.roots_[k]));
    rs.index_.emplace(rs.roots_[k], k);
  }
  return rs;
}

std::optional<std::pair<std::size_t, int>> RootSystem::classify_root(
    const RootVec& v) const {
  if (static_cast<int>(v.size()) != rank_) return std::nullopt;
  auto it = index_.find(v);
  if (it != index_.end()) return std::make_pair(it->second, 1);
  RootVec neg(v);
  for (auto& x : neg) x = -x;
  it = index_.find(neg);
  if (it != index_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

Weight RootSystem::to_weight(const RootVec& v) const {
  if (static_cast<int>(v.size()) != rank_)
    fail(Errc::RankMismatch, "root vector of wrong rank");
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i) {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j) acc += (long long)cartan_[i][j] * v[j];
    c[i] = Rational(acc);
  }
  return Weight(std::move(c));
}

Weight RootSystem::rho_of(const ParabolicSubset& subset) const {
  validate_subset(subset);
  std::vector<long long> sum(rank_, 0);
  for (std::size_t k : positive_indices_of(subset))
    for (int j = 0; j < rank_; ++j) sum[j] += roots_[k][j];
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i) {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j) acc += (long long)cartan_[i][j] * sum[j];
    c[i] = Rational(acc, 2);
  }
  return Weight(std::move(c));
}

Weight RootSystem::rho_nil(const ParabolicSubset& subset) const {
  return rho() - rho_of(subset);
}

Rational RootSystem::pair(const Weight& lambda, const RootVec& beta) const {
  validate_weight(lambda);
  auto cls = classify_root(beta);
  if (!cls) fail(Errc::NotARoot, "not a root of the system");
  const RootVec& cv = coroots_[cls->first];
  Rational acc(0);
  for (int j = 0; j < rank_; ++j)
    acc += Rational((long long)cls->second * cv[j]) * lambda[j];
  return acc;
}

Weight RootSystem::simple_reflection(int i, const Weight& lambda) const {
  validate_index(i);
  validate_weight(lambda);
  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
  Rational coeff = lambda[i - 1];
  std::vector<Rational> c(lambda.coords());
  for (int j = 0; j < rank_; ++j)
    c[j] -= coeff * Rational(cartan_[j][i - 1]);
  return Weight(std::move(c));
}

RootVec RootSystem::reflect_root(int i, const RootVec& v) const {
  validate_index(i);
  long long coeff = 0;
  for (int j = 0; j < rank_; ++j) coeff += (long long)cartan_[i - 1][j] * v[j];
  RootVec r(v);
  r[i - 1] -= static_cast<int>(coeff);
  return r;
}

RootVec RootSystem::reflect_coroot(int i, const RootVec& v) const {
  validate_index(i);
  long long coeff = 0;
  for (int j = 0; j < rank_; ++j) coeff += (long long)cartan_[j][i - 1] * v[j];
  RootVec r(v);
  r[i - 1] -= static_cast<int>(coeff);
  return r;
}

bool RootSystem::supported_on(const RootVec& v,
                              const ParabolicSubset& subset) const {
  for (int j = 0; j < rank_; ++j)
    if (v[j] != 0 && !subset.contains(j + 1)) return false;
  return true;
}

std::vector<std::size_t> RootSystem::positive_indices_of(
    const ParabolicSubset& subset) const {
  validate_subset(subset);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (supported_on(roots_[k], subset)) out.push_back(k);
  return out;
}

void RootSystem::validate_index(int i) const {
  if (i < 1 || i > rank_)
    fail(Errc::IndexOutOfRange,
         "simple-root index " + std::to_string(i) + " out of range for rank " +
             std::to_string(rank_));
}

void RootSystem::validate_subset(const ParabolicSubset& subset) const {
  if (subset.max_index() > rank_)
    fail(Errc::IndexOutOfRange, "subset " + subset.str() +
                                    " exceeds rank " + std::to_string(rank_));
}

void RootSystem::validate_weight(const Weight& w) const {
  if (w.rank() != rank_)
    fail(Errc::RankMismatch, "weight of rank " + std::to_string(w.rank()) +
                                 " against system of rank " +
                                 std::to_string(rank_));
}

std::string RootSystem::label() const {
  if (series_) return std::string(1, *series_) + std::to_string(rank_);
  return "rank-" + std::to_string(rank_) + " system";
}

}  // namespace radon
