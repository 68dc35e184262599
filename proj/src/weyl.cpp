#include "radon/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace radon {

namespace {

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b,
                         int n) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

// Matrix of the simple reflection s_i on root coefficients.
std::vector<int> reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  std::vector<int> m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[(i - 1) * n + j] -= rs.cartan(i, j + 1);
  return m;
}

bool column_negative(const std::vector<int>& m, int n, int j) {
  // Roots have uniform sign, so one negative coefficient decides.
  for (int r = 0; r < n; ++r) {
    int x = m[r * n + j];
    if (x < 0) return true;
    if (x > 0) return false;
  }
  return false;
}

int length_of(const RootSystem& rs, const std::vector<int>& m) {
  // Number of positive roots sent to negative roots.
  const int n = rs.rank();
  int count = 0;
  for (const RootVec& beta : rs.positive_roots()) {
    long long lead = 0;
    for (int r = 0; r < n && lead == 0; ++r) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc += (long long)m[r * n + j] * beta[j];
      lead = acc;
    }
    if (lead < 0) ++count;
  }
  return count;
}

// Lexicographically least reduced word: repeatedly emit the smallest left
// descent.  i is a left descent of w iff w^{-1}(alpha_i) is negative, so the
// scan runs on the inverse matrix while the element is peeled from the left.
std::vector<int> canonical_word(const RootSystem& rs, std::vector<int> m,
                                std::vector<int> minv) {
  const int n = rs.rank();
  std::vector<int> word;
  const std::vector<int> id = identity_matrix(n);
  while (m != id) {
    int i = 0;
    for (int c = 1; c <= n; ++c) {
      if (column_negative(minv, n, c - 1)) {
        i = c;
        break;
      }
    }
    if (i == 0) fail(Errc::Internal, "no descent on a non-identity element");
    std::vector<int> s = reflection_matrix(rs, i);
    m = mat_mul(s, m, n);
    minv = mat_mul(minv, s, n);
    word.push_back(i);
  }
  return word;
}

}  // namespace

WeylElem::WeylElem(const RootSystem& rs, std::vector<int> mat)
    : rs_(&rs), mat_(std::move(mat)) {
  const int n = rs.rank();
  length_ = length_of(rs, mat_);
  // Inverse by peeling right descents: while w != e, pick i with w(alpha_i)
  // negative and replace w by w s_i; the accumulated product is w^{-1}.
  std::vector<int> m = mat_;
  std::vector<int> inv = identity_matrix(n);
  const std::vector<int> id = identity_matrix(n);
  while (m != id) {
    int i = 0;
    for (int c = 1; c <= n; ++c) {
      if (column_negative(m, n, c - 1)) {
        i = c;
        break;
      }
    }
    if (i == 0) fail(Errc::Internal, "no descent on a non-identity element");
    std::vector<int> s = reflection_matrix(rs, i);
    // m s_{i_1} ... s_{i_k} = e, so the inverse is the product in pick order.
    m = mat_mul(m, s, n);
    inv = mat_mul(inv, s, n);
  }
  word_ = canonical_word(rs, mat_, inv);
  if (static_cast<int>(word_.size()) != length_)
    fail(Errc::Internal, "canonical word length disagrees with inversions");
}

WeylElem WeylElem::identity(const RootSystem& rs) {
  return WeylElem(rs, identity_matrix(rs.rank()));
}

WeylElem WeylElem::from_word(const RootSystem& rs,
                             const std::vector<int>& word) {
  const int n = rs.rank();
  std::vector<int> m = identity_matrix(n);
  for (int i : word) {
    rs.validate_index(i);
    m = mat_mul(m, reflection_matrix(rs, i), n);
  }
  return WeylElem(rs, std::move(m));
}

WeylElem WeylElem::from_matrix(const RootSystem& rs, std::vector<int> mat) {
  if (static_cast<int>(mat.size()) != rs.rank() * rs.rank())
    fail(Errc::RankMismatch, "matrix of wrong size");
  return WeylElem(rs, std::move(mat));
}

RootVec WeylElem::act_root(const RootVec& v) const {
  const int n = rs_->rank();
  if (static_cast<int>(v.size()) != n)
    fail(Errc::RankMismatch, "root vector of wrong rank");
  RootVec out(n, 0);
  for (int r = 0; r < n; ++r) {
    long long acc = 0;
    for (int j = 0; j < n; ++j) acc += (long long)mat_[r * n + j] * v[j];
    out[r] = static_cast<int>(acc);
  }
  return out;
}

Weight WeylElem::act(const Weight& lambda) const {
  rs_->validate_weight(lambda);
  Weight out = lambda;
  // w = s_{i_1} ... s_{i_k} acts by applying the rightmost letter first.
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    out = rs_->simple_reflection(*it, out);
  return out;
}

Weight WeylElem::star_act(const Weight& lambda) const {
  Weight rho = rs_->rho();
  return act(lambda - rho) + rho;
}

WeylElem WeylElem::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return from_word(*rs_, rev);
}

WeylElem operator*(const WeylElem& u, const WeylElem& v) {
  if (u.rs_ != v.rs_)
    fail(Errc::RankMismatch, "elements of different root systems");
  return WeylElem(*u.rs_, mat_mul(u.mat_, v.mat_, u.rs_->rank()));
}

WeylElem longest_element(const RootSystem& rs, const ParabolicSubset& subset) {
  rs.validate_subset(subset);
  const int n = rs.rank();
  std::vector<int> m = identity_matrix(n);
  const std::vector<int> indices = subset.indices();
  // Greedy ascent: while some generator in the subset is sent to a positive
  // root, multiply by it on the right.  Each step raises the length by one.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : indices) {
      if (!column_negative(m, n, i - 1)) {
        m = mat_mul(m, reflection_matrix(rs, i), n);
        progress = true;
        break;
      }
    }
  }
  WeylElem w = WeylElem::from_matrix(rs, std::move(m));
  if (w.length() !=
      static_cast<int>(rs.positive_indices_of(subset).size()))
    fail(Errc::Internal, "longest element has unexpected length");
  return w;
}

std::vector<WeylElem> enumerate_group(const RootSystem& rs,
                                      const ParabolicSubset& subset,
                                      std::size_t cap) {
  rs.validate_subset(subset);
  const int n = rs.rank();
  const std::vector<int> indices = subset.indices();
  std::vector<std::vector<int>> gens;
  gens.reserve(indices.size());
  for (int i : indices) gens.push_back(reflection_matrix(rs, i));

  std::map<std::vector<int>, int> seen;
  std::deque<std::vector<int>> queue;
  std::vector<std::vector<int>> order;
  std::vector<int> id = identity_matrix(n);
  seen.emplace(id, 0);
  queue.push_back(id);
  order.push_back(id);
  while (!queue.empty()) {
    std::vector<int> m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> next = mat_mul(m, g, n);
      if (seen.count(next)) continue;
      if (order.size() + 1 > cap)
        fail(Errc::GroupTooLarge,
             "group exceeds enumeration cap " + std::to_string(cap));
      seen.emplace(next, 0);
      queue.push_back(next);
      order.push_back(std::move(next));
    }
  }
  std::vector<WeylElem> out;
  out.reserve(order.size());
  for (auto& m : order) out.push_back(WeylElem::from_matrix(rs, std::move(m)));
  return out;
}

}  // namespace radon
