#include "radon/parabolic.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace radon {

namespace {

std::optional<int> simple_index(const RootVec& v) {
  int idx = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (v[k] != 1 || idx != 0) return std::nullopt;
    idx = static_cast<int>(k) + 1;
  }
  if (idx == 0) return std::nullopt;
  return idx;
}

}  // namespace

std::optional<ParabolicSubset> star_image(const WeylElem& w,
                                          const ParabolicSubset& J) {
  const RootSystem& rs = w.root_system();
  rs.validate_subset(J);
  const int n = rs.rank();
  const std::vector<int>& m = w.matrix();
  ParabolicSubset image;
  for (int j : J.indices()) {
    RootVec col(n);
    for (int r = 0; r < n; ++r) col[r] = m[r * n + (j - 1)];
    auto idx = simple_index(col);
    if (!idx) return std::nullopt;
    image = image.with(*idx);
  }
  return image;
}

bool condition_star(const WeylElem& w, const ParabolicSubset& I,
                    const ParabolicSubset& J) {
  const RootSystem& rs = w.root_system();
  rs.validate_subset(I);
  rs.validate_subset(J);
  auto image = star_image(w, J);
  return image && *image == I;
}

WeylElem v_elem(const RootSystem& rs, int alpha, const ParabolicSubset& I) {
  rs.validate_index(alpha);
  rs.validate_subset(I);
  if (I.contains(alpha))
    fail(Errc::AlphaInI,
         "index " + std::to_string(alpha) + " lies in " + I.str());
  WeylElem big = longest_element(rs, I.with(alpha));
  WeylElem small = longest_element(rs, I);
  WeylElem v = big * small;  // w_0^{I+alpha} (w_0^I)^{-1}, involutions
  int expected =
      static_cast<int>(rs.positive_indices_of(I.with(alpha)).size()) -
      static_cast<int>(rs.positive_indices_of(I).size());
  if (v.length() != expected)
    fail(Errc::Internal, "v element has unexpected length");
  return v;
}

namespace {

struct PeelState {
  std::vector<int> mat;
  uint32_t subset_bits;
  bool operator<(const PeelState& o) const {
    if (subset_bits != o.subset_bits) return subset_bits < o.subset_bits;
    return mat < o.mat;
  }
};

// Depth-first peel of the last factor.  From state (w, J'), a candidate alpha
// outside J' contributes v = v[alpha, J'] as the final factor when lengths
// subtract exactly; the remaining element is w v^{-1} viewed against the
// subset chain ending at the image of J' under v.  Memoizing infeasible
// states keeps the search linear in practice.
class Peeler {
 public:
  explicit Peeler(const RootSystem& rs) : rs_(rs) {}

  bool solve(const WeylElem& w, const ParabolicSubset& sub,
             std::vector<FactorizationStep>* out) {
    if (w.is_identity()) return true;
    PeelState key{w.matrix(), sub.bits()};
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second == -1) return false;
    for (int alpha = 1; alpha <= rs_.rank(); ++alpha) {
      if (sub.contains(alpha)) continue;
      if (it != memo_.end() && alpha < it->second) continue;
      WeylElem v = v_elem(rs_, alpha, sub);
      if (v.length() > w.length()) continue;
      WeylElem rest = w * v.inverse();
      if (rest.length() != w.length() - v.length()) continue;
      auto next = star_image(v, sub);
      if (!next) fail(Errc::Internal, "v element does not permute simples");
      if (solve(rest, *next, out)) {
        out->push_back(FactorizationStep{alpha, sub, v});
        memo_[key] = alpha;
        return true;
      }
    }
    memo_[key] = -1;
    return false;
  }

 private:
  const RootSystem& rs_;
  std::map<PeelState, int> memo_;
};

void check_star(const WeylElem& w, const ParabolicSubset& I,
                const ParabolicSubset& J) {
  if (!condition_star(w, I, J))
    fail(Errc::ConditionStarViolated,
         "w does not map the simple roots of J=" + J.str() +
             " onto those of I=" + I.str());
}

}  // namespace

std::vector<FactorizationStep> bh_factorize(const WeylElem& w,
                                            const ParabolicSubset& I,
                                            const ParabolicSubset& J) {
  check_star(w, I, J);
  Peeler peeler(w.root_system());
  std::vector<FactorizationStep> steps;
  if (!peeler.solve(w, J, &steps))
    fail(Errc::FactorizationNotFound,
         "no factorization into v elements for the given triple");
  // The peel recursion appends on the way back up, so steps are already in
  // product order.
  return steps;
}

std::vector<std::vector<FactorizationStep>> bh_factorize_all(
    const WeylElem& w, const ParabolicSubset& I, const ParabolicSubset& J) {
  check_star(w, I, J);
  const RootSystem& rs = w.root_system();
  std::vector<std::vector<FactorizationStep>> all;
  std::vector<FactorizationStep> current;

  // Plain exhaustive peel, no memo: every complete chain is recorded.
  auto recurse = [&](auto&& self, const WeylElem& rest,
                     const ParabolicSubset& sub) -> void {
    if (rest.is_identity()) {
      std::vector<FactorizationStep> steps(current.rbegin(), current.rend());
      all.push_back(std::move(steps));
      return;
    }
    for (int alpha = 1; alpha <= rs.rank(); ++alpha) {
      if (sub.contains(alpha)) continue;
      WeylElem v = v_elem(rs, alpha, sub);
      if (v.length() > rest.length()) continue;
      WeylElem next_rest = rest * v.inverse();
      if (next_rest.length() != rest.length() - v.length()) continue;
      auto next_sub = star_image(v, sub);
      if (!next_sub) fail(Errc::Internal, "v element does not permute simples");
      current.push_back(FactorizationStep{alpha, sub, v});
      self(self, next_rest, *next_sub);
      current.pop_back();
    }
  };
  recurse(recurse, w, J);
  if (all.empty())
    fail(Errc::FactorizationNotFound,
         "no factorization into v elements for the given triple");
  return all;
}

int fiber_dimension(const WeylElem& w, const ParabolicSubset& I,
                    const ParabolicSubset& J) {
  check_star(w, I, J);
  return w.length();
}

Weight det_twist(const WeylElem& w, const ParabolicSubset& I,
                 const ParabolicSubset& J) {
  check_star(w, I, J);
  const RootSystem& rs = w.root_system();
  Weight rho = rs.rho();
  Weight twist = w.act(rho) - rho;
  if (!twist.is_integral() || !twist.vanishes_on(I))
    fail(Errc::Internal, "det twist must be integral and vanish on I");
  return twist;
}

}  // namespace radon
