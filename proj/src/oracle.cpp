#include "radon/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace radon::oracle {

namespace {

constexpr std::size_t kMaxRecordedFailures = 50;

void record(SuiteResult* r, const std::string& what) {
  if (r->failures.size() < kMaxRecordedFailures) {
    r->failures.push_back(what);
  } else if (r->failures.size() == kMaxRecordedFailures) {
    r->failures.push_back("(more failures suppressed)");
  }
}

// Raw matrix helpers, deliberately separate from the element implementation.
using Mat = std::vector<int>;

Mat raw_identity(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Mat raw_mul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int k = 0; k < n; ++k)
        acc += (long long)a[i * n + k] * b[k * n + j];
      c[i * n + j] = static_cast<int>(acc);
    }
  return c;
}

Mat raw_reflection(const std::vector<std::vector<int>>& cartan, int i) {
  const int n = static_cast<int>(cartan.size());
  Mat m = raw_identity(n);
  for (int j = 0; j < n; ++j) m[(i - 1) * n + j] -= cartan[i - 1][j];
  return m;
}

RootVec raw_apply(const Mat& m, const RootVec& v, int n) {
  RootVec out(n, 0);
  for (int r = 0; r < n; ++r) {
    long long acc = 0;
    for (int j = 0; j < n; ++j) acc += (long long)m[r * n + j] * v[j];
    out[r] = static_cast<int>(acc);
  }
  return out;
}

bool raw_negative(const RootVec& v) {
  for (int x : v) {
    if (x < 0) return true;
    if (x > 0) return false;
  }
  return false;
}

// Breadth-first table of a parabolic subgroup over raw matrices.
struct GroupTable {
  std::vector<Mat> mats;
  std::vector<int> depths;
  std::vector<std::vector<int>> words;
  std::map<Mat, std::size_t> index;
};

GroupTable bfs_table(const RootSystem& rs, const ParabolicSubset& subset,
                     std::size_t cap) {
  const int n = rs.rank();
  std::vector<std::pair<int, Mat>> gens;
  for (int i : subset.indices())
    gens.emplace_back(i, raw_reflection(rs.cartan_matrix(), i));
  GroupTable t;
  Mat id = raw_identity(n);
  t.index.emplace(id, 0);
  t.mats.push_back(id);
  t.depths.push_back(0);
  t.words.push_back({});
  for (std::size_t head = 0; head < t.mats.size(); ++head) {
    Mat m = t.mats[head];
    int depth = t.depths[head];
    std::vector<int> word = t.words[head];
    for (const auto& [i, g] : gens) {
      Mat next = raw_mul(m, g, n);
      if (t.index.count(next)) continue;
      if (t.mats.size() + 1 > cap)
        fail(Errc::GroupTooLarge,
             "group exceeds enumeration cap " + std::to_string(cap));
      t.index.emplace(next, t.mats.size());
      t.mats.push_back(next);
      t.depths.push_back(depth + 1);
      std::vector<int> next_word = word;
      next_word.push_back(i);
      t.words.push_back(std::move(next_word));
    }
  }
  return t;
}

int raw_inversions(const RootSystem& rs, const Mat& m) {
  int count = 0;
  const int n = rs.rank();
  for (const RootVec& beta : rs.positive_roots())
    if (raw_negative(raw_apply(m, beta, n))) ++count;
  return count;
}

// Rational inverse of the Cartan matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert_cartan(
    const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(cartan[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(Errc::InvalidCartan, "Cartan matrix is singular");
    std::swap(a[col], a[pivot]);
    Rational inv = Rational(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

Weight act_via_matrix(const RootSystem& rs,
                      const std::vector<std::vector<Rational>>& cinv,
                      const Mat& m, const Weight& lambda) {
  const int n = rs.rank();
  // root coordinates y with C y = lambda
  std::vector<Rational> y(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += cinv[i][j] * lambda[j];
  std::vector<Rational> z(n, Rational(0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) z[r] += Rational(m[r * n + j]) * y[j];
  std::vector<Rational> out(n, Rational(0));
  const auto& cartan = rs.cartan_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rational(cartan[i][j]) * z[j];
  return Weight(std::move(out));
}

Weight random_weight(std::mt19937_64& rng, int rank) {
  static const long long dens[] = {1, 2, 3, 5, 7};
  std::vector<Rational> c;
  c.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    long long num = static_cast<long long>(rng() % 41) - 20;
    long long den = dens[rng() % 5];
    c.emplace_back(num, den);
  }
  return Weight(std::move(c));
}

Weight random_integral_weight(std::mt19937_64& rng, int rank) {
  std::vector<Rational> c;
  c.reserve(rank);
  for (int i = 0; i < rank; ++i)
    c.emplace_back(static_cast<long long>(rng() % 41) - 20);
  return Weight(std::move(c));
}

Weight zero_on(const Weight& w, const ParabolicSubset& subset) {
  Weight out = w;
  for (int i : subset.indices()) out[i - 1] = Rational(0);
  return out;
}

std::vector<ParabolicSubset> all_subsets(int rank) {
  std::vector<ParabolicSubset> out;
  for (uint32_t bits = 0; bits < (uint32_t(1) << rank); ++bits) {
    std::vector<int> idx;
    for (int i = 1; i <= rank; ++i)
      if ((bits >> (i - 1)) & 1) idx.push_back(i);
    out.push_back(ParabolicSubset::from_indices(idx));
  }
  return out;
}

// Referee for condition (*): the image of the J-supported positive roots
// under the raw matrix equals the set of I-supported positive roots.
bool star_condition_by_root_sets(const RootSystem& rs, const Mat& m,
                                 const ParabolicSubset& I,
                                 const ParabolicSubset& J) {
  const int n = rs.rank();
  std::set<RootVec> image, target;
  for (std::size_t k : rs.positive_indices_of(J))
    image.insert(raw_apply(m, rs.positive_roots()[k], n));
  for (std::size_t k : rs.positive_indices_of(I))
    target.insert(rs.positive_roots()[k]);
  return image == target;
}

struct TripleList {
  // (element index in table, I, J)
  std::vector<std::tuple<std::size_t, ParabolicSubset, ParabolicSubset>> items;
};

TripleList star_triples(const RootSystem& rs, const GroupTable& t,
                        const std::vector<WeylElem>& elems) {
  TripleList list;
  auto subsets = all_subsets(rs.rank());
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& J : subsets) {
      auto I = star_image(elems[k], J);
      if (I) list.items.emplace_back(k, *I, J);
    }
  (void)t;
  return list;
}

std::vector<WeylElem> impl_elements(const RootSystem& rs,
                                    const GroupTable& t) {
  std::vector<WeylElem> elems;
  elems.reserve(t.mats.size());
  for (const auto& word : t.words)
    elems.push_back(element_from_word(rs, word));
  return elems;
}

std::string describe(const RootSystem& rs, const WeylElem& w) {
  std::string s = rs.label() + " w=[";
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.word()[i]);
  }
  return s + "]";
}

void run_lengths(const RootSystem& rs, const GroupTable& t, std::size_t cap,
                 SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  std::vector<WeylElem> via_impl = enumerate_group(rs, cap);
  if (via_impl.size() != t.mats.size())
    record(r, rs.label() + ": enumeration orders differ: " +
                  std::to_string(via_impl.size()) + " vs " +
                  std::to_string(t.mats.size()));
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const WeylElem& w = elems[k];
    ++r->instances_checked;
    if (w.matrix() != t.mats[k]) {
      record(r, describe(rs, w) + ": matrix disagrees with word product");
      continue;
    }
    if (w.length() != t.depths[k])
      record(r, describe(rs, w) + ": length " + std::to_string(w.length()) +
                    " but word-search depth " + std::to_string(t.depths[k]));
    if (static_cast<int>(w.word().size()) != t.depths[k])
      record(r, describe(rs, w) + ": canonical word is not reduced");
    if (element_from_word(rs, w.word()) != w)
      record(r, describe(rs, w) + ": canonical word rebuilds a different element");
    if (w.inverse().length() != w.length())
      record(r, describe(rs, w) + ": inverse length differs");
    if (raw_inversions(rs, t.mats[k]) != t.depths[k])
      record(r, describe(rs, w) + ": inversion count disagrees with depth");
  }
}

void run_star_action(const RootSystem& rs, const GroupTable& t,
                     uint64_t seed, SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  std::mt19937_64 rng(seed);
  std::vector<Weight> pool;
  for (int i = 0; i < 100; ++i) pool.push_back(random_weight(rng, rs.rank()));
  auto cinv = invert_cartan(rs.cartan_matrix());
  WeylElem id = WeylElem::identity(rs);

  for (const Weight& lam : pool) {
    ++r->instances_checked;
    if (id.star_act(lam) != lam)
      record(r, rs.label() + ": identity star action moves " + lam.str());
  }
  for (const WeylElem& w : elems) {
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const Weight& lam = pool[p];
      const Weight& nu = pool[(p + 1) % pool.size()];
      ++r->instances_checked;
      Weight star = w.star_act(lam);
      // affinity against the linear action
      if (w.star_act(lam + nu) != star + w.act(nu))
        record(r, describe(rs, w) + ": star action is not rho-affine");
      // independent base-change route for both actions
      if (act_via_matrix(rs, cinv, w.matrix(), lam) != w.act(lam))
        record(r, describe(rs, w) + ": linear action disagrees with matrix route");
      Weight ref_star =
          act_via_matrix(rs, cinv, w.matrix(), lam - rs.rho()) + rs.rho();
      if (ref_star != star)
        record(r, describe(rs, w) + ": star action disagrees with matrix route");
      if (is_regular(rs, lam) != is_regular(rs, star))
        record(r, describe(rs, w) + ": star action changes regularity of " +
                      lam.str());
    }
  }
  // group law over all pairs, weights rotating through the pool
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const Weight& lam = pool[(a * elems.size() + b) % pool.size()];
      ++r->instances_checked;
      Weight lhs = elems[a].star_act(elems[b].star_act(lam));
      Weight rhs = (elems[a] * elems[b]).star_act(lam);
      if (lhs != rhs)
        record(r, rs.label() + ": star action violates the group law at " +
                      describe(rs, elems[a]) + " . " + describe(rs, elems[b]));
    }
}

void run_condition_star(const RootSystem& rs, const GroupTable& t,
                        std::size_t cap, SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  auto subsets = all_subsets(rs.rank());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const WeylElem& w = elems[k];
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        ++r->instances_checked;
        bool impl = condition_star(w, I, J);
        bool ref = star_condition_by_root_sets(rs, t.mats[k], I, J);
        if (impl != ref) {
          record(r, describe(rs, w) + ": condition (*) verdict " +
                        (impl ? "true" : "false") + " for I=" + I.str() +
                        " J=" + J.str() + " but root-set referee says " +
                        (ref ? "true" : "false"));
          continue;
        }
        if (!impl) continue;
        // conjugation referee: w W_J w^{-1} = W_I over raw matrices
        GroupTable wj = bfs_table(rs, J, cap);
        GroupTable wi = bfs_table(rs, I, cap);
        const int n = rs.rank();
        Mat minv = elems[k].inverse().matrix();
        std::set<Mat> conjugated, target(wi.mats.begin(), wi.mats.end());
        for (const Mat& m : wj.mats)
          conjugated.insert(raw_mul(raw_mul(t.mats[k], m, n), minv, n));
        if (conjugated != target)
          record(r, describe(rs, w) + ": conjugation of W_J differs from W_I" +
                        " for I=" + I.str() + " J=" + J.str());
      }
  }
}

void run_bh_factorization(const RootSystem& rs, const GroupTable& t,
                          std::size_t cap, SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  TripleList triples = star_triples(rs, t, elems);
  const int n = rs.rank();
  for (const auto& [k, I, J] : triples.items) {
    const WeylElem& w = elems[k];
    ++r->instances_checked;
    std::vector<FactorizationStep> steps;
    try {
      steps = bh_factorize(w, I, J);
    } catch (const Error& e) {
      record(r, describe(rs, w) + ": factorize failed for I=" + I.str() +
                    " J=" + J.str() + ": " + e.code_name());
      continue;
    }
    if (steps.empty() != w.is_identity())
      record(r, describe(rs, w) + ": empty factorization iff identity violated");
    // subset chain, alpha membership, factor recomputation
    ParabolicSubset expect_outer = I;
    bool chain_ok = true;
    Mat product = raw_identity(n);
    long long depth_sum = 0;
    for (const FactorizationStep& step : steps) {
      if (step.inner.contains(step.alpha)) {
        record(r, describe(rs, w) + ": alpha inside inner subset");
        chain_ok = false;
        break;
      }
      Mat big = reference::longest_matrix(rs, step.inner.with(step.alpha), cap);
      Mat small = reference::longest_matrix(rs, step.inner, cap);
      Mat v_ref = raw_mul(big, small, n);
      if (step.factor.matrix() != v_ref) {
        record(r, describe(rs, w) + ": factor differs from longest-quotient");
        chain_ok = false;
        break;
      }
      auto image = star_image(step.factor, step.inner);
      if (!image || *image != expect_outer) {
        record(r, describe(rs, w) + ": subset chain broken for I=" + I.str() +
                      " J=" + J.str());
        chain_ok = false;
        break;
      }
      expect_outer = step.inner;
      product = raw_mul(product, step.factor.matrix(), n);
      auto it = t.index.find(step.factor.matrix());
      if (it == t.index.end()) {
        record(r, describe(rs, w) + ": factor escapes the group table");
        chain_ok = false;
        break;
      }
      depth_sum += t.depths[it->second];
    }
    if (!chain_ok) continue;
    if (expect_outer != J)
      record(r, describe(rs, w) + ": chain does not end at J=" + J.str());
    if (product != t.mats[k])
      record(r, describe(rs, w) + ": factors do not multiply back");
    if (depth_sum != t.depths[k])
      record(r, describe(rs, w) + ": factor lengths do not add to the length");
    std::vector<FactorizationStep> again = bh_factorize(w, I, J);
    bool same = again.size() == steps.size();
    for (std::size_t i = 0; same && i < steps.size(); ++i)
      same = again[i].alpha == steps[i].alpha &&
             again[i].inner == steps[i].inner &&
             again[i].factor == steps[i].factor;
    if (!same)
      record(r, describe(rs, w) + ": factorization is not deterministic");
  }
}

void run_rho_identities(const RootSystem& rs, const GroupTable& t,
                        SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  const int n = rs.rank();
  Weight rho = rs.rho();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const WeylElem& w = elems[k];
    ++r->instances_checked;
    // rho - w rho equals the sum of the positive roots inverted by w^{-1}
    Mat minv = w.inverse().matrix();
    RootVec sum(n, 0);
    for (const RootVec& beta : rs.positive_roots())
      if (raw_negative(raw_apply(minv, beta, n)))
        for (int j = 0; j < n; ++j) sum[j] += beta[j];
    if (rho - w.act(rho) != rs.to_weight(sum))
      record(r, describe(rs, w) + ": rho - w rho is not the inversion sum");
  }
  auto subsets = all_subsets(n);
  for (const auto& K : subsets) {
    ++r->instances_checked;
    Weight rk = rs.rho_of(K);
    for (int i : K.indices()) {
      RootVec alpha(n, 0);
      alpha[i - 1] = 1;
      if (rs.pair(rk, alpha) != Rational(1))
        record(r, rs.label() + ": rho_of(" + K.str() +
                      ") does not pair to 1 with simple coroot " +
                      std::to_string(i));
    }
    if (rs.rho_of(K) + rs.rho_nil(K) != rho)
      record(r, rs.label() + ": rho_of + rho_nil differs from rho at " +
                    K.str());
  }
  TripleList triples = star_triples(rs, t, elems);
  for (const auto& [k, I, J] : triples.items) {
    const WeylElem& w = elems[k];
    ++r->instances_checked;
    Weight lhs = rho - w.act(rho);
    Weight rhs = rs.rho_nil(I) - w.act(rs.rho_nil(J));
    if (lhs != rhs)
      record(r, describe(rs, w) + ": nilradical rho identity fails for I=" +
                    I.str() + " J=" + J.str());
  }
}

void run_transport_composition(const RootSystem& rs, const GroupTable& t,
                               uint64_t seed, SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  TripleList triples = star_triples(rs, t, elems);
  std::mt19937_64 rng(seed);
  const int n = rs.rank();

  for (const auto& [k, I, J] : triples.items) {
    const WeylElem& w = elems[k];
    ++r->instances_checked;
    // specialization at lambda = 0 with character rho - w rho
    Weight zero = Weight::zero(n);
    TdoLabel shifted = transport(zero, w, -det_twist(w, I, J), I, J);
    if (!(shifted.variety == J) || !shifted.param.is_zero())
      record(r, describe(rs, w) +
                    ": transport of 0 with rho - w rho is not 0 for I=" +
                    I.str() + " J=" + J.str());
  }

  // all composable chains, three random parameter draws each
  for (const auto& [k1, I1, J1] : triples.items)
    for (const auto& [k2, I2, J2] : triples.items) {
      if (!(J1 == I2)) continue;
      const WeylElem& w1 = elems[k1];
      const WeylElem& w2 = elems[k2];
      WeylElem prod = w1 * w2;
      for (int draw = 0; draw < 3; ++draw) {
        ++r->instances_checked;
        Weight lambda = zero_on(random_weight(rng, n), I1);
        Weight mu1 = zero_on(random_integral_weight(rng, n), I1);
        Weight mu2 = zero_on(random_integral_weight(rng, n), I2);
        TdoLabel first = transport(lambda, w1, mu1, I1, J1);
        TdoLabel second = transport(first.param, w2, mu2, I2, J2);
        TdoLabel direct = transport(lambda, prod, mu1 + w1.act(mu2), I1, J2);
        if (!(second.variety == direct.variety) ||
            second.param != direct.param)
          record(r, rs.label() + ": transport composition fails through " +
                        describe(rs, w1) + " then " + describe(rs, w2));
      }
    }
}

void run_annihilator_compat(const RootSystem& rs, const GroupTable& t,
                            uint64_t seed, SuiteResult* r) {
  std::vector<WeylElem> elems = impl_elements(rs, t);
  TripleList triples = star_triples(rs, t, elems);
  std::mt19937_64 rng(seed);
  const int n = rs.rank();
  std::vector<Weight> pool;
  for (int i = 0; i < 100; ++i) pool.push_back(random_weight(rng, n));

  for (const auto& [k, I, J] : triples.items) {
    const WeylElem& w = elems[k];
    for (const Weight& raw : pool) {
      ++r->instances_checked;
      Weight lambda = zero_on(raw, I);
      Weight lhs = annihilator_partner(
          annihilator_label(rs, lambda, I).highest_weight, w, I, J);
      Weight rhs = annihilator_label(
                       rs, transport(lambda, w, Weight::zero(n), I, J).param, J)
                       .highest_weight;
      if (lhs != rhs)
        record(r, describe(rs, w) + ": annihilator labels disagree for I=" +
                      I.str() + " J=" + J.str() + " lambda=" + lambda.str());
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lengths",          "star_action",
      "condition_star",   "bh_factorization",
      "rho_identities",   "transport_composition",
      "annihilator_compat"};
  return names;
}

SuiteResult verify_suite(const RootSystem& rs, const std::string& suite,
                         uint64_t seed, std::size_t cap) {
  SuiteResult result;
  result.suite = suite;
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    fail(Errc::UnknownSuite, "unknown suite: " + suite);
  GroupTable t = bfs_table(rs, ParabolicSubset::full(rs.rank()), cap);
  if (suite == "lengths") run_lengths(rs, t, cap, &result);
  else if (suite == "star_action") run_star_action(rs, t, seed, &result);
  else if (suite == "condition_star") run_condition_star(rs, t, cap, &result);
  else if (suite == "bh_factorization")
    run_bh_factorization(rs, t, cap, &result);
  else if (suite == "rho_identities") run_rho_identities(rs, t, &result);
  else if (suite == "transport_composition")
    run_transport_composition(rs, t, seed, &result);
  else if (suite == "annihilator_compat")
    run_annihilator_compat(rs, t, seed, &result);
  return result;
}

namespace reference {

std::vector<RootVec> positive_roots_by_orbit(
    const std::vector<std::vector<int>>& cartan, std::size_t max_roots) {
  const int n = static_cast<int>(cartan.size());
  std::set<RootVec> orbit;
  std::deque<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    orbit.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      long long coeff = 0;
      for (int j = 0; j < n; ++j) coeff += (long long)cartan[i - 1][j] * v[j];
      RootVec next = v;
      next[i - 1] -= static_cast<int>(coeff);
      if (orbit.insert(next).second) {
        queue.push_back(next);
        if (orbit.size() > 2 * max_roots)
          fail(Errc::InvalidCartan, "orbit exceeds bound; not of finite type");
      }
    }
  }
  std::vector<RootVec> out;
  for (const RootVec& v : orbit) {
    bool pos = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    if (pos) out.push_back(v);
  }
  return out;
}

int length_by_word_search(const RootSystem& rs, const WeylElem& w,
                          std::size_t cap) {
  GroupTable t = bfs_table(rs, ParabolicSubset::full(rs.rank()), cap);
  auto it = t.index.find(w.matrix());
  if (it == t.index.end()) fail(Errc::Internal, "element not in its group");
  return t.depths[it->second];
}

Weight act_by_base_change(const RootSystem& rs, const WeylElem& w,
                          const Weight& lambda) {
  auto cinv = invert_cartan(rs.cartan_matrix());
  return act_via_matrix(rs, cinv, w.matrix(), lambda);
}

Weight star_by_base_change(const RootSystem& rs, const WeylElem& w,
                           const Weight& lambda) {
  return act_by_base_change(rs, w, lambda - rs.rho()) + rs.rho();
}

std::vector<int> longest_matrix(const RootSystem& rs,
                                const ParabolicSubset& subset,
                                std::size_t cap) {
  GroupTable t = bfs_table(rs, subset, cap);
  std::size_t best = 0;
  for (std::size_t k = 1; k < t.mats.size(); ++k)
    if (t.depths[k] > t.depths[best]) best = k;
  return t.mats[best];
}

std::size_t group_order(const RootSystem& rs, const ParabolicSubset& subset,
                        std::size_t cap) {
  return bfs_table(rs, subset, cap).mats.size();
}

}  // namespace reference

}  // namespace radon::oracle
