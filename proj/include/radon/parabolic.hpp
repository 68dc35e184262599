#pragma once

#include <optional>
#include <vector>

#include "radon/weyl.hpp"

namespace radon {

// One step of a factorization: factor = v[alpha, inner], the quotient of the
// longest elements of the parabolic subgroups for inner+{alpha} and inner.
struct FactorizationStep {
  int alpha = 0;
  ParabolicSubset inner;
  WeylElem factor;
};

// True when w maps the simple roots indexed by J bijectively onto the simple
// roots indexed by I (condition (*)); equivalently, w maps the positive
// roots supported on J onto those supported on I.
bool condition_star(const WeylElem& w, const ParabolicSubset& I,
                    const ParabolicSubset& J);

// The subset I with w({alpha_j : j in J}) = {alpha_i : i in I}, when every
// image is again a simple root; nullopt otherwise.
std::optional<ParabolicSubset> star_image(const WeylElem& w,
                                          const ParabolicSubset& J);

// v[alpha, I] = w_0^{I+alpha} w_0^I for alpha outside I (AlphaInI otherwise).
// Its length is the number of positive roots supported on I+{alpha} but not
// on I, and it maps the simple roots of I to simple roots of I+{alpha}.
WeylElem v_elem(const RootSystem& rs, int alpha, const ParabolicSubset& I);

// Factorization w = v_1 ... v_r with v_i = v[alpha_i, I_i] along a chain of
// subsets I = I_0, I_1, ..., I_r = J where I_{i-1} is the image of I_i under
// v_i and lengths add.  Requires condition (*) (ConditionStarViolated);
// FactorizationNotFound if no chain exists.  Deterministic: among feasible
// final factors the one with the smallest alpha is peeled first.
std::vector<FactorizationStep> bh_factorize(const WeylElem& w,
                                            const ParabolicSubset& I,
                                            const ParabolicSubset& J);

// Every factorization satisfying the four conditions, in lexicographic order
// of the peeled alpha sequence.  Intended for cross-checks on small groups.
std::vector<std::vector<FactorizationStep>> bh_factorize_all(
    const WeylElem& w, const ParabolicSubset& I, const ParabolicSubset& J);

// Length of w, which under condition (*) is the fiber dimension of the
// correspondence attached to (w, I, J).
int fiber_dimension(const WeylElem& w, const ParabolicSubset& I,
                    const ParabolicSubset& J);

// w(rho) - rho: the integral character twisting the transform attached to
// (w, I, J); vanishes on I under condition (*).
Weight det_twist(const WeylElem& w, const ParabolicSubset& I,
                 const ParabolicSubset& J);

}  // namespace radon
