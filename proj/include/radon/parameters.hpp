#pragma once

#include "radon/parabolic.hpp"
#include "radon/weyl.hpp"

namespace radon {

// Twisted differential operator label: a variety (the parabolic subset I of
// G/P_I) together with a rational parameter vanishing on I.
struct TdoLabel {
  ParabolicSubset variety;
  Weight param;
};

// Generalized Verma module label: highest weight over the Levi of a parabolic
// subgroup inside the group indexed by levi (the full subset in practice).
struct GvmLabel {
  ParabolicSubset levi;
  ParabolicSubset parabolic;
  Weight highest_weight;
};

enum class PsiVerdict {
  IsoByRegularity,
  IsoBySurjCondition,
  Unknown,
};

const char* psi_verdict_name(PsiVerdict v);

// Membership of lambda in the parameter space for the variety indexed by the
// subset: every subset coordinate vanishes.
bool in_parameter_space(const RootSystem& rs, const Weight& lambda,
                        const ParabolicSubset& subset);

// lambda - rho pairs to a nonzero value with every coroot.
bool is_regular(const RootSystem& rs, const Weight& lambda);

// Antidominance over the Levi indexed by the subset: lambda - rho pairs to a
// value outside {1, 2, 3, ...} with the coroot of every positive root
// supported on the subset.
bool is_antidominant(const RootSystem& rs, const Weight& lambda,
                     const ParabolicSubset& subset);

// Target label of the transform attached to (w, I, J) with character twist
// mu: the variety J with parameter w^{-1} * lambda + w^{-1}(mu), where * is
// the shifted action.  mu must be an integral weight vanishing on I
// (MuNotCharacter), lambda must vanish on I (NotInSubspace), and the triple
// must satisfy condition (*) (ConditionStarViolated).
TdoLabel transport(const Weight& lambda, const WeylElem& w, const Weight& mu,
                   const ParabolicSubset& I, const ParabolicSubset& J);

// Highest weight of the generalized Verma module whose annihilator matches
// the global sections of the lambda-twisted sheaf on the variety I:
// lambda - 2 rho_nil(I), a module over the full group at the parabolic I.
GvmLabel annihilator_label(const RootSystem& rs, const Weight& lambda,
                           const ParabolicSubset& I);

// The parameter w^{-1}(lambda + rho) - rho, which under condition (*) labels
// a module with the same annihilator as the one labelled by lambda.
Weight annihilator_partner(const Weight& lambda, const WeylElem& w,
                           const ParabolicSubset& I, const ParabolicSubset& J);

// Decides whether the canonical comparison map for the parameter lambda on
// the variety I is known to be an isomorphism: by regularity, or by the
// surjectivity criterion (lambda + rho pairs outside {1, 2, ...} with every
// coroot of a positive root not supported on I).
PsiVerdict psi_iso_check(const RootSystem& rs, const Weight& lambda,
                         const ParabolicSubset& I);

}  // namespace radon
