#include "radon/parameters.hpp"

namespace radon {

namespace {

bool is_positive_integer(const Rational& x) {
  return x.is_integer() && x.num() >= 1;
}

}  // namespace

const char* psi_verdict_name(PsiVerdict v) {
  switch (v) {
    case PsiVerdict::IsoByRegularity: return "iso_by_regularity";
    case PsiVerdict::IsoBySurjCondition: return "iso_by_surj_condition";
    case PsiVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool in_parameter_space(const RootSystem& rs, const Weight& lambda,
                        const ParabolicSubset& subset) {
  rs.validate_weight(lambda);
  rs.validate_subset(subset);
  return lambda.vanishes_on(subset);
}

bool is_regular(const RootSystem& rs, const Weight& lambda) {
  rs.validate_weight(lambda);
  Weight shifted = lambda - rs.rho();
  for (const RootVec& beta : rs.positive_roots())
    if (rs.pair(shifted, beta).is_zero()) return false;
  return true;
}

bool is_antidominant(const RootSystem& rs, const Weight& lambda,
                     const ParabolicSubset& subset) {
  rs.validate_weight(lambda);
  Weight shifted = lambda - rs.rho();
  for (std::size_t k : rs.positive_indices_of(subset))
    if (is_positive_integer(rs.pair(shifted, rs.positive_roots()[k])))
      return false;
  return true;
}

TdoLabel transport(const Weight& lambda, const WeylElem& w, const Weight& mu,
                   const ParabolicSubset& I, const ParabolicSubset& J) {
  const RootSystem& rs = w.root_system();
  rs.validate_weight(lambda);
  rs.validate_weight(mu);
  if (!in_parameter_space(rs, lambda, I))
    fail(Errc::NotInSubspace,
         "lambda " + lambda.str() + " does not vanish on I=" + I.str());
  if (!mu.is_integral() || !mu.vanishes_on(I))
    fail(Errc::MuNotCharacter,
         "mu " + mu.str() + " is not an integral weight vanishing on I=" +
             I.str());
  if (!condition_star(w, I, J))
    fail(Errc::ConditionStarViolated,
         "(w, I, J) does not satisfy condition (*)");
  WeylElem winv = w.inverse();
  Weight param = winv.star_act(lambda) + winv.act(mu);
  if (!param.vanishes_on(J))
    fail(Errc::Internal, "transported parameter does not vanish on J");
  return TdoLabel{J, param};
}

GvmLabel annihilator_label(const RootSystem& rs, const Weight& lambda,
                           const ParabolicSubset& I) {
  if (!in_parameter_space(rs, lambda, I))
    fail(Errc::NotInSubspace,
         "lambda " + lambda.str() + " does not vanish on I=" + I.str());
  Weight hw = lambda - Rational(2) * rs.rho_nil(I);
  return GvmLabel{ParabolicSubset::full(rs.rank()), I, hw};
}

Weight annihilator_partner(const Weight& lambda, const WeylElem& w,
                           const ParabolicSubset& I, const ParabolicSubset& J) {
  const RootSystem& rs = w.root_system();
  rs.validate_weight(lambda);
  if (!condition_star(w, I, J))
    fail(Errc::ConditionStarViolated,
         "(w, I, J) does not satisfy condition (*)");
  Weight rho = rs.rho();
  return w.inverse().act(lambda + rho) - rho;
}

PsiVerdict psi_iso_check(const RootSystem& rs, const Weight& lambda,
                         const ParabolicSubset& I) {
  if (!in_parameter_space(rs, lambda, I))
    fail(Errc::NotInSubspace,
         "lambda " + lambda.str() + " does not vanish on I=" + I.str());
  if (is_regular(rs, lambda)) return PsiVerdict::IsoByRegularity;
  Weight shifted = lambda + rs.rho();
  bool surj = true;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    const RootVec& beta = rs.positive_roots()[k];
    if (rs.supported_on(beta, I)) continue;
    if (is_positive_integer(rs.pair(shifted, beta))) {
      surj = false;
      break;
    }
  }
  return surj ? PsiVerdict::IsoBySurjCondition : PsiVerdict::Unknown;
}

}  // namespace radon
