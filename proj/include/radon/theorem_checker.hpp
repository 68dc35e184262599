#pragma once

#include <string>
#include <vector>

#include "radon/parameters.hpp"

namespace radon {

// Full bookkeeping for one intertwining transform between twisted sheaf
// categories: the transform for (w, mu) from the source label to the target
// label, together with the data of its inverse transform.
struct IntertwinerSpec {
  WeylElem w;
  Weight mu;
  TdoLabel source;
  TdoLabel target;
  WeylElem inverse_w;
  Weight inverse_mu;
};

enum class Irreducibility {
  Irreducible,
  Unknown,
};

enum class Verdict {
  Applies,
  Inconclusive,
  FailsRegularity,
  FailsConditionStar,
};

const char* irreducibility_name(Irreducibility v);
const char* verdict_name(Verdict v);

// One audited link of the hypothesis chain: the factorization step, the
// transported parameter lambda_i after the step, the linearly transported
// weight eta_i feeding the irreducibility test over the Levi for
// inner + {alpha}, and the outcome of that test.
struct ChainStep {
  FactorizationStep step;
  Weight lambda_i;
  Weight eta_i;
  Irreducibility irreducibility;
};

struct TheoremReport {
  bool regular = false;
  std::vector<ChainStep> chain;
  Verdict verdict = Verdict::Inconclusive;
  std::string conclusion;
};

// Builds the equivalence-of-categories bookkeeping for (lambda, w, mu, I, J):
// the target via transport and the inverse transform data.  Errors as in
// transport.
IntertwinerSpec check_equivalence(const Weight& lambda, const WeylElem& w,
                                  const Weight& mu, const ParabolicSubset& I,
                                  const ParabolicSubset& J);

// The parameters lambda_0 = lambda, lambda_i = v_i^{-1} * lambda_{i-1} along
// a factorization chain starting at I.  InvalidChain when the steps do not
// form a chain for I (wrong factor, alpha inside the subset, or broken
// subset links); NotInSubspace when lambda does not vanish on I.
std::vector<Weight> lambda_chain(const Weight& lambda,
                                 const std::vector<FactorizationStep>& steps,
                                 const ParabolicSubset& I);

// Sufficient irreducibility test for the generalized Verma module with
// highest weight eta over the Levi indexed by the subset: antidominance of
// eta over that Levi.  Never claims reducibility.
Irreducibility gvm_irreducible_sufficient(const RootSystem& rs,
                                          const ParabolicSubset& levi,
                                          const Weight& eta);

// Hypothesis audit for the global-sections compatibility statement: checks
// regularity of lambda, condition (*), factorizes w canonically, transports
// lambda along the chain (shifted action) and tests irreducibility of each
// intermediate module via the linear transport eta_i.  Verdict Applies needs
// regularity and every link Irreducible; FailsRegularity and
// FailsConditionStar report definite hypothesis failures; otherwise
// Inconclusive.
TheoremReport check_main_theorem2(const Weight& lambda, const WeylElem& w,
                                  const ParabolicSubset& I,
                                  const ParabolicSubset& J);

// Pure verdict aggregation, exposed for property tests.
Verdict aggregate_verdict(bool regular, bool star_ok,
                          const std::vector<Irreducibility>& links);

}  // namespace radon
