#include "radon/theorem_checker.hpp"

namespace radon {

const char* irreducibility_name(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Applies: return "Applies";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::FailsRegularity: return "FailsRegularity";
    case Verdict::FailsConditionStar: return "FailsConditionStar";
  }
  return "Inconclusive";
}

IntertwinerSpec check_equivalence(const Weight& lambda, const WeylElem& w,
                                  const Weight& mu, const ParabolicSubset& I,
                                  const ParabolicSubset& J) {
  TdoLabel target = transport(lambda, w, mu, I, J);
  WeylElem winv = w.inverse();
  IntertwinerSpec spec{
      w, mu, TdoLabel{I, lambda}, target, winv, -winv.act(mu)};
  return spec;
}

std::vector<Weight> lambda_chain(const Weight& lambda,
                                 const std::vector<FactorizationStep>& steps,
                                 const ParabolicSubset& I) {
  ParabolicSubset current = I;
  for (const FactorizationStep& step : steps) {
    const RootSystem& rs = step.factor.root_system();
    if (step.inner.contains(step.alpha))
      fail(Errc::InvalidChain, "alpha lies in its inner subset");
    if (step.factor != v_elem(rs, step.alpha, step.inner))
      fail(Errc::InvalidChain, "factor is not the v element of its step");
    auto image = star_image(step.factor, step.inner);
    if (!image || *image != current)
      fail(Errc::InvalidChain, "subset links do not chain up to " + I.str());
    current = step.inner;
  }
  if (!lambda.vanishes_on(I))
    fail(Errc::NotInSubspace,
         "lambda " + lambda.str() + " does not vanish on I=" + I.str());
  std::vector<Weight> out;
  out.reserve(steps.size() + 1);
  out.push_back(lambda);
  for (const FactorizationStep& step : steps)
    out.push_back(step.factor.inverse().star_act(out.back()));
  return out;
}

Irreducibility gvm_irreducible_sufficient(const RootSystem& rs,
                                          const ParabolicSubset& levi,
                                          const Weight& eta) {
  return is_antidominant(rs, eta, levi) ? Irreducibility::Irreducible
                                        : Irreducibility::Unknown;
}

Verdict aggregate_verdict(bool regular, bool star_ok,
                          const std::vector<Irreducibility>& links) {
  if (!star_ok) return Verdict::FailsConditionStar;
  if (!regular) return Verdict::FailsRegularity;
  for (Irreducibility link : links)
    if (link != Irreducibility::Irreducible) return Verdict::Inconclusive;
  return Verdict::Applies;
}

namespace {

std::string conclusion_text(const Weight& lambda, const Weight& target,
                            const ParabolicSubset& I,
                            const ParabolicSubset& J) {
  std::string src = "RGamma^" + lambda.str() + "_" + I.str();
  std::string dst = "RGamma^" + target.str() + "_" + J.str();
  return "I^w_+ : " + src + " -> " + dst + " o R^w_+ and I^w_! : " + src +
         " o R^w_! -> " + dst + " are isomorphisms";
}

}  // namespace

TheoremReport check_main_theorem2(const Weight& lambda, const WeylElem& w,
                                  const ParabolicSubset& I,
                                  const ParabolicSubset& J) {
  const RootSystem& rs = w.root_system();
  rs.validate_weight(lambda);
  rs.validate_subset(I);
  rs.validate_subset(J);
  if (!in_parameter_space(rs, lambda, I))
    fail(Errc::NotInSubspace,
         "lambda " + lambda.str() + " does not vanish on I=" + I.str());

  TheoremReport report;
  report.regular = is_regular(rs, lambda);
  if (!condition_star(w, I, J)) {
    report.verdict = aggregate_verdict(report.regular, false, {});
    return report;
  }

  std::vector<FactorizationStep> steps = bh_factorize(w, I, J);
  std::vector<Weight> lambdas = lambda_chain(lambda, steps, I);
  std::vector<Irreducibility> links;
  links.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const FactorizationStep& step = steps[i];
    // The irreducibility test runs on the linear transport of the previous
    // parameter, over the Levi spanned by the step's inner subset and alpha.
    Weight eta = step.factor.inverse().act(lambdas[i]);
    ParabolicSubset levi = step.inner.with(step.alpha);
    Irreducibility irr = gvm_irreducible_sufficient(rs, levi, eta);
    links.push_back(irr);
    report.chain.push_back(ChainStep{step, lambdas[i + 1], eta, irr});
  }
  report.verdict = aggregate_verdict(report.regular, true, links);
  if (report.verdict == Verdict::Applies)
    report.conclusion = conclusion_text(lambda, lambdas.back(), I, J);
  return report;
}

}  // namespace radon
