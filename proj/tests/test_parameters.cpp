#include <doctest.h>

#include <vector>

#include "radon/parameters.hpp"
#include "test_util.hpp"

using namespace radon;
using namespace radon::testutil;

TEST_CASE("parameter space membership") {
  const RootSystem rs = rs_of('A', 2);
  CHECK(in_parameter_space(rs, wt({-1, 0}), sub({2})));
  CHECK_FALSE(in_parameter_space(rs, wt({-1, 1}), sub({2})));
  CHECK(in_parameter_space(rs, wtq({"1/2", "-7"}), sub({})));
  CHECK(in_parameter_space(rs, Weight::zero(2), ParabolicSubset::full(2)));
}

TEST_CASE("regularity") {
  const RootSystem rs = rs_of('A', 2);
  CHECK(is_regular(rs, Weight::zero(2)));
  CHECK_FALSE(is_regular(rs, rs.rho()));
  CHECK(is_regular(rs, wt({-1, 0})));
  CHECK_FALSE(is_regular(rs, wt({1, 0})));
  CHECK(is_regular(rs, wtq({"1/2", "0"})));
}

TEST_CASE("antidominance restricted to a Levi") {
  const RootSystem rs = rs_of('A', 2);
  const ParabolicSubset full = ParabolicSubset::full(2);
  CHECK(is_antidominant(rs, Weight::zero(2), full));
  CHECK_FALSE(is_antidominant(rs, Rational(2) * rs.rho(), full));
  CHECK(is_antidominant(rs, wt({0, 1}), full));
  CHECK(is_antidominant(rs, wt({5, 0}), sub({2})));
  CHECK_FALSE(is_antidominant(rs, wt({5, 0}), full));
  CHECK(is_antidominant(rs, wt({5, 0}), sub({})));
}

TEST_CASE("parameter transport") {
  const RootSystem rs = rs_of('A', 2);
  WeylElem w = element_from_word(rs, {1, 2});
  Weight lambda = wt({-1, 0});

  TdoLabel target = transport(lambda, w, Weight::zero(2), sub({2}), sub({1}));
  CHECK(target.variety == sub({1}));
  CHECK(target.param == wt({0, 4}));
  CHECK(in_parameter_space(rs, target.param, target.variety));

  for (const Weight& lam : {wt({-1, 0}), wtq({"-1/2", "0"})}) {
    TdoLabel id = transport(lam, WeylElem::identity(rs), Weight::zero(2),
                            sub({2}), sub({2}));
    CHECK(id.variety == sub({2}));
    CHECK(id.param == lam);
  }

  CHECK(error_code_of([&] {
          transport(wt({-1, 1}), w, Weight::zero(2), sub({2}), sub({1}));
        }) == Errc::NotInSubspace);
  CHECK(error_code_of([&] {
          transport(lambda, element_from_word(rs, {1}), Weight::zero(2),
                    sub({2}), sub({1}));
        }) == Errc::ConditionStarViolated);
  CHECK(error_code_of([&] {
          transport(lambda, w, wtq({"1/2", "0"}), sub({2}), sub({1}));
        }) == Errc::MuNotCharacter);
  CHECK(error_code_of([&] {
          transport(lambda, w, wt({0, 1}), sub({2}), sub({1}));
        }) == Errc::MuNotCharacter);
  CHECK(error_code_of([&] {
          transport(wt({-1, 0, 0}), w, Weight::zero(2), sub({2}), sub({1}));
        }) == Errc::RankMismatch);
}

TEST_CASE("transport laws over all B2 triples") {
  const RootSystem b2 = rs_of('B', 2);
  const std::vector<Weight> samples = {
      wtq({"-3", "0"}), wtq({"1/2", "-5/3"}), wtq({"0", "0"})};
  for (const WeylElem& w : enumerate_group(b2))
    for (const ParabolicSubset& J : all_subsets(2)) {
      auto I = star_image(w, J);
      if (!I) continue;
      Weight dt = det_twist(w, *I, J);
      // specialization: lambda = 0 with the character rho - w rho lands at 0
      TdoLabel zero = transport(Weight::zero(2), w, -dt, *I, J);
      CHECK(zero.param == Weight::zero(2));

      for (Weight lam : samples) {
        for (int i : I->indices()) lam[i - 1] = Rational(0);
        TdoLabel plain = transport(lam, w, Weight::zero(2), *I, J);
        CHECK(in_parameter_space(b2, plain.param, J));
        CHECK(is_regular(b2, lam) == is_regular(b2, plain.param));
        // a character twist shifts the target by its inverse image
        TdoLabel twisted = transport(lam, w, -dt, *I, J);
        Weight shift = twisted.param - plain.param;
        CHECK(shift == w.inverse().act(-dt));
        CHECK(shift.is_integral());
        CHECK(shift.vanishes_on(J));
      }
    }
}

TEST_CASE("annihilator labels") {
  const RootSystem rs = rs_of('A', 2);
  GvmLabel label = annihilator_label(rs, wt({-1, 0}), sub({2}));
  CHECK(label.levi == ParabolicSubset::full(2));
  CHECK(label.parabolic == sub({2}));
  CHECK(label.highest_weight == wt({-4, 0}));

  Weight lam = wtq({"1/3", "-2"});
  CHECK(annihilator_label(rs, lam, sub({})).highest_weight ==
        lam - Rational(2) * rs.rho());
  Weight two_rho_nil = Rational(2) * rs.rho_nil(sub({2}));
  CHECK(annihilator_label(rs, two_rho_nil, sub({2})).highest_weight ==
        Weight::zero(2));

  CHECK(error_code_of([&] {
          annihilator_label(rs, wt({-1, 1}), sub({2}));
        }) == Errc::NotInSubspace);
}

TEST_CASE("annihilator partners") {
  const RootSystem rs = rs_of('A', 2);
  WeylElem w = element_from_word(rs, {1, 2});
  CHECK(annihilator_partner(wt({-4, 0}), w, sub({2}), sub({1})) ==
        wt({0, 1}));
  CHECK(annihilator_partner(wt({-4, 0}), WeylElem::identity(rs), sub({2}),
                            sub({2})) == wt({-4, 0}));
  CHECK(annihilator_partner(-rs.rho(), w, sub({2}), sub({1})) == -rs.rho());

  // the two parameter routes to the target annihilator label agree
  Weight lambda = wt({-1, 0});
  Weight via_partner = annihilator_partner(
      annihilator_label(rs, lambda, sub({2})).highest_weight, w, sub({2}),
      sub({1}));
  Weight target =
      transport(lambda, w, Weight::zero(2), sub({2}), sub({1})).param;
  CHECK(via_partner ==
        annihilator_label(rs, target, sub({1})).highest_weight);

  CHECK(error_code_of([&] {
          annihilator_partner(wt({-4, 0}), element_from_word(rs, {1}),
                              sub({2}), sub({1}));
        }) == Errc::ConditionStarViolated);
}

TEST_CASE("comparison-map verdicts") {
  const RootSystem rs = rs_of('A', 2);
  CHECK(psi_iso_check(rs, wt({-1, 0}), sub({2})) ==
        PsiVerdict::IsoByRegularity);
  CHECK(psi_iso_check(rs, wt({1, 0}), sub({2})) == PsiVerdict::Unknown);
  CHECK(psi_iso_check(rs, Rational(-2) * rs.rho(), sub({})) ==
        PsiVerdict::IsoByRegularity);

  CHECK(error_code_of([&] { psi_iso_check(rs, wt({1, 1}), sub({2})); }) ==
        Errc::NotInSubspace);

  CHECK(std::string(psi_verdict_name(PsiVerdict::IsoByRegularity)) ==
        "iso_by_regularity");
  CHECK(std::string(psi_verdict_name(PsiVerdict::IsoBySurjCondition)) ==
        "iso_by_surj_condition");
  CHECK(std::string(psi_verdict_name(PsiVerdict::Unknown)) == "unknown");
}
