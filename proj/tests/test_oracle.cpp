#include <doctest.h>

#include <string>
#include <vector>

#include "radon/oracle.hpp"
#include "test_util.hpp"

using namespace radon;
using namespace radon::testutil;

TEST_CASE("every suite passes on small types") {
  const std::vector<std::string>& names = oracle::suite_names();
  REQUIRE(names.size() == 7);
  for (char series : {'A', 'B'}) {
    for (int rank = 1; rank <= 2; ++rank) {
      if (series == 'B' && rank == 1) continue;
      const RootSystem rs = rs_of(series, rank);
      for (const std::string& name : names) {
        oracle::SuiteResult result = oracle::verify_suite(rs, name, 42);
        CAPTURE(rs.label());
        CAPTURE(name);
        CAPTURE(result.failures.empty() ? std::string()
                                        : result.failures.front());
        CHECK(result.passed());
        CHECK(result.suite == name);
        CHECK(result.instances_checked > 0);
      }
    }
  }
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  const RootSystem rs = rs_of('B', 2);
  for (const std::string& name : oracle::suite_names()) {
    oracle::SuiteResult a = oracle::verify_suite(rs, name, 7);
    oracle::SuiteResult b = oracle::verify_suite(rs, name, 7);
    CHECK(a.instances_checked == b.instances_checked);
    CHECK(a.failures == b.failures);
  }
}

TEST_CASE("unknown suites and cap violations are reported") {
  const RootSystem rs = rs_of('A', 2);
  CHECK(error_code_of([&] { oracle::verify_suite(rs, "everything", 1); }) ==
        Errc::UnknownSuite);
  const RootSystem a3 = rs_of('A', 3);
  CHECK(error_code_of([&] {
          oracle::verify_suite(a3, "lengths", 1, 5);
        }) == Errc::GroupTooLarge);
}

TEST_CASE("reference routes recompute frozen values") {
  const RootSystem a2 = rs_of('A', 2);
  CHECK(oracle::reference::positive_roots_by_orbit(a2.cartan_matrix())
            .size() == 3);

  WeylElem w0 = element_from_word(a2, {1, 2, 1});
  CHECK(oracle::reference::length_by_word_search(a2, w0) == 3);
  CHECK(oracle::reference::length_by_word_search(a2, WeylElem::identity(a2)) ==
        0);

  CHECK(oracle::reference::act_by_base_change(a2, element_from_word(a2, {1}),
                                              wt({1, 0})) == wt({-1, 1}));
  CHECK(oracle::reference::star_by_base_change(
            a2, element_from_word(a2, {2, 1}), wt({-1, 0})) == wt({0, 4}));

  CHECK(oracle::reference::longest_matrix(a2, ParabolicSubset::full(2)) ==
        w0.matrix());
  CHECK(oracle::reference::group_order(a2, ParabolicSubset::full(2)) == 6);
  CHECK(oracle::reference::group_order(rs_of('B', 2),
                                       ParabolicSubset::full(2)) == 8);
  CHECK(oracle::reference::group_order(a2, sub({1})) == 2);
}
