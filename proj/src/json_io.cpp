#include "radon/json_io.hpp"

namespace radon {

namespace {

long long int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<long long>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(Errc::ParseError,
       "weight coordinate must be an integer or a rational string");
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array())
    fail(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j)
    out.push_back(static_cast<int>(int_from_json(x, what)));
  return out;
}

}  // namespace

Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w[i].str());
  return a;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "weight must be an array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Weight(std::move(c));
}

Json subset_to_json(const ParabolicSubset& s) {
  Json a = Json::array();
  for (int i : s.indices()) a.push_back(i);
  return a;
}

ParabolicSubset subset_from_json(const Json& j) {
  return ParabolicSubset::from_indices(int_array(j, "subset"));
}

Json word_to_json(const WeylElem& w) {
  Json a = Json::array();
  for (int i : w.word()) a.push_back(i);
  return a;
}

WeylElem word_from_json(const RootSystem& rs, const Json& j) {
  return element_from_word(rs, int_array(j, "word"));
}

Json cartan_input_to_json(const CartanInput& in) {
  Json j = Json::object();
  if (in.series) {
    j["series"] = std::string(1, *in.series);
    j["rank"] = in.rank;
  } else if (in.cartan) {
    j["cartan"] = *in.cartan;
  }
  return j;
}

CartanInput cartan_input_from_json(const Json& j) {
  if (!j.is_object())
    fail(Errc::ParseError, "root_system must be an object");
  if (j.contains("cartan")) {
    const Json& m = j["cartan"];
    if (!m.is_array()) fail(Errc::ParseError, "cartan must be a matrix");
    std::vector<std::vector<int>> rows;
    for (const auto& row : m) rows.push_back(int_array(row, "cartan row"));
    return CartanInput::of_matrix(std::move(rows));
  }
  if (j.contains("series")) {
    const Json& s = j["series"];
    if (!s.is_string() || s.get<std::string>().size() != 1)
      fail(Errc::ParseError, "series must be a single letter");
    return CartanInput::of_series(
        s.get<std::string>()[0],
        static_cast<int>(int_from_json(require_field(j, "rank"), "rank")));
  }
  fail(Errc::ParseError, "root_system needs a series or a cartan matrix");
}

Json root_system_to_json(const RootSystem& rs) {
  Json j = Json::object();
  if (rs.series()) {
    j["series"] = std::string(1, *rs.series());
    j["rank"] = rs.rank();
  } else {
    j["cartan"] = rs.cartan_matrix();
  }
  return j;
}

Json step_to_json(const FactorizationStep& step) {
  Json j = Json::object();
  j["alpha"] = step.alpha;
  j["inner"] = subset_to_json(step.inner);
  j["factor"] = word_to_json(step.factor);
  return j;
}

FactorizationStep step_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "step must be an object");
  FactorizationStep step{
      static_cast<int>(int_from_json(require_field(j, "alpha"), "alpha")),
      subset_from_json(require_field(j, "inner")),
      word_from_json(rs, require_field(j, "factor"))};
  return step;
}

Json steps_to_json(const std::vector<FactorizationStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(step_to_json(s));
  return a;
}

std::vector<FactorizationStep> steps_from_json(const RootSystem& rs,
                                               const Json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "steps must be an array");
  std::vector<FactorizationStep> out;
  for (const auto& s : j) out.push_back(step_from_json(rs, s));
  return out;
}

Json tdo_to_json(const TdoLabel& label) {
  Json j = Json::object();
  j["variety"] = subset_to_json(label.variety);
  j["param"] = weight_to_json(label.param);
  return j;
}

TdoLabel tdo_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "label must be an object");
  return TdoLabel{subset_from_json(require_field(j, "variety")),
                  weight_from_json(require_field(j, "param"))};
}

Json gvm_to_json(const GvmLabel& label) {
  Json j = Json::object();
  j["levi"] = subset_to_json(label.levi);
  j["parabolic"] = subset_to_json(label.parabolic);
  j["highest_weight"] = weight_to_json(label.highest_weight);
  return j;
}

Json intertwiner_to_json(const IntertwinerSpec& spec) {
  Json j = Json::object();
  j["w"] = word_to_json(spec.w);
  j["mu"] = weight_to_json(spec.mu);
  j["source"] = tdo_to_json(spec.source);
  j["target"] = tdo_to_json(spec.target);
  j["inverse_w"] = word_to_json(spec.inverse_w);
  j["inverse_mu"] = weight_to_json(spec.inverse_mu);
  return j;
}

IntertwinerSpec intertwiner_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "spec must be an object");
  return IntertwinerSpec{word_from_json(rs, require_field(j, "w")),
                         weight_from_json(require_field(j, "mu")),
                         tdo_from_json(require_field(j, "source")),
                         tdo_from_json(require_field(j, "target")),
                         word_from_json(rs, require_field(j, "inverse_w")),
                         weight_from_json(require_field(j, "inverse_mu"))};
}

namespace {

Irreducibility irreducibility_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Irreducible") return Irreducibility::Irreducible;
    if (s == "Unknown") return Irreducibility::Unknown;
  }
  fail(Errc::ParseError, "bad irreducibility value");
}

Verdict verdict_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Applies") return Verdict::Applies;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    if (s == "FailsRegularity") return Verdict::FailsRegularity;
    if (s == "FailsConditionStar") return Verdict::FailsConditionStar;
  }
  fail(Errc::ParseError, "bad verdict value");
}

}  // namespace

Json report_to_json(const TheoremReport& report) {
  Json j = Json::object();
  j["regular"] = report.regular;
  Json chain = Json::array();
  for (const ChainStep& cs : report.chain) {
    Json c = step_to_json(cs.step);
    c["lambda_i"] = weight_to_json(cs.lambda_i);
    c["eta_i"] = weight_to_json(cs.eta_i);
    c["irreducibility"] = irreducibility_name(cs.irreducibility);
    chain.push_back(std::move(c));
  }
  j["chain"] = std::move(chain);
  j["verdict"] = verdict_name(report.verdict);
  j["conclusion"] = report.conclusion;
  return j;
}

TheoremReport report_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "report must be an object");
  TheoremReport report;
  const Json& reg = require_field(j, "regular");
  if (!reg.is_boolean()) fail(Errc::ParseError, "regular must be a boolean");
  report.regular = reg.get<bool>();
  const Json& chain = require_field(j, "chain");
  if (!chain.is_array()) fail(Errc::ParseError, "chain must be an array");
  for (const auto& c : chain) {
    ChainStep cs{step_from_json(rs, c),
                 weight_from_json(require_field(c, "lambda_i")),
                 weight_from_json(require_field(c, "eta_i")),
                 irreducibility_from_json(require_field(c, "irreducibility"))};
    report.chain.push_back(std::move(cs));
  }
  report.verdict = verdict_from_json(require_field(j, "verdict"));
  const Json& conclusion = require_field(j, "conclusion");
  if (!conclusion.is_string())
    fail(Errc::ParseError, "conclusion must be a string");
  report.conclusion = conclusion.get<std::string>();
  return report;
}

Json suite_result_to_json(const oracle::SuiteResult& result) {
  Json j = Json::object();
  j["suite"] = result.suite;
  j["instances_checked"] = result.instances_checked;
  j["failures"] = result.failures;
  j["passed"] = result.passed();
  return j;
}

oracle::SuiteResult suite_result_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "suite result must be an object");
  oracle::SuiteResult r;
  const Json& name = require_field(j, "suite");
  if (!name.is_string()) fail(Errc::ParseError, "suite must be a string");
  r.suite = name.get<std::string>();
  r.instances_checked =
      int_from_json(require_field(j, "instances_checked"), "instances");
  for (const auto& f : require_field(j, "failures")) {
    if (!f.is_string()) fail(Errc::ParseError, "failures must be strings");
    r.failures.push_back(f.get<std::string>());
  }
  return r;
}

const Json& require_field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::ParseError, "missing field: " + key);
  return j.at(key);
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON input");
  return j;
}

}  // namespace radon
