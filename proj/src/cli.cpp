#include "radon/cli.hpp"

#include <algorithm>
#include <sstream>

namespace radon::cli {

namespace {

ParabolicSubset subset_arg(const Json& args, const std::string& key) {
  return subset_from_json(require_field(args, key));
}

Weight mu_arg(const Json& args, const RootSystem& rs, const WeylElem& w) {
  if (!args.contains("mu")) return Weight::zero(rs.rank());
  const Json& mu = args.at("mu");
  if (mu.is_string()) {
    if (mu.get<std::string>() != "det-twist")
      fail(Errc::ParseError, "mu must be a weight array or \"det-twist\"");
    // the specialization character rho - w rho
    return rs.rho() - w.act(rs.rho());
  }
  return weight_from_json(mu);
}

Json run_roots(const RootSystem& rs, const Json& args) {
  Json out = Json::object();
  out["root_system"] = root_system_to_json(rs);
  out["rank"] = rs.rank();
  out["cartan"] = rs.cartan_matrix();
  out["positive_roots"] = rs.positive_roots();
  Json coroots = Json::array();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    coroots.push_back(rs.coroot(k));
  out["coroots"] = std::move(coroots);
  out["count"] = rs.num_positive_roots();
  out["rho"] = weight_to_json(rs.rho());
  if (args.contains("I")) {
    ParabolicSubset I = subset_arg(args, "I");
    out["I"] = subset_to_json(I);
    Json supported = Json::array();
    for (std::size_t k : rs.positive_indices_of(I))
      supported.push_back(rs.positive_roots()[k]);
    out["positive_roots_I"] = std::move(supported);
    out["rho_I"] = weight_to_json(rs.rho_of(I));
    out["rho_nil_I"] = weight_to_json(rs.rho_nil(I));
  }
  return out;
}

Json run_weyl(const RootSystem& rs, const Json& args,
              const RunOptions& options) {
  Json out = Json::object();
  if (args.contains("enumerate") && args.at("enumerate").is_boolean() &&
      args.at("enumerate").get<bool>()) {
    std::vector<WeylElem> elems =
        enumerate_group(rs, options.enumeration_cap);
    out["order"] = elems.size();
    Json words = Json::array();
    for (const WeylElem& w : elems) words.push_back(word_to_json(w));
    out["elements"] = std::move(words);
    return out;
  }
  WeylElem w = [&] {
    if (args.contains("longest_of"))
      return longest_element(rs, subset_arg(args, "longest_of"));
    return word_from_json(rs, require_field(args, "word"));
  }();
  out["word"] = word_to_json(w);
  out["length"] = w.length();
  out["inverse"] = word_to_json(w.inverse());
  if (args.contains("lambda")) {
    Weight lambda = weight_from_json(args.at("lambda"));
    out["action"] = weight_to_json(w.act(lambda));
    out["star_action"] = weight_to_json(w.star_act(lambda));
    out["regular"] = is_regular(rs, lambda);
    if (args.contains("K")) {
      ParabolicSubset K = subset_arg(args, "K");
      out["antidominant_on_K"] = is_antidominant(rs, lambda, K);
    }
  }
  return out;
}

Json run_star_pairs(const RootSystem& rs, const Json& args,
                    const RunOptions& options) {
  std::optional<ParabolicSubset> only_I, only_J;
  if (args.contains("I")) only_I = subset_arg(args, "I");
  if (args.contains("J")) only_J = subset_arg(args, "J");
  std::vector<WeylElem> elems = enumerate_group(rs, options.enumeration_cap);
  std::vector<ParabolicSubset> subsets;
  if (only_J) {
    subsets.push_back(*only_J);
  } else {
    for (uint32_t bits = 0; bits < (uint32_t(1) << rs.rank()); ++bits) {
      std::vector<int> idx;
      for (int i = 1; i <= rs.rank(); ++i)
        if ((bits >> (i - 1)) & 1) idx.push_back(i);
      subsets.push_back(ParabolicSubset::from_indices(idx));
    }
  }
  Json pairs = Json::array();
  for (const WeylElem& w : elems)
    for (const ParabolicSubset& J : subsets) {
      auto I = star_image(w, J);
      if (!I) continue;
      if (only_I && !(*I == *only_I)) continue;
      Json p = Json::object();
      p["w"] = word_to_json(w);
      p["I"] = subset_to_json(*I);
      p["J"] = subset_to_json(J);
      p["length"] = w.length();
      p["fiber_dimension"] = fiber_dimension(w, *I, J);
      p["det_twist"] = weight_to_json(det_twist(w, *I, J));
      pairs.push_back(std::move(p));
    }
  Json out = Json::object();
  out["count"] = pairs.size();
  out["pairs"] = std::move(pairs);
  return out;
}

Json run_factorize(const RootSystem& rs, const Json& args) {
  WeylElem w = word_from_json(rs, require_field(args, "w"));
  ParabolicSubset I = subset_arg(args, "I");
  ParabolicSubset J = subset_arg(args, "J");
  return steps_to_json(bh_factorize(w, I, J));
}

Json run_transport(const RootSystem& rs, const Json& args) {
  WeylElem w = word_from_json(rs, require_field(args, "w"));
  ParabolicSubset I = subset_arg(args, "I");
  ParabolicSubset J = subset_arg(args, "J");
  Weight lambda = weight_from_json(require_field(args, "lambda"));
  Weight mu = mu_arg(args, rs, w);
  TdoLabel target = transport(lambda, w, mu, I, J);
  Json out = tdo_to_json(target);
  out["regular"] = is_regular(rs, lambda);
  out["psi_source"] = psi_verdict_name(psi_iso_check(rs, lambda, I));
  out["psi_target"] = psi_verdict_name(psi_iso_check(rs, target.param, J));
  out["annihilator_source"] =
      weight_to_json(annihilator_label(rs, lambda, I).highest_weight);
  out["annihilator_target"] =
      weight_to_json(annihilator_label(rs, target.param, J).highest_weight);
  return out;
}

Json run_check_equivalence(const RootSystem& rs, const Json& args) {
  WeylElem w = word_from_json(rs, require_field(args, "w"));
  ParabolicSubset I = subset_arg(args, "I");
  ParabolicSubset J = subset_arg(args, "J");
  Weight lambda = weight_from_json(require_field(args, "lambda"));
  Weight mu = mu_arg(args, rs, w);
  return intertwiner_to_json(check_equivalence(lambda, w, mu, I, J));
}

Json run_check_theorem2(const RootSystem& rs, const Json& args,
                        const RunOptions& options, int* exit_code) {
  WeylElem w = word_from_json(rs, require_field(args, "w"));
  ParabolicSubset I = subset_arg(args, "I");
  ParabolicSubset J = subset_arg(args, "J");
  Weight lambda = weight_from_json(require_field(args, "lambda"));
  TheoremReport report = check_main_theorem2(lambda, w, I, J);
  if (options.require_applies && report.verdict != Verdict::Applies)
    *exit_code = 1;
  return report_to_json(report);
}

Json run_verify(const Json& request, const Json& args,
                const RunOptions& options, int* exit_code) {
  std::vector<std::string> suites;
  if (args.contains("suites")) {
    const Json& names = args.at("suites");
    if (!names.is_array()) fail(Errc::ParseError, "suites must be an array");
    for (const auto& n : names) {
      if (!n.is_string()) fail(Errc::ParseError, "suite names are strings");
      suites.push_back(n.get<std::string>());
    }
  } else {
    suites = oracle::suite_names();
  }

  std::vector<CartanInput> inputs;
  if (request.contains("root_system") && !request.at("root_system").is_null()) {
    inputs.push_back(cartan_input_from_json(request.at("root_system")));
  } else {
    for (auto [series, rank] : std::initializer_list<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
             {'B', 3}, {'C', 3}, {'G', 2}})
      inputs.push_back(CartanInput::of_series(series, rank));
    if (options.include_large)
      inputs.push_back(CartanInput::of_series('F', 4));
  }

  bool all_passed = true;
  Json runs = Json::array();
  for (const CartanInput& input : inputs) {
    RootSystem rs = build_root_system(input);
    Json run = Json::object();
    run["root_system"] = root_system_to_json(rs);
    Json results = Json::array();
    for (const std::string& suite : suites) {
      oracle::SuiteResult result =
          oracle::verify_suite(rs, suite, options.seed,
                               options.enumeration_cap);
      all_passed = all_passed && result.passed();
      results.push_back(suite_result_to_json(result));
    }
    run["suites"] = std::move(results);
    runs.push_back(std::move(run));
  }
  Json out = Json::object();
  out["runs"] = std::move(runs);
  out["passed"] = all_passed;
  if (!all_passed) *exit_code = 1;
  return out;
}

}  // namespace

RunResult run_request(const Json& request, const RunOptions& options) {
  if (!request.is_object()) fail(Errc::ParseError, "request must be an object");
  const Json& cmd_field = require_field(request, "command");
  if (!cmd_field.is_string())
    fail(Errc::ParseError, "command must be a string");
  const std::string command = cmd_field.get<std::string>();
  Json args = request.contains("arguments") ? request.at("arguments")
                                            : Json::object();
  if (!args.is_object()) fail(Errc::ParseError, "arguments must be an object");

  RunResult result;
  if (command == "verify") {
    result.document = run_verify(request, args, options, &result.exit_code);
    return result;
  }

  RootSystem rs =
      build_root_system(cartan_input_from_json(require_field(request,
                                                             "root_system")));
  if (command == "roots") {
    result.document = run_roots(rs, args);
  } else if (command == "weyl") {
    result.document = run_weyl(rs, args, options);
  } else if (command == "star-pairs") {
    result.document = run_star_pairs(rs, args, options);
  } else if (command == "factorize") {
    result.document = run_factorize(rs, args);
  } else if (command == "transport") {
    result.document = run_transport(rs, args);
  } else if (command == "check-equivalence") {
    result.document = run_check_equivalence(rs, args);
  } else if (command == "check-theorem2") {
    result.document =
        run_check_theorem2(rs, args, options, &result.exit_code);
  } else {
    fail(Errc::ParseError, "unknown command: " + command);
  }
  return result;
}

namespace {

std::string weight_text(const Json& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].get<std::string>();
  }
  return s + ")";
}

std::string ints_text(const Json& a, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i].get<long long>());
  }
  return s + close;
}

std::string word_text(const Json& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(w[i].get<long long>());
  }
  return s;
}

void render_steps(std::ostringstream& os, const Json& steps) {
  if (steps.empty()) {
    os << "  (empty factorization)\n";
    return;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Json& s = steps[i];
    os << "  step " << i + 1 << ": alpha=" << s["alpha"].get<int>()
       << "  inner=" << ints_text(s["inner"], "{", "}")
       << "  factor=" << word_text(s["factor"]);
    if (s.contains("lambda_i"))
      os << "  lambda_i=" << weight_text(s["lambda_i"])
         << "  eta_i=" << weight_text(s["eta_i"]) << "  "
         << s["irreducibility"].get<std::string>();
    os << "\n";
  }
}

}  // namespace

std::string render_text(const std::string& command, const Json& document) {
  std::ostringstream os;
  if (command == "roots") {
    os << "root system " << (document.contains("root_system") &&
                                     document["root_system"].contains("series")
                                 ? document["root_system"]["series"]
                                           .get<std::string>() +
                                       std::to_string(
                                           document["rank"].get<int>())
                                 : "from Cartan matrix")
       << ", rank " << document["rank"].get<int>() << "\n";
    os << "positive roots (" << document["count"].get<int>() << "):\n";
    const Json& roots = document["positive_roots"];
    const Json& coroots = document["coroots"];
    for (std::size_t k = 0; k < roots.size(); ++k)
      os << "  " << k + 1 << ": root " << ints_text(roots[k], "[", "]")
         << "  coroot " << ints_text(coroots[k], "[", "]") << "\n";
    os << "rho = " << weight_text(document["rho"]) << "\n";
    if (document.contains("I")) {
      os << "I = " << ints_text(document["I"], "{", "}") << "\n";
      os << "rho_I = " << weight_text(document["rho_I"]) << "\n";
      os << "rho_nil_I = " << weight_text(document["rho_nil_I"]) << "\n";
    }
  } else if (command == "weyl") {
    if (document.contains("order")) {
      os << "group order " << document["order"].get<long long>() << "\n";
      for (const auto& w : document["elements"])
        os << "  " << word_text(w) << "\n";
    } else {
      os << "w = " << word_text(document["word"]) << "  length "
         << document["length"].get<int>() << "  inverse "
         << word_text(document["inverse"]) << "\n";
      if (document.contains("action")) {
        os << "w(lambda) = " << weight_text(document["action"]) << "\n";
        os << "w*lambda = " << weight_text(document["star_action"]) << "\n";
        os << "lambda regular: "
           << (document["regular"].get<bool>() ? "yes" : "no") << "\n";
      }
    }
  } else if (command == "star-pairs") {
    const long long count = document["count"].get<long long>();
    os << count << " condition-(*) pair" << (count == 1 ? "" : "s") << "\n";
    for (const auto& p : document["pairs"])
      os << "  w=" << word_text(p["w"]) << "  I=" << ints_text(p["I"], "{", "}")
         << "  J=" << ints_text(p["J"], "{", "}") << "  length "
         << p["length"].get<int>() << "  det twist "
         << weight_text(p["det_twist"]) << "\n";
  } else if (command == "factorize") {
    render_steps(os, document);
  } else if (command == "transport") {
    os << "target variety " << ints_text(document["variety"], "{", "}")
       << "  param " << weight_text(document["param"]) << "\n";
    os << "lambda regular: "
       << (document["regular"].get<bool>() ? "yes" : "no") << "\n";
    os << "psi source: " << document["psi_source"].get<std::string>()
       << "  psi target: " << document["psi_target"].get<std::string>()
       << "\n";
    os << "annihilator highest weights: source "
       << weight_text(document["annihilator_source"]) << "  target "
       << weight_text(document["annihilator_target"]) << "\n";
  } else if (command == "check-equivalence") {
    os << "w = " << word_text(document["w"]) << "  mu = "
       << weight_text(document["mu"]) << "\n";
    os << "source: " << ints_text(document["source"]["variety"], "{", "}")
       << " with param " << weight_text(document["source"]["param"]) << "\n";
    os << "target: " << ints_text(document["target"]["variety"], "{", "}")
       << " with param " << weight_text(document["target"]["param"]) << "\n";
    os << "inverse transform: w = " << word_text(document["inverse_w"])
       << "  mu = " << weight_text(document["inverse_mu"]) << "\n";
  } else if (command == "check-theorem2") {
    os << "lambda regular: "
       << (document["regular"].get<bool>() ? "yes" : "no") << "\n";
    render_steps(os, document["chain"]);
    os << "verdict: " << document["verdict"].get<std::string>() << "\n";
    if (!document["conclusion"].get<std::string>().empty())
      os << document["conclusion"].get<std::string>() << "\n";
  } else if (command == "verify") {
    for (const auto& run : document["runs"]) {
      const Json& rsj = run["root_system"];
      std::string name = rsj.contains("series")
                             ? rsj["series"].get<std::string>() +
                                   std::to_string(rsj["rank"].get<int>())
                             : "custom";
      os << name << ":\n";
      for (const auto& s : run["suites"]) {
        os << "  " << (s["passed"].get<bool>() ? "pass" : "FAIL") << "  "
           << s["suite"].get<std::string>() << "  ("
           << s["instances_checked"].get<long long>() << " instances)\n";
        for (const auto& f : s["failures"])
          os << "    " << f.get<std::string>() << "\n";
      }
    }
    os << (document["passed"].get<bool>() ? "all suites passed"
                                          : "some suites FAILED")
       << "\n";
  } else {
    os << document.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace radon::cli
