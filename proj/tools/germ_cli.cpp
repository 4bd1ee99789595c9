#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "germ/germ.hpp"

namespace {

using nlohmann::ordered_json;
using namespace germ;

std::string str(const Rational& r) { return germ::to_string(r); }

template <class T>
std::string streamed(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string approx(const Rational& r) {
  mpf_class f(r, 128);
  std::ostringstream os;
  os.precision(12);
  os << f;
  return os.str();
}

ordered_json letters_json(const std::vector<Letter>& v) {
  ordered_json a = ordered_json::array();
  for (auto x : v) a.push_back(x.bits);
  return a;
}

ordered_json report_json(const SearchReport& r) {
  return {{"champion", r.champion.to_string()},
          {"period_bound", r.period_bound},
          {"preperiod_window", r.preperiod_window},
          {"candidates_compared", r.candidates_compared},
          {"cycles_enumerated", r.cycles_enumerated},
          {"lemma6_pass", r.lemma6_pass},
          {"caveat", r.caveat},
          {"periodic_champion", r.periodic_champion.to_string()},
          {"density", str(r.density)}};
}

void print_text(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (j.is_array()) {
    os << prefix << ":";
    for (const auto& v : j) os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Germ order of eventually periodic sets, D-avoidance and packings"};
  app.require_subcommand(1);
  bool json = false, text = false;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--text", text, "plain text output (default)");

  std::string set_lit, a_lit, b_lit, d_lit, body_lit, suite = "all";
  int depth = 2, probe_depth = 3;
  std::optional<std::size_t> L, W;
  std::size_t trials = 100;
  std::uint64_t seed = 1;

  auto* expand = app.add_subcommand("expand", "Laurent expansion of the generating function at q = 1");
  expand->add_option("--set", set_lit)->required();
  expand->add_option("--depth", depth, "highest coefficient index")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "germ order of two sets");
  compare->add_option("--a", a_lit)->required();
  compare->add_option("--b", b_lit)->required();

  auto* val = app.add_subcommand("valuation", "density and constant term");
  val->add_option("--set", set_lit)->required();

  auto* avoid = app.add_subcommand("avoid", "test D-avoidance");
  avoid->add_option("--set", set_lit)->required();
  avoid->add_option("--d", d_lit)->required();

  auto* greedy = app.add_subcommand("greedy", "greedy D-avoiding set");
  greedy->add_option("--d", d_lit)->required();

  auto* encode = app.add_subcommand("encode", "m-block encoding as letter masks");
  encode->add_option("--set", set_lit)->required();
  encode->add_option("--d", d_lit)->required();

  auto* optimize_cmd = app.add_subcommand("optimize", "bounded search for a germ-maximal D-avoiding set");
  optimize_cmd->add_option("--d", d_lit)->required();
  optimize_cmd->add_option("--L", L, "period bound");
  optimize_cmd->add_option("--W", W, "preperiod window");

  auto* pack = app.add_subcommand("pack", "densest translation set for a packing body");
  pack->add_option("--body", body_lit)->required();
  pack->add_option("--L", L, "period bound");
  pack->add_option("--W", W, "preperiod window");

  auto* verify = app.add_subcommand("verify", "seeded property suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember([] {
    auto v = suite_names();
    v.push_back("all");
    return v;
  }()));
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();

  auto* probe = app.add_subcommand("probe", "partial sums at q = 1 - 10^-j, j = 1..depth");
  probe->add_option("--a", a_lit, "first set (default: even digit count)");
  probe->add_option("--b", b_lit, "second set (default: complement of the first)");
  probe->add_option("--depth", probe_depth, "largest j")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (json && text) {
    std::cerr << "--json and --text are exclusive\n";
    return 2;
  }

  ordered_json out;
  int status = 0;
  try {
    if (expand->parsed()) {
      const auto s = parse_set(set_lit);
      out["set"] = s.to_string();
      if (s.is_empty()) {
        out["order"] = nullptr;
        out["coeffs"] = ordered_json::array();
      } else {
        const auto e = laurent_at_one(gf_of_set(s), depth);
        out["order"] = e.order;
        out["coeffs"] = ordered_json::array();
        for (const auto& c : e.coefficients) out["coeffs"].push_back(str(c));
      }
    } else if (compare->parsed()) {
      const auto r = germ_compare(parse_set(a_lit), parse_set(b_lit));
      out["relation"] = to_string(r.relation);
      out["witness_order"] = r.witness_order ? ordered_json(*r.witness_order) : ordered_json(nullptr);
      out["leading"] = r.leading ? ordered_json(str(*r.leading)) : ordered_json(nullptr);
    } else if (val->parsed()) {
      const auto s = parse_set(set_lit);
      const auto v = valuation(s);
      out = {{"set", s.to_string()}, {"density", str(v.density())}, {"constant", str(v.constant())}};
    } else if (avoid->parsed()) {
      const auto s = parse_set(set_lit);
      const auto d = parse_distance_set(d_lit);
      out = {{"set", s.to_string()}, {"d", d.to_string()}, {"avoiding", is_avoiding(s, d)}};
    } else if (greedy->parsed()) {
      const auto d = parse_distance_set(d_lit);
      out = {{"d", d.to_string()}, {"set", greedy_avoiding(d).to_string()}};
    } else if (encode->parsed()) {
      const auto s = parse_set(set_lit);
      const auto d = parse_distance_set(d_lit);
      const auto w = block_encode(s, d);
      out = {{"set", s.to_string()}, {"m", w.m}, {"pre", letters_json(w.pre)}, {"rep", letters_json(w.rep)},
             {"legal", w.is_legal(d)}};
    } else if (optimize_cmd->parsed()) {
      const auto d = parse_distance_set(d_lit);
      out = report_json(optimize(d, L, W));
    } else if (pack->parsed()) {
      std::vector<std::uint64_t> elems = parse_uint_list(body_lit);
      const PackingBody b(std::move(elems));
      const auto r = optimize_packing(b, L, W);
      ordered_json body = ordered_json::array();
      for (auto x : b.elements()) body.push_back(x);
      out["body"] = body;
      out["distances"] = r.distances ? ordered_json(r.distances->to_string()) : ordered_json(nullptr);
      out.update(report_json(r.search));
      out["covered"] = r.covered.to_string();
      out["union_gf"] = streamed(r.covered_gf);
    } else if (verify->parsed()) {
      bool all_passed = true;
      out["seed"] = seed;
      out["suites"] = ordered_json::array();
      for (const auto& r : run_suite(suite, trials, seed)) {
        all_passed = all_passed && r.passed();
        ordered_json j = {{"name", r.name}, {"trials", r.trials}, {"passed", r.passed()},
                          {"failures", r.failures.size()}};
        if (!r.failures.empty()) j["first_failure"] = r.failures.front();
        out["suites"].push_back(j);
      }
      out["passed"] = all_passed;
      if (!all_passed) status = 1;
    } else if (probe->parsed()) {
      if (probe_depth < 1 || probe_depth > 4) throw PreconditionError("probe depth must be in 1..4");
      if (a_lit.empty() != b_lit.empty()) throw PreconditionError("probe needs both --a and --b, or neither");
      Membership ma = has_even_digit_count, mb = [](std::uint64_t n) { return !has_even_digit_count(n); };
      if (!a_lit.empty()) {
        const auto sa = parse_set(a_lit), sb = parse_set(b_lit);
        ma = [sa](std::uint64_t n) { return sa.contains(n); };
        mb = [sb](std::uint64_t n) { return sb.contains(n); };
      }
      std::vector<Rational> qs;
      Integer ten = 1;
      for (int j = 1; j <= probe_depth; ++j) {
        ten *= 10;
        qs.push_back(Rational(ten - 1, ten));  // already in lowest terms
      }
      std::uint64_t horizon = 20;
      for (int j = 0; j < probe_depth; ++j) horizon *= 10;
      out["horizon"] = horizon;
      out["samples"] = ordered_json::array();
      int last = 0;
      bool sign_change = false;
      for (const auto& s : numeric_probe(ma, mb, qs, horizon)) {
        if (s.certified_sign != 0 && last != 0 && s.certified_sign != last) sign_change = true;
        if (s.certified_sign != 0) last = s.certified_sign;
        out["samples"].push_back({{"q", str(s.q)},
                                  {"partial_difference", approx(s.partial_difference)},
                                  {"tail_bound", approx(s.tail_bound)},
                                  {"certified_sign", s.certified_sign}});
      }
      out["sign_change"] = sign_change;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (json) std::cout << out.dump(2) << "\n";
  else print_text(out, "", std::cout);
  return status;
}
