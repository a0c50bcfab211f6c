// Command line front end.  Every command emits one JSON record per line with
// the fixed shape {checks, command, inputs, result}; keys are serialized in
// sorted order and all exact values are integers or "a/b" strings, so output
// is byte-identical across runs and worker counts.  Tables (family,
// enumerate) can switch to CSV.  Exit codes: 0 success or realizable, 1 not
// realizable or mismatch, 2 out of scope, 3 resource refusal, 64 usage.

#include <cstdint>
#include <exception>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "prism/prism.hpp"

using json = nlohmann::json;
using namespace prism;

namespace {

constexpr int kExitRealizable = 0;
constexpr int kExitNotRealizable = 1;
constexpr int kExitOutOfScope = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

json int_json(const Int& v) {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

json rational_json(const Rational& v) { return format_rational(v); }

Int parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer argument");
  const std::size_t digits = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (digits == text.size())
    throw std::invalid_argument("malformed integer: " + text);
  for (std::size_t i = digits; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer: " + text);
  return Int(text);
}

void emit(const std::string& command, const json& inputs, const json& result,
          const json& checks = json::array()) {
  const json record = {{"checks", checks},
                       {"command", command},
                       {"inputs", inputs},
                       {"result", result}};
  std::cout << record.dump() << "\n";
}

json check_entry(const std::string& name, bool pass, const json& expected,
                 const json& actual) {
  return json{{"actual", actual},
              {"expected", expected},
              {"name", name},
              {"pass", pass}};
}

json sigma_json(const std::vector<long long>& sigma) {
  return json(sigma);
}

std::string sigma_csv(const std::vector<long long>& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sigma[i]);
  }
  return out;
}

struct Options {
  std::string format = "jsonl";
  bool decimal = false;
  int jobs = 1;
  int max_len = 7;
  long long max_entry = 15;
  long long s_max = 3;
  long long t_max = 3;
  std::optional<long long> norm_bound;
  std::string p_text, q_text;
  long long s = 0, t = 0;
  std::vector<long long> weights;
};

int run_decide(const Options& opt) {
  const Int p = parse_int(opt.p_text);
  const Int q = parse_int(opt.q_text);
  const PrismVerdict v = decide(p, q);
  json result = {{"reason", v.reason}};
  switch (v.status) {
    case VerdictStatus::realizable:
      result["status"] = "realizable";
      break;
    case VerdictStatus::not_realizable:
      result["status"] = "not-realizable";
      break;
    case VerdictStatus::out_of_scope:
      result["status"] = "out-of-scope";
      break;
  }
  if (v.witness) {
    result["witness"] = {{"r", int_json(v.witness->r)},
                         {"s", v.witness->s},
                         {"t", v.witness->t}};
  }
  emit("decide", {{"p", int_json(p)}, {"q", int_json(q)}}, result);
  if (v.status == VerdictStatus::realizable) return kExitRealizable;
  if (v.status == VerdictStatus::not_realizable) return kExitNotRealizable;
  return kExitOutOfScope;
}

int run_family(const Options& opt) {
  if (opt.s_max < 0 || opt.t_max < 0)
    throw std::invalid_argument("family: bounds must be nonnegative");
  if (opt.format == "csv") std::cout << "s,t,r,p,q,sigma\n";
  for (long long s = 0; s <= opt.s_max; ++s) {
    for (long long t = 0; t <= opt.t_max; ++t) {
      const FamilyMember m = family_pq(s, t);
      if (opt.format == "csv") {
        std::cout << s << ',' << t << ',' << m.r << ',' << m.p << ',' << m.q
                  << ',' << sigma_csv(m.sigma) << "\n";
        continue;
      }
      const json result = {{"p", int_json(m.p)},    {"q", int_json(m.q)},
                           {"r", int_json(m.r)},    {"s", s},
                           {"sigma", sigma_json(m.sigma)}, {"t", t}};
      emit("family", {{"s_max", opt.s_max}, {"t_max", opt.t_max}}, result);
    }
  }
  return kExitRealizable;
}

int run_enumerate(const Options& opt) {
  const std::vector<SearchHit> hits =
      enumerate_search(opt.max_len, opt.max_entry, opt.jobs);

  std::vector<SearchHit> expected;
  if (opt.max_entry >= 2) {
    for (long long s = 0; s + 4 <= opt.max_len; ++s) {
      for (long long t = 0; s + t + 4 <= opt.max_len; ++t) {
        if (t > 0 && 2 * s + 3 > opt.max_entry) continue;
        const FamilyMember m = family_pq(s, t);
        expected.push_back(SearchHit{family_embedding(m), m.p, m.q});
      }
    }
  }
  std::sort(expected.begin(), expected.end(),
            [](const SearchHit& x, const SearchHit& y) {
              if (x.emb.sigma != y.emb.sigma) return x.emb.sigma < y.emb.sigma;
              return x.emb.marks < y.emb.marks;
            });
  bool matches = hits.size() == expected.size();
  for (std::size_t i = 0; matches && i < hits.size(); ++i)
    matches = hits[i].emb.sigma == expected[i].emb.sigma &&
              hits[i].emb.marks == expected[i].emb.marks &&
              hits[i].p == expected[i].p && hits[i].q == expected[i].q;

  // jobs is deliberately absent from the record: it only affects scheduling
  // and the output must be byte-identical across worker counts.
  const json inputs = {{"max_entry", opt.max_entry}, {"max_len", opt.max_len}};
  if (opt.format == "csv") {
    std::cout << "sigma,marks,p,q\n";
    for (const SearchHit& hit : hits) {
      std::cout << sigma_csv(hit.emb.sigma) << ',' << hit.emb.marks[0] << ' '
                << hit.emb.marks[1] << ' ' << hit.emb.marks[2] << ' '
                << hit.emb.marks[3] << ',' << hit.p << ',' << hit.q << "\n";
    }
    std::cout << "# matches family: " << (matches ? "true" : "false") << "\n";
  } else {
    for (const SearchHit& hit : hits) {
      const json result = {
          {"marks", {hit.emb.marks[0], hit.emb.marks[1], hit.emb.marks[2],
                     hit.emb.marks[3]}},
          {"p", int_json(hit.p)},
          {"q", int_json(hit.q)},
          {"sigma", sigma_json(hit.emb.sigma)}};
      emit("enumerate", inputs, result);
    }
    const json checks = json::array(
        {check_entry("matches-family", matches,
                     static_cast<std::int64_t>(expected.size()),
                     static_cast<std::int64_t>(hits.size()))});
    emit("enumerate", inputs,
         {{"hits", static_cast<std::int64_t>(hits.size())},
          {"matches_family", matches}},
         checks);
  }
  return matches ? kExitRealizable : kExitNotRealizable;
}

int run_invariants(const Options& opt) {
  const Int p = parse_int(opt.p_text);
  const Int q = parse_int(opt.q_text);
  if (p < 1 || q < 1 || boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument("invariants: need coprime positive p, q");
  json result = {{"casson_walker", rational_json(casson_walker_prism(p, q))},
                 {"dedekind_sum", rational_json(dedekind_sum(p, q))}};
  if (opt.decimal)
    result["casson_walker_decimal"] = format_decimal(casson_walker_prism(p, q));
  if (q % 2 == 1) result["mod4_obstruction"] = mod4_obstruction(p, q);
  if (q < p && p < 2 * q) {
    const DInvariant d = prism_d_invariants(p, q);
    json values = json::array();
    json decimals = json::array();
    for (const Rational& v : d) {
      values.push_back(rational_json(v));
      if (opt.decimal) decimals.push_back(format_decimal(v));
    }
    result["d_invariants"] = values;
    if (opt.decimal) result["d_invariants_decimal"] = decimals;
  }
  emit("invariants", {{"p", int_json(p)}, {"q", int_json(q)}}, result);
  return kExitRealizable;
}

int run_dinv(const Options& opt) {
  if (opt.weights.empty())
    throw std::invalid_argument("dinv: need at least one weight");
  std::vector<Int> weights;
  for (const long long w : opt.weights) {
    if (w < 1) throw std::invalid_argument("dinv: weights must be >= 1");
    if (opt.norm_bound && w > *opt.norm_bound)
      throw resource_limit_error("dinv: weight above --norm-bound");
    weights.emplace_back(w);
  }
  const IntMatrix gram = tridiagonal_gram(weights);
  const DInvariant d = lattice_d_invariant(gram);
  json values = json::array();
  json decimals = json::array();
  for (const Rational& v : d) {
    values.push_back(rational_json(v));
    if (opt.decimal) decimals.push_back(format_decimal(v));
  }
  json result = {{"d_invariants", values},
                 {"det", int_json(gram_det(gram))},
                 {"rank", static_cast<std::int64_t>(weights.size())}};
  if (opt.decimal) result["d_invariants_decimal"] = decimals;
  emit("dinv", {{"weights", json(opt.weights)}}, result);
  return kExitRealizable;
}

int run_crosscheck(const Options& opt) {
  const FamilyMember m = family_pq(opt.s, opt.t);
  if (m.q > 200)
    throw resource_limit_error("crosscheck: member above desk scale (q > 200)");
  const TorsionProfile profile = torsion_from_lattice(family_embedding(m));
  const CrossCheckReport rep = cross_check_with_profile(m, profile);

  const json checks = json::array({
      check_entry("d-invariants", rep.d_invariants_match, "equal multisets",
                  rep.d_invariants_match ? "equal multisets" : "different"),
      check_entry("casson-walker", rep.casson_walker_match,
                  rational_json(rep.casson_walker_prism_value),
                  rational_json(rep.casson_walker_surgery_value)),
      check_entry("alexander-determinant", rep.alexander_det_match,
                  int_json(m.p), int_json(abs(rep.delta_minus_one))),
      check_entry("torsion-symmetry", rep.torsion_symmetry_match, "symmetric",
                  rep.torsion_symmetry_match ? "symmetric" : "broken"),
      check_entry("genus", rep.genus_match, rep.genus_shorts,
                  rep.genus_profile),
  });
  json result = {{"casson_walker", rational_json(rep.casson_walker_prism_value)},
                 {"delta_minus_one", int_json(rep.delta_minus_one)},
                 {"genus", profile.genus},
                 {"p", int_json(m.p)},
                 {"q", int_json(m.q)},
                 {"r", int_json(m.r)},
                 {"s", opt.s},
                 {"t", opt.t}};
  if (opt.decimal)
    result["casson_walker_decimal"] =
        format_decimal(rep.casson_walker_prism_value);
  emit("crosscheck", {{"s", opt.s}, {"t", opt.t}}, result, checks);
  return rep.all_pass() ? kExitRealizable : kExitNotRealizable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of prism manifolds P(p,q) arising from positive "
      "integral surgery on a knot"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "Decide realizability of P(p,q)");
  decide_cmd->add_option("p", opt.p_text, "numerator p")->required();
  decide_cmd->add_option("q", opt.q_text, "denominator q")->required();

  CLI::App* family_cmd =
      app.add_subcommand("family", "List the closed-form realizable family");
  family_cmd->add_option("--s-max", opt.s_max, "largest s");
  family_cmd->add_option("--t-max", opt.t_max, "largest t");
  family_cmd->add_option("--format", opt.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "Brute-force search over marked changemaker embeddings");
  enum_cmd->add_option("--max-len", opt.max_len, "changemaker length cap");
  enum_cmd->add_option("--max-entry", opt.max_entry, "changemaker entry cap");
  enum_cmd->add_option("--jobs", opt.jobs, "worker threads");
  enum_cmd->add_option("--format", opt.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "Supporting invariants of P(p,q)");
  inv_cmd->add_option("p", opt.p_text, "numerator p")->required();
  inv_cmd->add_option("q", opt.q_text, "denominator q")->required();
  inv_cmd->add_flag("--decimal", opt.decimal,
                    "add display-only decimal renderings");

  CLI::App* dinv_cmd = app.add_subcommand(
      "dinv", "d-invariants of the path lattice with the given weights");
  dinv_cmd->add_option("weights", opt.weights, "path weights")->required();
  dinv_cmd->add_option("--norm-bound", opt.norm_bound,
                       "refuse weights above this bound");
  dinv_cmd->add_flag("--decimal", opt.decimal,
                     "add display-only decimal renderings");

  CLI::App* cross_cmd = app.add_subcommand(
      "crosscheck", "Consistency loops on the family member at (s, t)");
  cross_cmd->add_option("s", opt.s, "family parameter s")->required();
  cross_cmd->add_option("t", opt.t, "family parameter t")->required();
  cross_cmd->add_flag("--decimal", opt.decimal,
                      "add display-only decimal renderings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (decide_cmd->parsed()) return run_decide(opt);
    if (family_cmd->parsed()) return run_family(opt);
    if (enum_cmd->parsed()) return run_enumerate(opt);
    if (inv_cmd->parsed()) return run_invariants(opt);
    if (dinv_cmd->parsed()) return run_dinv(opt);
    if (cross_cmd->parsed()) return run_crosscheck(opt);
  } catch (const resource_limit_error& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
