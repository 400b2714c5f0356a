#pragma once

// Named verification checks. Each check rebuilds a published claim about
// concrete forms by brute-force search and reports one row per instance, with
// the inputs written in the notation grammar so every row can be replayed.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "absgame/arena.hpp"
#include "absgame/notation.hpp"
#include "absgame/order.hpp"
#include "absgame/random_forms.hpp"
#include "absgame/solvers.hpp"
#include "absgame/universes.hpp"

namespace absgame {

enum class CheckStatus { Pass, Fail, Unknown };

constexpr std::string_view name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
  }
  return "?";
}

// Provenance of a row's expected value.
namespace provenance {
inline constexpr std::string_view kClaim = "claim";            // stated outright by the result checked
inline constexpr std::string_view kConstruction = "construction";  // follows from the explicit construction
inline constexpr std::string_view kBound = "bound";            // affirmative only up to the budget
}  // namespace provenance

struct DetailRow {
  std::string input;
  std::string expected;
  std::string computed;
  std::string provenance;

  bool matches() const { return expected == computed; }
};

using Params = std::map<std::string, std::string>;

struct CheckReport {
  std::string check_id;
  Params params;
  CheckStatus status = CheckStatus::Pass;
  std::vector<DetailRow> details;
  std::int64_t elapsed_ms = 0;
  std::string error;  // set when the check stopped on a resource limit

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& d : details) n += !d.matches();
    return n;
  }
};

inline nlohmann::ordered_json to_json(const CheckReport& r, bool include_timing = true) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["status"] = name(r.status);
  j["details"] = nlohmann::ordered_json::array();
  for (const auto& d : r.details)
    j["details"].push_back({{"input", d.input}, {"expected", d.expected}, {"computed", d.computed},
                            {"provenance", d.provenance}});
  j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

// Row value formats shared with the replay tooling.
inline std::string outcome_text(OutcomeClass o) { return "o=" + std::string(name(o)); }
inline std::string partial_text(Side s, PartialOutcome o) {
  return std::string(s == Side::Left ? "oL=" : "oR=") + std::string(name(o));
}
inline std::string geq_np_text(bool b) { return b ? "geq_np=true" : "geq_np=false"; }

namespace detail {

class CheckContext {
 public:
  CheckContext(const Params& params, const Budget& budget)
      : params_(params), budget_(budget), solver_(arena_), printer_(arena_) {}

  Arena& arena() { return arena_; }
  Solver& solver() { return solver_; }
  const Budget& budget() const { return budget_; }
  Params& used() { return used_; }

  std::string text(FormId g) { return printer_.render(g); }

  FormId form(std::string_view s) { return parse(arena_, s); }

  int integer(const std::string& key, int fallback) {
    auto it = params_.find(key);
    const int v = it == params_.end() ? fallback : parse_int(key, it->second);
    used_[key] = std::to_string(v);
    return v;
  }

  std::uint64_t seed() {
    auto it = params_.find("seed");
    const std::uint64_t v = it == params_.end() ? 1 : std::stoull(it->second);
    used_["seed"] = std::to_string(v);
    return v;
  }

  std::vector<int> integers(const std::string& key, const std::string& fallback) {
    auto it = params_.find(key);
    const std::string raw = it == params_.end() ? fallback : it->second;
    std::vector<int> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
    used_[key] = raw;
    return out;
  }

  // Row whose input is a single form text, checked against one partial outcome.
  void partial_row(std::vector<DetailRow>& rows, const std::string& input, Side side, PartialOutcome expected,
                   std::string_view prov) {
    const PartialOutcome got = solver_.partial(form(input), side, Convention::Misere);
    rows.push_back({input, partial_text(side, expected), partial_text(side, got), std::string(prov)});
  }

  void outcome_row(std::vector<DetailRow>& rows, const std::string& input, OutcomeClass expected,
                   std::string_view prov) {
    const OutcomeClass got = solver_.outcome(form(input), Convention::Misere);
    rows.push_back({input, outcome_text(expected), outcome_text(got), std::string(prov)});
  }

  void geq_np_row(std::vector<DetailRow>& rows, const std::string& lhs, const std::string& rhs, bool expected,
                  std::string_view prov) {
    const bool got = solver_.geq_np(form(lhs), form(rhs));
    rows.push_back({lhs + " vs " + rhs, geq_np_text(expected), geq_np_text(got), std::string(prov)});
  }

 private:
  static int parse_int(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("parameter " + key + ": not an integer: " + s);
    return v;
  }

  const Params& params_;
  Budget budget_;
  Arena arena_;
  Solver solver_;
  Printer printer_;
  Params used_;
};

inline std::string join_sum(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? "+" : "") + terms[i];
  return out;
}

inline std::string repeat_sum(const std::string& term, int copies) {
  return join_sum(std::vector<std::string>(static_cast<std::size_t>(copies), term));
}

inline std::string ostar_list(int top) {
  std::string out;
  for (int k = 0; k <= top; ++k) out += (k ? "," : "") + std::string("ostar(") + std::to_string(k) + ")";
  return out;
}

// {0 | adjoints of all followers of g}, or with the sides swapped.
inline std::string adjoint_fan(CheckContext& c, FormId g, bool adjoints_on_left) {
  std::string adj;
  bool first = true;
  for (FormId f : c.arena().followers(g)) {
    adj += (first ? "" : ",") + c.text(c.arena().adjoint(f));
    first = false;
  }
  return adjoints_on_left ? "{" + adj + "|0}" : "{0|" + adj + "}";
}

inline std::vector<FormId> dead_ending_seed(CheckContext& c) {
  Classifier cls(c.arena());
  std::vector<FormId> out;
  for (FormId g : all_forms(c.arena(), 2, 1000).forms)
    if (cls.flags(g).dead_ending) out.push_back(g);
  return out;
}

inline void add_followers(CheckContext& c, std::vector<FormId>& pool, FormId g) {
  for (FormId f : c.arena().followers(g))
    if (std::find(pool.begin(), pool.end(), f) == pool.end()) pool.push_back(f);
}

inline std::vector<DetailRow> check_outcome_bullets(CheckContext& c) {
  std::vector<DetailRow> rows;
  const auto p = provenance::kClaim;
  c.outcome_row(rows, "0", OutcomeClass::N, p);
  c.outcome_row(rows, "{0,1|}", OutcomeClass::R, p);
  c.outcome_row(rows, "{0,1|}+{0|*}", OutcomeClass::L, p);
  c.outcome_row(rows, "1+{0|*}", OutcomeClass::P, p);
  c.outcome_row(rows, "1+1+{0|*}", OutcomeClass::N, p);
  c.outcome_row(rows, "1+1+1+{0|*}", OutcomeClass::R, p);
  return rows;
}

inline std::vector<DetailRow> check_moves_towers(CheckContext& c) {
  std::vector<DetailRow> rows;
  const int max_n = c.integer("N", 6);
  const int max_k = c.integer("K", 6);
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= max_k; ++k)
      c.partial_row(rows, std::to_string(n) + "+ostar(" + std::to_string(k) + ")", Side::Right,
                    n == k ? PartialOutcome::L : PartialOutcome::R, provenance::kClaim);
  return rows;
}

inline std::vector<DetailRow> check_star_row(CheckContext& c) {
  std::vector<DetailRow> rows;
  const auto ns = c.integers("n", "0,1,2");
  const int max_summands = c.integer("M", 3);
  const int samples = c.integer("samples", 5);
  const std::uint64_t seed = c.seed();
  Arena& a = c.arena();

  for (int n : ns) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    const std::string x = "{*|" + ostar_list(n + 1) + "}";
    const std::string target = "hat(" + std::to_string(n + 2) + ")";
    c.partial_row(rows, target + "+" + x, Side::Right, PartialOutcome::L, provenance::kClaim);
    for (const auto& m : multisets(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(max_summands))) {
      std::vector<std::string> terms;
      for (std::size_t i : m) terms.push_back("hat(" + std::to_string(i + 1) + ")");
      terms.push_back(x);
      c.partial_row(rows, join_sum(terms), Side::Right, PartialOutcome::R, provenance::kClaim);
    }

    // Non-Right-atomic members with outcome R against the adjoint construction.
    std::vector<FormId> pool{Arena::zero(), a.star()};
    for (int k = 1; k <= n + 1; ++k) add_followers(c, pool, a.hat(k));
    ClosureSampler sampler(a, pool, seed + static_cast<std::uint64_t>(n));
    int found = 0;
    for (int draw = 0; draw < 4000 && found < samples; ++draw) {
      FormId g = sampler.next(4);
      if (a.right_atomic(g) || c.solver().outcome(g, Convention::Misere) != OutcomeClass::R) continue;
      ++found;
      const std::string xg = "{" + adjoint_fan(c, g, false) + "|" + ostar_list(n + 1) + "}";
      c.partial_row(rows, c.text(g) + "+" + xg, Side::Right, PartialOutcome::R, provenance::kConstruction);
      c.partial_row(rows, target + "+" + xg, Side::Right, PartialOutcome::L, provenance::kConstruction);
    }
  }
  return rows;
}

inline std::vector<DetailRow> check_hook_two(CheckContext& c) {
  std::vector<DetailRow> rows;
  const int end_birthday = c.integer("b", 4);
  const int samples = c.integer("samples", 10);
  const int third_samples = c.integer("third_samples", 3);
  const int max_copies = c.integer("max_copies", 12);
  const int max_n = c.integer("max_n", 12);
  const std::uint64_t seed = c.seed();
  Arena& a = c.arena();
  Solver& s = c.solver();
  const std::string hook2 = "{|2}";

  // X = {-1|0} against every Left-end.
  const std::string x = "{-1|0}";
  c.partial_row(rows, hook2 + "+" + x, Side::Left, PartialOutcome::R, provenance::kClaim);
  const FormList ends = left_ends(a, end_birthday, std::size_t{1} << 22);
  for (FormId l : ends.forms) c.partial_row(rows, c.text(l) + "+" + x, Side::Left, PartialOutcome::L, provenance::kClaim);

  // Copies of the hook against dead-ending N-forms with a Left option.
  ClosureSampler dead(a, dead_ending_seed(c), seed);
  int found = 0;
  for (int draw = 0; draw < 4000 && found < samples; ++draw) {
    FormId g = dead.next(4);
    if (a.left_atomic(g) || s.outcome(g, Convention::Misere) != OutcomeClass::N) continue;
    ++found;
    int copies = 1;
    while (copies < max_copies &&
           s.partial(a.sum(g, parse(a, repeat_sum(hook2, copies))), Side::Left, Convention::Misere) != PartialOutcome::R)
      ++copies;
    c.partial_row(rows, c.text(g) + "+" + repeat_sum(hook2, copies), Side::Left, PartialOutcome::R,
                  provenance::kConstruction);
    c.partial_row(rows, repeat_sum(hook2, copies + 1), Side::Left, PartialOutcome::L, provenance::kConstruction);
  }

  // {|3} against N-forms of the extended universe.
  std::vector<FormId> pool = dead_ending_seed(c);
  add_followers(c, pool, parse(a, hook2));
  ClosureSampler extended(a, pool, seed + 1);
  found = 0;
  for (int draw = 0; draw < 4000 && found < third_samples; ++draw) {
    FormId g = extended.next(3);
    if (s.outcome(g, Convention::Misere) != OutcomeClass::N) continue;
    ++found;
    const std::string fan = adjoint_fan(c, g, true);
    auto probe = [&](int n) { return "{-2,{{-" + std::to_string(n) + "|}|}|" + fan + "}"; };
    int n = 2;
    while (n < max_n &&
           s.partial(a.sum(g, parse(a, probe(n))), Side::Left, Convention::Misere) != PartialOutcome::L)
      ++n;
    c.partial_row(rows, c.text(g) + "+" + probe(n), Side::Left, PartialOutcome::L, provenance::kConstruction);
    c.partial_row(rows, "{|3}+" + probe(n), Side::Left, PartialOutcome::R, provenance::kConstruction);
  }
  return rows;
}

inline std::vector<DetailRow> check_hook_premises(CheckContext& c) {
  std::vector<DetailRow> rows;
  const auto summand_counts = c.integers("k", "2,3");
  const auto orders = c.integers("orders", "2,3");
  const int max_n = c.integer("N", 5);
  int premises = 0;
  for (int k : summand_counts) {
    for (const auto& m : multisets(orders.size(), static_cast<std::size_t>(k))) {
      if (m.size() != static_cast<std::size_t>(k)) continue;
      std::vector<std::string> terms;
      for (std::size_t i : m) terms.push_back("zeta(" + std::to_string(orders[i]) + ")");
      const std::string g = join_sum(terms);
      for (int n = 1; n <= max_n; ++n) {
        const std::string premise = g + "+-" + std::to_string(n);
        if (c.solver().partial(c.form(premise), Side::Right, Convention::Misere) != PartialOutcome::R) continue;
        ++premises;
        const std::string next = std::to_string(n + 1);
        c.partial_row(rows, premise, Side::Right, PartialOutcome::R, provenance::kClaim);
        c.partial_row(rows, g + "+-" + next + "+*", Side::Right, PartialOutcome::R, provenance::kClaim);
        c.partial_row(rows, g + "+{-" + next + "+*|0}", Side::Right, PartialOutcome::R, provenance::kClaim);
      }
    }
  }
  c.used()["premise_instances"] = std::to_string(premises);
  return rows;
}

inline std::vector<DetailRow> check_hook_towers(CheckContext& c) {
  std::vector<DetailRow> rows;
  const auto ns = c.integers("n", "2,3");
  const int max_summands = c.integer("M", 2);
  const int samples = c.integer("samples", 5);
  const int max_copies = c.integer("max_copies", 12);
  const std::uint64_t seed = c.seed();
  Arena& a = c.arena();
  Solver& s = c.solver();

  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const std::string target = "zeta(" + std::to_string(n + 1) + ")";
    const std::string minus_n = "-" + std::to_string(n);
    const std::string lemma_probe = "{-" + std::to_string(n + 1) + "+*|0}";
    std::vector<std::string> hook_names;
    for (int m = 2; m <= n; ++m) hook_names.push_back("zeta(" + std::to_string(m) + ")");

    for (const auto& m : multisets(hook_names.size(), static_cast<std::size_t>(max_summands))) {
      if (m.empty()) continue;
      std::vector<std::string> terms;
      for (std::size_t i : m) terms.push_back(hook_names[i]);
      const std::string z = join_sum(terms);
      const bool first_probe_works =
          m.size() == 1 ||
          s.partial(c.form(z + "+" + minus_n), Side::Right, Convention::Misere) == PartialOutcome::L;
      if (first_probe_works) {
        c.partial_row(rows, z + "+" + minus_n, Side::Right, PartialOutcome::L, provenance::kClaim);
        c.partial_row(rows, target + "+" + minus_n, Side::Right, PartialOutcome::R, provenance::kClaim);
      } else {
        c.partial_row(rows, z + "+" + lemma_probe, Side::Right, PartialOutcome::R, provenance::kClaim);
        c.partial_row(rows, target + "+" + lemma_probe, Side::Right, PartialOutcome::L, provenance::kClaim);
      }
    }

    // With a non-zero Left-end the sum is a negative integer in normal play.
    for (FormId l : left_ends(a, 2, 64).forms) {
      if (l == Arena::zero()) continue;
      for (const auto& m : multisets(hook_names.size(), static_cast<std::size_t>(max_summands))) {
        std::vector<std::string> terms;
        for (std::size_t i : m) terms.push_back(hook_names[i]);
        terms.push_back(c.text(l));
        c.geq_np_row(rows, join_sum(terms), target, false, provenance::kClaim);
      }
    }

    // Members with a Left option and outcome N against copies of zeta(2).
    std::vector<FormId> pool = dead_ending_seed(c);
    for (int m = 2; m <= n; ++m) add_followers(c, pool, a.zeta(m));
    ClosureSampler sampler(a, pool, seed + static_cast<std::uint64_t>(n));
    int found = 0;
    for (int draw = 0; draw < 4000 && found < samples; ++draw) {
      FormId g = sampler.next(4);
      if (a.left_atomic(g) || s.outcome(g, Convention::Misere) != OutcomeClass::N) continue;
      ++found;
      int copies = 1;
      while (copies < max_copies && s.partial(a.sum(g, parse(a, repeat_sum("zeta(2)", copies))), Side::Left,
                                              Convention::Misere) != PartialOutcome::R)
        ++copies;
      c.partial_row(rows, c.text(g) + "+" + repeat_sum("zeta(2)", copies), Side::Left, PartialOutcome::R,
                    provenance::kConstruction);
      c.partial_row(rows, target + "+" + repeat_sum("zeta(2)", copies), Side::Left, PartialOutcome::L,
                    provenance::kConstruction);
    }
  }
  return rows;
}

inline std::vector<DetailRow> check_np_simplicity(CheckContext& c) {
  std::vector<DetailRow> rows;
  const int lo = c.integer("k_min", 2);
  const int hi = c.integer("k_max", 5);
  for (int k = lo; k <= hi; ++k) {
    const std::string g = "{0|" + std::to_string(k) + "}";
    c.geq_np_row(rows, g, "1", true, provenance::kClaim);
    c.geq_np_row(rows, "1", g, true, provenance::kClaim);
  }
  return rows;
}

inline std::vector<DetailRow> check_adjoint(CheckContext& c) {
  std::vector<DetailRow> rows;
  const int exhaustive = c.integer("exhaustive_birthday", 2);
  const int samples = c.integer("samples", 500);
  const int sample_birthday = c.integer("sample_birthday", 4);
  const std::uint64_t seed = c.seed();
  Arena& a = c.arena();

  std::vector<FormId> forms = all_forms(a, exhaustive, std::size_t{1} << 20).forms;
  RandomForms random(a, seed);
  for (int i = 0; i < samples; ++i) forms.push_back(random.form(sample_birthday));
  for (FormId g : forms) {
    const std::string t = c.text(g);
    c.outcome_row(rows, t + "+adj(" + t + ")", OutcomeClass::P, provenance::kClaim);
  }
  return rows;
}

inline std::vector<DetailRow> check_observation_e1(CheckContext& c) {
  std::vector<DetailRow> rows;
  const auto scales = c.integers("scales", "1,2,3,4");
  Arena& a = c.arena();
  Universe u(a, UniverseSpec::hooks({1}));
  c.used()["universe"] = u.spec().token();
  const FormId g = c.form("{|1}");
  for (int k : scales) {
    const Budget b = c.budget().scaled(k);
    Comparator cmp(u, c.solver(), b);
    const Verdict v = cmp.equal(g, Arena::zero());
    rows.push_back({"{|1} vs 0", std::string(name(Verdict::Kind::HoldsAtBound)), std::string(name(v.kind)),
                    std::string(provenance::kBound) + ":" + b.describe()});
  }
  return rows;
}

inline std::vector<DetailRow> check_dicot_kernel(CheckContext& c) {
  std::vector<DetailRow> rows;
  const int max_birthday = c.integer("b", 3);
  const int days = c.integer("days", 4);
  Arena& a = c.arena();

  // Independent enumeration: dicots by birthday layer.
  std::vector<std::vector<FormId>> layers{{Arena::zero()}};
  std::vector<FormId> dicots{Arena::zero()};
  for (int b = 1; b <= max_birthday; ++b) {
    std::vector<std::vector<FormId>> subsets;
    for_each_subset(dicots.size(), 0, [&](const std::vector<std::size_t>& idx) {
      std::vector<FormId> s;
      for (std::size_t i : idx) s.push_back(dicots[i]);
      subsets.push_back(std::move(s));
      return true;
    });
    std::vector<FormId> layer;
    for (const auto& l : subsets)
      for (const auto& r : subsets) {
        FormId g = a.intern(l, r);
        if (a.birthday(g) == b) layer.push_back(g);
      }
    dicots.insert(dicots.end(), layer.begin(), layer.end());
    layers.push_back(std::move(layer));
  }

  const Budget budget{max_birthday, 1, dicots.size() * 2 + 16};
  const FormId base[] = {Arena::zero()};
  const ClosureResult closure = closure_enumerate(a, base, days, budget, ClosureOptions{0});

  for (int b = 0; b <= max_birthday; ++b) {
    if (b <= 2) {
      for (FormId g : layers[static_cast<std::size_t>(b)])
        rows.push_back({c.text(g), "member", closure.contains(g) ? "member" : "absent",
                        std::string(provenance::kClaim)});
    } else {
      std::size_t missing = 0;
      for (FormId g : layers[static_cast<std::size_t>(b)]) missing += !closure.contains(g);
      rows.push_back({"0", "birthday " + std::to_string(b) + " dicots missing=0",
                      "birthday " + std::to_string(b) + " dicots missing=" + std::to_string(missing),
                      std::string(provenance::kClaim)});
    }
  }
  Classifier cls(a);
  std::size_t non_dicot = 0;
  for (FormId g : closure.members) non_dicot += !cls.flags(g).dicot;
  rows.push_back({"0", "non-dicot=0", "non-dicot=" + std::to_string(non_dicot), std::string(provenance::kClaim)});
  rows.push_back({"0", "truncated=false", closure.truncated ? "truncated=true" : "truncated=false",
                  std::string(provenance::kClaim)});
  c.used()["closure_size"] = std::to_string(closure.size());
  return rows;
}

struct CheckEntry {
  std::string_view id;
  std::vector<DetailRow> (*run)(CheckContext&);
  bool bound_limited;
};

inline const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries{
      {"thm8_outcomes", check_outcome_bullets, false},
      {"lemma15", check_moves_towers, false},
      {"thm16", check_star_row, false},
      {"thm18", check_hook_two, false},
      {"lemma20", check_hook_premises, false},
      {"thm23", check_hook_towers, false},
      {"np_simplicity", check_np_simplicity, false},
      {"adjoint_P", check_adjoint, false},
      {"observation_e1", check_observation_e1, true},
      {"dicot_kernel", check_dicot_kernel, false},
  };
  return entries;
}

}  // namespace detail

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry()) out.emplace_back(e.id);
  return out;
}

inline CheckReport verify(std::string_view check_id, const Params& params = {}, const Budget& budget = {}) {
  const detail::CheckEntry* entry = nullptr;
  for (const auto& e : detail::registry())
    if (e.id == check_id) entry = &e;
  if (!entry) throw UnknownCheck("unknown check '" + std::string(check_id) + "'");

  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.check_id = std::string(check_id);
  detail::CheckContext context(params, budget);
  try {
    report.details = entry->run(context);
    if (report.failures() > 0 || report.details.empty()) {
      report.status = CheckStatus::Fail;
    } else {
      report.status = entry->bound_limited ? CheckStatus::Unknown : CheckStatus::Pass;
    }
  } catch (const ResourceError& e) {
    report.status = CheckStatus::Unknown;
    report.error = std::string("resource exhausted: ") + e.what();
  }
  report.params = context.used();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace absgame
