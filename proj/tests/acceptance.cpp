// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "absgame/absgame.hpp"

using namespace absgame;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 for no time limit
  std::function<Outcome()> run;
};

Outcome from_report(const CheckReport& r, CheckStatus wanted = CheckStatus::Pass) {
  Outcome o;
  o.ok = r.status == wanted && r.failures() == 0 && r.error.empty() && !r.details.empty();
  o.note = std::to_string(r.details.size()) + " rows, " + std::to_string(r.failures()) + " mismatched";
  if (!r.error.empty()) o.note += ", " + r.error;
  return o;
}

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.note += (o.note.empty() ? "" : "; ") + what;
  }
}

Outcome outcome_bullets() {
  Arena a;
  Solver s(a);
  const std::vector<std::pair<const char*, OutcomeClass>> table{
      {"0", OutcomeClass::N},          {"{0,1|}", OutcomeClass::R},    {"{0,1|}+{0|*}", OutcomeClass::L},
      {"1+{0|*}", OutcomeClass::P},    {"1+1+{0|*}", OutcomeClass::N}, {"1+1+1+{0|*}", OutcomeClass::R}};
  Outcome o;
  for (const auto& [text, want] : table) {
    const OutcomeClass got = s.outcome(parse(a, text), Convention::Misere);
    expect(o, got == want, std::string(text) + " gave " + std::string(name(got)));
  }
  const auto r = verify("thm8_outcomes");
  expect(o, r.status == CheckStatus::Pass, "report not pass");
  if (o.ok) o.note = std::to_string(table.size()) + " outcomes";
  return o;
}

Outcome moves_grid() {
  Outcome o = from_report(verify("lemma15", {{"N", "6"}, {"K", "6"}}));
  expect(o, o.note.starts_with("42 rows"), "expected 42 rows");
  return o;
}

Outcome hook_premises() {
  const auto r = verify("lemma20", {{"k", "2,3"}, {"orders", "2,3"}, {"N", "5"}});
  Outcome o = from_report(r);
  const auto it = r.params.find("premise_instances");
  expect(o, it != r.params.end() && std::stoi(it->second) > 0, "no premise instances");
  if (it != r.params.end()) o.note += ", " + it->second + " premise instances";
  return o;
}

Outcome star_row_witness() { return from_report(verify("thm16", {{"n", "0,1,2"}, {"M", "3"}})); }

Outcome hook_separation() { return from_report(verify("thm18", {{"b", "4"}, {"samples", "10"}})); }

Outcome zeta_witnesses() { return from_report(verify("thm23", {{"n", "2,3"}, {"M", "2"}})); }

Outcome adjoint_law() {
  return from_report(
      verify("adjoint_P", {{"exhaustive_birthday", "2"}, {"samples", "500"}, {"sample_birthday", "4"}}));
}

Outcome normal_play_consistency() {
  Outcome o;
  std::size_t pairs = 0, exact = 0;
  for (bool filter : {true, false}) {
    Arena a;
    Solver s(a);
    Universe d(a, UniverseSpec::dicot());
    Comparator cmp(d, s, Budget{}, CompareOptions{filter});
    Classifier cls(a);
    std::vector<FormId> dicots;
    for (FormId g : all_forms(a, 2, 1u << 20).forms)
      if (cls.flags(g).dicot) dicots.push_back(g);
    std::size_t violations = 0;
    for (FormId g : dicots)
      for (FormId h : dicots) {
        const Verdict v = cmp.geq(g, h);
        ++pairs;
        if (v.kind != Verdict::Kind::HoldsExact) continue;
        ++exact;
        violations += !s.geq_np(g, h);
      }
    expect(o, violations == 0, std::to_string(violations) + " violations (filter " + (filter ? "on" : "off") + ")");
  }
  if (o.ok) o.note = std::to_string(pairs) + " pairs, " + std::to_string(exact) + " exact holds, 0 violations";
  return o;
}

Outcome algebra() {
  Arena a;
  const auto forms = all_forms(a, 2, 1u << 20).forms;
  std::size_t failures = 0, checks = 0;
  auto check = [&](bool c) {
    ++checks;
    failures += !c;
  };
  for (FormId g : forms) {
    check(a.sum(Arena::zero(), g) == g);
    check(a.sum(g, Arena::zero()) == g);
    check(a.conjugate(a.conjugate(g)) == g);
    for (FormId h : forms) {
      const FormId gh = a.sum(g, h);
      check(gh == a.sum(h, g));
      check(a.conjugate(gh) == a.sum(a.conjugate(g), a.conjugate(h)));
    }
  }
  for (FormId g : forms)
    for (FormId h : forms)
      for (FormId k : forms) check(a.sum(a.sum(g, h), k) == a.sum(g, a.sum(h, k)));
  RandomForms gen(a, 20240613);
  for (int i = 0; i < 1000; ++i) {
    const FormId g = gen.form(3), h = gen.form(3), k = gen.form(3);
    check(a.sum(a.sum(g, h), k) == a.sum(g, a.sum(h, k)));
    check(a.sum(g, h) == a.sum(h, g));
    check(a.conjugate(a.conjugate(g)) == g);
    check(a.conjugate(a.sum(g, h)) == a.sum(a.conjugate(g), a.conjugate(h)));
  }
  Outcome o;
  o.ok = failures == 0;
  o.note = std::to_string(checks) + " identities, " + std::to_string(failures) + " failed";
  return o;
}

Outcome dicot_kernel() { return from_report(verify("dicot_kernel", {{"b", "3"}, {"days", "4"}})); }

Outcome simplicity() { return from_report(verify("np_simplicity", {{"k_min", "2"}, {"k_max", "5"}})); }

Outcome round_trip() {
  Arena a;
  std::size_t n = 0, failures = 0;
  for (FormId g : all_forms(a, 2, 1u << 20).forms) {
    ++n;
    failures += parse(a, render(a, g)) != g;
  }
  RandomForms gen(a, 7);
  for (int i = 0; i < 1000; ++i) {
    const FormId g = gen.form(4);
    ++n;
    failures += parse(a, render(a, g)) != g;
  }
  Outcome o;
  o.ok = failures == 0;
  o.note = std::to_string(n) + " forms, " + std::to_string(failures) + " failed";
  return o;
}

Outcome hook_of_one() {
  Arena a;
  Solver s(a);
  Universe u(a, UniverseSpec::hooks({1}));
  const FormId g = parse(a, "{|1}");
  Outcome o;
  const Budget base;
  {
    Comparator cmp(u, s, base);
    const Verdict v = cmp.equal(g, Arena::zero());
    expect(o, v.kind == Verdict::Kind::HoldsAtBound, "default budget gave " + std::string(name(v.kind)));
  }
  for (int k = 1; k <= 4; ++k) {
    Comparator cmp(u, s, base.scaled(k));
    const Verdict v = cmp.equal(g, Arena::zero());
    expect(o, !v.refuted(), "refuted at x" + std::to_string(k));
  }
  const auto r = verify("observation_e1");
  expect(o, r.status == CheckStatus::Unknown && r.failures() == 0, "report not bound-limited");
  if (o.ok) o.note = "HoldsAtBound at x1..x4";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "misere outcome bullets", 1, outcome_bullets},
      {2, "moves against star towers, 6x7 grid", 5, moves_grid},
      {3, "hook sums: premise implies both conclusions", 30, hook_premises},
      {4, "controlled moves: star-row witness", 60, star_row_witness},
      {5, "hook {|2} separated from Left-ends and N-forms", 60, hook_separation},
      {6, "hook towers: one of two witnesses separates", 120, zeta_witnesses},
      {7, "adjoint law G+G' in P", 0, adjoint_law},
      {8, "dicot order implies normal-play order", 0, normal_play_consistency},
      {9, "sum and conjugate algebra", 0, algebra},
      {10, "dicot kernel of the closure of {0}", 0, dicot_kernel},
      {11, "normal-play simplicity {0|k} = 1", 0, simplicity},
      {12, "parse/render round trip", 0, round_trip},
      {13, "{|1} equals 0 at every tested bound", 0, hook_of_one},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.note += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += !o.ok;
    std::printf("%s %2d  %-48s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
