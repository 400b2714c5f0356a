// Command-line front end for the game-form engine.
//
// Exit codes: 0 success, 1 a check failed / a comparison was refuted / a form
// is not a member, 2 usage or input error, 3 resource limit reached.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "absgame/absgame.hpp"

namespace {

using absgame::Arena;
using absgame::FormId;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string convention = "misere";
  std::string universe = "D";
  int max_birthday = 3;
  int max_summands = 3;
  std::size_t max_forms = 2000;
  bool json = false;

  absgame::Budget budget() const {
    absgame::Budget b{max_birthday, max_summands, max_forms};
    b.validate();
    return b;
  }

  absgame::Convention conv() const {
    return convention == "normal" ? absgame::Convention::Normal : absgame::Convention::Misere;
  }
};

json witness_json(absgame::Printer& p, const absgame::RefutationWitness& w, int depth = 0) {
  json j;
  j["kind"] = absgame::name(w.kind);
  j["greater"] = p.render(w.greater);
  j["lesser"] = p.render(w.lesser);
  switch (w.kind) {
    case absgame::WitnessKind::Proviso:
      j["side"] = absgame::side_name(w.side);
      j["x"] = p.render(w.probe);
      j["greater_outcome"] = absgame::name(w.greater_outcome);
      j["lesser_outcome"] = absgame::name(w.lesser_outcome);
      break;
    case absgame::WitnessKind::Maintenance:
      j["side"] = absgame::side_name(w.side);
      j["option"] = p.render(w.probe);
      if (depth < 8) {
        j["reasons"] = json::array();
        for (const auto& r : w.reasons) j["reasons"].push_back(witness_json(p, *r, depth + 1));
      }
      break;
    case absgame::WitnessKind::NormalPlay: break;
  }
  return j;
}

std::string witness_text(absgame::Printer& p, const absgame::RefutationWitness& w) {
  switch (w.kind) {
    case absgame::WitnessKind::Proviso:
      return "Refuted(proviso, X=" + p.render(w.probe) + ", o" + (w.side == absgame::Side::Left ? "L" : "R") +
             "(G+X)=" + std::string(absgame::name(w.greater_outcome)) + " < o" +
             (w.side == absgame::Side::Left ? "L" : "R") + "(H+X)=" + std::string(absgame::name(w.lesser_outcome)) +
             ")";
    case absgame::WitnessKind::Maintenance:
      return "Refuted(maintenance, " + std::string(w.side == absgame::Side::Right ? "G^R=" : "H^L=") +
             p.render(w.probe) + ")";
    case absgame::WitnessKind::NormalPlay: return "Refuted(normal_play)";
  }
  return "Refuted";
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for short partizan game forms under normal and misere play"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--convention", o.convention, "normal or misere")
      ->check(CLI::IsMember({"normal", "misere"}))
      ->capture_default_str();
  app.add_option("--universe", o.universe, "D, E, Omega, Sbar:<n>, Zbar:<n> or Hooks:<k,...>")->capture_default_str();
  app.add_option("--max-birthday", o.max_birthday, "budget: birthday bound")->capture_default_str();
  app.add_option("--max-summands", o.max_summands, "budget: generator summand bound")->capture_default_str();
  app.add_option("--max-forms", o.max_forms, "budget: generated form cap")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> forms;
  auto* parse_cmd = app.add_subcommand("parse", "print the canonical text of a form");
  parse_cmd->add_option("form", forms)->required()->expected(1);
  auto* outcome_cmd = app.add_subcommand("outcome", "perfect-play outcome class");
  outcome_cmd->add_option("form", forms)->required()->expected(1);
  auto* sum_cmd = app.add_subcommand("sum", "disjunctive sum of forms");
  sum_cmd->add_option("forms", forms)->required()->expected(1, -1);
  auto* conj_cmd = app.add_subcommand("conjugate", "conjugate of a form");
  conj_cmd->add_option("form", forms)->required()->expected(1);
  auto* adj_cmd = app.add_subcommand("adjoint", "misere adjoint of a form");
  adj_cmd->add_option("form", forms)->required()->expected(1);
  auto* classify_cmd = app.add_subcommand("classify", "atomicity, end, dicot and dead-ending flags");
  classify_cmd->add_option("form", forms)->required()->expected(1);
  bool no_np_filter = false;
  auto* compare_cmd = app.add_subcommand("compare", "is G >= H modulo the universe");
  compare_cmd->add_option("forms", forms, "G H")->required()->expected(2);
  compare_cmd->add_flag("--no-np-filter", no_np_filter, "skip the normal-play filter");
  auto* equal_cmd = app.add_subcommand("equal", "is G = H modulo the universe");
  equal_cmd->add_option("forms", forms, "G H")->required()->expected(2);
  auto* distinguish_cmd = app.add_subcommand("distinguish", "search for X with o(G+X) != o(H+X)");
  distinguish_cmd->add_option("forms", forms, "G H")->required()->expected(2);
  std::string what = "atomic";
  std::string side = "left";
  int days = 2;
  std::size_t max_subset = 2;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list atomic members or a closure");
  enumerate_cmd->add_option("what", what, "atomic or closure")->check(CLI::IsMember({"atomic", "closure"}));
  enumerate_cmd->add_option("base", forms, "closure base forms (hereditary)");
  enumerate_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  enumerate_cmd->add_option("--days", days, "closure days")->capture_default_str();
  enumerate_cmd->add_option("--max-subset", max_subset, "parental option-set size, 0 = unbounded")
      ->capture_default_str();
  auto* member_cmd = app.add_subcommand("member", "bounded universe membership");
  member_cmd->add_option("form", forms)->required()->expected(1);
  std::string check_id;
  std::vector<std::string> raw_params;
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification check (or 'all')");
  verify_cmd->add_option("check", check_id)->required();
  verify_cmd->add_option("--param", raw_params, "key=value check parameter");
  verify_cmd->add_flag("--no-timing", no_timing, "report elapsed_ms as 0 for byte-stable output");
  app.add_subcommand("list-checks", "list verification check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Arena arena;
    absgame::Solver solver(arena);
    absgame::Printer printer(arena);
    auto form = [&](std::size_t i) { return absgame::parse(arena, forms.at(i)); };
    auto sub = [&](const char* n) { return app.got_subcommand(n); };

    if (sub("list-checks")) {
      for (const auto& id : absgame::check_ids()) std::cout << id << "\n";
      return 0;
    }
    if (sub("parse") || sub("conjugate") || sub("adjoint") || sub("sum")) {
      FormId g = form(0);
      if (sub("conjugate")) g = arena.conjugate(g);
      if (sub("adjoint")) g = arena.adjoint(g);
      if (sub("sum"))
        for (std::size_t i = 1; i < forms.size(); ++i) g = arena.sum(g, form(i));
      const std::string text = printer.render(g);
      emit(o, json{{"form", text}, {"birthday", arena.birthday(g)}}, text);
      return 0;
    }
    if (sub("outcome")) {
      const FormId g = form(0);
      const auto conv = o.conv();
      const auto l = solver.partial(g, absgame::Side::Left, conv);
      const auto r = solver.partial(g, absgame::Side::Right, conv);
      const std::string cls(absgame::name(absgame::outcome_class(l, r)));
      emit(o,
           json{{"form", printer.render(g)},
                {"convention", absgame::name(conv)},
                {"outcome", cls},
                {"left_first", absgame::name(l)},
                {"right_first", absgame::name(r)}},
           cls);
      return 0;
    }
    if (sub("classify")) {
      const FormId g = form(0);
      absgame::Classifier c(arena);
      const auto f = c.flags(g);
      json j{{"form", printer.render(g)},         {"left_atomic", f.left_atomic}, {"right_atomic", f.right_atomic},
             {"left_end", f.left_end},            {"right_end", f.right_end},     {"dicot", f.dicot},
             {"dead_ending", f.dead_ending}};
      std::string text;
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "form") text += (text.empty() ? "" : " ") + it.key() + "=" + (it.value().get<bool>() ? "1" : "0");
      emit(o, j, text);
      return 0;
    }

    const absgame::Budget budget = o.budget();
    absgame::Universe universe(arena, absgame::UniverseSpec::parse(o.universe));

    if (sub("compare") || sub("equal")) {
      const FormId g = form(0);
      const FormId h = form(1);
      for (FormId x : {g, h})
        if (universe.member(x, budget) == absgame::Membership::No)
          throw std::invalid_argument(printer.render(x) + " is not a member of " + universe.spec().token());
      absgame::Comparator cmp(universe, solver, budget, absgame::CompareOptions{!no_np_filter});
      const absgame::Verdict v = sub("compare") ? cmp.geq(g, h) : cmp.equal(g, h);
      json j{{"universe", universe.spec().token()},
             {"greater", printer.render(g)},
             {"lesser", printer.render(h)},
             {"verdict", absgame::name(v.kind)},
             {"budget", budget.describe()}};
      std::string text(absgame::name(v.kind));
      if (v.kind == absgame::Verdict::Kind::HoldsAtBound) text += "(" + budget.describe() + ")";
      if (v.refuted()) {
        j["witness"] = witness_json(printer, *v.witness);
        text = witness_text(printer, *v.witness);
      }
      emit(o, j, text);
      return v.refuted() ? kExitFail : 0;
    }
    if (sub("distinguish")) {
      const FormId g = form(0);
      const FormId h = form(1);
      const auto d = absgame::distinguish(universe, solver, g, h, budget);
      if (!d) {
        emit(o, json{{"universe", universe.spec().token()}, {"x", nullptr}}, "none");
        return 0;
      }
      const std::string x = printer.render(d->probe);
      emit(o,
           json{{"universe", universe.spec().token()},
                {"x", x},
                {"outcome_g", absgame::name(d->first_outcome)},
                {"outcome_h", absgame::name(d->second_outcome)}},
           "X=" + x + " o(G+X)=" + std::string(absgame::name(d->first_outcome)) +
               " o(H+X)=" + std::string(absgame::name(d->second_outcome)));
      return 0;
    }
    if (sub("member")) {
      const auto m = universe.member(form(0), budget);
      emit(o, json{{"universe", universe.spec().token()}, {"member", absgame::name(m)}},
           std::string(absgame::name(m)));
      return m == absgame::Membership::No ? kExitFail : 0;
    }
    if (sub("enumerate")) {
      std::vector<FormId> out;
      bool truncated = false;
      if (what == "atomic") {
        auto list = universe.atomic_members(side == "left" ? absgame::Side::Left : absgame::Side::Right, budget);
        out = std::move(list.forms);
        truncated = list.truncated;
      } else {
        std::vector<FormId> base;
        for (std::size_t i = 0; i < forms.size(); ++i) base.push_back(form(i));
        auto c = absgame::closure_enumerate(arena, base, days, budget, absgame::ClosureOptions{max_subset});
        out = c.forms();
        truncated = c.truncated;
      }
      json j{{"truncated", truncated}, {"forms", json::array()}};
      std::string text;
      for (FormId g : out) {
        j["forms"].push_back(printer.render(g));
        text += printer.render(g) + "\n";
      }
      if (truncated) text += "# truncated\n";
      if (!text.empty()) text.pop_back();
      emit(o, j, text);
      return 0;
    }
    if (sub("verify")) {
      absgame::Params params;
      for (const auto& kv : raw_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--param expects key=value, got " + kv);
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      std::vector<std::string> ids = check_id == "all" ? absgame::check_ids() : std::vector<std::string>{check_id};
      int code = 0;
      json all = json::array();
      for (const auto& id : ids) {
        const auto report = absgame::verify(id, params, budget);
        if (report.status == absgame::CheckStatus::Fail) code = std::max(code, kExitFail);
        if (!report.error.empty()) code = kExitResource;
        if (o.json) {
          all.push_back(absgame::to_json(report, !no_timing));
        } else {
          std::cout << id << ": " << absgame::name(report.status) << " (" << report.details.size() << " rows, "
                    << report.failures() << " mismatched";
          if (!no_timing) std::cout << ", " << report.elapsed_ms << " ms";
          std::cout << ")\n";
          for (const auto& d : report.details)
            if (!d.matches())
              std::cout << "  MISMATCH " << d.input << ": expected " << d.expected << ", computed " << d.computed
                        << "\n";
          if (!report.error.empty()) std::cout << "  " << report.error << "\n";
        }
      }
      if (o.json) std::cout << (ids.size() == 1 ? all[0] : all).dump(2) << "\n";
      return code;
    }
  } catch (const absgame::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const absgame::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
