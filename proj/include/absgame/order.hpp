#pragma once

// Absolute order modulo a universe: atomic-perturbation proviso, normal-play
// filter and recursive maintenance, with machine-checkable refutations.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "absgame/arena.hpp"
#include "absgame/notation.hpp"
#include "absgame/solvers.hpp"
#include "absgame/universes.hpp"

namespace absgame {

enum class WitnessKind { Proviso, Maintenance, NormalPlay };

constexpr std::string_view name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Proviso: return "proviso";
    case WitnessKind::Maintenance: return "maintenance";
    case WitnessKind::NormalPlay: return "normal_play";
  }
  return "?";
}

// Why "greater >= lesser" fails.
//
//  Proviso:     probe is an atomic X on `side` with o_side(greater+X) < o_side(lesser+X).
//  NormalPlay:  greater >= lesser fails in normal play.
//  Maintenance: side == Right means probe is a Right option of greater matched
//               by no Right option of lesser and with no Left option of its own
//               that dominates lesser; side == Left is the dual for a Left
//               option of lesser. `reasons` refutes every candidate in order.
struct RefutationWitness {
  WitnessKind kind = WitnessKind::Proviso;
  FormId greater;
  FormId lesser;
  Side side = Side::Left;
  FormId probe;
  PartialOutcome greater_outcome = PartialOutcome::R;
  PartialOutcome lesser_outcome = PartialOutcome::R;
  std::vector<std::shared_ptr<const RefutationWitness>> reasons;
};

struct Verdict {
  enum class Kind { Refuted, HoldsExact, HoldsAtBound };

  Kind kind = Kind::HoldsExact;
  std::shared_ptr<const RefutationWitness> witness;
  Budget budget;

  bool refuted() const { return kind == Kind::Refuted; }
  bool holds() const { return !refuted(); }
};

constexpr std::string_view name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Refuted: return "Refuted";
    case Verdict::Kind::HoldsExact: return "HoldsExact";
    case Verdict::Kind::HoldsAtBound: return "HoldsAtBound";
  }
  return "?";
}

struct CompareOptions {
  // Refute through normal play before the recursive maintenance check.
  bool normal_play_filter = true;
};

class Comparator {
 public:
  Comparator(Universe& universe, Solver& solver, Budget budget, CompareOptions options = {})
      : universe_(universe), solver_(solver), budget_(budget), options_(options) {
    budget_.validate();
    if (&universe.arena() != &solver.arena()) throw std::invalid_argument("universe and solver use different arenas");
    left_atomic_ = universe_.atomic_members(Side::Left, budget_).forms;
    right_atomic_ = universe_.atomic_members(Side::Right, budget_).forms;
  }

  const Budget& budget() const { return budget_; }

  Verdict geq(FormId g, FormId h) {
    const std::uint64_t key = (std::uint64_t{g.value} << 32) | h.value;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!in_progress_.insert(key).second)
      throw std::logic_error("maintenance recursion revisited a pair; birthday descent violated");
    Verdict v = compute(g, h);
    in_progress_.erase(key);
    memo_.emplace(key, v);
    return v;
  }

  Verdict equal(FormId g, FormId h) {
    Verdict a = geq(g, h);
    if (a.refuted()) return a;
    Verdict b = geq(h, g);
    if (b.refuted()) return b;
    return holds();
  }

 private:
  Verdict holds() const {
    return Verdict{universe_.atomic_set_finite() ? Verdict::Kind::HoldsExact : Verdict::Kind::HoldsAtBound, nullptr,
                   budget_};
  }

  Verdict refute(RefutationWitness w) const {
    return Verdict{Verdict::Kind::Refuted, std::make_shared<const RefutationWitness>(std::move(w)), budget_};
  }

  Verdict compute(FormId g, FormId h) {
    Arena& arena = universe_.arena();

    for (Side side : {Side::Left, Side::Right}) {
      for (FormId x : side == Side::Left ? left_atomic_ : right_atomic_) {
        const PartialOutcome og = solver_.partial(arena.sum(g, x), side, Convention::Misere);
        if (og == PartialOutcome::L) continue;
        const PartialOutcome oh = solver_.partial(arena.sum(h, x), side, Convention::Misere);
        if (oh == PartialOutcome::L) {
          RefutationWitness w{WitnessKind::Proviso, g, h, side, x, og, oh, {}};
          return refute(std::move(w));
        }
      }
    }

    if (options_.normal_play_filter && !solver_.geq_np(g, h)) {
      RefutationWitness w{WitnessKind::NormalPlay, g, h, Side::Left, Arena::zero(), {}, {}, {}};
      return refute(std::move(w));
    }

    const std::vector<FormId> gl(arena.left(g).begin(), arena.left(g).end());
    const std::vector<FormId> gr(arena.right(g).begin(), arena.right(g).end());
    const std::vector<FormId> hl(arena.left(h).begin(), arena.left(h).end());
    const std::vector<FormId> hr(arena.right(h).begin(), arena.right(h).end());

    for (FormId g_right : gr) {
      std::vector<std::shared_ptr<const RefutationWitness>> reasons;
      if (matched(reasons, [&](auto&& try_pair) {
            for (FormId h_right : hr)
              if (try_pair(g_right, h_right)) return true;
            const std::vector<FormId> grl(arena.left(g_right).begin(), arena.left(g_right).end());
            for (FormId g_rl : grl)
              if (try_pair(g_rl, h)) return true;
            return false;
          }))
        continue;
      RefutationWitness w{WitnessKind::Maintenance, g, h, Side::Right, g_right, {}, {}, std::move(reasons)};
      return refute(std::move(w));
    }

    for (FormId h_left : hl) {
      std::vector<std::shared_ptr<const RefutationWitness>> reasons;
      if (matched(reasons, [&](auto&& try_pair) {
            for (FormId g_left : gl)
              if (try_pair(g_left, h_left)) return true;
            const std::vector<FormId> hlr(arena.right(h_left).begin(), arena.right(h_left).end());
            for (FormId h_lr : hlr)
              if (try_pair(g, h_lr)) return true;
            return false;
          }))
        continue;
      RefutationWitness w{WitnessKind::Maintenance, g, h, Side::Left, h_left, {}, {}, std::move(reasons)};
      return refute(std::move(w));
    }

    return holds();
  }

  template <typename Body>
  bool matched(std::vector<std::shared_ptr<const RefutationWitness>>& reasons, Body&& body) {
    return body([&](FormId a, FormId b) {
      Verdict v = geq(a, b);
      if (v.holds()) return true;
      reasons.push_back(v.witness);
      return false;
    });
  }

  Universe& universe_;
  Solver& solver_;
  Budget budget_;
  CompareOptions options_;
  std::vector<FormId> left_atomic_;
  std::vector<FormId> right_atomic_;
  std::unordered_map<std::uint64_t, Verdict> memo_;
  std::unordered_set<std::uint64_t> in_progress_;
};

// Re-derives a refutation using only the solver and the arena structure.
inline bool replay(Solver& solver, const RefutationWitness& w) {
  Arena& arena = solver.arena();
  std::set<const RefutationWitness*> checked;

  auto check = [&](auto&& self, const RefutationWitness& x) -> bool {
    if (checked.count(&x)) return true;
    bool ok = false;
    switch (x.kind) {
      case WitnessKind::NormalPlay: ok = !solver.geq_np(x.greater, x.lesser); break;
      case WitnessKind::Proviso: {
        if (!arena.atomic(x.probe, x.side)) return false;
        const auto og = solver.partial(arena.sum(x.greater, x.probe), x.side, Convention::Misere);
        const auto oh = solver.partial(arena.sum(x.lesser, x.probe), x.side, Convention::Misere);
        ok = og == x.greater_outcome && oh == x.lesser_outcome && og < oh;
        break;
      }
      case WitnessKind::Maintenance: {
        std::vector<std::pair<FormId, FormId>> expected;
        if (x.side == Side::Right) {
          auto gr = arena.right(x.greater);
          if (std::find(gr.begin(), gr.end(), x.probe) == gr.end()) return false;
          for (FormId h_right : arena.right(x.lesser)) expected.emplace_back(x.probe, h_right);
          for (FormId g_rl : arena.left(x.probe)) expected.emplace_back(g_rl, x.lesser);
        } else {
          auto hl = arena.left(x.lesser);
          if (std::find(hl.begin(), hl.end(), x.probe) == hl.end()) return false;
          for (FormId g_left : arena.left(x.greater)) expected.emplace_back(g_left, x.probe);
          for (FormId h_lr : arena.right(x.probe)) expected.emplace_back(x.greater, h_lr);
        }
        if (expected.size() != x.reasons.size()) return false;
        ok = true;
        for (std::size_t i = 0; i < expected.size() && ok; ++i) {
          const auto& r = x.reasons[i];
          ok = r && r->greater == expected[i].first && r->lesser == expected[i].second && self(self, *r);
        }
        break;
      }
    }
    if (ok) checked.insert(&x);
    return ok;
  };
  return check(check, w);
}

struct Distinction {
  FormId probe;
  OutcomeClass first_outcome;   // o(g + probe)
  OutcomeClass second_outcome;  // o(h + probe)
};

// Witness templates from the explicit constructions, for the pair (g, h).
inline std::vector<FormId> witness_templates(Universe& universe, FormId g, FormId h, const Budget& budget) {
  Arena& a = universe.arena();
  const FormId zero = Arena::zero();
  const FormId star = a.star();
  std::vector<FormId> out;

  out.push_back(a.intern({zero}, {star}));             // {0|*}
  out.push_back(a.intern({a.moves(-1)}, {zero}));      // {-1|0}

  std::set<int> star_orders{0, 1, 2};
  if (universe.spec().kind == UniverseKind::ControlledMoves) star_orders.insert(universe.spec().n);
  auto ostar_row = [&](int m) {
    std::vector<FormId> r;
    for (int k = 0; k <= m + 1; ++k) r.push_back(a.ostar(k));
    return r;
  };
  for (int m : star_orders) out.push_back(a.intern(std::vector<FormId>{star}, ostar_row(m)));

  const FormId hook2 = a.intern({}, {a.moves(2)});
  FormId copies = zero;
  for (int j = 1; j <= budget.max_summands; ++j) {
    copies = a.sum(copies, hook2);
    out.push_back(copies);
  }
  for (int k = 1; k <= 4; ++k) {
    out.push_back(a.moves(-k));
    out.push_back(a.intern({a.sum(a.moves(-(k + 1)), star)}, {zero}));
  }

  for (FormId base : {g, h}) {
    std::vector<FormId> adjoints;
    for (FormId f : a.followers(base)) adjoints.push_back(a.adjoint(f));
    const FormId inner = a.intern(std::vector<FormId>{zero}, adjoints);
    out.push_back(a.intern({inner}, {star, a.intern({zero}, {star})}));
    for (int m : star_orders) out.push_back(a.intern(std::vector<FormId>{inner}, ostar_row(m)));
    const FormId adj_left = a.intern(adjoints, std::vector<FormId>{zero});
    for (int k = 2; k <= 4; ++k) {
      const FormId hooked = a.intern({a.intern({a.moves(-k)}, {})}, {});
      out.push_back(a.intern({a.moves(-2), hooked}, {adj_left}));
    }
  }
  return out;
}

// First X in the universe with o(g+X) != o(h+X) under misère play: the
// templates in listed order, then generated members by (birthday, text).
inline std::optional<Distinction> distinguish(Universe& universe, Solver& solver, FormId g, FormId h,
                                              const Budget& budget) {
  Arena& a = universe.arena();
  if (g == h) return std::nullopt;

  std::vector<FormId> pool = witness_templates(universe, g, h, budget);

  std::vector<FormId> generated;
  for (Side s : {Side::Left, Side::Right})
    for (FormId x : universe.atomic_members(s, budget).forms) generated.push_back(x);
  for (FormId x : all_forms(a, std::min(budget.max_birthday, 2), budget.max_forms).forms) generated.push_back(x);
  Printer printer(a);
  std::vector<std::tuple<int, std::string, FormId>> keyed;
  for (FormId x : generated) keyed.emplace_back(a.birthday(x), printer.render(x), x);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& k : keyed) pool.push_back(std::get<2>(k));

  std::unordered_set<FormId, FormIdHash> tried;
  for (FormId x : pool) {
    if (!tried.insert(x).second) continue;
    if (universe.member(x, budget) != Membership::Yes) continue;
    const OutcomeClass og = solver.outcome(a.sum(g, x), Convention::Misere);
    const OutcomeClass oh = solver.outcome(a.sum(h, x), Convention::Misere);
    if (og != oh) return Distinction{x, og, oh};
  }
  return std::nullopt;
}

}  // namespace absgame
