#pragma once

// Exact perfect-play outcomes under the normal and misère conventions.

#include <cstdint>
#include <string_view>
#include <vector>

#include "absgame/arena.hpp"

namespace absgame {

enum class Convention : std::uint8_t { Normal, Misere };

// Result of a game with a fixed starting player. L > R.
enum class PartialOutcome : std::uint8_t { R = 0, L = 1 };

enum class OutcomeClass : std::uint8_t { L, R, N, P };

constexpr std::string_view name(PartialOutcome o) { return o == PartialOutcome::L ? "L" : "R"; }

constexpr std::string_view name(OutcomeClass o) {
  switch (o) {
    case OutcomeClass::L: return "L";
    case OutcomeClass::R: return "R";
    case OutcomeClass::N: return "N";
    case OutcomeClass::P: return "P";
  }
  return "?";
}

constexpr std::string_view name(Convention c) { return c == Convention::Normal ? "normal" : "misere"; }

// Outcome class from (Left-first result, Right-first result).
constexpr OutcomeClass outcome_class(PartialOutcome left_first, PartialOutcome right_first) {
  if (left_first == PartialOutcome::L) return right_first == PartialOutcome::L ? OutcomeClass::L : OutcomeClass::N;
  return right_first == PartialOutcome::L ? OutcomeClass::P : OutcomeClass::R;
}

// Outcome of the conjugate: L and R swap roles, N and P are fixed.
constexpr OutcomeClass mirror(OutcomeClass o) {
  switch (o) {
    case OutcomeClass::L: return OutcomeClass::R;
    case OutcomeClass::R: return OutcomeClass::L;
    default: return o;
  }
}

// Memoized minimax over the form DAG, keyed by (form, starting side, convention).
// Not thread-safe; give each worker its own solver.
class Solver {
 public:
  explicit Solver(Arena& arena) : arena_(arena) {}

  Arena& arena() { return arena_; }

  PartialOutcome partial(FormId g, Side first, Convention conv) {
    auto& memo = memo_[index(first, conv)];
    if (memo.size() <= g.value) memo.resize(arena_.size(), 0);
    if (std::uint8_t cached = memo[g.value]) return static_cast<PartialOutcome>(cached - 1);

    PartialOutcome result;
    auto opts = arena_.options(g, first);
    if (opts.empty()) {
      // The player who cannot move wins in misère and loses in normal play.
      const bool mover_wins = conv == Convention::Misere;
      const bool left_wins = (first == Side::Left) == mover_wins;
      result = left_wins ? PartialOutcome::L : PartialOutcome::R;
    } else {
      if (depth_ >= arena_.limits().max_depth) throw ResourceError("solver recursion depth limit exceeded");
      struct Depth {
        int& d;
        explicit Depth(int& x) : d(++x) {}
        ~Depth() { --d; }
      } depth(depth_);
      // Left maximizes, Right minimizes.
      const PartialOutcome good = first == Side::Left ? PartialOutcome::L : PartialOutcome::R;
      result = first == Side::Left ? PartialOutcome::R : PartialOutcome::L;
      for (FormId o : opts) {
        if (partial(o, opponent(first), conv) == good) {
          result = good;
          break;
        }
      }
    }
    memo_[index(first, conv)][g.value] = static_cast<std::uint8_t>(result) + 1;
    return result;
  }

  OutcomeClass outcome(FormId g, Convention conv) {
    return outcome_class(partial(g, Side::Left, conv), partial(g, Side::Right, conv));
  }

  // Normal-play order: Left wins g - h playing second.
  bool geq_np(FormId g, FormId h) {
    FormId diff = arena_.sum(g, arena_.conjugate(h));
    return partial(diff, Side::Right, Convention::Normal) == PartialOutcome::L;
  }

 private:
  static int index(Side s, Convention c) { return (s == Side::Left ? 0 : 1) + (c == Convention::Normal ? 0 : 2); }

  Arena& arena_;
  std::vector<std::uint8_t> memo_[4];
  int depth_ = 0;
};

}  // namespace absgame
