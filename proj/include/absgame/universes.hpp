#pragma once

// Universe catalog: classification of forms, closure-by-days enumeration,
// atomic-member generators and bounded membership.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "absgame/arena.hpp"

namespace absgame {

struct FormFlags {
  bool left_atomic = false;
  bool right_atomic = false;
  bool left_end = false;
  bool right_end = false;
  bool dicot = false;
  bool dead_ending = false;

  friend bool operator==(const FormFlags&, const FormFlags&) = default;
};

// Memoized recursive evaluation of FormFlags.
class Classifier {
 public:
  explicit Classifier(const Arena& arena) : arena_(arena) {}

  FormFlags flags(FormId g) {
    if (memo_.size() <= g.value) memo_.resize(arena_.size(), 0);
    if (std::uint8_t bits = memo_[g.value]) return unpack(bits);

    auto l = arena_.left(g);
    auto r = arena_.right(g);
    FormFlags f;
    f.left_atomic = l.empty();
    f.right_atomic = r.empty();
    f.left_end = f.left_atomic;
    f.right_end = f.right_atomic;
    f.dicot = f.left_atomic == f.right_atomic;
    bool options_dead_ending = true;
    for (FormId o : l) {
      FormFlags of = flags(o);
      f.right_end = f.right_end && of.right_end;
      f.dicot = f.dicot && of.dicot;
      options_dead_ending = options_dead_ending && of.dead_ending;
    }
    for (FormId o : r) {
      FormFlags of = flags(o);
      f.left_end = f.left_end && of.left_end;
      f.dicot = f.dicot && of.dicot;
      options_dead_ending = options_dead_ending && of.dead_ending;
    }
    f.dead_ending = options_dead_ending && (!f.left_atomic || f.left_end) && (!f.right_atomic || f.right_end);
    memo_[g.value] = pack(f);
    return f;
  }

 private:
  static std::uint8_t pack(const FormFlags& f) {
    return static_cast<std::uint8_t>(0x80 | f.left_atomic | f.right_atomic << 1 | f.left_end << 2 |
                                     f.right_end << 3 | f.dicot << 4 | f.dead_ending << 5);
  }

  static FormFlags unpack(std::uint8_t b) {
    return FormFlags{(b & 1) != 0, (b & 2) != 0, (b & 4) != 0, (b & 8) != 0, (b & 16) != 0, (b & 32) != 0};
  }

  const Arena& arena_;
  std::vector<std::uint8_t> memo_;
};

// Enumeration limits. Generators bound the birthday of the freely enumerated
// component (a Left-end, an arbitrary form) by max_birthday and the number of
// generator summands (hats, hooks) by max_summands; max_forms caps the output.
struct Budget {
  int max_birthday = 3;
  int max_summands = 3;
  std::size_t max_forms = 2000;

  void validate() const {
    if (max_birthday <= 0 || max_summands <= 0 || max_forms == 0)
      throw std::invalid_argument("budget fields must be strictly positive");
  }

  Budget scaled(int factor) const {
    return Budget{max_birthday * factor, max_summands * factor, max_forms * static_cast<std::size_t>(factor)};
  }

  std::string describe() const {
    return "birthday<=" + std::to_string(max_birthday) + ",summands<=" + std::to_string(max_summands) +
           ",forms<=" + std::to_string(max_forms);
  }

  friend bool operator==(const Budget&, const Budget&) = default;
};

class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Calls f(indices) for every non-empty subset of {0..n-1} with at most
// max_size elements (0 means unbounded), by size then lexicographically.
// Stops early and returns false when f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t max_size, F&& f) {
  const std::size_t top = max_size == 0 ? n : std::min(n, max_size);
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= top; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!f(std::as_const(idx))) return false;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

// Multisets of size 0..max_size over {0..n-1}, by size then lexicographically.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out{{}};
  if (n == 0) return out;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> m(k, 0);
    while (true) {
      out.push_back(m);
      std::size_t i = k;
      while (i > 0 && m[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++m[i - 1];
      for (std::size_t j = i; j < k; ++j) m[j] = m[i - 1];
    }
  }
  return out;
}

struct FormList {
  std::vector<FormId> forms;
  bool truncated = false;
};

// Left-ends of birthday <= max_birthday, ordered by birthday.
inline FormList left_ends(Arena& arena, int max_birthday, std::size_t cap) {
  FormList out;
  out.forms.push_back(Arena::zero());
  std::unordered_set<FormId, FormIdHash> seen{Arena::zero()};
  for (int b = 1; b <= max_birthday && !out.truncated; ++b) {
    const std::vector<FormId> prev = out.forms;
    for_each_subset(prev.size(), 0, [&](const std::vector<std::size_t>& idx) {
      std::vector<FormId> r;
      r.reserve(idx.size());
      for (std::size_t i : idx) r.push_back(prev[i]);
      FormId g = arena.intern({}, r);
      if (seen.insert(g).second) {
        if (out.forms.size() >= cap) {
          out.truncated = true;
          return false;
        }
        out.forms.push_back(g);
      }
      return true;
    });
  }
  std::stable_sort(out.forms.begin(), out.forms.end(),
                   [&](FormId a, FormId b) { return arena.birthday(a) < arena.birthday(b); });
  return out;
}

// All forms of birthday <= max_birthday, ordered by birthday.
inline FormList all_forms(Arena& arena, int max_birthday, std::size_t cap) {
  FormList out;
  out.forms.push_back(Arena::zero());
  std::unordered_set<FormId, FormIdHash> seen{Arena::zero()};
  for (int b = 1; b <= max_birthday && !out.truncated; ++b) {
    const std::vector<FormId> prev = out.forms;
    std::vector<std::vector<FormId>> subsets{{}};
    for_each_subset(prev.size(), 0, [&](const std::vector<std::size_t>& idx) {
      std::vector<FormId> s;
      for (std::size_t i : idx) s.push_back(prev[i]);
      subsets.push_back(std::move(s));
      return subsets.size() <= cap;
    });
    for (const auto& l : subsets) {
      for (const auto& r : subsets) {
        FormId g = arena.intern(l, r);
        if (!seen.insert(g).second) continue;
        if (out.forms.size() >= cap) {
          out.truncated = true;
          break;
        }
        out.forms.push_back(g);
      }
      if (out.truncated) break;
    }
  }
  std::stable_sort(out.forms.begin(), out.forms.end(),
                   [&](FormId a, FormId b) { return arena.birthday(a) < arena.birthday(b); });
  return out;
}

struct ClosureOptions {
  // Largest option set built by the parental operator; 0 means unbounded.
  std::size_t max_parent_subset = 2;
};

struct ClosureResult {
  std::vector<std::vector<FormId>> by_day;  // forms first produced on each day
  std::unordered_set<FormId, FormIdHash> members;
  bool truncated = false;  // max_forms reached before the budgeted closure was complete

  bool contains(FormId g) const { return members.count(g) != 0; }
  std::size_t size() const { return members.size(); }

  std::vector<FormId> forms() const {
    std::vector<FormId> out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Day-by-day closure of a hereditary set under sum, conjugation and the
// parental operator, discarding forms whose birthday exceeds the budget.
inline ClosureResult closure_enumerate(Arena& arena, std::span<const FormId> base, int days, const Budget& budget,
                                       ClosureOptions options = {}) {
  budget.validate();
  ClosureResult out;
  std::vector<FormId> all;

  std::unordered_set<FormId, FormIdHash> base_set(base.begin(), base.end());
  base_set.insert(Arena::zero());
  for (FormId g : base) {
    for (Side s : {Side::Left, Side::Right})
      for (FormId o : arena.options(g, s))
        if (!base_set.count(o)) throw ContractError("closure base is not hereditary closed");
  }

  auto add = [&](FormId g, std::vector<FormId>& day) {
    if (out.members.count(g)) return true;
    if (out.members.size() >= budget.max_forms) {
      out.truncated = true;
      return false;
    }
    out.members.insert(g);
    all.push_back(g);
    day.push_back(g);
    return true;
  };

  std::vector<FormId> day0;
  add(Arena::zero(), day0);
  for (FormId g : base) add(g, day0);
  out.by_day.push_back(std::move(day0));

  std::size_t parental_inputs = 0;
  for (int d = 1; d <= days && !out.truncated; ++d) {
    std::vector<FormId> today;
    const std::vector<FormId>& fresh = out.by_day.back();
    const std::size_t known = all.size();

    // Known forms bucketed by birthday, so each fresh form only meets partners
    // that keep the sum under the birthday bound.
    std::vector<std::vector<FormId>> by_birthday(static_cast<std::size_t>(budget.max_birthday) + 1);
    for (std::size_t j = 0; j < known; ++j) {
      const int b = arena.birthday(all[j]);
      if (b <= budget.max_birthday) by_birthday[static_cast<std::size_t>(b)].push_back(all[j]);
    }

    // Only pairs touching yesterday's new forms can produce something new.
    for (std::size_t i = 0; i < fresh.size() && !out.truncated; ++i) {
      const FormId g = fresh[i];
      const int room = budget.max_birthday - arena.birthday(g);
      for (int b = 0; b <= room && !out.truncated; ++b)
        for (FormId h : by_birthday[static_cast<std::size_t>(b)])
          if (!add(arena.sum(g, h), today)) break;
    }
    for (std::size_t i = 0; i < fresh.size() && !out.truncated; ++i) add(arena.conjugate(fresh[i]), today);

    std::vector<FormId> eligible;
    for (std::size_t j = 0; j < known; ++j)
      if (arena.birthday(all[j]) < budget.max_birthday) eligible.push_back(all[j]);
    if (!out.truncated && eligible.size() != parental_inputs) {
      parental_inputs = eligible.size();
      std::vector<std::vector<FormId>> subsets;
      for_each_subset(eligible.size(), options.max_parent_subset, [&](const std::vector<std::size_t>& idx) {
        std::vector<FormId> s;
        for (std::size_t i : idx) s.push_back(eligible[i]);
        subsets.push_back(std::move(s));
        return subsets.size() < budget.max_forms;
      });
      for (const auto& l : subsets) {
        for (const auto& r : subsets)
          if (!add(arena.intern(l, r), today)) break;
        if (out.truncated) break;
      }
    }
    out.by_day.push_back(std::move(today));
  }
  return out;
}

enum class UniverseKind { Dicot, DeadEnding, Omega, ControlledMoves, Hooks };

enum class MembershipMode { Exact, Bounded };

enum class Membership { Yes, No, Unknown };

constexpr std::string_view name(Membership m) {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

// A named universe. ControlledMoves(n) is the closure of the dicots with
// hat(1)..hat(n+1); Hooks(orders) is the closure of the dead-ending forms with
// the Left-hooks {  | k } for k in orders (Zbar(n) uses orders 2..n).
struct UniverseSpec {
  UniverseKind kind = UniverseKind::Dicot;
  int n = 0;
  std::vector<int> hook_orders;

  static UniverseSpec dicot() { return {UniverseKind::Dicot, 0, {}}; }
  static UniverseSpec dead_ending() { return {UniverseKind::DeadEnding, 0, {}}; }
  static UniverseSpec omega() { return {UniverseKind::Omega, 0, {}}; }

  static UniverseSpec sbar(int n) {
    if (n < 0) throw std::invalid_argument("Sbar requires n >= 0");
    return {UniverseKind::ControlledMoves, n, {}};
  }

  static UniverseSpec zbar(int n) {
    if (n < 2) throw std::invalid_argument("Zbar requires n >= 2");
    std::vector<int> orders;
    for (int k = 2; k <= n; ++k) orders.push_back(k);
    return {UniverseKind::Hooks, n, orders};
  }

  static UniverseSpec hooks(std::vector<int> orders) {
    if (orders.empty()) throw std::invalid_argument("Hooks requires at least one order");
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    if (orders.front() < 1) throw std::invalid_argument("hook orders must be >= 1");
    return {UniverseKind::Hooks, orders.back(), orders};
  }

  MembershipMode mode() const {
    return kind == UniverseKind::ControlledMoves || kind == UniverseKind::Hooks ? MembershipMode::Bounded
                                                                                : MembershipMode::Exact;
  }

  bool is_zbar() const {
    if (kind != UniverseKind::Hooks || n < 2 || hook_orders.size() != static_cast<std::size_t>(n - 1)) return false;
    for (std::size_t i = 0; i < hook_orders.size(); ++i)
      if (hook_orders[i] != static_cast<int>(i) + 2) return false;
    return true;
  }

  std::string token() const {
    switch (kind) {
      case UniverseKind::Dicot: return "D";
      case UniverseKind::DeadEnding: return "E";
      case UniverseKind::Omega: return "Omega";
      case UniverseKind::ControlledMoves: return "Sbar:" + std::to_string(n);
      case UniverseKind::Hooks: {
        if (is_zbar()) return "Zbar:" + std::to_string(n);
        std::string s = "Hooks:";
        for (std::size_t i = 0; i < hook_orders.size(); ++i) s += (i ? "," : "") + std::to_string(hook_orders[i]);
        return s;
      }
    }
    return "?";
  }

  // Tokens: D, E, Omega, Sbar:<n>, Zbar:<n>, Hooks:<k1>,<k2>,...
  static UniverseSpec parse(std::string_view token) {
    auto number = [&](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("bad universe token '" + std::string(token) + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(std::string(s), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size()) throw std::invalid_argument("bad universe token '" + std::string(token) + "'");
      return v;
    };
    if (token == "D") return dicot();
    if (token == "E") return dead_ending();
    if (token == "Omega") return omega();
    if (token.starts_with("Sbar:")) return sbar(number(token.substr(5)));
    if (token.starts_with("Zbar:")) return zbar(number(token.substr(5)));
    if (token.starts_with("Hooks:")) {
      std::vector<int> orders;
      std::string_view rest = token.substr(6);
      while (true) {
        auto comma = rest.find(',');
        orders.push_back(number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      return hooks(std::move(orders));
    }
    throw std::invalid_argument("unknown universe '" + std::string(token) + "'");
  }

  friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;
};

// A universe bound to an arena, with the caches its queries need.
class Universe {
 public:
  Universe(Arena& arena, UniverseSpec spec) : arena_(arena), spec_(std::move(spec)), classifier_(arena) {}

  Arena& arena() { return arena_; }
  const UniverseSpec& spec() const { return spec_; }
  Classifier& classifier() { return classifier_; }

  // True when the atomic members listed by atomic_members are all of them,
  // whatever the budget.
  bool atomic_set_finite() const { return spec_.kind == UniverseKind::Dicot; }

  // Atomic members for the given side within the budget, in a deterministic
  // order. Right-atomic members are the conjugates of Left-atomic ones,
  // except for ControlledMoves where the hat sums are Right-atomic.
  FormList atomic_members(Side side, const Budget& budget) {
    budget.validate();
    const Side primary = spec_.kind == UniverseKind::ControlledMoves ? Side::Right : Side::Left;
    FormList base = primary_atomic(budget);
    if (side == primary) return base;
    for (FormId& g : base.forms) g = arena_.conjugate(g);
    return base;
  }

  Membership member(FormId g, const Budget& budget) {
    const FormFlags f = classifier_.flags(g);
    switch (spec_.kind) {
      case UniverseKind::Dicot: return f.dicot ? Membership::Yes : Membership::No;
      case UniverseKind::DeadEnding: return f.dead_ending ? Membership::Yes : Membership::No;
      case UniverseKind::Omega: return Membership::Yes;
      case UniverseKind::ControlledMoves:
      case UniverseKind::Hooks: break;
    }
    const bool hats = spec_.kind == UniverseKind::ControlledMoves;
    for (FormId x : arena_.followers(g)) {
      const FormFlags xf = classifier_.flags(x);
      if (hats) {
        if (xf.right_atomic && !is_hat_sum(x)) return Membership::No;
        if (xf.left_atomic && !is_hat_sum(arena_.conjugate(x))) return Membership::No;
      } else {
        if (xf.left_atomic && !is_hook_sum(x)) return Membership::No;
        if (xf.right_atomic && !is_hook_sum(arena_.conjugate(x))) return Membership::No;
      }
    }
    // Every parental universe contains the dicots; the hook universes contain E.
    if (f.dicot || (!hats && f.dead_ending)) return Membership::Yes;
    if (arena_.birthday(g) <= budget.max_birthday && closure(budget).contains(g)) return Membership::Yes;
    return Membership::Unknown;
  }

  // Right-atomic g is a sum of hat(k), 1 <= k <= n+1 (0 is the empty sum).
  bool is_hat_sum(FormId g) {
    if (g == Arena::zero()) return true;
    if (!arena_.right_atomic(g)) return false;
    if (auto it = hat_memo_.find(g.value); it != hat_memo_.end()) return it->second;
    bool found = false;
    // If g = hat(k) + rest then rest = 0 + rest is a Left option of g.
    const std::vector<FormId> opts(arena_.left(g).begin(), arena_.left(g).end());
    for (FormId rest : opts) {
      const int k = arena_.birthday(g) - arena_.birthday(rest);
      if (k < 1 || k > spec_.n + 1) continue;
      if (arena_.sum(arena_.hat(k), rest) == g && is_hat_sum(rest)) {
        found = true;
        break;
      }
    }
    hat_memo_[g.value] = found;
    return found;
  }

  // Left-atomic g is a sum of hooks of the universe's orders plus a Left-end.
  bool is_hook_sum(FormId g) {
    if (!arena_.left_atomic(g)) return false;
    if (classifier_.flags(g).left_end) return true;
    if (auto it = hook_memo_.find(g.value); it != hook_memo_.end()) return it->second;
    bool found = false;
    const std::vector<FormId> opts(arena_.right(g).begin(), arena_.right(g).end());
    for (int m : spec_.hook_orders) {
      // If g = hook(m) + rest, Right's move in the hook leaves m + rest, and
      // with rest Left-atomic Left's only line from there descends to rest.
      for (FormId r : opts) {
        std::optional<FormId> rest = r;
        for (int step = 0; step < m && rest; ++step) {
          auto l = arena_.left(*rest);
          rest = l.size() == 1 ? std::optional<FormId>(l[0]) : std::nullopt;
        }
        if (!rest || !arena_.left_atomic(*rest)) continue;
        if (arena_.birthday(*rest) + m + 1 != arena_.birthday(g)) continue;
        if (arena_.sum(hook(m), *rest) == g && is_hook_sum(*rest)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    hook_memo_[g.value] = found;
    return found;
  }

  // Hereditary generating set used for closure-based membership.
  std::vector<FormId> closure_base() {
    std::set<FormId> base{Arena::zero()};
    auto add_followers = [&](FormId g) {
      for (FormId f : arena_.followers(g)) base.insert(f);
    };
    if (spec_.kind == UniverseKind::ControlledMoves) {
      for (int k = 1; k <= spec_.n + 1; ++k) add_followers(arena_.hat(k));
    } else if (spec_.kind == UniverseKind::Hooks) {
      for (int m : spec_.hook_orders) add_followers(hook(m));
      for (FormId l : left_ends(arena_, 2, 64).forms) {
        add_followers(l);
        add_followers(arena_.conjugate(l));
      }
    }
    return {base.begin(), base.end()};
  }

  const ClosureResult& closure(const Budget& budget) {
    for (auto& [b, c] : closures_)
      if (b == budget) return *c;
    auto base = closure_base();
    auto c = std::make_unique<ClosureResult>(closure_enumerate(arena_, base, budget.max_birthday + 1, budget));
    closures_.emplace_back(budget, std::move(c));
    return *closures_.back().second;
  }

  FormId hook(int m) { return arena_.intern({}, {arena_.moves(m)}); }

 private:
  FormList primary_atomic(const Budget& budget) {
    switch (spec_.kind) {
      case UniverseKind::Dicot: return FormList{{Arena::zero()}, false};
      case UniverseKind::DeadEnding: return left_ends(arena_, budget.max_birthday, budget.max_forms);
      case UniverseKind::Omega: return omega_left_atomic(budget);
      case UniverseKind::ControlledMoves: return hat_sums(budget);
      case UniverseKind::Hooks: return hook_sums(budget);
    }
    return {};
  }

  FormList omega_left_atomic(const Budget& budget) {
    FormList out;
    out.forms.push_back(Arena::zero());
    std::unordered_set<FormId, FormIdHash> seen{Arena::zero()};
    for (int b = 1; b <= budget.max_birthday && !out.truncated; ++b) {
      FormList below = all_forms(arena_, b - 1, budget.max_forms);
      out.truncated = below.truncated;
      for_each_subset(below.forms.size(), 0, [&](const std::vector<std::size_t>& idx) {
        std::vector<FormId> r;
        for (std::size_t i : idx) r.push_back(below.forms[i]);
        FormId g = arena_.intern({}, r);
        if (!seen.insert(g).second) return true;
        if (out.forms.size() >= budget.max_forms) {
          out.truncated = true;
          return false;
        }
        out.forms.push_back(g);
        return true;
      });
    }
    return out;
  }

  FormList hat_sums(const Budget& budget) {
    FormList out;
    std::vector<FormId> hats;
    for (int k = 1; k <= spec_.n + 1; ++k) hats.push_back(arena_.hat(k));
    std::unordered_set<FormId, FormIdHash> seen;
    for (const auto& m : multisets(hats.size(), static_cast<std::size_t>(budget.max_summands))) {
      FormId g = Arena::zero();
      for (std::size_t i : m) g = arena_.sum(g, hats[i]);
      if (!seen.insert(g).second) continue;
      if (out.forms.size() >= budget.max_forms) {
        out.truncated = true;
        break;
      }
      out.forms.push_back(g);
    }
    return out;
  }

  FormList hook_sums(const Budget& budget) {
    FormList ends = left_ends(arena_, budget.max_birthday, budget.max_forms);
    std::vector<FormId> hooks;
    for (int m : spec_.hook_orders) hooks.push_back(hook(m));
    const auto combos = multisets(hooks.size(), static_cast<std::size_t>(budget.max_summands));

    // (total birthday, multiset index, end index)
    std::vector<std::tuple<int, std::size_t, std::size_t>> order;
    for (std::size_t c = 0; c < combos.size(); ++c) {
      int b = 0;
      for (std::size_t i : combos[c]) b += arena_.birthday(hooks[i]);
      for (std::size_t e = 0; e < ends.forms.size(); ++e) order.emplace_back(b + arena_.birthday(ends.forms[e]), c, e);
    }
    std::sort(order.begin(), order.end());

    FormList out;
    out.truncated = ends.truncated || order.size() > budget.max_forms;
    std::unordered_set<FormId, FormIdHash> seen;
    for (const auto& [b, c, e] : order) {
      if (out.forms.size() >= budget.max_forms) break;
      FormId g = ends.forms[e];
      for (std::size_t i : combos[c]) g = arena_.sum(g, hooks[i]);
      if (seen.insert(g).second) out.forms.push_back(g);
    }
    return out;
  }

  Arena& arena_;
  UniverseSpec spec_;
  Classifier classifier_;
  std::unordered_map<std::uint32_t, bool> hat_memo_;
  std::unordered_map<std::uint32_t, bool> hook_memo_;
  std::vector<std::pair<Budget, std::unique_ptr<ClosureResult>>> closures_;
};

}  // namespace absgame
