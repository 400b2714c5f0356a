#pragma once

// Naive reference model used only by the tests: explicit option trees, no
// sharing and no memo tables. Slow on purpose; keep inputs small.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "absgame/arena.hpp"

namespace oracle {

struct Tree {
  std::vector<Tree> left, right;
};

inline Tree from_arena(const absgame::Arena& a, absgame::FormId g) {
  Tree t;
  for (auto o : a.left(g)) t.left.push_back(from_arena(a, o));
  for (auto o : a.right(g)) t.right.push_back(from_arena(a, o));
  return t;
}

inline Tree make(std::vector<Tree> l, std::vector<Tree> r) { return Tree{std::move(l), std::move(r)}; }

inline Tree integer(int n) {
  if (n == 0) return {};
  return n > 0 ? make({integer(n - 1)}, {}) : make({}, {integer(n + 1)});
}

inline Tree star() { return make({Tree{}}, {Tree{}}); }

inline Tree sum(const Tree& g, const Tree& h) {
  Tree t;
  for (const auto& gl : g.left) t.left.push_back(sum(gl, h));
  for (const auto& hl : h.left) t.left.push_back(sum(g, hl));
  for (const auto& gr : g.right) t.right.push_back(sum(gr, h));
  for (const auto& hr : h.right) t.right.push_back(sum(g, hr));
  return t;
}

inline Tree conjugate(const Tree& g) {
  Tree t;
  for (const auto& r : g.right) t.left.push_back(conjugate(r));
  for (const auto& l : g.left) t.right.push_back(conjugate(l));
  return t;
}

// Canonical key: sorted, deduplicated option keys. Two trees have the same
// key exactly when they are the same form.
inline std::string key(const Tree& t) {
  std::set<std::string> l, r;
  for (const auto& o : t.left) l.insert(key(o));
  for (const auto& o : t.right) r.insert(key(o));
  std::string s = "{";
  for (const auto& k : l) s += k + ",";
  s += "|";
  for (const auto& k : r) s += k + ",";
  return s + "}";
}

// Does `left_to_move` (true: Left) win when moving first from t?
inline bool first_player_wins(const Tree& t, bool left_to_move, bool misere) {
  const auto& opts = left_to_move ? t.left : t.right;
  if (opts.empty()) return misere;
  for (const auto& o : opts)
    if (!first_player_wins(o, !left_to_move, misere)) return true;
  return false;
}

// Outcome letter: L, R, N or P.
inline char outcome(const Tree& t, bool misere) {
  const bool left_first = first_player_wins(t, true, misere);
  const bool right_first = first_player_wins(t, false, misere);
  if (left_first && right_first) return 'N';
  if (left_first) return 'L';
  if (right_first) return 'R';
  return 'P';
}

inline void positions(const Tree& t, std::vector<const Tree*>& out) {
  out.push_back(&t);
  for (const auto& o : t.left) positions(o, out);
  for (const auto& o : t.right) positions(o, out);
}

// Every position reachable from a Left-atomic position is Left-atomic.
inline bool left_end(const Tree& t) {
  std::vector<const Tree*> all;
  positions(t, all);
  return std::all_of(all.begin(), all.end(), [](const Tree* p) { return p->left.empty(); });
}

inline bool right_end(const Tree& t) { return left_end(conjugate(t)); }

inline bool dicot(const Tree& t) {
  std::vector<const Tree*> all;
  positions(t, all);
  return std::all_of(all.begin(), all.end(), [](const Tree* p) { return p->left.empty() == p->right.empty(); });
}

// Once a player runs out of moves at some position, they stay out of moves.
inline bool dead_ending(const Tree& t) {
  std::vector<const Tree*> all;
  positions(t, all);
  for (const Tree* p : all) {
    if (p->left.empty() && !left_end(*p)) return false;
    if (p->right.empty() && !right_end(*p)) return false;
  }
  return true;
}

}  // namespace oracle
