#pragma once

// Seeded generators of random forms. Both generators draw from std::mt19937_64
// with plain modulo reduction so a seed reproduces the same forms.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "absgame/arena.hpp"

namespace absgame {

class RandomForms {
 public:
  RandomForms(Arena& arena, std::uint64_t seed, int max_options = 3)
      : arena_(arena), rng_(seed), max_options_(max_options) {}

  // A random form of birthday at most max_birthday.
  FormId form(int max_birthday) {
    if (max_birthday <= 0) return Arena::zero();
    std::vector<FormId> sides[2];
    for (auto& side : sides) {
      const auto count = below(static_cast<std::uint64_t>(max_options_) + 1);
      for (std::uint64_t i = 0; i < count; ++i)
        side.push_back(form(static_cast<int>(below(static_cast<std::uint64_t>(max_birthday)))));
    }
    return arena_.intern(sides[0], sides[1]);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

 private:
  Arena& arena_;
  std::mt19937_64 rng_;
  int max_options_;
};

// Random members of the closure of a seed pool: each draw applies the parental
// operator, a sum or a conjugation to earlier members and keeps the result.
class ClosureSampler {
 public:
  ClosureSampler(Arena& arena, std::vector<FormId> pool, std::uint64_t seed)
      : arena_(arena), pool_(std::move(pool)), rng_(seed) {
    if (pool_.empty()) pool_.push_back(Arena::zero());
    seen_.insert(pool_.begin(), pool_.end());
  }

  FormId next(int max_birthday) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      FormId g;
      switch (rng_() % 5) {
        case 0:
        case 1:
        case 2: {
          std::vector<FormId> l, r;
          for (auto n = 1 + rng_() % 2; n > 0; --n) l.push_back(pick());
          for (auto n = 1 + rng_() % 2; n > 0; --n) r.push_back(pick());
          g = arena_.intern(l, r);
          break;
        }
        case 3: {
          FormId a = pick(), b = pick();
          if (arena_.birthday(a) + arena_.birthday(b) > max_birthday) continue;
          g = arena_.sum(a, b);
          break;
        }
        default: g = arena_.conjugate(pick()); break;
      }
      if (arena_.birthday(g) > max_birthday) continue;
      if (seen_.insert(g).second) pool_.push_back(g);
      return g;
    }
    return pick();
  }

  const std::vector<FormId>& pool() const { return pool_; }

 private:
  FormId pick() { return pool_[rng_() % pool_.size()]; }

  Arena& arena_;
  std::vector<FormId> pool_;
  std::unordered_set<FormId, FormIdHash> seen_;
  std::mt19937_64 rng_;
};

}  // namespace absgame
