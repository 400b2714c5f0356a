#pragma once

// Hash-consed arena of short partizan game forms over the trivial adorn group.
//
// Every form is interned exactly once: two FormIds compare equal iff the forms
// are structurally identical after sorting and deduplicating option sets.
// Children are always interned before their parent, so ids are a topological
// order of the form DAG (every option id is smaller than its parent id).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace absgame {

struct FormId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FormId, FormId) = default;
};

struct FormIdHash {
  std::size_t operator()(FormId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

enum class Side : std::uint8_t { Left, Right };

constexpr Side opponent(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

constexpr const char* side_name(Side s) { return s == Side::Left ? "Left" : "Right"; }

// Option id that does not belong to the arena.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family parameter outside its domain (e.g. a hook of order below two).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arena capacity or recursion depth exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A frozen arena was asked to create a new form.
class FrozenError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ArenaLimits {
  std::size_t max_forms = std::size_t{1} << 26;
  int max_depth = 4096;
};

enum class Family { Moves, Hat, OStar, Zeta };

class Arena {
 public:
  explicit Arena(ArenaLimits limits = {}) : limits_(limits) {
    slots_.assign(1024, kEmptySlot);
    insert_node({}, {});
  }

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;
  Arena(Arena&&) noexcept = default;
  Arena& operator=(Arena&&) noexcept = default;

  static constexpr FormId zero() { return FormId{0}; }

  FormId intern(std::span<const FormId> left, std::span<const FormId> right) {
    scratch_left_.assign(left.begin(), left.end());
    scratch_right_.assign(right.begin(), right.end());
    normalize(scratch_left_);
    normalize(scratch_right_);
    return insert_node(scratch_left_, scratch_right_);
  }

  FormId intern(std::initializer_list<FormId> left, std::initializer_list<FormId> right) {
    return intern(std::span<const FormId>(left.begin(), left.size()),
                  std::span<const FormId>(right.begin(), right.size()));
  }

  bool contains(FormId g) const { return g.value < records_.size(); }
  std::size_t size() const { return records_.size(); }

  std::span<const FormId> left(FormId g) const {
    const Record& r = record(g);
    return {pool_.data() + r.begin, r.n_left};
  }

  std::span<const FormId> right(FormId g) const {
    const Record& r = record(g);
    return {pool_.data() + r.begin + r.n_left, r.n_right};
  }

  std::span<const FormId> options(FormId g, Side s) const { return s == Side::Left ? left(g) : right(g); }

  bool left_atomic(FormId g) const { return record(g).n_left == 0; }
  bool right_atomic(FormId g) const { return record(g).n_right == 0; }
  bool atomic(FormId g, Side s) const { return s == Side::Left ? left_atomic(g) : right_atomic(g); }

  int birthday(FormId g) const { return static_cast<int>(record(g).birthday); }

  // Disjunctive sum. With the trivial adorn group the four-case definition
  // collapses to the uniform recursion {G^L+H, G+H^L | G^R+H, G+H^R}: an empty
  // option set on both sides yields an empty union, which is the atom.
  FormId sum(FormId g, FormId h) {
    check(g);
    check(h);
    return sum_rec(g, h);
  }

  FormId sum(std::span<const FormId> terms) {
    FormId acc = zero();
    for (FormId t : terms) acc = sum(acc, t);
    return acc;
  }

  FormId sum(std::initializer_list<FormId> terms) {
    return sum(std::span<const FormId>(terms.begin(), terms.size()));
  }

  FormId conjugate(FormId g) {
    check(g);
    return conjugate_rec(g);
  }

  // Misère adjoint G°.
  FormId adjoint(FormId g) {
    check(g);
    return adjoint_rec(g);
  }

  FormId star() { return intern({zero()}, {zero()}); }

  // n moves for Left ({n-1 | }) or, for negative n, for Right.
  FormId moves(int n) {
    if (n < 0) return conjugate(moves(-n));
    FormId m = zero();
    for (int i = 1; i <= n; ++i) m = intern({m}, {});
    return m;
  }

  // n controlled moves {0, 1, ..., n-1 | }.
  FormId hat(int n) {
    if (n < 0) return conjugate(hat(-n));
    std::vector<FormId> opts;
    opts.reserve(static_cast<std::size_t>(n));
    FormId m = zero();
    for (int i = 0; i < n; ++i) {
      opts.push_back(m);
      m = intern({m}, {});
    }
    return intern(opts, {});
  }

  FormId ostar(int n) {
    if (n < 0) throw DomainError("ostar(" + std::to_string(n) + "): order must be non-negative");
    FormId g = star();
    for (int i = 1; i <= n; ++i) g = intern({zero()}, {g});
    return g;
  }

  // Left-hook {  | n } for n >= 2; Right-hook { -n |  } for n <= -2.
  FormId zeta(int n) {
    if (n > -2 && n < 2) throw DomainError("zeta(" + std::to_string(n) + "): |order| must be at least 2");
    if (n < 0) return conjugate(zeta(-n));
    return intern({}, {moves(n)});
  }

  FormId family(Family kind, int n) {
    switch (kind) {
      case Family::Moves: return moves(n);
      case Family::Hat: return hat(n);
      case Family::OStar: return ostar(n);
      case Family::Zeta: return zeta(n);
    }
    throw DomainError("unknown family");
  }

  // g and every position reachable from it, sorted by id.
  std::vector<FormId> followers(FormId g) const {
    check(g);
    std::vector<char> seen(g.value + 1, 0);
    std::vector<FormId> stack{g};
    seen[g.value] = 1;
    while (!stack.empty()) {
      FormId f = stack.back();
      stack.pop_back();
      for (Side s : {Side::Left, Side::Right}) {
        for (FormId o : options(f, s)) {
          if (!seen[o.value]) {
            seen[o.value] = 1;
            stack.push_back(o);
          }
        }
      }
    }
    std::vector<FormId> out;
    for (std::uint32_t i = 0; i <= g.value; ++i)
      if (seen[i]) out.push_back(FormId{i});
    return out;
  }

  // After freezing, operations that would create a new form throw FrozenError;
  // const accessors are safe for concurrent readers.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  const ArenaLimits& limits() const { return limits_; }

 private:
  struct Record {
    std::uint32_t begin;
    std::uint32_t n_left;
    std::uint32_t n_right;
    std::uint32_t birthday;
  };

  static constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kNoMemo = std::numeric_limits<std::uint32_t>::max();

  class DepthGuard {
   public:
    explicit DepthGuard(Arena& a) : a_(a) {
      if (++a_.depth_ > a_.limits_.max_depth) {
        --a_.depth_;
        throw ResourceError("recursion depth limit " + std::to_string(a_.limits_.max_depth) + " exceeded");
      }
    }
    ~DepthGuard() { --a_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Arena& a_;
  };

  const Record& record(FormId g) const {
    check(g);
    return records_[g.value];
  }

  void check(FormId g) const {
    if (!contains(g)) throw StructuralError("unknown form id " + std::to_string(g.value));
  }

  static void normalize(std::vector<FormId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }

  static std::uint64_t hash_node(std::span<const FormId> l, std::span<const FormId> r) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (l.size() * 0x100000001b3ULL);
    for (FormId id : l) h = mix(h ^ id.value) + 0x9e3779b97f4a7c15ULL;
    h = mix(h ^ 0xabcdef12345ULL);
    for (FormId id : r) h = mix(h ^ id.value) + 0x632be59bd9b4e019ULL;
    return h;
  }

  bool same_node(std::uint32_t id, std::span<const FormId> l, std::span<const FormId> r) const {
    const Record& rec = records_[id];
    if (rec.n_left != l.size() || rec.n_right != r.size()) return false;
    const FormId* p = pool_.data() + rec.begin;
    return std::equal(l.begin(), l.end(), p) && std::equal(r.begin(), r.end(), p + rec.n_left);
  }

  // l and r must already be sorted and deduplicated.
  FormId insert_node(std::span<const FormId> l, std::span<const FormId> r) {
    for (FormId id : l) check(id);
    for (FormId id : r) check(id);
    const std::uint64_t h = hash_node(l, r);
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = static_cast<std::size_t>(h) & mask;
    while (slots_[pos] != kEmptySlot) {
      std::uint32_t id = slots_[pos];
      if (hashes_[id] == h && same_node(id, l, r)) return FormId{id};
      pos = (pos + 1) & mask;
    }
    if (frozen_) throw FrozenError("arena is frozen; cannot intern a new form");
    if (records_.size() >= limits_.max_forms)
      throw ResourceError("arena capacity of " + std::to_string(limits_.max_forms) + " forms exhausted");

    std::uint32_t birthday = 0;
    for (FormId id : l) birthday = std::max(birthday, records_[id.value].birthday + 1);
    for (FormId id : r) birthday = std::max(birthday, records_[id.value].birthday + 1);

    const auto id = static_cast<std::uint32_t>(records_.size());
    records_.push_back(Record{static_cast<std::uint32_t>(pool_.size()), static_cast<std::uint32_t>(l.size()),
                              static_cast<std::uint32_t>(r.size()), birthday});
    pool_.insert(pool_.end(), l.begin(), l.end());
    pool_.insert(pool_.end(), r.begin(), r.end());
    hashes_.push_back(h);
    slots_[pos] = id;
    if (records_.size() * 2 > slots_.size()) rehash();
    return FormId{id};
  }

  void rehash() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmptySlot);
    const std::size_t mask = fresh.size() - 1;
    for (std::uint32_t id = 0; id < records_.size(); ++id) {
      std::size_t pos = static_cast<std::size_t>(hashes_[id]) & mask;
      while (fresh[pos] != kEmptySlot) pos = (pos + 1) & mask;
      fresh[pos] = id;
    }
    slots_ = std::move(fresh);
  }

  std::vector<FormId> copy_options(FormId g, Side s) const {
    auto o = options(g, s);
    return {o.begin(), o.end()};
  }

  FormId sum_rec(FormId g, FormId h) {
    if (g == zero()) return h;
    if (h == zero()) return g;
    if (h < g) std::swap(g, h);
    const std::uint64_t key = (std::uint64_t{g.value} << 32) | h.value;
    if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return it->second;

    DepthGuard guard(*this);
    std::vector<FormId> sides[2];
    for (Side s : {Side::Left, Side::Right}) {
      auto& out = sides[static_cast<int>(s)];
      const auto go = copy_options(g, s);
      const auto ho = copy_options(h, s);
      out.reserve(go.size() + ho.size());
      for (FormId gs : go) out.push_back(sum_rec(gs, h));
      for (FormId hs : ho) out.push_back(sum_rec(g, hs));
      normalize(out);
    }
    FormId result = insert_node(sides[0], sides[1]);
    sum_memo_.emplace(key, result);
    return result;
  }

  FormId& memo_slot(std::vector<FormId>& memo, FormId g) {
    if (memo.size() < records_.size()) memo.resize(records_.size(), FormId{kNoMemo});
    return memo[g.value];
  }

  FormId conjugate_rec(FormId g) {
    if (g == zero()) return g;
    if (FormId cached = memo_slot(conj_memo_, g); cached.value != kNoMemo) return cached;
    DepthGuard guard(*this);
    std::vector<FormId> l, r;
    for (FormId o : copy_options(g, Side::Right)) l.push_back(conjugate_rec(o));
    for (FormId o : copy_options(g, Side::Left)) r.push_back(conjugate_rec(o));
    normalize(l);
    normalize(r);
    FormId result = insert_node(l, r);
    memo_slot(conj_memo_, g) = result;
    memo_slot(conj_memo_, result) = g;
    return result;
  }

  FormId adjoint_rec(FormId g) {
    if (FormId cached = memo_slot(adj_memo_, g); cached.value != kNoMemo) return cached;
    DepthGuard guard(*this);
    const auto gl = copy_options(g, Side::Left);
    const auto gr = copy_options(g, Side::Right);
    std::vector<FormId> l, r;
    if (gr.empty()) {
      l.push_back(zero());
    } else {
      for (FormId o : gr) l.push_back(adjoint_rec(o));
    }
    if (gl.empty()) {
      r.push_back(zero());
    } else {
      for (FormId o : gl) r.push_back(adjoint_rec(o));
    }
    normalize(l);
    normalize(r);
    FormId result = insert_node(l, r);
    memo_slot(adj_memo_, g) = result;
    return result;
  }

  ArenaLimits limits_;
  std::vector<Record> records_;
  std::vector<FormId> pool_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
  std::vector<FormId> scratch_left_, scratch_right_;
  std::unordered_map<std::uint64_t, FormId> sum_memo_;
  std::vector<FormId> conj_memo_;
  std::vector<FormId> adj_memo_;
  int depth_ = 0;
  bool frozen_ = false;
};

}  // namespace absgame
