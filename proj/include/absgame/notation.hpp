#pragma once

// Text grammar for game forms.
//
//   form  := term ("+" term)*
//   term  := brace | named
//   brace := "{" list "|" list "}"
//   list  := <empty> | form ("," form)*
//   named := INT | "*" | "hat(" INT ")" | "ostar(" INT ")" | "zeta(" INT ")"
//          | "adj(" form ")" | "conj(" form ")"
//
// INT is a signed decimal integer read as that many moves; "+" is the
// disjunctive sum; whitespace is ignored.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "absgame/arena.hpp"

namespace absgame {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(format(kind, position, message)), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  static std::string format(Kind kind, std::size_t position, const std::string& message) {
    return std::string(kind == Kind::Syntax ? "syntax error" : "semantic error") + " at offset " +
           std::to_string(position) + ": " + message;
  }

  Kind kind_;
  std::size_t position_;
};

namespace detail {

class Parser {
 public:
  Parser(Arena& arena, std::string_view text) : arena_(arena), text_(text) {}

  FormId parse_all() {
    FormId g = form();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ParseError::Kind::Syntax, pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  FormId form() {
    FormId acc = term();
    while (accept('+')) acc = arena_.sum(acc, term());
    return acc;
  }

  std::vector<FormId> list(char terminator) {
    std::vector<FormId> out;
    if (peek(terminator)) return out;
    out.push_back(form());
    while (accept(',')) out.push_back(form());
    return out;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        pos_ = start;
        fail("integer out of range");
      }
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  template <typename F>
  FormId semantic(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const DomainError& e) {
      throw ParseError(ParseError::Kind::Semantic, at, e.what());
    }
  }

  FormId term() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a form but input ended");
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      auto l = list('|');
      expect('|');
      auto r = list('}');
      expect('}');
      return arena_.intern(l, r);
    }
    if (c == '*') {
      ++pos_;
      return arena_.star();
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const int n = integer();
      return semantic(at, [&] { return arena_.moves(n); });
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
      expect('(');
      FormId result;
      if (name == "adj" || name == "conj") {
        FormId inner = form();
        result = name == "adj" ? arena_.adjoint(inner) : arena_.conjugate(inner);
      } else if (name == "hat" || name == "ostar" || name == "zeta") {
        const int n = integer();
        result = semantic(at, [&] {
          if (name == "hat") return arena_.hat(n);
          if (name == "ostar") return arena_.ostar(n);
          return arena_.zeta(n);
        });
      } else {
        pos_ = at;
        fail("unknown name '" + name + "'");
      }
      expect(')');
      return result;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Arena& arena_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FormId parse(Arena& arena, std::string_view text) { return detail::Parser(arena, text).parse_all(); }

struct RenderOptions {
  bool zero_as_braces = false;
};

// Deterministic printer. Options are ordered by (birthday, rendered text), so
// the output does not depend on arena insertion order.
class Printer {
 public:
  explicit Printer(const Arena& arena, RenderOptions options = {}) : arena_(arena), options_(options) {}

  const std::string& render(FormId g) {
    if (auto it = text_.find(g.value); it != text_.end()) return it->second;
    std::string out;
    if (auto n = integer_value(g)) {
      out = (*n == 0 && options_.zero_as_braces) ? "{|}" : std::to_string(*n);
    } else if (is_star(g)) {
      out = "*";
    } else {
      out = "{" + join(arena_.left(g)) + "|" + join(arena_.right(g)) + "}";
    }
    return text_.emplace(g.value, std::move(out)).first->second;
  }

  // Value n when g is the form of n moves (negative for Right).
  std::optional<int> integer_value(FormId g) {
    if (auto it = ints_.find(g.value); it != ints_.end()) return it->second;
    std::optional<int> v;
    auto l = arena_.left(g);
    auto r = arena_.right(g);
    if (l.empty() && r.empty()) {
      v = 0;
    } else if (l.size() == 1 && r.empty()) {
      if (auto below = integer_value(l[0]); below && *below >= 0) v = *below + 1;
    } else if (r.size() == 1 && l.empty()) {
      if (auto above = integer_value(r[0]); above && *above <= 0) v = *above - 1;
    }
    ints_.emplace(g.value, v);
    return v;
  }

 private:
  bool is_star(FormId g) const {
    auto l = arena_.left(g);
    auto r = arena_.right(g);
    return l.size() == 1 && r.size() == 1 && l[0] == Arena::zero() && r[0] == Arena::zero();
  }

  std::string join(std::span<const FormId> opts) {
    std::vector<std::tuple<int, std::string>> keyed;
    keyed.reserve(opts.size());
    for (FormId o : opts) keyed.emplace_back(arena_.birthday(o), render(o));
    std::sort(keyed.begin(), keyed.end());
    std::string out;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i) out += ',';
      out += std::get<1>(keyed[i]);
    }
    return out;
  }

  const Arena& arena_;
  RenderOptions options_;
  std::unordered_map<std::uint32_t, std::string> text_;
  std::unordered_map<std::uint32_t, std::optional<int>> ints_;
};

inline std::string render(const Arena& arena, FormId g, RenderOptions options = {}) {
  return Printer(arena, options).render(g);
}

}  // namespace absgame
