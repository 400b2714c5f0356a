// Builds a few forms, solves them under misere play and compares two of them
// modulo the dead-ending universe.

#include <iostream>

#include "absgame/absgame.hpp"

int main() {
  absgame::Arena arena;
  absgame::Solver solver(arena);
  absgame::Printer printer(arena);

  const auto g = absgame::parse(arena, "{0,1|}");
  const auto h = absgame::parse(arena, "1+1");
  const auto probe = absgame::parse(arena, "{0|*}");

  for (auto f : {g, h, arena.sum(g, probe), arena.sum(h, probe)})
    std::cout << printer.render(f) << "  o = " << absgame::name(solver.outcome(f, absgame::Convention::Misere))
              << "\n";

  absgame::Universe e(arena, absgame::UniverseSpec::dead_ending());
  absgame::Comparator cmp(e, solver, absgame::Budget{});
  const auto v = cmp.geq(g, h);
  std::cout << printer.render(g) << " >= " << printer.render(h) << " mod E: " << absgame::name(v.kind);
  if (v.refuted()) std::cout << " (" << absgame::name(v.witness->kind) << ", X = " << printer.render(v.witness->probe) << ")";
  std::cout << "\n";
}
