#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "inet/diagram.hpp"
#include "inet/dsl.hpp"

namespace inet::testing {

inline Diagram tweety() {
  return Diagram::build({pos("a", "b"), pos("a", "c"), pos("c", "b"),
                         pos("b", "d"), neg("c", "d")});
}

inline Diagram nixon() {
  return Diagram::build(
      {pos("a", "b"), pos("a", "c"), pos("b", "d"), neg("c", "d")});
}

inline Diagram updown() {
  return Diagram::build({pos("z", "u"), neg("z", "x"), pos("u", "x"),
                         pos("u", "v"), pos("x", "v"), neg("x", "y"),
                         pos("v", "y")});
}

inline Diagram splittotal() {
  return Diagram::build({neg("u", "w"), pos("u", "v"), pos("u", "x"),
                         pos("w", "v"), pos("x", "w"), neg("x", "y"),
                         pos("v", "y")});
}

inline Diagram inheruniv() {
  return Diagram::build({pos("x", "a"), pos("x", "c"), pos("a", "y"),
                         pos("c", "y"), neg("b", "y"), neg("f", "a"),
                         pos("d", "a"), pos("b", "f"), pos("b", "d"),
                         neg("g", "b"), pos("e", "b"), pos("c", "g"),
                         pos("c", "e"), pos("e", "g")});
}

inline Diagram chain() {
  return Diagram::build({pos("a", "b"), pos("b", "c")});
}

inline NetFile corpus() {
  std::ifstream in(INET_CORPUS_FILE);
  std::stringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

}  // namespace inet::testing
