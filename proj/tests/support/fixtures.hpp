#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "selset/error.hpp"
#include "selset/graph.hpp"

namespace fixtures {

// 1-based ids, as written in files, to the 0-based API.
inline selset::VertexSet ids(std::initializer_list<unsigned> one_based) {
  selset::VertexSet out;
  for (unsigned v : one_based) out.push_back(v - 1);
  return out;
}

inline selset::ColoredGraph p3() {
  return selset::parse_graph("p mss 3 2 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 3\n");
}

inline selset::ColoredGraph path5() {
  return selset::parse_graph(
      "p mss 5 4 2\nv 1 1\nv 2 1\nv 3 1\nv 4 2\nv 5 2\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
}

// Center 1 and leaves 2, 3 in color 1; leaf 4 in color 2.
inline selset::ColoredGraph star() {
  return selset::parse_graph("p mss 4 3 2\nv 1 1\nv 2 1\nv 3 1\nv 4 2\ne 1 2\ne 1 3\ne 1 4\n");
}

inline selset::ColoredGraph triangle() {
  return selset::parse_graph("p mss 3 3 1\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 2 3\ne 1 3\n");
}

template <class Fn>
selset::FormatErrc format_error_of(Fn&& fn) {
  try {
    fn();
  } catch (const selset::FormatError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no FormatError thrown";
  return selset::FormatErrc::kMalformedLine;
}

template <class Fn>
selset::PreconditionErrc precondition_error_of(Fn&& fn) {
  try {
    fn();
  } catch (const selset::PreconditionError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no PreconditionError thrown";
  return selset::PreconditionErrc::kInvalidSpec;
}

}  // namespace fixtures
