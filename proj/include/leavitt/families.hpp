#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

enum class Family { Line, Rose, Enm, Complete, Chain3, Tri, K3, Mult2, Loop };

struct FamilySpec {
  Family family;
  std::vector<long> params;
};

/// Accepts `name`, `name(a,b)` or `name:a,b`, e.g. `rose(3)`, `enm:2,3`.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Deterministic graphs:
///   line(n)      v1 → v2 → … → vn, edges e1…e(n-1)
///   rose(n)      vertex v1 with loops f1…fn
///   loop         rose(1)
///   enm(n, m)    line(m) with loops f1…fn added at vm
///   complete(k)  all edges vi → vj, i ≠ j, ids ei_j
///   chain3, tri, k3, mult2  fixed small graphs, see families.cpp
Graph generate(const FamilySpec& spec);

}  // namespace leavitt
