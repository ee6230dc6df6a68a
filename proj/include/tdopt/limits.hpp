#pragma once

#include <string>

namespace tdopt {

// Caps for the exponential searches. Everything above a cap either falls back
// to a heuristic (where the caller asked for one) or raises SizeLimit.
struct Limits {
  int bd_max_rank = 6;        // exact branch-depth: matroid rank
  int bd_max_ground = 10;     // exact branch-depth: ground set size
  int td_max_vertices = 20;   // exact tree-depth: graph vertices
  int validate_max_leaves = 16;
  long long bruteforce_box_cap = 10'000'000;  // brute-force IP oracle: box volume
  long long augment_step_budget = 100'000;    // augmentation: improving steps
  long long rank_cache_capacity = 1 << 20;    // matroid rank memo entries

  // Parses "key=value,key=value". Unknown keys or malformed entries raise
  // ParseError. Empty string returns defaults.
  static Limits parse(const std::string& s);
};

}  // namespace tdopt
