#pragma once

// Word metrics on finitely generated subgroups of products of free groups,
// by breadth-first search over the implicit Cayley graph.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdp/kernel_groups.hpp"
#include "kdp/product.hpp"

namespace kdp {

struct Ball {
  int radius = 0;
  // Element -> distance from the identity, for every element within radius.
  std::unordered_map<ProductElement, int, ProductElementHash> distance;
  // sphere_sizes[j] = number of elements at distance exactly j.
  std::vector<std::int64_t> sphere_sizes;
};

// Plain layered BFS from the identity, multiplying on the right by the
// generators and their inverses.
Ball ball(GeneratingSet const& s, int radius);

struct DistanceResult {
  bool found = false;
  int distance = 0;     // when found
  int radius = 0;       // search radius; not found certifies distance > radius
  std::int64_t visited = 0;
};

// Exact distance from the identity when it is at most max_radius. Meets a
// ball of radius ceil(R/2) around the identity with spheres of radius up to
// floor(R/2) around the target.
DistanceResult distance(GeneratingSet const& s, ProductElement const& target,
                        int max_radius);

// ([x^n, y^n], 1) in K^2_2(2).
ProductElement h_family(int n);

// Shortest GenWord over s for target found by plain BFS, if within radius.
std::optional<GenWord> shortest_word(GeneratingSet const& s,
                                     ProductElement const& target, int radius);

struct DistortionRow {
  int n = 0;
  long ambient_length = 0;
  bool exact = false;
  int value = 0;  // distance when exact, otherwise the radius exceeded
};

std::vector<DistortionRow> distortion_table(int n_min, int n_max, int radius);

// "n,ambient_length,status,value" with status exact or greater_than.
std::string distortion_csv(std::vector<DistortionRow> const& rows);

}  // namespace kdp
