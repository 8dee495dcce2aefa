#include "kdp/subgroup_metrics.hpp"

#include <algorithm>
#include <sstream>

#include "kdp/error.hpp"

namespace kdp {

namespace {

std::vector<ProductElement> signed_generators(GeneratingSet const& s) {
  std::vector<ProductElement> out;
  for (auto const& g : s.realizations()) {
    out.push_back(g);
    out.push_back(s.group().inv(g));
  }
  return out;
}

ProductElement right_mul(ProductElement const& a, ProductElement const& b) {
  ProductElement out;
  out.factors.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.factors.push_back(concat(a[i], b[i]));
  }
  return out;
}

}  // namespace

Ball ball(GeneratingSet const& s, int radius) {
  if (radius < 0) {
    throw DomainError("radius must be non-negative");
  }
  auto gens = signed_generators(s);
  Ball b;
  b.radius = radius;
  std::vector<ProductElement> layer{s.group().identity()};
  b.distance.emplace(layer.front(), 0);
  b.sphere_sizes.push_back(1);
  for (int j = 1; j <= radius; ++j) {
    std::vector<ProductElement> next;
    for (auto const& g : layer) {
      for (auto const& t : gens) {
        auto h = right_mul(g, t);
        if (b.distance.emplace(h, j).second) {
          next.push_back(std::move(h));
        }
      }
    }
    b.sphere_sizes.push_back(static_cast<std::int64_t>(next.size()));
    layer = std::move(next);
  }
  return b;
}

DistanceResult distance(GeneratingSet const& s, ProductElement const& target,
                        int max_radius) {
  if (max_radius < 0) {
    throw DomainError("radius must be non-negative");
  }
  s.group().check(target);
  DistanceResult result;
  result.radius = max_radius;
  int a = (max_radius + 1) / 2;
  int b = max_radius / 2;
  auto near = ball(s, a);
  result.visited = static_cast<std::int64_t>(near.distance.size());

  // target = x y with |x| <= a and |y| <= b, so target y^-1 lies in the ball.
  auto gens = signed_generators(s);
  std::unordered_map<ProductElement, int, ProductElementHash> seen;
  std::vector<ProductElement> layer{target};
  seen.emplace(target, 0);
  int best = -1;
  for (int j = 0; j <= b; ++j) {
    if (best >= 0 && best <= j) {
      break;
    }
    for (auto const& g : layer) {
      auto it = near.distance.find(g);
      if (it != near.distance.end()) {
        int d = it->second + j;
        if (best < 0 || d < best) {
          best = d;
        }
      }
    }
    if (j == b) {
      break;
    }
    std::vector<ProductElement> next;
    for (auto const& g : layer) {
      for (auto const& t : gens) {
        auto h = right_mul(g, t);
        if (seen.emplace(h, j + 1).second) {
          next.push_back(std::move(h));
        }
      }
    }
    layer = std::move(next);
  }
  result.visited += static_cast<std::int64_t>(seen.size());
  if (best >= 0) {
    result.found = true;
    result.distance = best;
  }
  return result;
}

ProductElement h_family(int n) {
  if (n < 1) {
    throw DomainError("h(n) needs n >= 1");
  }
  ProductElement h;
  h.factors.push_back(
      commutator(word_power(Word{1}, n), word_power(Word{2}, n)));
  h.factors.emplace_back();
  return h;
}

std::optional<GenWord> shortest_word(GeneratingSet const& s,
                                     ProductElement const& target, int radius) {
  if (radius < 0) {
    throw DomainError("radius must be non-negative");
  }
  s.group().check(target);
  auto gens = signed_generators(s);
  struct Visit {
    ProductElement parent;
    int letter;
  };
  std::unordered_map<ProductElement, Visit, ProductElementHash> from;
  auto id = s.group().identity();
  from.emplace(id, Visit{id, 0});
  std::vector<ProductElement> layer{id};
  auto unwind = [&](ProductElement g) {
    std::vector<Letter> letters;
    while (!(g == id)) {
      auto const& v = from.at(g);
      letters.push_back(Letter::from_signed(v.letter));
      g = v.parent;
    }
    std::reverse(letters.begin(), letters.end());
    return GenWord(std::move(letters));
  };
  if (target == id) {
    return GenWord{};
  }
  for (int j = 1; j <= radius; ++j) {
    std::vector<ProductElement> next;
    for (auto const& g : layer) {
      for (std::size_t t = 0; t < gens.size(); ++t) {
        auto h = right_mul(g, gens[t]);
        int symbol = static_cast<int>(t / 2) + 1;
        int letter = t % 2 == 0 ? symbol : -symbol;
        if (from.emplace(h, Visit{g, letter}).second) {
          if (h == target) {
            return unwind(h);
          }
          next.push_back(std::move(h));
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::vector<DistortionRow> distortion_table(int n_min, int n_max, int radius) {
  if (n_min < 1 || n_max < n_min) {
    throw DomainError("distortion range must satisfy 1 <= n_min <= n_max");
  }
  auto gens = standard_generators(KernelGroup(2, 2, 2));
  std::vector<DistortionRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    auto h = h_family(n);
    auto d = distance(gens, h, radius);
    DistortionRow row;
    row.n = n;
    row.ambient_length = ambient_length(h);
    row.exact = d.found;
    row.value = d.found ? d.distance : radius;
    rows.push_back(row);
  }
  return rows;
}

std::string distortion_csv(std::vector<DistortionRow> const& rows) {
  std::ostringstream out;
  out << "n,ambient_length,status,value\n";
  for (auto const& r : rows) {
    out << r.n << ',' << r.ambient_length << ','
        << (r.exact ? "exact" : "greater_than") << ',' << r.value << '\n';
  }
  return out.str();
}

}  // namespace kdp
