#include "glay/layout.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "glay/error.hpp"
#include "glay/rng.hpp"

namespace glay {

std::string space_name(Space s) {
  switch (s) {
    case Space::euclidean2d: return "euclidean-2d";
    case Space::sphere: return "sphere";
    case Space::hyperbolic: return "hyperbolic";
  }
  return "?";
}

Space space_from_name(std::string_view name) {
  if (name == "euclidean-2d" || name == "euclidean") return Space::euclidean2d;
  if (name == "sphere") return Space::sphere;
  if (name == "hyperbolic") return Space::hyperbolic;
  throw parse_error("unknown space \"" + std::string(name) + "\"");
}

Temperature Temperature::inverse_linear(double t0, int total_steps) {
  Temperature t;
  t.kind = CoolingKind::inverse_linear;
  t.value = t0;
  t.initial = t0;
  t.total = total_steps < 1 ? 1 : total_steps;
  return t;
}

Temperature Temperature::geometric(double t0, double factor) {
  Temperature t;
  t.kind = CoolingKind::geometric;
  t.value = t0;
  t.initial = t0;
  t.factor = factor;
  return t;
}

Temperature cool(Temperature t) {
  t.step += 1;
  if (t.kind == CoolingKind::inverse_linear) {
    double remaining = 1.0 - static_cast<double>(t.step) / static_cast<double>(t.total);
    t.value = t.initial * (remaining > 0.0 ? remaining : 0.0);
  } else {
    t.value *= t.factor;
  }
  return t;
}

Layout init_random(std::size_t n, std::uint64_t seed, double frame_w, double frame_h) {
  Layout l;
  l.space = Space::euclidean2d;
  l.frame_w = frame_w;
  l.frame_h = frame_h;
  l.x.reserve(n);
  l.y.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    l.x.push_back((rng.uniform() - 0.5) * frame_w);
    l.y.push_back((rng.uniform() - 0.5) * frame_h);
  }
  return l;
}

Layout init_random_sphere(std::size_t n, std::uint64_t seed) {
  Layout l;
  l.space = Space::sphere;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double z = 2.0 * rng.uniform() - 1.0;
    double phi = 6.283185307179586476925287 * rng.uniform();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    l.x.push_back(r * std::cos(phi));
    l.y.push_back(r * std::sin(phi));
    l.z.push_back(z);
  }
  return l;
}

Layout init_random_disk(std::size_t n, std::uint64_t seed, double radius) {
  Layout l;
  l.space = Space::hyperbolic;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double r = radius * std::sqrt(rng.uniform());
    double phi = 6.283185307179586476925287 * rng.uniform();
    l.x.push_back(r * std::cos(phi));
    l.y.push_back(r * std::sin(phi));
  }
  return l;
}

std::size_t separate_coincident(std::vector<double>& xs, std::vector<double>& ys, double eps,
                                std::uint64_t salt) {
  struct Key {
    std::uint64_t a, b;
    bool operator==(const Key&) const = default;
  };
  struct Hash {
    std::size_t operator()(const Key& k) const {
      return static_cast<std::size_t>(mix64(k.a ^ mix64(k.b)));
    }
  };
  std::unordered_map<Key, std::size_t, Hash> seen;
  seen.reserve(xs.size() * 2);
  std::size_t moved = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Key k{std::bit_cast<std::uint64_t>(xs[i]), std::bit_cast<std::uint64_t>(ys[i])};
    auto [it, fresh] = seen.try_emplace(k, i);
    if (fresh) continue;
    Rng rng(mix64(salt ^ (0x9e3779b97f4a7c15ull * (i + 1))));
    auto [ux, uy] = rng.unit_vec();
    xs[i] += eps * ux;
    ys[i] += eps * uy;
    ++moved;
    // re-register under the nudged position so triples also separate
    Key k2{std::bit_cast<std::uint64_t>(xs[i]), std::bit_cast<std::uint64_t>(ys[i])};
    seen.try_emplace(k2, i);
  }
  return moved;
}

}  // namespace glay
