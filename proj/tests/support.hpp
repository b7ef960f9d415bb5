#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/ring.hpp"
#include "gkm/spline.hpp"

namespace gkm::test {

/// Seed for every random generator; `--seed N` on the command line wins over
/// the GKM_TEST_SEED environment variable, which wins over the default.
inline std::uint64_t& seed_storage() {
  static std::uint64_t value = []() -> std::uint64_t {
    if (const char* env = std::getenv("GKM_TEST_SEED")) return std::strtoull(env, nullptr, 10);
    return std::uint64_t{20240611};
  }();
  return value;
}

inline std::uint64_t seed() { return seed_storage(); }

/// Consumes `--seed N` or `--seed=N` from argv.
inline void take_seed_flag(int& argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed_storage() = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg.rfind("--seed=", 0) == 0) {
      seed_storage() = std::strtoull(arg.c_str() + 7, nullptr, 10);
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
}

using Rng = std::mt19937_64;

/// A fresh generator per test case, so cases stay reproducible in isolation.
inline Rng make_rng(std::uint64_t salt) { return Rng(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

/// Graph over `ring` from (u, v, label) triples on vertices v0..v{n-1}.
inline GraphPtr labeled_graph(const RingPtr& ring, std::size_t n,
                              const std::vector<std::tuple<std::size_t, std::size_t, long>>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v, l] : edges) es.push_back({u, v, ring->from_integer(l)});
  return share(Graph::build(ring, numbered_names(n), std::move(es)));
}

/// Random graph on n vertices: a random spanning tree (if `connected`) plus
/// each remaining pair with probability p, labels uniform in [1, max_label].
inline GraphPtr random_graph(Rng& rng, const RingPtr& ring, std::size_t n, double p, long max_label,
                             bool connected = true) {
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Edge> es;
  auto add = [&](std::size_t u, std::size_t v) {
    used[u][v] = used[v][u] = true;
    es.push_back({u, v, ring->from_integer(uniform(rng, 1, max_label))});
  };
  if (connected) {
    for (std::size_t v = 1; v < n; ++v) add(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1)), v);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!used[u][v] && coin(rng, p)) add(u, v);
  return share(Graph::build(ring, numbered_names(n), std::move(es)));
}

/// Random polynomial with small integer coefficients and total degree <= deg.
inline Element random_polynomial(Rng& rng, const RingPtr& ring, unsigned deg, int terms = 4) {
  Element out = ring->zero();
  for (int k = 0; k < terms; ++k) {
    Element term = ring->from_integer(uniform(rng, -5, 5));
    unsigned d = static_cast<unsigned>(uniform(rng, 0, deg));
    for (unsigned e = 0; e < d; ++e)
      term *= ring->variable(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ring->num_variables()) - 1)));
    out += term;
  }
  return out;
}

inline std::vector<Element> ints(const RingPtr& ring, const std::vector<long>& xs) {
  std::vector<Element> out;
  for (long x : xs) out.push_back(ring->from_integer(x));
  return out;
}

inline std::vector<Element> parse_all(const RingPtr& ring, const std::vector<std::string>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(ring->parse(x));
  return out;
}

}  // namespace gkm::test
