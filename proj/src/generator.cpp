#include "zsflow/generator.hpp"

#include <random>
#include <stdexcept>

namespace zsflow {

namespace {

// Rejection-sampled bounded draw; uniform_int_distribution is not portable
// across standard libraries, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

Multigraph gen_random_5regular(const GeneratorConfig& cfg) {
  if (cfg.vertex_count <= 0 || cfg.vertex_count % 2 != 0)
    throw std::invalid_argument("gen_random_5regular: vertex count must be positive and even");
  if (cfg.max_resamples <= 0)
    throw std::invalid_argument("gen_random_5regular: resample bound must be positive");

  std::mt19937_64 rng(cfg.seed);
  std::vector<VertexId> stubs;
  stubs.reserve(static_cast<size_t>(5 * cfg.vertex_count));

  for (int attempt = 0; attempt < cfg.max_resamples; ++attempt) {
    stubs.clear();
    for (VertexId v = 0; v < cfg.vertex_count; ++v)
      for (int i = 0; i < 5; ++i) stubs.push_back(v);
    for (size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[bounded(rng, i + 1)]);

    bool loop = false;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
      edges.push_back({std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])});
    }
    if (loop) continue;
    return Multigraph(cfg.vertex_count, std::move(edges));
  }
  throw std::runtime_error("gen_random_5regular: resample budget exhausted");
}

}  // namespace zsflow
