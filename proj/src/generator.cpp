#include "structctl/generator.hpp"

#include <random>

namespace structctl {
namespace {

// std::uniform_*_distribution is implementation-defined, so draws go through
// these to keep instances identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return x % bound;
  }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 rng_;
};

void check_spec(const GeneratorSpec& spec) {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::BadSpec, msg); };
  if (spec.n == 0) bad("n must be positive");
  if (spec.n > 100000 || spec.m > 100000) bad("n and m are limited to 100000");
  if (!(spec.density_a >= 0.0 && spec.density_a <= 1.0)) bad("density_a must lie in [0, 1]");
  if (!(spec.density_b >= 0.0 && spec.density_b <= 1.0)) bad("density_b must lie in [0, 1]");
  if (spec.cost_min < 0) bad("costs must be non-negative");
  if (spec.cost_min > spec.cost_max) bad("cost_min exceeds cost_max");
  if (spec.family == GeneratorFamily::Chain && spec.m == 0) bad("chain family needs at least one input");
  if (spec.family == GeneratorFamily::Block && spec.blocks > spec.n) bad("more blocks than states");
}

}  // namespace

std::string_view to_string(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::Erdos: return "erdos";
    case GeneratorFamily::Chain: return "chain";
    case GeneratorFamily::Cycle: return "cycle";
    case GeneratorFamily::DecoupledDiagonal: return "decoupled-diagonal";
    case GeneratorFamily::Block: return "block";
  }
  return "erdos";
}

GeneratorFamily parse_family(std::string_view name) {
  for (auto f : {GeneratorFamily::Erdos, GeneratorFamily::Chain, GeneratorFamily::Cycle,
                 GeneratorFamily::DecoupledDiagonal, GeneratorFamily::Block}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::BadSpec, "unknown family '" + std::string(name) +
                                      "' (expected erdos, chain, cycle, decoupled-diagonal or block)");
}

StructuredSystem generate_system(const GeneratorSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.n, m = spec.m;
  Draw draw(spec.seed);
  std::vector<Entry> a, b;

  // Arc x_from -> x_to is the entry A(to, from).
  auto arc = [&](std::size_t from, std::size_t to) { a.push_back({to, from}); };
  auto extra_a = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (draw.chance(spec.density_a)) a.push_back({i, j});
      }
    }
  };
  auto extra_b = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (draw.chance(spec.density_b)) b.push_back({i, j});
      }
    }
  };

  switch (spec.family) {
    case GeneratorFamily::Erdos:
      extra_a();
      extra_b();
      break;
    case GeneratorFamily::Chain:
      for (std::size_t r = 0; r + 1 < n; ++r) arc(r, r + 1);
      extra_a();
      b.push_back({0, 0});
      extra_b();
      break;
    case GeneratorFamily::Cycle:
      if (n == 1) {
        arc(0, 0);
      } else {
        for (std::size_t r = 0; r < n; ++r) arc(r, (r + 1) % n);
      }
      extra_a();
      for (std::size_t j = 0; j < m; ++j) b.push_back({static_cast<std::size_t>(draw.below(n)), j});
      extra_b();
      break;
    case GeneratorFamily::DecoupledDiagonal:
      for (std::size_t r = 0; r < n; ++r) arc(r, r);
      for (std::size_t j = 0; j < m; ++j) {
        b.push_back({j < n ? j : static_cast<std::size_t>(draw.below(n)), j});
      }
      extra_b();
      break;
    case GeneratorFamily::Block: {
      const std::size_t k = spec.blocks ? spec.blocks : std::max<std::size_t>(1, n / 4);
      std::vector<std::size_t> block_of(n);
      for (std::size_t r = 0; r < n; ++r) block_of[r] = r * k / n;
      // Contiguous blocks; each gets a ring (a self-loop when it has one state).
      std::size_t start = 0;
      while (start < n) {
        std::size_t end = start;
        while (end < n && block_of[end] == block_of[start]) ++end;
        if (end - start == 1) {
          arc(start, start);
        } else {
          for (std::size_t r = start; r < end; ++r) arc(r, r + 1 < end ? r + 1 : start);
        }
        start = end;
      }
      for (std::size_t from = 0; from < n; ++from) {
        for (std::size_t to = 0; to < n; ++to) {
          if (block_of[from] < block_of[to] && draw.chance(spec.density_a)) arc(from, to);
        }
      }
      extra_b();
      break;
    }
  }

  std::vector<Rational> costs;
  costs.reserve(m);
  for (std::size_t j = 0; j < m; ++j) costs.emplace_back(draw.between(spec.cost_min, spec.cost_max));
  return make_system(n, m, std::move(a), std::move(b), std::move(costs));
}

}  // namespace structctl
