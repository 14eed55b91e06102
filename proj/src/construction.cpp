#include "gaplab/construction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gaplab/interval.hpp"

namespace gaplab {

namespace {

// Draw uniformly from [0, m) without modulo bias, independent of the
// standard library's distribution implementation.
uint64_t bounded_draw(std::mt19937_64& rng, uint64_t m) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % m;
}

std::vector<uint64_t> primes_in(double lo_exclusive, double hi_inclusive,
                                uint64_t exclude) {
  std::vector<uint64_t> out;
  if (!(hi_inclusive > lo_exclusive) || hi_inclusive < 2) return out;
  const uint64_t hi = static_cast<uint64_t>(std::floor(hi_inclusive));
  if (hi < 2) return out;
  segmented_sieve(0, hi).for_each([&](uint64_t p) {
    if (static_cast<double>(p) > lo_exclusive && p != exclude) out.push_back(p);
  });
  return out;
}

}  // namespace

SieveSystem build_prime_sets(double x, uint64_t b0, const SystemOverrides& ov) {
  if (!(x >= 10.0)) throw DomainError("requires x >= 10");
  if (b0 != 1 && !is_prime_u64(b0)) throw DomainError("B0 must be 1 or prime");

  SieveSystem sys;
  sys.x = x;
  sys.b0 = b0;
  sys.paper_regime = !(ov.c || ov.y || ov.z || ov.s_min);

  const double lx = std::log(x);
  const double l2 = std::log(lx);
  const bool need_y = !ov.y.has_value();
  const bool need_z = !ov.z.has_value();
  double l3 = 0;
  if (need_y || need_z) {
    if (!(l2 > 0.0) || !(std::log(l2) > 0.0))
      throw DomainError("log3(x) <= 0: too small for the default parameter "
                        "formulas; override y and z");
    l3 = std::log(l2);
  }

  if (ov.c) {
    sys.c = *ov.c;
  } else {
    // default scale from the default theta = 1/3, c_IJ = 1/4
    const hp::Interval c_paper =
        hp::Interval::from_ratio(1, 12) /
        (hp::Interval::exact(12800) * hp::Interval::log_ui(5));
    sys.c = c_paper.mid_double();
  }
  sys.y = ov.y.value_or(sys.c * x * lx * l3 / l2);
  sys.z = ov.z.value_or(std::pow(x, l3 / (4.0 * l2)));
  sys.s_min = ov.s_min.value_or(std::pow(lx, 20.0));

  if (sys.y <= x) {
    sys.warnings.push_back("target range empty: y = " + std::to_string(sys.y) +
                           " <= x (expected in the paper regime at feasible x)");
  }
  sys.s_primes = primes_in(sys.s_min, sys.z, b0);
  sys.p_primes = primes_in(x / 2.0, x, b0);
  sys.q_primes = primes_in(x, sys.y, b0);
  if (sys.s_primes.empty())
    sys.warnings.push_back("small-prime set S empty on (" +
                           std::to_string(sys.s_min) + ", " +
                           std::to_string(sys.z) + "]");
  if (sys.q_primes.empty())
    sys.warnings.push_back("prime set Q empty on (x, y]");
  return sys;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::uniform_random: return "uniform";
    case Strategy::zero_class: return "zero";
    case Strategy::greedy_cover: return "greedy";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "uniform" || name == "uniform-random") return Strategy::uniform_random;
  if (name == "zero" || name == "zero-class") return Strategy::zero_class;
  if (name == "greedy" || name == "greedy-cover") return Strategy::greedy_cover;
  throw DomainError("unknown strategy '" + name + "'");
}

uint64_t ResidueAssignment::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [s, a] : a_s) {
    mix(s);
    mix(a);
  }
  for (const auto& [p, n] : n_p) {
    mix(p);
    mix(n);
  }
  return h;
}

const char* survivor_mode_name(SurvivorMode m) {
  switch (m) {
    case SurvivorMode::s_sieve: return "S-sieve";
    case SurvivorMode::p_sieve: return "P-sieve";
    case SurvivorMode::sp_sieve: return "SP-sieve";
    case SurvivorMode::full_t: return "full-T";
  }
  return "?";
}

namespace {

// (prime, residue) pairs the survivor sieve removes, per mode.
std::vector<std::pair<uint64_t, uint64_t>> sieve_classes(
    const SieveSystem& sys, const ResidueAssignment& as, SurvivorMode mode) {
  std::vector<std::pair<uint64_t, uint64_t>> classes;
  const bool use_s = mode != SurvivorMode::p_sieve;
  const bool use_p = mode != SurvivorMode::s_sieve;
  if (use_s) {
    for (uint64_t s : sys.s_primes) {
      auto it = as.a_s.find(s);
      if (it == as.a_s.end())
        throw DomainError("missing residue for S prime " + std::to_string(s));
      if (it->second >= s) throw DomainError("residue not reduced mod s");
      classes.emplace_back(s, it->second);
    }
  }
  if (use_p) {
    for (uint64_t p : sys.p_primes) {
      auto it = as.n_p.find(p);
      if (it == as.n_p.end())
        throw DomainError("missing residue for P prime " + std::to_string(p));
      if (it->second >= p) throw DomainError("residue not reduced mod p");
      classes.emplace_back(p, it->second);
    }
  }
  if (mode == SurvivorMode::full_t) {
    // Zero class at every remaining prime <= x, except B0.
    segmented_sieve(0, static_cast<uint64_t>(std::floor(sys.x)))
        .for_each([&](uint64_t p) {
          if (p == sys.b0) return;
          if (as.a_s.count(p) || as.n_p.count(p)) return;
          if (std::binary_search(sys.s_primes.begin(), sys.s_primes.end(), p) ||
              std::binary_search(sys.p_primes.begin(), sys.p_primes.end(), p))
            return;
          classes.emplace_back(p, 0);
        });
  }
  return classes;
}

}  // namespace

SurvivorSet sieve_survivors(const SieveSystem& sys, const ResidueAssignment& as,
                            SurvivorMode mode) {
  SurvivorSet out;
  out.provenance = mode;
  const uint64_t lo = static_cast<uint64_t>(std::floor(sys.x));  // exclusive
  const uint64_t hi = static_cast<uint64_t>(std::floor(sys.y));  // inclusive
  if (hi <= lo) return out;
  if (hi - lo > (uint64_t(1) << 28))
    throw ResourceError("survivor range too large");

  const auto classes = sieve_classes(sys, as, mode);
  const uint64_t span = hi - lo;
  std::vector<uint64_t> removed((span + 63) / 64, 0);

  // Word-aligned chunks so threads never write the same word.
  const uint64_t chunk = uint64_t(1) << 16;
  const int64_t nchunks = static_cast<int64_t>((span + chunk - 1) / chunk);
#pragma omp parallel for schedule(static)
  for (int64_t ci = 0; ci < nchunks; ++ci) {
    const uint64_t idx_lo = uint64_t(ci) * chunk;
    const uint64_t idx_hi = std::min(span, idx_lo + chunk);  // exclusive
    for (const auto& [p, res] : classes) {
      // smallest n > lo + idx_lo with n = res (mod p)
      const uint64_t base = lo + idx_lo;
      uint64_t n = base - (base % p) + res;
      if (n <= base) n += p;
      for (; n - lo - 1 < idx_hi && n <= hi; n += p) {
        const uint64_t i = n - lo - 1;
        removed[i >> 6] |= uint64_t(1) << (i & 63);
      }
    }
  }

  for (uint64_t i = 0; i < span; ++i)
    if (!((removed[i >> 6] >> (i & 63)) & 1)) out.members.push_back(lo + 1 + i);
  return out;
}

std::pair<ResidueAssignment, SurvivorSet> random_construction(
    const SieveSystem& sys, uint64_t seed, Strategy strategy) {
  if (sys.q_primes.empty())
    throw DomainError("Q is empty; override c, y or z to reach a toy regime");

  ResidueAssignment as;
  as.seed = seed;
  as.strategy = strategy;

  switch (strategy) {
    case Strategy::zero_class: {
      for (uint64_t s : sys.s_primes) as.a_s[s] = 0;
      for (uint64_t p : sys.p_primes) as.n_p[p] = 0;
      break;
    }
    case Strategy::uniform_random: {
      std::mt19937_64 rng(seed);
      // Fixed draw order: S ascending, then P ascending.
      for (uint64_t s : sys.s_primes) as.a_s[s] = bounded_draw(rng, s);
      for (uint64_t p : sys.p_primes) as.n_p[p] = bounded_draw(rng, p);
      break;
    }
    case Strategy::greedy_cover: {
      // Start with everything the zero-extension leaves in (x, y], then pick
      // for each class the residue removing the most current survivors.
      ResidueAssignment zero;
      zero.strategy = Strategy::zero_class;
      SieveSystem base = sys;
      base.s_primes.clear();
      base.p_primes.clear();
      SurvivorSet current = sieve_survivors(base, zero, SurvivorMode::full_t);
      auto pick = [&current](uint64_t p) {
        std::vector<uint64_t> hits(p, 0);
        for (uint64_t n : current.members) ++hits[n % p];
        uint64_t best = 0;
        for (uint64_t r = 1; r < p; ++r)
          if (hits[r] > hits[best]) best = r;
        std::vector<uint64_t> next;
        next.reserve(current.members.size());
        for (uint64_t n : current.members)
          if (n % p != best) next.push_back(n);
        current.members.swap(next);
        return best;
      };
      for (uint64_t s : sys.s_primes) as.a_s[s] = pick(s);
      for (uint64_t p : sys.p_primes) as.n_p[p] = pick(p);
      break;
    }
  }
  return {as, sieve_survivors(sys, as, SurvivorMode::full_t)};
}

std::vector<BandRow> survivor_stats(const SurvivorSet& t, double y,
                                    const std::vector<std::pair<double, double>>& bands,
                                    double a_pop, double x, double epsilon) {
  std::vector<BandRow> rows;
  const double ref = a_pop * x / std::log(x);
  for (const auto& [alpha, beta] : bands) {
    if (!(alpha >= 0.0) || !(alpha < beta) || !(beta <= 1.0))
      throw DomainError("band bounds must satisfy 0 <= alpha < beta <= 1");
    BandRow row;
    row.alpha = alpha;
    row.beta = beta;
    const double lo = alpha * y;
    const double hi = beta * y;
    for (uint64_t n : t.members)
      if (static_cast<double>(n) > lo && static_cast<double>(n) <= hi) ++row.count;
    row.upper_band = 5.0 * ref;
    row.lower_band = ref;
    row.short_interval_band = 5.0 * (2.0 * (beta - alpha) + epsilon) * ref;
    rows.push_back(row);
  }
  return rows;
}

std::vector<uint64_t> smooth_residual(uint64_t y, uint64_t z, uint64_t b0,
                                      uint64_t cap) {
  if (y < 1) throw DomainError("requires y >= 1");
  if (z < 2) throw DomainError("requires z >= 2");
  if (y > cap)
    throw ResourceError("smooth enumeration bound " + std::to_string(y) +
                        " exceeds cap " + std::to_string(cap));
  const auto primes = simple_sieve(z).to_vector();
  std::vector<uint64_t> smooth;
  auto gen = [&](auto&& self, size_t idx, uint64_t val) -> void {
    smooth.push_back(val);
    for (size_t i = idx; i < primes.size(); ++i) {
      if (val > y / primes[i]) break;
      self(self, i, val * primes[i]);
    }
  };
  gen(gen, 0, 1);

  std::vector<uint64_t> out;
  if (b0 > 1) {
    for (uint64_t m : smooth)
      for (uint64_t v = m; v <= y; v *= b0) {
        out.push_back(v);
        if (v > y / b0) break;
      }
  } else {
    out = std::move(smooth);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<uint64_t, uint64_t> residue_fiber_sizes(const SieveSystem& sys,
                                                 const ResidueAssignment& as) {
  std::map<uint64_t, uint64_t> sizes;
  for (uint64_t p : sys.p_primes) {
    auto it = as.n_p.find(p);
    if (it == as.n_p.end())
      throw DomainError("missing residue for P prime " + std::to_string(p));
    uint64_t c = 0;
    for (uint64_t q : sys.q_primes)
      if (q % p == it->second) ++c;
    sizes[p] = c;
  }
  return sizes;
}

}  // namespace gaplab
