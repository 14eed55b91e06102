#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/errors.hpp"
#include "gaplab/sieve.hpp"

namespace gaplab {

// Overrides for the desk-scale regime. At every machine-feasible x the
// true parameters give an empty small-prime set and an empty target range,
// so runs are labeled paper-regime (no overrides) or toy-regime.
struct SystemOverrides {
  std::optional<double> c;
  std::optional<double> y;
  std::optional<double> z;
  std::optional<double> s_min;
};

struct SieveSystem {
  double x = 0;
  uint64_t b0 = 1;
  double y = 0, z = 0, s_min = 0;
  double c = 0;
  bool paper_regime = true;
  std::vector<uint64_t> s_primes;  // (s_min, z], excluding b0
  std::vector<uint64_t> p_primes;  // (x/2, x], excluding b0
  std::vector<uint64_t> q_primes;  // (x, y], excluding b0
  std::vector<std::string> warnings;
};

// y = c*x*log(x)*log3(x)/log2(x) and z = x^(log3(x)/(4 log2(x))) unless
// overridden; default s_min = log(x)^20. Defaults require log3(x) > 0;
// overriding y and z lifts that requirement.
SieveSystem build_prime_sets(double x, uint64_t b0, const SystemOverrides& ov = {});

enum class Strategy { uniform_random, zero_class, greedy_cover };
const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct ResidueAssignment {
  std::map<uint64_t, uint64_t> a_s;  // residue mod s for s in S
  std::map<uint64_t, uint64_t> n_p;  // residue mod p for p in P
  uint64_t seed = 0;
  Strategy strategy = Strategy::zero_class;
  uint64_t hash() const;  // FNV-1a over the sorted entries
};

enum class SurvivorMode { s_sieve, p_sieve, sp_sieve, full_t };
const char* survivor_mode_name(SurvivorMode m);

struct SurvivorSet {
  std::vector<uint64_t> members;  // sorted, subset of (x, y]
  SurvivorMode provenance = SurvivorMode::full_t;
};

// Sieves (x, y] by the assigned residue classes. Modes s/p/sp use only the
// S and/or P classes; full_t extends the assignment by the zero class at
// every other prime p <= x, p != B0.
SurvivorSet sieve_survivors(const SieveSystem& sys, const ResidueAssignment& as,
                            SurvivorMode mode = SurvivorMode::full_t);

// Draws an assignment by strategy (deterministic in seed) and returns it
// with its full survivor set. Requires a nonempty Q.
std::pair<ResidueAssignment, SurvivorSet> random_construction(
    const SieveSystem& sys, uint64_t seed, Strategy strategy);

struct BandRow {
  double alpha = 0, beta = 0;
  uint64_t count = 0;          // members in (alpha*y, beta*y]
  double upper_band = 0;       // 5A x/log x
  double lower_band = 0;       // A x/log x
  double short_interval_band = 0;  // 5A(2|beta-alpha| + eps) x/log x
};

// Band report: counts are exact, the reference bands are asymptotic
// main terms, reported rather than asserted.
std::vector<BandRow> survivor_stats(const SurvivorSet& t, double y,
                                    const std::vector<std::pair<double, double>>& bands,
                                    double a_pop, double x, double epsilon = 0.01);

// R = {m * b0^j <= y : m z-smooth, j >= 0}, sorted ascending.
std::vector<uint64_t> smooth_residual(uint64_t y, uint64_t z, uint64_t b0,
                                      uint64_t cap = uint64_t(1) << 27);

// Sizes of the induced residue fibers e_p = {q in Q : q = n_p (mod p)}.
std::map<uint64_t, uint64_t> residue_fiber_sizes(const SieveSystem& sys,
                                                 const ResidueAssignment& as);

}  // namespace gaplab
