#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liftbraid/braid.hpp"
#include "liftbraid/monodromy.hpp"

namespace liftbraid {

/// Standard presentation of B_n on x_1, ..., x_{n-1}: braid relators
/// x_i x_{i+1} x_i x_{i+1}^-1 x_i^-1 x_{i+1}^-1 and commutators for
/// |i - j| >= 2. Relators use the BraidWord letter convention.
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

Presentation braid_presentation(int n);

/// Complete coset table: rows[c][col] is the coset reached from c, with
/// column 2(i-1) for x_i and 2(i-1)+1 for x_i^-1. Coset 0 is the subgroup.
struct CosetTable {
  int generators = 0;
  std::vector<std::vector<int>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  /// Coset reached from c by a word, letters applied left to right.
  int follow(int c, const BraidWord& w) const;
};

struct CosetEnumeration {
  std::size_t index = 0;
  CosetTable table;
};

/// Todd-Coxeter (HLT with lookahead) for the subgroup of B_n generated by
/// the words. Throws Inconclusive once max_cosets live cosets are needed
/// and lookahead frees none.
CosetEnumeration todd_coxeter(int n, const std::vector<BraidWord>& subgroup,
                              std::size_t max_cosets);

struct TheoremCReport {
  int n = 1;
  std::size_t generator_count = 0;
  bool generators_liftable = false;
  std::size_t orbit_index = 0;
  std::optional<std::size_t> tc_index;  // absent when liftability failed
  bool pass = false;
};

/// Checks that the x_i^3, x_{i,j}^2 words lift through p_n and that they
/// enumerate to the orbit index of p_n. max_cosets = 0 uses 64 times the
/// orbit-size bound. Inconclusive propagates.
TheoremCReport verify_theorem_c(int n, std::size_t max_cosets = 0);

/// Liftable powers of every interval (x_i)w with w freely reduced of
/// length <= max_word_length, deduplicated.
std::vector<BraidWord> interval_power_generators(const MonodromySequence& s,
                                                 int max_word_length);

struct IntervalGenerationReport {
  std::size_t generator_count = 0;
  std::size_t orbit_index = 0;
  std::size_t tc_index = 0;
  bool generates = false;
};

/// Whether the short-word interval powers already generate L_S, decided by
/// comparing indices. Throws Inconclusive like todd_coxeter.
IntervalGenerationReport verify_interval_generation(const MonodromySequence& s,
                                                    int max_word_length,
                                                    std::size_t max_cosets = 0);

}  // namespace liftbraid
