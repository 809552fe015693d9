#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "liftbraid/permutation.hpp"

namespace liftbraid {

/// Monodromy of a simple branched covering of the disk with respect to a
/// fundamental system: a degree d and the ordered transpositions
/// tau_1, ..., tau_n. Equivalently an edge-ordered graph on d vertices.
///
/// Branch positions are 1-based in every public operation that takes one
/// (curve bases, restriction indices, braid letters); operator[] is the
/// usual 0-based container access.
class MonodromySequence {
 public:
  MonodromySequence(int degree, std::vector<Transposition> entries);
  MonodromySequence(int degree, std::initializer_list<std::pair<int, int>> pairs);

  /// The disk covering p_n: (1 2), (2 3), ..., (n n+1) on n + 1 sheets.
  static MonodromySequence disk(int n);

  int degree() const noexcept { return degree_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Transposition>& entries() const noexcept { return entries_; }
  const Transposition& operator[](std::size_t i) const { return entries_[i]; }
  /// Entry at 1-based branch position j.
  const Transposition& at_position(int j) const;

  /// Every entry conjugated by sigma (sheet k renamed (k)sigma).
  MonodromySequence relabeled(const Permutation& sigma) const;

  std::string to_string() const;

  friend bool operator==(const MonodromySequence&, const MonodromySequence&) = default;
  friend auto operator<=>(const MonodromySequence&, const MonodromySequence&) = default;

 private:
  int degree_;
  std::vector<Transposition> entries_;
};

struct MonodromySequenceHash {
  std::size_t operator()(const MonodromySequence& s) const noexcept;
};

/// One connected component: its sheets (ascending) and how many entries
/// are supported inside it.
struct ComponentBlock {
  std::vector<int> sheets;
  int branch_count = 0;

  bool trivial() const noexcept { return sheets.size() == 1; }
  friend bool operator==(const ComponentBlock&, const ComponentBlock&) = default;
};

/// Components ordered by least sheet; singletons included.
struct ComponentSignature {
  std::vector<ComponentBlock> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t nontrivial_count() const noexcept;
  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
};

struct ComponentSurface {
  std::vector<int> sheets;
  int euler = 0;
  int boundary = 0;
  int genus = 0;
};

struct SurfaceInvariants {
  int euler = 0;
  int boundary = 0;
  std::vector<ComponentSurface> components;
};

/// tau_1 * tau_2 * ... * tau_n (apply-left-first); identity for n = 0.
Permutation total_monodromy(const MonodromySequence& s);

/// Cycle type of the total monodromy.
CycleType omega_class(const MonodromySequence& s);

ComponentSignature components(const MonodromySequence& s);
bool is_connected(const MonodromySequence& s);

/// Euler characteristic, boundary circle count and per-component genus
/// of the covering surface.
SurfaceInvariants surface_invariants(const MonodromySequence& s);

/// Equivalence of connected coverings: same degree, same length, same
/// total monodromy class. Throws InvalidInput on disconnected input.
bool is_equivalent(const MonodromySequence& s, const MonodromySequence& t);

/// Whether a connected covering is the disk covering (degree == length + 1).
bool is_disk(const MonodromySequence& s);

/// Whether a connected covering of this shape exists.
bool is_realizable(int degree, int length, const CycleType& omega);

/// The canonical connected sequence with the given degree, length and
/// total monodromy class:
///
///   chain (1 2)..(l1-1 l1), pair (l1 l1+1)^2, chain ..., up to (lm-1 lm);
///   pairs (lm lm+1)^2, ..., (d-1 d)^2;
///   (n - m + lm)/2 - d + 1 further pairs (d-1 d)^2,
///
/// where l_i are the partial sums of the cycle lengths. For the identity
/// class the chains are empty and lm = m = 1.
///
/// Throws NotRealizable when no such covering exists.
MonodromySequence canonical_target(int degree, int length, const CycleType& omega);

}  // namespace liftbraid
