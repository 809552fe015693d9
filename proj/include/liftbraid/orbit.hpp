#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "liftbraid/braid.hpp"
#include "liftbraid/monodromy.hpp"

namespace liftbraid {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// (d(d-1)/2)^n, saturating at SIZE_MAX.
std::size_t index_bound(int degree, int length);

/// Breadth-first Hurwitz orbit with its spanning tree. Element 0 is the
/// root; generators are tried in the order +1, -1, +2, -2, ...
class OrbitTable {
 public:
  const MonodromySequence& root() const { return elements_.front(); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<MonodromySequence>& elements() const noexcept { return elements_; }

  /// Position of s in elements(), or -1.
  std::ptrdiff_t find(const MonodromySequence& s) const;
  /// Tree word carrying the root to element k.
  BraidWord tree_word(std::size_t k) const;
  /// Parent element and the letter leading from it (root: parent -1, letter 0).
  std::ptrdiff_t parent(std::size_t k) const { return parent_[k]; }
  int letter(std::size_t k) const { return letter_[k]; }

 private:
  friend OrbitTable hurwitz_orbit(const MonodromySequence&, std::size_t);

  std::vector<MonodromySequence> elements_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<int> letter_;
  std::unordered_map<MonodromySequence, std::size_t, MonodromySequenceHash> index_;
  std::size_t cap_ = kNoCap;
};

/// Throws CapExceeded once more than cap elements are found. cap = 0 means
/// index_bound(d, n).
OrbitTable hurwitz_orbit(const MonodromySequence& s, std::size_t cap = 0);

/// Index of the liftable subgroup L_S in B_n, i.e. the orbit size.
std::size_t stabilizer_index(const MonodromySequence& s, std::size_t cap = 0);

/// Schreier generators t_u g t_{ug}^-1 of L_S, freely reduced, trivial words
/// dropped and a word omitted when it or its inverse was already listed.
std::vector<BraidWord> schreier_generators(const MonodromySequence& s, std::size_t cap = 0);
std::vector<BraidWord> schreier_generators(const OrbitTable& orbit);

struct SequenceClass {
  MonodromySequence representative;  // lexicographically least member
  std::uint64_t count = 0;
  CycleType omega;
  bool connected = false;
};

struct Classification {
  int degree = 1;
  int length = 0;
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  std::vector<SequenceClass> classes;  // ordered by representative
};

/// Every length-n transposition sequence on d sheets, grouped into classes
/// under Hurwitz moves and simultaneous sheet renumbering. Throws
/// CapExceeded when (d(d-1)/2)^n > cap (cap = 0: 10^7).
Classification classify_all(int degree, int length, std::size_t cap = 0);

}  // namespace liftbraid
