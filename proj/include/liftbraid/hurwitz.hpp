#pragma once

#include <vector>

#include "liftbraid/braid.hpp"
#include "liftbraid/monodromy.hpp"
#include "liftbraid/permutation.hpp"

namespace liftbraid {

/// Right Hurwitz action. x_i sends (t_i, t_{i+1}) to
/// (t_{i+1}, t_{i+1} t_i t_{i+1}); x_i^-1 sends it to (t_i t_{i+1} t_i, t_i).
/// The word's strand count must equal the length of s (1 for the empty
/// sequence).
MonodromySequence act(const MonodromySequence& s, const BraidWord& w);

/// In-place single letter; no range checking beyond debug asserts.
void act_letter(std::vector<Transposition>& entries, int letter);

enum class MoveDirection { forward, inverse };

struct ElementaryMove {
  int position;  // 1-based
  MoveDirection direction;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

using MoveWord = std::vector<ElementaryMove>;

/// O_i: swap when t_i, t_{i+1} are equal or disjoint, otherwise
/// (a b),(b c) -> (a c),(a b).
MonodromySequence elementary_move(const MonodromySequence& s, int i, MoveDirection dir);
MonodromySequence apply_moves(const MonodromySequence& s, const MoveWord& moves);

/// The braid word whose action equals the moves (O_i forward is x_i^-1).
BraidWord to_braid(int strands, const MoveWord& moves);
MoveWord to_moves(const BraidWord& w);

struct CanonicalizationResult {
  Permutation relabel;
  MoveWord moves;
  MonodromySequence canonical;

  /// Whether relabeling input by relabel and applying moves gives canonical.
  bool replays(const MonodromySequence& input) const;
};

/// Reduces a connected sequence to canonical_target(d, n, omega) by a sheet
/// renumbering followed by elementary moves. Throws InvalidInput when s is
/// disconnected.
CanonicalizationResult canonicalize(const MonodromySequence& s);

}  // namespace liftbraid
