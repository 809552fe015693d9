#include "liftbraid/hurwitz.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "liftbraid/errors.hpp"

namespace liftbraid {

void act_letter(std::vector<Transposition>& entries, int letter) {
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  assert(letter != 0 && i + 1 < entries.size());
  Transposition& l = entries[i];
  Transposition& r = entries[i + 1];
  if (letter > 0) {
    const Transposition moved = l.conjugated_by(r);
    l = r;
    r = moved;
  } else {
    const Transposition moved = r.conjugated_by(l);
    r = l;
    l = moved;
  }
}

MonodromySequence act(const MonodromySequence& s, const BraidWord& w) {
  if (w.strands() != std::max(s.length(), 1))
    throw InvalidInput("braid on " + std::to_string(w.strands()) +
                       " strands cannot act on a sequence of length " +
                       std::to_string(s.length()));
  std::vector<Transposition> entries = s.entries();
  for (int e : w.letters()) act_letter(entries, e);
  return MonodromySequence(s.degree(), std::move(entries));
}

MonodromySequence elementary_move(const MonodromySequence& s, int i, MoveDirection dir) {
  if (i < 1 || i >= s.length())
    throw InvalidInput("elementary move index " + std::to_string(i) + " out of range");
  std::vector<Transposition> e = s.entries();
  auto& x = e[static_cast<std::size_t>(i - 1)];
  auto& y = e[static_cast<std::size_t>(i)];
  if (x == y || x.disjoint_from(y)) {
    std::swap(x, y);
  } else if (dir == MoveDirection::forward) {
    // x = (a b), y = (b c)  ->  (a c), (a b)
    const int b = x.moves(y.a()) ? y.a() : y.b();
    const Transposition ac(x.other(b), y.other(b));
    y = x;
    x = ac;
  } else {
    // x = (a c), y = (a b)  ->  (a b), (b c)
    const int a = x.moves(y.a()) ? y.a() : y.b();
    const Transposition bc(y.other(a), x.other(a));
    x = y;
    y = bc;
  }
  return MonodromySequence(s.degree(), std::move(e));
}

MonodromySequence apply_moves(const MonodromySequence& s, const MoveWord& moves) {
  MonodromySequence out = s;
  for (const auto& m : moves) out = elementary_move(out, m.position, m.direction);
  return out;
}

BraidWord to_braid(int strands, const MoveWord& moves) {
  std::vector<int> letters;
  letters.reserve(moves.size());
  for (const auto& m : moves)
    letters.push_back(m.direction == MoveDirection::forward ? -m.position : m.position);
  return BraidWord(strands, std::move(letters));
}

MoveWord to_moves(const BraidWord& w) {
  MoveWord out;
  out.reserve(w.size());
  for (int e : w.letters())
    out.push_back({std::abs(e), e < 0 ? MoveDirection::forward : MoveDirection::inverse});
  return out;
}

bool CanonicalizationResult::replays(const MonodromySequence& input) const {
  if (relabel.degree() != input.degree()) return false;
  try {
    return apply_moves(input.relabeled(relabel), moves) == canonical;
  } catch (const InvalidInput&) {
    return false;
  }
}

}  // namespace liftbraid
