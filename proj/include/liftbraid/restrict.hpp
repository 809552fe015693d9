#pragma once

#include <vector>

#include "liftbraid/monodromy.hpp"

namespace liftbraid {

/// Where the restricted covering keeps its base point: the start or the end
/// of the removed arcs' common neighbourhood.
enum class BasePoint { start, end };

struct RestrictionSpec {
  std::vector<int> indices;  // 1-based, strictly increasing
  BasePoint base = BasePoint::start;

  /// Sorts indices; throws InvalidInput on empty or repeated indices.
  static RestrictionSpec make(std::vector<int> indices, BasePoint base = BasePoint::start);
  /// Throws InvalidInput unless every index lies in 1..n.
  void validate(int n) const;
};

/// Monodromy of the restriction along the curves alpha_i, i in spec.indices:
/// the surviving entries, each conjugated by the removed entries between it
/// and the base point. Keeps all d sheets.
MonodromySequence restrict(const MonodromySequence& s, const RestrictionSpec& spec);

/// start: pi * t_{i_k} * ... * t_{i_1}; end: t_{i_k} * ... * t_{i_1} * pi.
Permutation restricted_total_monodromy(const MonodromySequence& s, const RestrictionSpec& spec);

ComponentSignature restriction_signature(const MonodromySequence& s, const RestrictionSpec& spec);

}  // namespace liftbraid
