#include "liftbraid/restrict.hpp"

#include <algorithm>

#include "liftbraid/errors.hpp"

namespace liftbraid {

RestrictionSpec RestrictionSpec::make(std::vector<int> indices, BasePoint base) {
  if (indices.empty()) throw InvalidInput("restriction needs at least one index");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw InvalidInput("repeated restriction index");
  return {std::move(indices), base};
}

void RestrictionSpec::validate(int n) const {
  if (indices.empty()) throw InvalidInput("restriction needs at least one index");
  if (!std::is_sorted(indices.begin(), indices.end()) ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw InvalidInput("restriction indices must be strictly increasing");
  if (indices.front() < 1 || indices.back() > n)
    throw InvalidInput("restriction index out of range 1.." + std::to_string(n));
}

MonodromySequence restrict(const MonodromySequence& s, const RestrictionSpec& spec) {
  spec.validate(s.length());
  const auto& I = spec.indices;
  std::vector<Transposition> out;
  out.reserve(static_cast<std::size_t>(s.length()) - I.size());
  for (int j = 1; j <= s.length(); ++j) {
    if (std::binary_search(I.begin(), I.end(), j)) continue;
    Transposition t = s.at_position(j);
    const auto split = std::lower_bound(I.begin(), I.end(), j);
    if (spec.base == BasePoint::start) {
      for (auto it = split; it != I.begin();) t = t.conjugated_by(s.at_position(*--it));
    } else {
      for (auto it = split; it != I.end(); ++it) t = t.conjugated_by(s.at_position(*it));
    }
    out.push_back(t);
  }
  return MonodromySequence(s.degree(), std::move(out));
}

Permutation restricted_total_monodromy(const MonodromySequence& s, const RestrictionSpec& spec) {
  spec.validate(s.length());
  Permutation removed(s.degree());
  for (auto it = spec.indices.rbegin(); it != spec.indices.rend(); ++it)
    removed = removed * s.at_position(*it).as_permutation(s.degree());
  const Permutation pi = total_monodromy(s);
  return spec.base == BasePoint::start ? pi * removed : removed * pi;
}

ComponentSignature restriction_signature(const MonodromySequence& s, const RestrictionSpec& spec) {
  return components(restrict(s, spec));
}

}  // namespace liftbraid
