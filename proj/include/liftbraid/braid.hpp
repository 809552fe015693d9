#pragma once

#include <compare>
#include <string>
#include <vector>

namespace liftbraid {

/// A word in the standard generators of B_n. Letter +i is x_i, -i its
/// inverse. Words act on the right, letters applied left to right.
class BraidWord {
 public:
  /// Empty word on one strand.
  BraidWord() = default;
  /// Throws InvalidInput on a zero letter or |letter| >= strands.
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord generator(int strands, int letter);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  /// Free reduction: cancels adjacent e, -e until none remain.
  BraidWord reduced() const;
  /// k-fold concatenation; negative k uses the inverse.
  BraidWord power(int k) const;
  BraidWord reversed() const;

  /// Juxtaposition (this first, then rhs), unreduced.
  BraidWord operator*(const BraidWord& rhs) const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// u * x * u^-1, freely reduced.
BraidWord conjugate(const BraidWord& x, const BraidWord& u);

}  // namespace liftbraid
