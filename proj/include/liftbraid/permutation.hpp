#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace liftbraid {

/// Bijection of {1, ..., d}. Composition is apply-left-first:
/// (k)(s * t) == ((k)s)t, matching the right-action notation used
/// throughout the library.
class Permutation {
 public:
  /// Identity on {1, ..., degree}.
  explicit Permutation(int degree = 1);

  /// images[k - 1] is the image of k. Throws InvalidInput unless bijective.
  static Permutation from_images(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// All cycles, fixed points included, each starting at its least element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A transposition (a b) with 1 <= a < b, stored normalized.
class Transposition {
 public:
  Transposition(int a, int b);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  bool moves(int k) const noexcept { return k == a_ || k == b_; }
  int operator()(int k) const noexcept { return k == a_ ? b_ : (k == b_ ? a_ : k); }
  bool disjoint_from(const Transposition& t) const noexcept {
    return !t.moves(a_) && !t.moves(b_);
  }
  /// The endpoint other than k; k must be moved.
  int other(int k) const noexcept { return k == a_ ? b_ : a_; }

  /// t^-1 * this * t, i.e. the transposition of the images under t.
  Transposition conjugated_by(const Transposition& t) const { return {t(a_), t(b_)}; }
  Transposition relabeled(const Permutation& sigma) const { return {sigma(a_), sigma(b_)}; }

  Permutation as_permutation(int degree) const;
  std::string to_string() const;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;

 private:
  int a_;
  int b_;
};

/// Cycle type of a permutation: nontrivial cycle lengths, descending.
struct CycleType {
  int degree = 1;
  std::vector<int> parts;

  /// Throws InvalidInput unless every part is >= 2 and they fit in degree.
  static CycleType make(int degree, std::vector<int> parts);

  bool is_identity() const noexcept { return parts.empty(); }
  int moved_points() const noexcept;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

}  // namespace liftbraid
