#pragma once

#include <vector>

#include "liftbraid/braid.hpp"
#include "liftbraid/monodromy.hpp"

namespace liftbraid {

/// The curve (alpha_base)w: its monodromy is entry `base` of act(S, word).
/// Words here are substitution words, so transporting further by v gives
/// (base, v * word).
struct CurveRef {
  int base = 1;
  BraidWord word;

  static CurveRef standard(int n, int j);
  /// alpha_{i,j}: alpha_i for i == j, otherwise alpha_i moved across the
  /// index 0 interval joining P_i and P_j.
  static CurveRef alpha(int n, int i, int j);
  /// alpha_{i,j,k}, for i != j and j != k.
  static CurveRef alpha(int n, int i, int j, int k);

  CurveRef transported(const BraidWord& v) const;
  int strands() const noexcept { return word.strands(); }

  friend bool operator==(const CurveRef&, const CurveRef&) = default;
};

/// The interval (x_base)w; its half-twist is word * x_base * word^-1.
struct IntervalRef {
  int base = 1;
  BraidWord word;

  static IntervalRef x(int n, int i);
  /// x_{i,j} = (x_i) x_{i+1} ... x_{j-1}; symmetric in i, j.
  static IntervalRef x(int n, int i, int j);
  /// Index 0 interval between P_i and P_j; symmetric, xhat(i, i+1) = x_i.
  static IntervalRef xhat(int n, int i, int j);
  /// Index 1 interval; xhat(i, j, k) = xhat(k, j, i), xhat(i, i, k) = xhat(i, k).
  static IntervalRef xhat(int n, int i, int j, int k);

  IntervalRef transported(const BraidWord& v) const;
  int strands() const noexcept { return word.strands(); }

  friend bool operator==(const IntervalRef&, const IntervalRef&) = default;
};

bool is_liftable(const MonodromySequence& s, const BraidWord& w);

BraidWord interval_braid(const IntervalRef& x);
/// word * x_base^k * word^-1, reduced.
BraidWord interval_power(const IntervalRef& x, int k);

/// 1 if the transported entries at base, base+1 coincide, 2 if disjoint,
/// 3 if they share one sheet.
int interval_type(const MonodromySequence& s, const IntervalRef& x);

/// x_i^3 for 1 <= i < n, then x_{i,j}^2 for i + 1 < j <= n.
std::vector<BraidWord> theorem_c_generators(int n);

Transposition curve_monodromy(const MonodromySequence& s, const CurveRef& c);

/// Closed-form monodromies of alpha_{i,j} and alpha_{i,j,k} over p_n.
Transposition reference_alpha_monodromy(int n, int i, int j);
Transposition reference_alpha_monodromy(int n, int i, int j, int k);

/// Restriction of p_n along c is p_{n-1} plus one trivial sheet.
bool is_regular_curve(const MonodromySequence& pn, const CurveRef& c);

/// Decides whether some liftable braid carries a[k] to b[k] for every k.
/// Each list must consist of transports of distinct standard curves by one
/// shared word.
bool systems_liftable_equivalent(const MonodromySequence& s, const std::vector<CurveRef>& a,
                                 const std::vector<CurveRef>& b);

/// Whether transporting `from` by v gives `to` as an isotopy class, compared
/// through loop words in the free group of the punctured disk.
bool carries_curve(const BraidWord& v, const CurveRef& from, const CurveRef& to);

}  // namespace liftbraid
