#include "liftbraid/lift.hpp"

#include <algorithm>
#include <set>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/loops.hpp"
#include "liftbraid/restrict.hpp"

namespace liftbraid {

namespace {

// Curves and intervals are first assembled as braids in the geometric
// (composition) order and then read backwards, which turns them into the
// substitution words the Hurwitz action consumes.

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) throw InvalidInput(std::string(what) + " index out of range");
}

BraidWord make_word(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

// Half-twist conjugated as b^-1 x_base b, kept as (base, b).
struct Twist {
  int base;
  BraidWord conjugator;

  BraidWord braid() const {
    return (conjugator.inverse() * BraidWord::generator(conjugator.strands(), base) *
            conjugator)
        .reduced();
  }
};

Twist geometric_xhat(int n, int i, int j) {
  if (i == j) throw InvalidInput("xhat needs distinct indices");
  if (i > j) std::swap(i, j);
  std::vector<int> b;
  for (int k = i + 1; k < j; ++k) b.push_back(-k);
  return {i, make_word(n, std::move(b))};
}

IntervalRef as_interval(const Twist& t) { return {t.base, t.conjugator.reversed()}; }

CurveRef as_curve(int base, const BraidWord& geometric) {
  return {base, geometric.reduced().reversed()};
}

BraidWord geometric_alpha(int n, int i, int j) {
  if (i == j) return BraidWord(std::max(n, 1), {});
  const BraidWord xh = geometric_xhat(n, i, j).braid();
  return i < j ? xh.inverse() : xh;
}

}  // namespace

CurveRef CurveRef::standard(int n, int j) {
  check_index(n, j, "curve");
  return {j, BraidWord(n, {})};
}

CurveRef CurveRef::alpha(int n, int i, int j) {
  check_index(n, i, "curve");
  check_index(n, j, "curve");
  return as_curve(i, geometric_alpha(n, i, j));
}

CurveRef CurveRef::alpha(int n, int i, int j, int k) {
  check_index(n, i, "curve");
  check_index(n, j, "curve");
  check_index(n, k, "curve");
  if (i == j || j == k) throw InvalidInput("alpha_{i,j,k} needs i != j and j != k");
  const BraidWord xh = geometric_xhat(n, j, k).braid();
  const bool forward = (i < j && j < k) || (j < k && k <= i) || (k < i && i < j);
  return as_curve(i, geometric_alpha(n, i, j) * (forward ? xh : xh.inverse()));
}

CurveRef CurveRef::transported(const BraidWord& v) const { return {base, (v * word).reduced()}; }

IntervalRef IntervalRef::x(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("interval index out of range");
  return {i, BraidWord(n, {})};
}

IntervalRef IntervalRef::x(int n, int i, int j) {
  check_index(n, i, "interval");
  check_index(n, j, "interval");
  if (i == j) throw InvalidInput("x_{i,j} needs distinct indices");
  if (i > j) std::swap(i, j);
  std::vector<int> b;
  for (int k = i + 1; k < j; ++k) b.push_back(k);
  return as_interval({i, make_word(n, std::move(b))});
}

IntervalRef IntervalRef::xhat(int n, int i, int j) {
  check_index(n, i, "interval");
  check_index(n, j, "interval");
  return as_interval(geometric_xhat(n, i, j));
}

IntervalRef IntervalRef::xhat(int n, int i, int j, int k) {
  check_index(n, i, "interval");
  check_index(n, j, "interval");
  check_index(n, k, "interval");
  if (i == k) throw InvalidInput("xhat_{i,j,k} needs i != k");
  if (i > k) std::swap(i, k);
  if (j == i || j == k) return xhat(n, i, k);
  const Twist ij = geometric_xhat(n, i, j);
  const BraidWord jk = geometric_xhat(n, j, k).braid();
  const BraidWord c = (i < j && j < k) ? jk : jk.inverse();
  return as_interval({ij.base, (ij.conjugator * c).reduced()});
}

IntervalRef IntervalRef::transported(const BraidWord& v) const {
  return {base, (v * word).reduced()};
}

bool is_liftable(const MonodromySequence& s, const BraidWord& w) { return act(s, w) == s; }

BraidWord interval_braid(const IntervalRef& x) { return interval_power(x, 1); }

BraidWord interval_power(const IntervalRef& x, int k) {
  const int n = x.word.strands();
  if (x.base < 1 || x.base >= n) throw InvalidInput("interval base out of range");
  return conjugate(BraidWord::generator(n, x.base).power(k), x.word);
}

int interval_type(const MonodromySequence& s, const IntervalRef& x) {
  if (x.base < 1 || x.base >= s.length()) throw InvalidInput("interval base out of range");
  const MonodromySequence t = act(s, x.word);
  const Transposition& l = t.at_position(x.base);
  const Transposition& r = t.at_position(x.base + 1);
  if (l == r) return 1;
  return l.disjoint_from(r) ? 2 : 3;
}

std::vector<BraidWord> theorem_c_generators(int n) {
  if (n < 1) throw InvalidInput("strand count must be positive");
  std::vector<BraidWord> out;
  for (int i = 1; i < n; ++i) out.push_back(BraidWord::generator(n, i).power(3));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j <= n; ++j) out.push_back(interval_power(IntervalRef::x(n, i, j), 2));
  return out;
}

Transposition curve_monodromy(const MonodromySequence& s, const CurveRef& c) {
  return act(s, c.word).at_position(c.base);
}

Transposition reference_alpha_monodromy(int n, int i, int j) {
  check_index(n, i, "curve");
  check_index(n, j, "curve");
  return i <= j ? Transposition(i, j + 1) : Transposition(i + 1, j);
}

Transposition reference_alpha_monodromy(int n, int i, int j, int k) {
  check_index(n, i, "curve");
  check_index(n, j, "curve");
  check_index(n, k, "curve");
  if (i == j || j == k) throw InvalidInput("alpha_{i,j,k} needs i != j and j != k");
  if ((i < j && j < k) || (i <= k && k < j)) return {j + 1, k + 1};
  if ((k < j && j < i) || (j < k && k <= i)) return {j, k};
  if (k <= i && i < j) return {j + 1, k};
  return {j, k + 1};
}

bool is_regular_curve(const MonodromySequence& pn, const CurveRef& c) {
  const int n = pn.length();
  if (n < 2 || !is_connected(pn) || !is_disk(pn))
    throw InvalidInput("regularity is defined over a disk covering with n >= 2");
  const auto sig =
      restriction_signature(act(pn, c.word), RestrictionSpec::make({c.base}, BasePoint::start));
  if (sig.count() != 2) return false;
  const auto& x = sig.blocks[0];
  const auto& y = sig.blocks[1];
  const auto ok = [n](const ComponentBlock& single, const ComponentBlock& disk) {
    return single.trivial() && single.branch_count == 0 &&
           static_cast<int>(disk.sheets.size()) == n && disk.branch_count == n - 1;
  };
  return ok(x, y) || ok(y, x);
}

namespace {

RestrictionSpec system_spec(const std::vector<CurveRef>& sys, int n) {
  std::vector<int> bases;
  for (const auto& c : sys) {
    if (c.word != sys.front().word)
      throw InvalidInput("curves of a system must share one transport word");
    if (c.strands() != std::max(n, 1)) throw InvalidInput("strand count mismatch");
    bases.push_back(c.base);
  }
  auto spec = RestrictionSpec::make(std::move(bases), BasePoint::start);
  spec.validate(n);
  return spec;
}

std::set<int> trivial_sheets(const ComponentSignature& sig) {
  std::set<int> out;
  for (const auto& b : sig.blocks)
    if (b.trivial()) out.insert(b.sheets.front());
  return out;
}

}  // namespace

bool systems_liftable_equivalent(const MonodromySequence& s, const std::vector<CurveRef>& a,
                                 const std::vector<CurveRef>& b) {
  if (a.empty() || a.size() != b.size())
    throw InvalidInput("systems must be nonempty and of equal size");
  const RestrictionSpec sa = system_spec(a, s.length());
  const RestrictionSpec sb = system_spec(b, s.length());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (curve_monodromy(s, a[k]) != curve_monodromy(s, b[k])) return false;
  const auto ga = restriction_signature(act(s, a.front().word), sa);
  const auto gb = restriction_signature(act(s, b.front().word), sb);
  if (ga.nontrivial_count() <= 1 && gb.nontrivial_count() <= 1)
    return trivial_sheets(ga) == trivial_sheets(gb);
  return ga == gb;
}

bool carries_curve(const BraidWord& v, const CurveRef& from, const CurveRef& to) {
  return transported_loop(from.base, v * from.word) == transported_loop(to.base, to.word);
}

}  // namespace liftbraid
