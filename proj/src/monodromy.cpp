#include "liftbraid/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liftbraid/errors.hpp"

namespace liftbraid {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n + 1)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

void require_connected(const MonodromySequence& s, const char* op) {
  if (!is_connected(s))
    throw InvalidInput(std::string(op) + " requires a connected covering");
}

}  // namespace

MonodromySequence::MonodromySequence(int degree, std::vector<Transposition> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree_ < 1) throw InvalidInput("degree must be positive");
  for (const auto& t : entries_)
    if (t.b() > degree_)
      throw InvalidInput("transposition " + t.to_string() + " exceeds degree " +
                         std::to_string(degree_));
}

MonodromySequence::MonodromySequence(int degree,
                                     std::initializer_list<std::pair<int, int>> pairs)
    : MonodromySequence(degree, [&] {
        std::vector<Transposition> v;
        v.reserve(pairs.size());
        for (auto [a, b] : pairs) v.emplace_back(a, b);
        return v;
      }()) {}

MonodromySequence MonodromySequence::disk(int n) {
  if (n < 0) throw InvalidInput("branch count must be nonnegative");
  std::vector<Transposition> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(i, i + 1);
  return MonodromySequence(n + 1, std::move(v));
}

const Transposition& MonodromySequence::at_position(int j) const {
  if (j < 1 || j > length()) throw InvalidInput("branch position out of range");
  return entries_[static_cast<std::size_t>(j - 1)];
}

MonodromySequence MonodromySequence::relabeled(const Permutation& sigma) const {
  if (sigma.degree() != degree_) throw InvalidInput("relabeling degree mismatch");
  std::vector<Transposition> v;
  v.reserve(entries_.size());
  for (const auto& t : entries_) v.push_back(t.relabeled(sigma));
  return MonodromySequence(degree_, std::move(v));
}

std::string MonodromySequence::to_string() const {
  std::string s = "d=" + std::to_string(degree_) + " [";
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s += (i ? "," : "") + entries_[i].to_string();
  return s + "]";
}

std::size_t MonodromySequenceHash::operator()(const MonodromySequence& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.degree()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& t : s.entries()) {
    std::size_t v = static_cast<std::size_t>(t.a()) * 1031u + static_cast<std::size_t>(t.b());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t ComponentSignature::nontrivial_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return !b.trivial(); }));
}

Permutation total_monodromy(const MonodromySequence& s) {
  std::vector<int> im(static_cast<std::size_t>(s.degree()));
  std::iota(im.begin(), im.end(), 1);
  for (const auto& t : s.entries())
    for (int& v : im) v = t(v);
  return Permutation::from_images(std::move(im));
}

CycleType omega_class(const MonodromySequence& s) { return cycle_type(total_monodromy(s)); }

ComponentSignature components(const MonodromySequence& s) {
  DisjointSets ds(s.degree());
  for (const auto& t : s.entries()) ds.unite(t.a(), t.b());
  ComponentSignature sig;
  std::vector<int> block_of(static_cast<std::size_t>(s.degree() + 1), -1);
  for (int k = 1; k <= s.degree(); ++k) {
    int root = ds.find(k);
    auto& slot = block_of[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(sig.blocks.size());
      sig.blocks.emplace_back();
    }
    sig.blocks[static_cast<std::size_t>(slot)].sheets.push_back(k);
  }
  for (const auto& t : s.entries())
    ++sig.blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(ds.find(t.a()))])]
          .branch_count;
  return sig;
}

bool is_connected(const MonodromySequence& s) { return components(s).count() == 1; }

SurfaceInvariants surface_invariants(const MonodromySequence& s) {
  SurfaceInvariants inv;
  const Permutation total = total_monodromy(s);
  const auto cycles = total.cycles();
  inv.euler = s.degree() - s.length();
  inv.boundary = static_cast<int>(cycles.size());
  for (const auto& block : components(s).blocks) {
    ComponentSurface c;
    c.sheets = block.sheets;
    c.euler = static_cast<int>(block.sheets.size()) - block.branch_count;
    // cycles never straddle components, so test membership by first element
    for (const auto& cyc : cycles)
      if (std::binary_search(block.sheets.begin(), block.sheets.end(), cyc.front())) ++c.boundary;
    const int twice_genus = 2 - c.boundary - c.euler;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("inconsistent component invariants for " + s.to_string());
    c.genus = twice_genus / 2;
    inv.components.push_back(std::move(c));
  }
  return inv;
}

bool is_equivalent(const MonodromySequence& s, const MonodromySequence& t) {
  require_connected(s, "is_equivalent");
  require_connected(t, "is_equivalent");
  return s.degree() == t.degree() && s.length() == t.length() && omega_class(s) == omega_class(t);
}

bool is_disk(const MonodromySequence& s) {
  require_connected(s, "is_disk");
  return s.degree() == s.length() + 1;
}

namespace {

struct TargetShape {
  std::vector<int> partial_sums;  // l_1, ..., l_m (or {1} for the identity)
  int m = 1;
  int extra_pairs = 0;
};

// Empty optional-like result encoded by m == 0.
TargetShape shape_of(int degree, int length, const CycleType& omega) {
  if (omega.degree != degree) throw InvalidInput("cycle type degree does not match");
  (void)CycleType::make(omega.degree, omega.parts);  // validates parts
  if (length < 0) throw InvalidInput("length must be nonnegative");
  TargetShape shape;
  if (degree == 1) {
    shape.m = length == 0 ? 1 : 0;
    shape.partial_sums = {1};
    return shape;
  }
  if (length == 0) {
    shape.m = 0;
    return shape;
  }
  if (omega.parts.empty()) {
    shape.partial_sums = {1};
    shape.m = 1;
  } else {
    std::vector<int> parts = omega.parts;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::partial_sum(parts.begin(), parts.end(), std::back_inserter(shape.partial_sums));
    shape.m = static_cast<int>(parts.size());
  }
  const int lm = shape.partial_sums.back();
  const int num = length - shape.m + lm;
  if (num % 2 != 0 || num / 2 - degree + 1 < 0) {
    shape.m = 0;
    return shape;
  }
  shape.extra_pairs = num / 2 - degree + 1;
  return shape;
}

}  // namespace

bool is_realizable(int degree, int length, const CycleType& omega) {
  return shape_of(degree, length, omega).m > 0;
}

MonodromySequence canonical_target(int degree, int length, const CycleType& omega) {
  const TargetShape shape = shape_of(degree, length, omega);
  if (shape.m == 0)
    throw NotRealizable("no connected covering with d=" + std::to_string(degree) +
                        ", n=" + std::to_string(length) + ", omega=" + omega.to_string());
  std::vector<Transposition> out;
  out.reserve(static_cast<std::size_t>(length));
  const int lm = shape.partial_sums.back();
  if (!omega.parts.empty()) {
    int start = 1;
    for (std::size_t i = 0; i < shape.partial_sums.size(); ++i) {
      const int l = shape.partial_sums[i];
      for (int k = start; k < l; ++k) out.emplace_back(k, k + 1);
      if (i + 1 < shape.partial_sums.size()) {
        out.emplace_back(l, l + 1);
        out.emplace_back(l, l + 1);
      }
      start = l + 1;
    }
  }
  for (int k = lm; k < degree; ++k) {
    out.emplace_back(k, k + 1);
    out.emplace_back(k, k + 1);
  }
  for (int q = 0; q < 2 * shape.extra_pairs; ++q) out.emplace_back(degree - 1, degree);
  return MonodromySequence(degree, std::move(out));
}

}  // namespace liftbraid
