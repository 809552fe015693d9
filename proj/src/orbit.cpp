#include "liftbraid/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"

namespace liftbraid {

std::size_t index_bound(int degree, int length) {
  if (degree < 1 || length < 0) throw InvalidInput("invalid covering shape");
  const auto m = static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree - 1) / 2;
  std::size_t out = 1;
  for (int i = 0; i < length; ++i) {
    if (m != 0 && out > kNoCap / m) return kNoCap;
    out *= m;
  }
  return out;
}

std::ptrdiff_t OrbitTable::find(const MonodromySequence& s) const {
  const auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

BraidWord OrbitTable::tree_word(std::size_t k) const {
  std::vector<int> letters;
  for (auto v = static_cast<std::ptrdiff_t>(k); parent_[static_cast<std::size_t>(v)] >= 0;
       v = parent_[static_cast<std::size_t>(v)])
    letters.push_back(letter_[static_cast<std::size_t>(v)]);
  std::reverse(letters.begin(), letters.end());
  return BraidWord(std::max(root().length(), 1), std::move(letters));
}

namespace {

std::vector<int> generator_letters(int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

}  // namespace

OrbitTable hurwitz_orbit(const MonodromySequence& s, std::size_t cap) {
  if (cap == 0) cap = index_bound(s.degree(), s.length());
  OrbitTable t;
  t.cap_ = cap;
  t.elements_.push_back(s);
  t.parent_.push_back(-1);
  t.letter_.push_back(0);
  t.index_.emplace(s, 0);
  const auto letters = generator_letters(s.length());
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (int g : letters) {
      std::vector<Transposition> e = t.elements_[head].entries();
      act_letter(e, g);
      MonodromySequence next(s.degree(), std::move(e));
      if (t.index_.contains(next)) continue;
      if (t.elements_.size() >= cap)
        throw CapExceeded("Hurwitz orbit exceeds " + std::to_string(cap) + " elements", cap);
      t.index_.emplace(next, t.elements_.size());
      t.elements_.push_back(std::move(next));
      t.parent_.push_back(static_cast<std::ptrdiff_t>(head));
      t.letter_.push_back(g);
    }
  }
  return t;
}

std::size_t stabilizer_index(const MonodromySequence& s, std::size_t cap) {
  return hurwitz_orbit(s, cap).size();
}

std::vector<BraidWord> schreier_generators(const OrbitTable& orbit) {
  const MonodromySequence& root = orbit.root();
  const int strands = std::max(root.length(), 1);
  std::vector<BraidWord> out;
  std::set<std::vector<int>> seen;
  for (std::size_t u = 0; u < orbit.size(); ++u) {
    const BraidWord tu = orbit.tree_word(u);
    for (int g : generator_letters(root.length())) {
      std::vector<Transposition> e = orbit.elements()[u].entries();
      act_letter(e, g);
      const auto v = orbit.find(MonodromySequence(root.degree(), std::move(e)));
      const BraidWord w = (tu * BraidWord::generator(strands, g) *
                           orbit.tree_word(static_cast<std::size_t>(v)).inverse())
                              .reduced();
      if (w.empty() || seen.contains(w.letters()) || seen.contains(w.inverse().letters()))
        continue;
      seen.insert(w.letters());
      out.push_back(w);
    }
  }
  return out;
}

std::vector<BraidWord> schreier_generators(const MonodromySequence& s, std::size_t cap) {
  return schreier_generators(hurwitz_orbit(s, cap));
}

namespace {

struct Codec {
  int degree;
  int length;
  std::vector<Transposition> alphabet;  // lexicographic
  std::vector<std::vector<int>> index_of;

  Codec(int d, int n) : degree(d), length(n) {
    index_of.assign(static_cast<std::size_t>(d + 1), std::vector<int>(static_cast<std::size_t>(d + 1), -1));
    for (int a = 1; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b) {
        index_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            static_cast<int>(alphabet.size());
        alphabet.emplace_back(a, b);
      }
  }

  std::uint64_t radix() const { return alphabet.size(); }

  std::vector<Transposition> decode(std::uint64_t code) const {
    std::vector<Transposition> out(static_cast<std::size_t>(length), Transposition(1, 2));
    for (int k = length - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = alphabet[code % radix()];
      code /= radix();
    }
    return out;
  }

  std::uint64_t encode(const std::vector<Transposition>& s) const {
    std::uint64_t code = 0;
    for (const auto& t : s)
      code = code * radix() +
             static_cast<std::uint64_t>(
                 index_of[static_cast<std::size_t>(t.a())][static_cast<std::size_t>(t.b())]);
    return code;
  }
};

std::uint64_t find_root(std::vector<std::uint64_t>& p, std::uint64_t x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

}  // namespace

Classification classify_all(int degree, int length, std::size_t cap) {
  if (degree < 1 || length < 0) throw InvalidInput("invalid covering shape");
  if (cap == 0) cap = 10'000'000;
  const std::size_t total = index_bound(degree, length);
  if (total > cap)
    throw CapExceeded("enumeration of " + std::to_string(total) + " sequences exceeds cap", cap);
  Classification out;
  out.degree = degree;
  out.length = length;
  out.total = total;
  if (total == 0) return out;

  const Codec codec(degree, length);
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  const auto unite = [&](std::uint64_t a, std::uint64_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<Permutation> relabelings;
  if (degree >= 2) {
    std::vector<int> swap12(static_cast<std::size_t>(degree));
    std::iota(swap12.begin(), swap12.end(), 1);
    std::swap(swap12[0], swap12[1]);
    relabelings.push_back(Permutation::from_images(std::move(swap12)));
    std::vector<int> rotate(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) rotate[static_cast<std::size_t>(k - 1)] = k % degree + 1;
    relabelings.push_back(Permutation::from_images(std::move(rotate)));
  }

  for (std::uint64_t code = 0; code < total; ++code) {
    const auto s = codec.decode(code);
    for (int i = 1; i < length; ++i) {
      auto t = s;
      act_letter(t, i);
      unite(code, codec.encode(t));
    }
    for (const auto& sigma : relabelings) {
      auto t = s;
      for (auto& x : t) x = x.relabeled(sigma);
      unite(code, codec.encode(t));
    }
  }

  // Roots are class minima because unite keeps the smaller code, and code
  // order is lexicographic order of the sequences.
  std::unordered_map<std::uint64_t, std::size_t> slot;
  for (std::uint64_t code = 0; code < total; ++code) {
    const std::uint64_t r = find_root(parent, code);
    auto [it, fresh] = slot.emplace(r, out.classes.size());
    if (fresh) {
      MonodromySequence rep(degree, codec.decode(r));
      SequenceClass c{rep, 0, omega_class(rep), is_connected(rep)};
      out.classes.push_back(std::move(c));
    }
    ++out.classes[it->second].count;
  }
  for (const auto& c : out.classes)
    if (c.connected) out.connected += c.count;
  return out;
}

}  // namespace liftbraid
