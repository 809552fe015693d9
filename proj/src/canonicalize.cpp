#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <optional>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"

namespace liftbraid {

namespace {

class Reducer {
 public:
  explicit Reducer(std::vector<Transposition> entries) : s_(std::move(entries)) {}

  void reduce(int len, int top) {
    if (len == 0 || top <= 2) return;
    const int np = collect_top(len, top);
    const int h = s_[static_cast<std::size_t>(len - 1)].other(top);
    if (h != top - 1) retarget_tail(np, len, h, top);
    reduce(np, top - 1);
    fix_excess(np, len, top);
  }

  std::vector<Transposition>&& take_entries() { return std::move(s_); }
  std::vector<int>&& take_letters() { return std::move(letters_); }

 private:
  const Transposition& at(int k) const { return s_[static_cast<std::size_t>(k)]; }

  void apply(int letter) {
    act_letter(s_, letter);
    letters_.push_back(letter);
  }

  // Moves every transposition touching `top` into a block at the end of
  // [0, len) and makes that block constant. Returns the block start.
  int collect_top(int len, int top) {
    for (;;) {
      int tail = len;
      while (tail > 0 && at(tail - 1).moves(top)) --tail;
      for (;;) {
        int k = tail - 1;
        while (k >= 0 && !at(k).moves(top)) --k;
        if (k < 0) break;
        for (; k < tail - 1; ++k) {
          const int a = at(k).other(top);
          apply(at(k + 1).moves(a) ? k + 1 : -(k + 1));
        }
        --tail;
      }
      bool merged = false;
      for (int k = tail; k < len - 1; ++k) {
        if (at(k) != at(k + 1)) {
          apply(-(k + 1));
          merged = true;
          break;
        }
      }
      if (!merged) return tail;
    }
  }

  std::vector<int> shortest_path(int np, int from, int to) const {
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (int k = 0; k < np; ++k) {
      adj[at(k).a()].emplace_back(at(k).b(), k);
      adj[at(k).b()].emplace_back(at(k).a(), k);
    }
    std::map<int, std::optional<std::pair<int, int>>> prev{{from, std::nullopt}};
    std::vector<int> frontier{from};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier)
        for (auto [v, k] : adj[u])
          if (!prev.contains(v)) {
            prev[v] = std::make_pair(u, k);
            next.push_back(v);
          }
      frontier = std::move(next);
    }
    std::vector<int> path;
    for (int v = to; prev.at(v);) {
      auto [u, k] = *prev.at(v);
      path.push_back(k);
      v = u;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // The tail block is (h top)^r with h != top - 1; turn it into (top-1 top)^r.
  void retarget_tail(int np, int len, int h, int top) {
    const Transposition want(h, top - 1);
    int last = -1;
    for (;;) {
      for (int k = 0; k < np; ++k)
        if (at(k) == want) last = k;
      if (last >= 0) break;
      const auto path = shortest_path(np, h, top - 1);
      int p0 = path[0];
      const int p1 = path[1];
      if (p0 < p1) {
        for (; p0 < p1 - 1; ++p0) apply(-(p0 + 1));
        apply(p0 + 1);
      } else {
        for (; p0 > p1 + 1; --p0) apply(p0);
        apply(-(p1 + 1));
      }
    }
    for (int k = last; k < np - 1; ++k) apply(-(k + 1));
    for (int k = np - 1; k < len - 1; ++k) apply(-(k + 1));
    for (int k = len - 2; k >= np - 1; --k) apply(-(k + 1));
  }

  // After recursion the prefix may end in more (top-2 top-1) copies than the
  // canonical form; trade the surplus into the tail in pairs.
  void fix_excess(int np, int len, int top) {
    const Transposition e(top - 2, top - 1);
    const MonodromySequence prefix(
        top, std::vector<Transposition>(s_.begin(), s_.begin() + len));
    const MonodromySequence target = canonical_target(top, len, omega_class(prefix));
    int k = np - 1;
    while (k >= 0 && target[static_cast<std::size_t>(k)] != e) --k;
    int want = 0;
    for (; k >= 0 && target[static_cast<std::size_t>(k)] == e; --k) ++want;
    int have = 0;
    for (k = np - 1; k >= 0 && at(k) == e; --k) ++have;
    const int ex = have - want;
    assert(ex >= 0 && ex % 2 == 0);
    if (ex <= 0) return;
    std::vector<int> seq;
    for (int i = np; i > np - ex; --i) seq.push_back(i);
    for (int i = np - ex + 1; i <= np; ++i) seq.push_back(i);
    for (int i = np - ex; i < np; ++i) seq.push_back(i);
    for (int i = np - 1; i >= np - ex; --i) seq.push_back(i);
    for (int i : seq) apply(-i);
  }

  std::vector<Transposition> s_;
  std::vector<int> letters_;
};

// Cycles with fixed points, longest first, ties by least element.
std::vector<std::vector<int>> cycles_by_length(const Permutation& p) {
  auto cyc = p.cycles();
  std::stable_sort(cyc.begin(), cyc.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return cyc;
}

}  // namespace

CanonicalizationResult canonicalize(const MonodromySequence& s) {
  if (!is_connected(s)) throw InvalidInput("canonicalize requires a connected covering");
  const int d = s.degree();
  const Permutation total = total_monodromy(s);
  const MonodromySequence target = canonical_target(d, s.length(), cycle_type(total));

  const auto from = cycles_by_length(total);
  const auto to = cycles_by_length(total_monodromy(target));
  std::vector<int> images(static_cast<std::size_t>(d));
  for (std::size_t c = 0; c < from.size(); ++c)
    for (std::size_t k = 0; k < from[c].size(); ++k)
      images[static_cast<std::size_t>(from[c][k] - 1)] = to[c][k];
  Permutation sigma = Permutation::from_images(std::move(images));

  Reducer r(s.relabeled(sigma).entries());
  r.reduce(s.length(), d);
  MonodromySequence result(d, r.take_entries());
  if (result != target)
    throw std::logic_error("canonicalization did not reach the target for " + s.to_string());
  const BraidWord w(std::max(s.length(), 1), r.take_letters());
  return {std::move(sigma), to_moves(w), std::move(result)};
}

}  // namespace liftbraid
