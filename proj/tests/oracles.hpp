#pragma once

// Brute-force reference computations on raw integer data, independent of
// the library code paths.

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "liftbraid/monodromy.hpp"

namespace oracle {

using Pair = std::pair<int, int>;
using Seq = std::vector<Pair>;
using Perm = std::vector<int>;  // p[k] image of k, p[0] unused

inline Perm identity(int d) {
  Perm p(static_cast<std::size_t>(d + 1));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm transposition(int d, Pair t) {
  Perm p = identity(d);
  std::swap(p[static_cast<std::size_t>(t.first)], p[static_cast<std::size_t>(t.second)]);
  return p;
}

// apply-left-first: k -> (k)a -> ((k)a)b
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) out[k] = b[static_cast<std::size_t>(a[k])];
  return out;
}

inline Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) out[static_cast<std::size_t>(a[k])] = static_cast<int>(k);
  return out;
}

inline Perm product(int d, const Seq& s) {
  Perm p = identity(d);
  for (const auto& t : s) p = compose(p, transposition(d, t));
  return p;
}

inline Pair as_pair(const Perm& p) {
  std::vector<int> moved;
  for (std::size_t k = 1; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) moved.push_back(static_cast<int>(k));
  return moved.size() == 2 ? Pair{moved[0], moved[1]} : Pair{0, 0};
}

inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t k = 1; k < p.size(); ++k) {
    int len = 0;
    for (std::size_t x = k; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    if (len >= 2) parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline int component_count(int d, const Seq& s) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(d + 1));
  for (auto [a, b] : s) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
  int count = 0;
  for (int v = 1; v <= d; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++count;
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

inline bool connected(int d, const Seq& s) { return component_count(d, s) == 1; }

// Hurwitz letter by explicit permutation products.
inline Seq act(int d, Seq s, const std::vector<int>& word) {
  for (int e : word) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    const Perm l = transposition(d, s[i]);
    const Perm r = transposition(d, s[i + 1]);
    if (e > 0) {
      const Perm moved = compose(compose(inverse(r), l), r);
      s[i] = s[i + 1];
      s[i + 1] = as_pair(moved);
    } else {
      const Perm moved = compose(compose(l, r), inverse(l));
      s[i + 1] = s[i];
      s[i] = as_pair(moved);
    }
  }
  return s;
}

inline std::vector<Pair> all_transpositions(int d) {
  std::vector<Pair> out;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) out.emplace_back(a, b);
  return out;
}

inline void for_each_sequence(int d, int n, const std::function<void(const Seq&)>& f) {
  const auto ts = all_transpositions(d);
  if (ts.empty() && n > 0) return;
  Seq s(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      f(s);
      return;
    }
    for (const auto& t : ts) {
      s[static_cast<std::size_t>(k)] = t;
      rec(k + 1);
    }
  };
  rec(0);
}

inline Seq random_sequence(std::mt19937& rng, int d, int n) {
  const auto ts = all_transpositions(d);
  std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
  Seq s;
  for (int k = 0; k < n; ++k) s.push_back(ts[pick(rng)]);
  return s;
}

inline Seq random_connected(std::mt19937& rng, int d, int n) {
  for (;;) {
    Seq s = random_sequence(rng, d, n);
    if (connected(d, s)) return s;
  }
}

inline std::vector<int> random_word(std::mt19937& rng, int n, int len) {
  std::vector<int> w;
  if (n < 2) return w;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

// Restriction straight from the conjugation rules, with explicit products.
inline Seq restrict(int d, const Seq& s, const std::vector<int>& I, bool start) {
  Seq out;
  const int n = static_cast<int>(s.size());
  for (int j = 1; j <= n; ++j) {
    if (std::find(I.begin(), I.end(), j) != I.end()) continue;
    Perm t = transposition(d, s[static_cast<std::size_t>(j - 1)]);
    std::vector<int> by;
    if (start) {
      for (auto it = I.rbegin(); it != I.rend(); ++it)
        if (*it < j) by.push_back(*it);
    } else {
      for (int i : I)
        if (i > j) by.push_back(i);
    }
    for (int i : by) {
      const Perm c = transposition(d, s[static_cast<std::size_t>(i - 1)]);
      t = compose(compose(inverse(c), t), c);
    }
    out.push_back(as_pair(t));
  }
  return out;
}

inline Seq from(const liftbraid::MonodromySequence& s) {
  Seq out;
  for (const auto& t : s.entries()) out.emplace_back(t.a(), t.b());
  return out;
}

inline liftbraid::MonodromySequence to(int d, const Seq& s) {
  std::vector<liftbraid::Transposition> v;
  for (auto [a, b] : s) v.emplace_back(a, b);
  return liftbraid::MonodromySequence(d, std::move(v));
}

// Brute-force Hurwitz orbit size, set based.
inline std::size_t orbit_size(int d, const Seq& s) {
  std::set<Seq> seen{s};
  std::vector<Seq> todo{s};
  const int n = static_cast<int>(s.size());
  while (!todo.empty()) {
    Seq u = todo.back();
    todo.pop_back();
    for (int i = 1; i < n; ++i)
      for (int e : {i, -i}) {
        Seq v = act(d, u, {e});
        if (seen.insert(v).second) todo.push_back(v);
      }
  }
  return seen.size();
}

}  // namespace oracle
