#include "liftbraid/cosets.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/lift.hpp"
#include "liftbraid/orbit.hpp"

namespace liftbraid {

Presentation braid_presentation(int n) {
  if (n < 1) throw InvalidInput("strand count must be positive");
  Presentation p;
  p.generators = n - 1;
  for (int i = 1; i + 1 < n; ++i) p.relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) p.relators.push_back({i, j, -i, -j});
  return p;
}

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(int generators, std::size_t max_cosets,
             std::vector<std::vector<int>> relators, std::vector<std::vector<int>> subgroup)
      : cols_(2 * generators), max_(max_cosets), relators_(to_columns(relators)),
        subgroup_(to_columns(subgroup)) {
    new_coset();
  }

  CosetEnumeration run() {
    for (const auto& w : subgroup_) scan_and_fill(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (entry(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
    }
    return compact();
  }

 private:
  static std::vector<std::vector<int>> to_columns(const std::vector<std::vector<int>>& words) {
    std::vector<std::vector<int>> out;
    for (const auto& w : words) {
      auto& cw = out.emplace_back();
      for (int e : w) cw.push_back(column(e));
    }
    return out;
  }

  int& entry(int c, int x) {
    return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    table_.emplace_back(static_cast<std::size_t>(cols_), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_;
    return static_cast<int>(table_.size() - 1);
  }

  void define(int c, int x) {
    if (live_ >= max_) {
      lookahead();
      if (live_ >= max_)
        throw Inconclusive("coset enumeration exceeded " + std::to_string(max_) + " cosets",
                           max_);
      if (!alive(static_cast<std::size_t>(c)) || entry(c, x) >= 0) return;
    }
    const int d = new_coset();
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
  }

  // Traces w from c in both directions; closes a single gap by deduction,
  // merges on a mismatch, and (when fill) defines cosets for longer gaps.
  void scan(int c, const std::vector<int>& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0)
        f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
        b = entry(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
      if (!alive(static_cast<std::size_t>(c))) return;
      if (!alive(static_cast<std::size_t>(f)) || !alive(static_cast<std::size_t>(b))) {
        // lookahead merged cosets; rescan
        f = b = c;
        i = 0;
        j = static_cast<int>(w.size()) - 1;
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) { scan(c, w, true); }

  void lookahead() {
    for (const auto& w : subgroup_) scan(0, w, false);
    for (std::size_t c = 0; c < table_.size(); ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(static_cast<int>(c), r, false);
      }
  }

  int rep(int k) {
    int r = k;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(k)] != r) {
      const int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int g = queue[q];
      for (int x = 0; x < cols_; ++x) {
        const int d = entry(g, x);
        if (d < 0) continue;
        entry(d, x ^ 1) = -1;
        const int m = rep(g);
        const int n = rep(d);
        if (entry(m, x) >= 0) {
          merge(n, entry(m, x), queue);
        } else if (entry(n, x ^ 1) >= 0) {
          merge(m, entry(n, x ^ 1), queue);
        } else {
          entry(m, x) = n;
          entry(n, x ^ 1) = m;
        }
      }
    }
  }

  CosetEnumeration compact() {
    std::vector<int> id(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) id[c] = next++;
    CosetEnumeration out;
    out.index = static_cast<std::size_t>(next);
    out.table.generators = cols_ / 2;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      auto& row = out.table.rows.emplace_back();
      for (int x = 0; x < cols_; ++x)
        row.push_back(id[static_cast<std::size_t>(rep(entry(static_cast<int>(c), x)))]);
    }
    return out;
  }

  int cols_;
  std::size_t max_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::size_t live_ = 0;
};

}  // namespace

int CosetTable::follow(int c, const BraidWord& w) const {
  for (int e : w.letters())
    c = rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(column(e))];
  return c;
}

CosetEnumeration todd_coxeter(int n, const std::vector<BraidWord>& subgroup,
                              std::size_t max_cosets) {
  if (max_cosets < 1) throw InvalidInput("max_cosets must be positive");
  const Presentation p = braid_presentation(n);
  std::vector<std::vector<int>> words;
  for (const auto& w : subgroup) {
    if (w.strands() != n) throw InvalidInput("subgroup word has the wrong strand count");
    words.push_back(w.reduced().letters());
  }
  return Enumerator(p.generators, max_cosets, p.relators, std::move(words)).run();
}

TheoremCReport verify_theorem_c(int n, std::size_t max_cosets) {
  TheoremCReport r;
  r.n = n;
  const MonodromySequence pn = MonodromySequence::disk(n);
  const auto gens = theorem_c_generators(n);
  r.generator_count = gens.size();
  r.generators_liftable = std::all_of(gens.begin(), gens.end(),
                                      [&](const BraidWord& w) { return is_liftable(pn, w); });
  r.orbit_index = stabilizer_index(pn);
  if (!r.generators_liftable) return r;
  const std::size_t bound = index_bound(pn.degree(), pn.length());
  if (max_cosets == 0) max_cosets = bound > kNoCap / 64 ? kNoCap : 64 * bound;
  r.tc_index = todd_coxeter(n, gens, max_cosets).index;
  r.pass = *r.tc_index == r.orbit_index;
  return r;
}

std::vector<BraidWord> interval_power_generators(const MonodromySequence& s,
                                                 int max_word_length) {
  const int n = s.length();
  if (n < 2) return {};
  if (max_word_length < 0) throw InvalidInput("word length must be nonnegative");
  std::vector<BraidWord> out;
  std::set<std::vector<int>> seen;
  // Breadth-first over freely reduced words, shortest first.
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= max_word_length; ++len) {
    for (const auto& u : layer)
      for (int base = 1; base < n; ++base) {
        const IntervalRef x{base, BraidWord(n, u)};
        const BraidWord w = interval_power(x, interval_type(s, x));
        if (seen.insert(w.letters()).second) out.push_back(w);
      }
    if (len == max_word_length) break;
    std::vector<std::vector<int>> next;
    for (const auto& u : layer)
      for (int i = 1; i < n; ++i)
        for (int e : {i, -i}) {
          if (!u.empty() && u.back() == -e) continue;
          auto v = u;
          v.push_back(e);
          next.push_back(std::move(v));
        }
    layer = std::move(next);
  }
  return out;
}

IntervalGenerationReport verify_interval_generation(const MonodromySequence& s,
                                                    int max_word_length,
                                                    std::size_t max_cosets) {
  IntervalGenerationReport r;
  const auto gens = interval_power_generators(s, max_word_length);
  r.generator_count = gens.size();
  r.orbit_index = stabilizer_index(s);
  const std::size_t bound = index_bound(s.degree(), s.length());
  if (max_cosets == 0) max_cosets = bound > kNoCap / 64 ? kNoCap : 64 * bound;
  r.tc_index = todd_coxeter(std::max(s.length(), 1), gens, max_cosets).index;
  r.generates = r.tc_index == r.orbit_index;
  return r;
}

}  // namespace liftbraid
