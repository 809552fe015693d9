#include "liftbraid/loops.hpp"

#include <cstdlib>

#include "liftbraid/errors.hpp"

namespace liftbraid {

LoopWord reduce_loop(LoopWord w) {
  LoopWord out;
  out.reserve(w.size());
  for (int e : w) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

LoopWord invert_loop(const LoopWord& w) {
  LoopWord out(w.rbegin(), w.rend());
  for (int& e : out) e = -e;
  return out;
}

namespace {

LoopWord join(std::initializer_list<const LoopWord*> parts) {
  LoopWord out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return reduce_loop(std::move(out));
}

}  // namespace

std::vector<LoopWord> act_on_loops(int n, const BraidWord& w) {
  if (w.strands() != std::max(n, 1)) throw InvalidInput("strand count mismatch");
  std::vector<LoopWord> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = {k + 1};
  for (int e : w.letters()) {
    auto& a = g[static_cast<std::size_t>(std::abs(e) - 1)];
    auto& b = g[static_cast<std::size_t>(std::abs(e))];
    if (e > 0) {
      const LoopWord bi = invert_loop(b);
      LoopWord moved = join({&b, &a, &bi});
      a = std::move(b);
      b = std::move(moved);
    } else {
      const LoopWord ai = invert_loop(a);
      LoopWord moved = join({&ai, &b, &a});
      b = std::move(a);
      a = std::move(moved);
    }
  }
  return g;
}

LoopWord transported_loop(int base, const BraidWord& w) {
  const int n = w.strands();
  if (base < 1 || base > n) throw InvalidInput("curve base out of range");
  return act_on_loops(n, w)[static_cast<std::size_t>(base - 1)];
}

}  // namespace liftbraid
