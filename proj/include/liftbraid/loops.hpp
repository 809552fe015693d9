#pragma once

#include <vector>

#include "liftbraid/braid.hpp"

namespace liftbraid {

/// Reduced word in the free group on g_1, ..., g_n (letter +k is g_k,
/// -k its inverse): the loop class of a curve around the punctured disk.
using LoopWord = std::vector<int>;

LoopWord reduce_loop(LoopWord w);
LoopWord invert_loop(const LoopWord& w);

/// Standard loops g_1, ..., g_n transported by w through the same right
/// action as the monodromy: x_i sends (a, b) to (b, b a b^-1) and x_i^-1
/// sends it to (a^-1 b a, a). The product g_n ... g_1 is preserved.
std::vector<LoopWord> act_on_loops(int n, const BraidWord& w);

/// Loop class of the curve obtained from alpha_base by the transport w.
LoopWord transported_loop(int base, const BraidWord& w);

}  // namespace liftbraid
