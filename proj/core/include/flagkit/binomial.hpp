#pragma once

#include "flagkit/vertex_set.hpp"

namespace flagkit {

/// C(n, k); zero outside 0 <= k <= n.
constexpr Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace flagkit
