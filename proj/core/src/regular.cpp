#include <algorithm>
#include <numeric>

#include "hopdom/reductions.hpp"

namespace hopdom {

// Havel-Hakimi on the constant sequence (d, ..., d): take the vertex with the
// largest residual degree (smallest id on ties) and join it to the vertices
// with the next largest residuals.
Graph build_regular_graph(int n, int d) {
  if (n < 1 || d < 0) throw RealizationError("need n >= 1 and d >= 0");
  if (d >= n) throw RealizationError("d must be smaller than n");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw RealizationError("n*d must be even");

  GraphBuilder b(n);
  std::vector<int> residual(n, d);
  std::vector<int> order(n);
  for (int step = 0; step < n; ++step) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return residual[x] > residual[y]; });
    int v = order[0];
    int need = residual[v];
    if (need == 0) break;
    residual[v] = 0;
    int linked = 0;
    for (int k = 1; k < n && linked < need; ++k) {
      int w = order[k];
      if (residual[w] == 0) break;
      b.add_edge(v, w);
      --residual[w];
      ++linked;
    }
    if (linked < need) throw RealizationError("degree sequence is not graphical");
  }
  return b.build();
}

}  // namespace hopdom
