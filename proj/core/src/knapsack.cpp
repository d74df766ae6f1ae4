#include "moldsched/knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace moldsched {

std::vector<int> knapsack_select(const std::vector<KnapsackEntry>& entries, int capacity) {
  if (capacity < 0) throw std::invalid_argument("knapsack_select: negative capacity");
  const std::size_t n = entries.size();
  const std::size_t width = static_cast<std::size_t>(capacity) + 1;

  for (const auto& entry : entries)
    if (entry.allot < 1)
      throw std::invalid_argument("knapsack_select: allotments must be >= 1");

  std::vector<double> best(width, 0.0);
  std::vector<unsigned char> take(n * width, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const int allot = entries[i].allot;
    const double weight = entries[i].weight;
    // Descending capacity keeps best[] usable as the previous row.
    for (int j = capacity; j >= allot; --j) {
      const double with =
          best[static_cast<std::size_t>(j - allot)] + weight;
      if (with > best[static_cast<std::size_t>(j)]) {
        best[static_cast<std::size_t>(j)] = with;
        take[i * width + static_cast<std::size_t>(j)] = 1;
      }
    }
  }

  std::vector<int> selected;
  int j = capacity;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * width + static_cast<std::size_t>(j)]) {
      selected.push_back(static_cast<int>(i));
      j -= entries[i].allot;
    }
  }
  std::reverse(selected.begin(), selected.end());
  return selected;
}

}  // namespace moldsched
