#pragma once

#include <cstddef>

namespace lincomb::detail {

/// Runs f(i) for i in [0, count), as an OpenMP static loop when `parallel`.
/// The serial branch avoids the cost of opening a team for small work.
template <class F>
void parallel_for(std::ptrdiff_t count, bool parallel, F&& f) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) f(i);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) f(i);
  }
}

}  // namespace lincomb::detail
