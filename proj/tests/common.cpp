#include "common.hpp"

#include <set>

#include "dsop/ordering.hpp"

namespace dsop::test {

SobolevSpec random_laguerre_spec(Rng& rng, long max_alpha, std::size_t max_points, std::size_t max_order,
                                 bool ordered) {
  for (;;) {
    const long alpha = rng.integer(0, max_alpha);
    const auto points = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_points)));
    std::vector<MassTerm> masses;
    std::set<Rational> used;
    while (masses.size() < points) {
      Rational c = rng.rational(-10, -1, 3);
      if (!used.insert(c).second) continue;
      const auto order = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_order)));
      masses.push_back({c, order, rng.positive(10, 5)});
    }
    SobolevSpec spec(LaguerreParam::exact(alpha), std::move(masses));
    if (!ordered || is_sequentially_ordered(spec).ordered) return spec;
  }
}

}  // namespace dsop::test
