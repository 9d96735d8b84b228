#ifndef TEMPO_LOBATTO_HPP
#define TEMPO_LOBATTO_HPP

#include <utility>
#include <vector>

namespace tempo {

// (k+1)-point Gauss-Lobatto rule on [-1, 1]: nodes include both
// endpoints, symmetric about 0 and strictly increasing; weights are
// positive and sum to 2. Exact for polynomials of degree <= 2k-1.
// Supported for 1 <= k <= 5 (closed-form node tables).
std::pair<std::vector<double>, std::vector<double>> lobatto_rule(int k);

}  // namespace tempo

#endif
