#ifndef SIGNLAB_LLL_HPP
#define SIGNLAB_LLL_HPP

#include <vector>

#include "signlab/numeric.hpp"

namespace signlab::lattice {

using Row = std::vector<Int>;
using Basis = std::vector<Row>;

// In-place LLL reduction with exact rational Gram-Schmidt (Lovasz parameter
// delta = num/den). Small dimensions only; entries are arbitrary integers.
void lll_reduce(Basis& basis, long delta_num = 99, long delta_den = 100);

}  // namespace signlab::lattice

#endif
