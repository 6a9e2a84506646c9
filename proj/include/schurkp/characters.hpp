#pragma once

#include "schurkp/partition.hpp"
#include "schurkp/rational.hpp"

namespace schurkp {

/// z_mu = prod_j j^{f_j} f_j! for mu = (..., 2^{f_2}, 1^{f_1}); the conjugacy
/// class of cycle type mu in S_d has size d!/z_mu.
Rational z_of(const Partition& mu);

/// Irreducible character of S_d: the representation indexed by lambda
/// evaluated on the class of cycle type mu. Computed by the border-strip
/// recursion on partition codes (a strip of size r is an R/U swap at code
/// distance r) and memoized. Requires |lambda| == |mu|.
long long character(const Partition& lambda, const Partition& mu);

}  // namespace schurkp
