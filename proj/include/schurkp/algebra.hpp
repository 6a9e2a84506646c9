#pragma once

#include <vector>

#include "schurkp/partition.hpp"
#include "schurkp/series.hpp"

namespace schurkp {

/// Expansion of a single Schur function in the power-sum basis:
/// s_lambda = sum over mu of (chi^lambda_mu / z_mu) p_mu.
PSeries schur_to_p(const Partition& lambda);

/// Termwise inverse change of basis: p_mu = sum over nu of chi^nu_mu s_nu,
/// applied to each key of f. Mixed weights are handled componentwise.
SchurSeries p_to_schur(const PSeries& f);

/// h_n = s_(n) and e_n = s_(1^n); h_0 = e_0 = 1.
SchurSeries h_as_schur(int n);
SchurSeries e_as_schur(int n);

/// The involution sending s_lambda to s_{lambda'}.
SchurSeries omega(const SchurSeries& f);

/// Partitions mu such that mu - lambda (resp. lambda - mu) is a horizontal or
/// vertical n-strip. The building blocks of the Pieri rules and the perps.
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int n);
std::vector<Partition> add_vertical_strips(const Partition& lambda, int n);
std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int n);
std::vector<Partition> remove_vertical_strips(const Partition& lambda, int n);

/// h_n * s_lambda, e_n * s_lambda, and their adjoints, all with unit
/// coefficients; the perps return the zero series when nothing qualifies.
SchurSeries pieri_h(int n, const Partition& lambda);
SchurSeries pieri_e(int n, const Partition& lambda);
SchurSeries hperp(int n, const Partition& lambda);
SchurSeries eperp(int n, const Partition& lambda);

/// The Hall pairing in which Schur functions are orthonormal.
Rational inner_product(const SchurSeries& f, const SchurSeries& g);

}  // namespace schurkp
