#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "schurkp/series.hpp"

namespace schurkp {

/// Raised when an operator slice would produce a nonzero term above the
/// requested truncation weight; results are reported, never silently clipped.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite Laurent object: one SchurSeries per integer t-exponent. A window
/// produced at max_weight W holds exactly the terms whose output partition
/// weight is <= W; empty slices are never stored.
class LaurentSchur {
public:
    LaurentSchur() = default;
    explicit LaurentSchur(std::optional<int> truncation) : truncation_(truncation) {}

    std::optional<int> truncation() const { return truncation_; }
    const std::map<int, SchurSeries>& slices() const { return slices_; }

    /// The coefficient-series of t^n; the zero series when the exponent is
    /// not present in the window.
    SchurSeries slice(int n) const {
        auto it = slices_.find(n);
        return it == slices_.end() ? SchurSeries(truncation_) : it->second;
    }

    void add_term(int exponent, const Partition& key, const Rational& c);
    bool is_zero() const { return slices_.empty(); }

    friend bool operator==(const LaurentSchur& a, const LaurentSchur& b) {
        return a.slices_ == b.slices_;
    }

private:
    std::map<int, SchurSeries> slices_;
    std::optional<int> truncation_;
};

/// B(t) s_lambda by the explicit switched-partition expansion: the i-th term
/// lives at exponent |lambda^(i)| - |lambda| with sign (-1)^{u_i(lambda)}.
LaurentSchur bernstein_closed(const Partition& lambda, int max_weight);

/// B(t) s_lambda evaluated from the definitional double sum
/// sum_{k,m} (-1)^m t^{k-m} h_k e_m^perp; the oracle for bernstein_closed.
LaurentSchur bernstein_definitional(const Partition& lambda, int max_weight);

/// R_{lambda,mu}: signed count over nu with lambda-nu a vertical strip and
/// mu-nu a horizontal strip. Brute force; intended for small weights.
long long survivor_sum(const Partition& lambda, const Partition& mu);

/// B(t) s_lambda assembled from survivor_sum over all mu up to max_weight.
LaurentSchur bernstein_survivor(const Partition& lambda, int max_weight);

/// B(t) applied to a whole coefficient table: the s_beta coefficient at each
/// exponent is the alternating sum over k of the table read at beta^(-k).
LaurentSchur bernstein_on_table(const SchurSeries& table, int max_weight);

/// The adjoint series applied to a table, organized by the slice index n of
/// B^perp_n (the coefficient of t^{-n} in B^perp(t^{-1})): the s_alpha term
/// contributed by m sits at exponent |alpha^(m)| - |alpha|.
LaurentSchur bernstein_perp_on_table(const SchurSeries& table, int max_weight);

/// The single operator slice B_n applied to a series. Throws TruncationError
/// if a nonzero output term would exceed max_weight.
SchurSeries bernstein_slice(const SchurSeries& f, int n, int max_weight);

/// B_{i_1} B_{i_2} ... B_{i_k} 1, applied right to left. For a weakly
/// decreasing positive index sequence this is exactly s_{(i_1,...,i_k)}.
SchurSeries bernstein_compose(const std::vector<int>& indices, int max_weight);

/// Coefficientwise involution omega on a Laurent window.
LaurentSchur omega(const LaurentSchur& f);

/// The substitution t -> -t^{-1}: slice n moves to -n with sign (-1)^n.
LaurentSchur substitute_neg_inverse(const LaurentSchur& f);

}  // namespace schurkp
