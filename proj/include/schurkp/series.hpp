#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "schurkp/partition.hpp"
#include "schurkp/rational.hpp"

namespace schurkp {

struct SchurBasisTag {};
struct PowerBasisTag {};

inline std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

/// Sparse exact linear combination indexed by partitions, graded by weight and
/// optionally truncated: a bounded truncation T promises the series is known
/// exactly through weight T and stores nothing beyond it. Zero coefficients
/// are never stored; equality is keywise equality of the stored terms.
template <typename BasisTag>
class Series {
public:
    using TermMap = std::map<Partition, Rational, CanonicalLess>;

    Series() = default;
    explicit Series(std::optional<int> truncation) : truncation_(truncation) {
        if (truncation && *truncation < 0)
            throw std::invalid_argument("Series: negative truncation weight");
    }

    /// The multiplicative unit: coefficient 1 on the empty partition.
    static Series one(std::optional<int> truncation = std::nullopt) {
        Series s(truncation);
        s.add_term(Partition{}, 1);
        return s;
    }

    std::optional<int> truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c onto the coefficient at key. Terms beyond the truncation
    /// weight are dropped; a coefficient that cancels to zero is erased.
    void add_term(const Partition& key, const Rational& c) {
        if (c.is_zero()) return;
        if (truncation_ && key.weight() > *truncation_) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int max_term_weight() const {
        int m = -1;
        for (const auto& [key, c] : terms_) m = std::max(m, key.weight());
        return m;
    }

    Series scaled(const Rational& c) const {
        Series out(truncation_);
        if (c.is_zero()) return out;
        for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(min_truncation(a.truncation_, b.truncation_));
        for (const auto& [key, c] : a.terms_) out.add_term(key, c);
        for (const auto& [key, c] : b.terms_) out.add_term(key, c);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series out(min_truncation(a.truncation_, b.truncation_));
        for (const auto& [key, c] : a.terms_) out.add_term(key, c);
        for (const auto& [key, c] : b.terms_) out.add_term(key, -c);
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
    std::optional<int> truncation_;
};

using SchurSeries = Series<SchurBasisTag>;
using PSeries = Series<PowerBasisTag>;

/// Product in the multiplicative power-sum basis: keys concatenate as
/// multisets. The result is exact through min of the factor truncations.
PSeries multiply(const PSeries& a, const PSeries& b);

/// Formal partial derivative with respect to p_var. A series known through
/// weight T determines its derivative through weight T - var.
PSeries differentiate(const PSeries& f, int var);

}  // namespace schurkp
