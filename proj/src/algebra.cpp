#include "schurkp/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schurkp/characters.hpp"

namespace schurkp {

PSeries multiply(const PSeries& a, const PSeries& b) {
    PSeries out(min_truncation(a.truncation(), b.truncation()));
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (out.truncation() && ka.weight() + kb.weight() > *out.truncation()) continue;
            std::vector<int> merged;
            merged.reserve(ka.length() + kb.length());
            std::merge(ka.parts().begin(), ka.parts().end(), kb.parts().begin(), kb.parts().end(),
                       std::back_inserter(merged), std::greater<int>());
            out.add_term(Partition(std::move(merged)), ca * cb);
        }
    }
    return out;
}

PSeries differentiate(const PSeries& f, int var) {
    if (var < 1) throw std::invalid_argument("differentiate: variable index must be >= 1");
    std::optional<int> trunc;
    if (f.truncation()) trunc = std::max(0, *f.truncation() - var);
    PSeries out(trunc);
    for (const auto& [key, c] : f.terms()) {
        int mult = static_cast<int>(std::count(key.parts().begin(), key.parts().end(), var));
        if (mult == 0) continue;
        std::vector<int> rest = key.parts();
        rest.erase(std::find(rest.begin(), rest.end(), var));
        out.add_term(Partition(std::move(rest)), c * Rational(mult));
    }
    return out;
}

PSeries schur_to_p(const Partition& lambda) {
    PSeries out;
    for (const Partition& mu : partitions_of(lambda.weight())) {
        long long chi = character(lambda, mu);
        if (chi != 0) out.add_term(mu, Rational(chi) / z_of(mu));
    }
    return out;
}

SchurSeries p_to_schur(const PSeries& f) {
    SchurSeries out(f.truncation());
    for (const auto& [mu, c] : f.terms()) {
        for (const Partition& nu : partitions_of(mu.weight())) {
            long long chi = character(nu, mu);
            if (chi != 0) out.add_term(nu, c * Rational(chi));
        }
    }
    return out;
}

SchurSeries h_as_schur(int n) {
    if (n < 0) throw std::invalid_argument("h_as_schur: negative index");
    SchurSeries out;
    out.add_term(n == 0 ? Partition{} : Partition{n}, 1);
    return out;
}

SchurSeries e_as_schur(int n) {
    if (n < 0) throw std::invalid_argument("e_as_schur: negative index");
    SchurSeries out;
    out.add_term(Partition(std::vector<int>(n, 1)), 1);
    return out;
}

SchurSeries omega(const SchurSeries& f) {
    SchurSeries out(f.truncation());
    for (const auto& [key, c] : f.terms()) out.add_term(key.conjugate(), c);
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& lambda, int n) {
    // mu interlaces lambda: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
    std::vector<Partition> out;
    std::vector<int> acc;
    int rows = lambda.length() + 1;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row > rows) {
            if (remaining == 0) out.push_back(Partition(acc));
            return;
        }
        int lo = lambda.part(row);
        int hi = row == 1 ? lambda.part(1) + remaining : std::min(lambda.part(row - 1), lo + remaining);
        for (int v = lo; v <= hi; ++v) {
            acc.push_back(v);
            rec(row + 1, remaining - (v - lo));
            acc.pop_back();
        }
    };
    rec(1, n);
    return out;
}

std::vector<Partition> add_vertical_strips(const Partition& lambda, int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    int rows = lambda.length() + n;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row > rows || (remaining == 0 && row > lambda.length())) {
            if (remaining == 0) out.push_back(Partition(acc));
            return;
        }
        int prev = row == 1 ? lambda.part(1) + 1 : acc[row - 2];
        for (int add = 0; add <= 1; ++add) {
            int v = lambda.part(row) + add;
            if (add > remaining || v > prev) continue;
            acc.push_back(v);
            rec(row + 1, remaining - add);
            acc.pop_back();
        }
    };
    rec(1, n);
    return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int n) {
    // lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row > lambda.length()) {
            if (remaining == 0) out.push_back(Partition(acc));
            return;
        }
        int hi = lambda.part(row);
        int lo = std::max(lambda.part(row + 1), hi - remaining);
        for (int v = hi; v >= lo; --v) {
            acc.push_back(v);
            rec(row + 1, remaining - (hi - v));
            acc.pop_back();
        }
    };
    rec(1, n);
    return out;
}

std::vector<Partition> remove_vertical_strips(const Partition& lambda, int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row > lambda.length()) {
            if (remaining == 0) out.push_back(Partition(acc));
            return;
        }
        for (int drop = 0; drop <= 1; ++drop) {
            int v = lambda.part(row) - drop;
            if (drop > remaining || v < 0) continue;
            if (row > 1 && v > acc[row - 2]) continue;
            acc.push_back(v);
            rec(row + 1, remaining - drop);
            acc.pop_back();
        }
    };
    rec(1, n);
    return out;
}

namespace {

SchurSeries unit_sum(const std::vector<Partition>& keys) {
    SchurSeries out;
    for (const Partition& p : keys) out.add_term(p, 1);
    return out;
}

}  // namespace

SchurSeries pieri_h(int n, const Partition& lambda) {
    if (n < 0) throw std::invalid_argument("pieri_h: negative strip size");
    return unit_sum(add_horizontal_strips(lambda, n));
}

SchurSeries pieri_e(int n, const Partition& lambda) {
    if (n < 0) throw std::invalid_argument("pieri_e: negative strip size");
    return unit_sum(add_vertical_strips(lambda, n));
}

SchurSeries hperp(int n, const Partition& lambda) {
    if (n < 0) throw std::invalid_argument("hperp: negative strip size");
    return unit_sum(remove_horizontal_strips(lambda, n));
}

SchurSeries eperp(int n, const Partition& lambda) {
    if (n < 0) throw std::invalid_argument("eperp: negative strip size");
    return unit_sum(remove_vertical_strips(lambda, n));
}

Rational inner_product(const SchurSeries& f, const SchurSeries& g) {
    const SchurSeries& small = f.terms().size() <= g.terms().size() ? f : g;
    const SchurSeries& large = f.terms().size() <= g.terms().size() ? g : f;
    Rational out(0);
    for (const auto& [key, c] : small.terms()) out += c * large.coeff(key);
    return out;
}

}  // namespace schurkp
