#include "schurkp/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace schurkp {

Rational z_of(const Partition& mu) {
    Rational z(1);
    int i = 0;
    while (i < mu.length()) {
        int j = mu.parts()[i];
        int f = 0;
        while (i < mu.length() && mu.parts()[i] == j) {
            ++i;
            ++f;
        }
        for (int e = 1; e <= f; ++e) {
            z *= Rational(j);
            z *= Rational(e);
        }
    }
    return z;
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MemoKey, long long> g_char_memo;
std::mutex g_char_mutex;

long long character_rec(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() == 0) return 1;
    MemoKey key{lambda.parts(), mu.parts()};
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }

    int strip = mu.parts()[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    // Border strips of size r correspond to an R at code position a and a U
    // at position a+r; the strip height is the number of U strictly between.
    const std::string& w = code_of(lambda).window();
    long long total = 0;
    int len = static_cast<int>(w.size());
    for (int a = 0; a + strip < len; ++a) {
        if (w[a] != 'R' || w[a + strip] != 'U') continue;
        int height = static_cast<int>(std::count(w.begin() + a + 1, w.begin() + a + strip, 'U'));
        std::string swapped = w;
        swapped[a] = 'U';
        swapped[a + strip] = 'R';
        Partition nu = partition_of(Code(swapped));
        long long sub = character_rec(nu, rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |mu|");
    return character_rec(lambda, mu);
}

}  // namespace schurkp
