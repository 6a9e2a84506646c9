#include "schurkp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurkp {

namespace {

std::vector<int> checked_parts(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
    return parts;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(checked_parts(std::move(parts))) {
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

int canonical_compare(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
    // Within a weight: lexicographically larger part sequence first.
    if (a.parts() == b.parts()) return 0;
    return a.parts() > b.parts() ? -1 : 1;
}

std::string to_text(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition partition_from_text(std::string_view text) {
    if (text == "-") return {};
    if (text.empty()) throw std::invalid_argument("partition text: empty (use \"-\" for the empty partition)");
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("partition text: empty part");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("partition text: bad character");
            if (value > 100000000) throw std::invalid_argument("partition text: part too large");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Code::Code(std::string_view window) {
    for (char c : window)
        if (c != 'U' && c != 'R') throw std::invalid_argument("Code: symbols must be U or R");
    size_t first = window.find_first_not_of('U');
    if (first == std::string_view::npos) return;  // all U: empty partition
    size_t last = window.find_last_not_of('R');
    window_ = std::string(window.substr(first, last - first + 1));
}

Code Code::flip_right_step(int i) const {
    if (i < 1) throw std::invalid_argument("Code: step index must be >= 1");
    std::string w = window_;
    int n_right = static_cast<int>(std::count(w.begin(), w.end(), 'R'));
    if (i > n_right) w.append(i - n_right, 'R');  // materialize part of the R suffix
    int seen = 0;
    for (char& c : w) {
        if (c == 'R' && ++seen == i) {
            c = 'U';
            return Code(w);
        }
    }
    throw std::logic_error("Code::flip_right_step: unreachable");
}

Code Code::flip_up_step(int i) const {
    if (i < 1) throw std::invalid_argument("Code: step index must be >= 1");
    std::string w = window_;
    int n_up = static_cast<int>(std::count(w.begin(), w.end(), 'U'));
    if (i > n_up) w.insert(0, i - n_up, 'U');  // materialize part of the U prefix
    int seen = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 'U' && ++seen == i) {
            *it = 'R';
            return Code(w);
        }
    }
    throw std::logic_error("Code::flip_up_step: unreachable");
}

Code code_of(const Partition& p) {
    // Boundary path read bottom row to top: R^{gap} U per row.
    std::string w;
    int prev = 0;
    for (int i = p.length(); i >= 1; --i) {
        w.append(p.parts()[i - 1] - prev, 'R');
        w += 'U';
        prev = p.parts()[i - 1];
    }
    return Code(w);
}

Partition partition_of(const Code& c) {
    std::vector<int> parts;
    int rights = 0;
    for (char ch : c.window()) {
        if (ch == 'R')
            ++rights;
        else
            parts.push_back(rights);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

Partition switch_up(const Partition& p, int i) {
    if (i < 1) throw std::invalid_argument("switch_up: index must be >= 1");
    int j = u_steps(p, i);
    std::vector<int> out;
    out.reserve(p.length() + 1);
    for (int k = 0; k < j; ++k) out.push_back(p.parts()[k] - 1);
    out.push_back(i - 1);
    for (int k = j; k < p.length(); ++k) out.push_back(p.parts()[k]);
    return Partition(std::move(out));
}

Partition switch_down(const Partition& p, int i) {
    if (i < 1) throw std::invalid_argument("switch_down: index must be >= 1");
    std::vector<int> out;
    out.reserve(std::max(p.length(), i));
    for (int k = 1; k < i; ++k) out.push_back(p.part(k) + 1);
    for (int k = i + 1; k <= p.length(); ++k) out.push_back(p.parts()[k - 1]);
    return Partition(std::move(out));
}

int u_steps(const Partition& p, int i) {
    if (i < 1) throw std::invalid_argument("u_steps: index must be >= 1");
    int count = 0;
    for (int part : p.parts())
        if (part >= i) ++count;
    return count;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("SkewShape: inner not contained in outer");
}

bool is_horizontal_strip(const SkewShape& s) {
    // One cell per column means rows interlace: outer_{i+1} <= inner_i.
    for (int i = 1; i < s.outer().length(); ++i)
        if (s.outer().part(i + 1) > s.inner().part(i)) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    for (int i = 1; i <= s.outer().length(); ++i)
        if (s.outer().part(i) - s.inner().part(i) > 1) return false;
    return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
        acc.push_back(a);
        gen_partitions(remaining - a, a, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(d, d, acc, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("enumerate_partitions: negative weight");
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d) {
        auto batch = partitions_of(d);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<Partition> partitions_in_box(int max_weight, int max_len, int max_part) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(max_weight))
        if (p.length() <= max_len && p.part(1) <= max_part) out.push_back(p);
    return out;
}

}  // namespace schurkp
