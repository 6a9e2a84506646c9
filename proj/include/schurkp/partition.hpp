#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schurkp {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is written "-" in text form. Immutable value type;
/// the universal index for every basis in this library.
class Partition {
public:
    Partition() = default;
    /// Strips trailing zeros, then requires a weakly decreasing sequence of
    /// nonnegative entries. Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; 0 beyond the stored length (the infinite zero tail).
    int part(int i) const;

    Partition conjugate() const;

    /// Diagram containment: inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical total order used by every serialization and deterministic scan:
/// weight ascending, then lexicographically descending part sequences within
/// a weight (so (3) precedes (2,1) precedes (1,1,1)).
int canonical_compare(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// "6,5,5,4,1"; the empty partition renders as "-".
std::string to_text(const Partition& p);
/// Inverse of to_text. Throws std::invalid_argument on malformed input.
Partition partition_from_text(std::string_view text);

/// The lattice-path code of a partition, stored as the canonical finite
/// window of the two-way infinite U/R string: the implicit prefix is all U,
/// the implicit suffix all R. A canonical nonempty window begins with R and
/// ends with U; the empty window encodes the empty partition.
class Code {
public:
    Code() = default;
    /// Accepts any finite window over {U, R}; canonicalizes by stripping
    /// leading U and trailing R. Throws std::invalid_argument on other symbols.
    explicit Code(std::string_view window);

    const std::string& window() const { return window_; }

    /// Switches the i-th right-step (1-based, from the left, counting into
    /// the infinite R suffix) to an up-step.
    Code flip_right_step(int i) const;
    /// Switches the i-th up-step (1-based, from the right, counting into the
    /// infinite U prefix) to a right-step.
    Code flip_up_step(int i) const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    std::string window_;
};

Code code_of(const Partition& p);
Partition partition_of(const Code& c);

/// The switched partition lambda^(i) per the closed form: subtract 1 from
/// every part >= i and insert i-1 at the boundary. Defined for every i >= 1.
Partition switch_up(const Partition& p, int i);
/// The switched partition lambda^(-i): add 1 to the first i-1 parts and
/// delete part i (zero parts beyond the length included).
Partition switch_down(const Partition& p, int i);
/// Number of up-steps after the i-th right-step: the count of parts >= i.
int u_steps(const Partition& p, int i);

/// A skew diagram outer - inner; construction validates containment.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

private:
    Partition outer_, inner_;
};

/// At most one cell in every column.
bool is_horizontal_strip(const SkewShape& s);
/// At most one cell in every row.
bool is_vertical_strip(const SkewShape& s);

/// All partitions of exactly d, in canonical order within the weight.
std::vector<Partition> partitions_of(int d);
/// All partitions of every weight <= max_weight, canonical order.
std::vector<Partition> enumerate_partitions(int max_weight);
/// Partitions with length <= max_len, parts <= max_part, weight <= max_weight.
std::vector<Partition> partitions_in_box(int max_weight, int max_len, int max_part);

}  // namespace schurkp
