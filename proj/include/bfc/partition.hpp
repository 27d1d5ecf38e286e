#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bfc {

// Weakly decreasing positive parts; zero parts are stripped on construction.
class Partition {
public:
    Partition() = default;
    // Accepts trailing zeros. Throws std::invalid_argument on negative or increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // i is 0-based; parts beyond the length read as 0.
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // First n parts, zero padded.
    std::vector<int> padded(int n) const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Box {
    int row = 1;  // 1-based
    int col = 1;  // 1-based
    int content() const { return col - row; }
    bool operator==(const Box&) const = default;
};

Partition dual(const Partition& p);

// Removable corners top to bottom.
std::vector<Partition> res_set(const Partition& p);
// Addable boxes top to bottom.
std::vector<Partition> ind_set(const Partition& p);

bool is_edge(const Partition& small, const Partition& big);
// The box big \ small. Throws std::invalid_argument unless small is in res_set(big).
Box added_box(const Partition& small, const Partition& big);

// (p_1+1, ..., p_n+1). Throws std::invalid_argument if p has more than n rows.
Partition union_columns(const Partition& p, int n);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
// Partitions with at most n rows and size at most m.
std::vector<Partition> partitions_in(int n, int m);

std::string to_string(const Partition& p);
// "(2,1)", "()", "(1,0)". Throws std::invalid_argument.
Partition parse_partition(const std::string& text);

// Semi-infinite increasing sequence of even integers, x_i = head[i-1] for
// i <= head.size() and x_i = 2i + 2*charge beyond. Canonical: the last head
// entry never equals its vacuum value.
struct ChargedSequence {
    int charge = 0;
    std::vector<int> head;

    // 1-based entry.
    int entry(int i) const;
    // First `len` entries; len >= head.size().
    std::vector<int> prefix(int len) const;

    auto operator<=>(const ChargedSequence&) const = default;
    bool operator==(const ChargedSequence&) const = default;
};

ChargedSequence vacuum(int charge);

// Builds the canonical form from a strictly increasing prefix whose tail
// continues as the charge-k vacuum. Throws std::invalid_argument otherwise.
ChargedSequence make_sequence(int charge, std::vector<int> prefix);

ChargedSequence to_sequence(const Partition& p);
// Throws std::invalid_argument on nonzero charge.
Partition from_sequence(const ChargedSequence& s);

// Half the total deviation from the charge-k vacuum; repeats allowed.
long energy(const std::vector<int>& prefix, int k);
long energy(const ChargedSequence& s);

// Sorts a prefix (followed by the charge-k vacuum tail) into a canonical
// sequence with the sign of the sorting permutation. Empty on repeats.
std::optional<std::pair<int, ChargedSequence>> normalize(const std::vector<int>& prefix, int k);

// "(0,2,6,8,...)": head, two tail entries, ellipsis.
std::string to_string(const ChargedSequence& s);
// "vac:k" or "seq:k:x1,x2,...". Throws std::invalid_argument.
ChargedSequence parse_sequence(const std::string& text);

}  // namespace bfc
