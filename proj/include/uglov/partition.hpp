#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace uglov {

/// Integer partition stored as its nonzero parts in weakly decreasing order.
/// Indexing past the last part yields 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// 1-based part access; returns 0 for i > length().
    int operator[](int i) const;

    int length() const { return static_cast<int>(parts_.size()); }
    int rank() const { return rank_; }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Length of column b (1-based), i.e. the conjugate partition's b-th part.
    int column_length(int b) const;

    /// Changes row a by delta; the result must still be a partition.
    Partition with_row_delta(int a, int delta) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

private:
    std::vector<int> parts_;
    int rank_ = 0;
};

/// All partitions of n, in reverse lexicographic order (largest first).
std::vector<Partition> partitions_of(int n);

/// Component index, 1 or 2.
enum class Component : int { first = 1, second = 2 };

constexpr int index_of(Component c) { return static_cast<int>(c) - 1; }
constexpr Component other(Component c) { return c == Component::first ? Component::second : Component::first; }
inline constexpr std::array<Component, 2> kComponents{Component::first, Component::second};

class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Partition first, Partition second) : comps_{std::move(first), std::move(second)} {}

    const Partition& operator[](Component c) const { return comps_[index_of(c)]; }
    const Partition& first() const { return comps_[0]; }
    const Partition& second() const { return comps_[1]; }
    int rank() const { return comps_[0].rank() + comps_[1].rank(); }
    bool empty() const { return rank() == 0; }

    Bipartition with_row_delta(Component c, int a, int delta) const;
    Bipartition swapped() const { return {comps_[1], comps_[0]}; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend auto operator<=>(const Bipartition& x, const Bipartition& y) { return x.comps_ <=> y.comps_; }

private:
    std::array<Partition, 2> comps_;
};

/// Every bipartition of rank n.
std::vector<Bipartition> bipartitions_of(int n);

/// Dotted notation "6.1,2.2"; "-" stands for the empty partition.
std::string to_string(const Partition& p);
std::string to_string(const Bipartition& bp);
Partition parse_partition(const std::string& text);
Bipartition parse_bipartition(const std::string& text);

}  // namespace uglov
