#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "uglov/partition.hpp"

namespace uglov {

struct Charge {
    int s1 = 0;
    int s2 = 0;

    int operator[](Component c) const { return c == Component::first ? s1 : s2; }
    friend bool operator==(const Charge&, const Charge&) = default;
    friend auto operator<=>(const Charge&, const Charge&) = default;
};

/// The quantum characteristic e, either an integer >= 2 or infinity.
class Modulus {
public:
    static Modulus finite(int e);
    static Modulus infinite() { return Modulus{}; }

    bool is_finite() const { return value_ != 0; }
    /// Only meaningful when is_finite().
    int value() const { return value_; }

    /// Content reduced modulo e; the content itself when e is infinite.
    int reduce(int content) const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    Modulus() = default;
    int value_ = 0;  // 0 encodes infinity
};

std::string to_string(const Modulus& e);

/// Extended node (a, b, c). Either coordinate may be 0 (virtual row/column), not both.
struct ExtNode {
    int row = 0;
    int col = 0;
    Component comp = Component::first;

    friend bool operator==(const ExtNode&, const ExtNode&) = default;
    friend auto operator<=>(const ExtNode&, const ExtNode&) = default;
};

std::string to_string(const ExtNode& node);

int content(const ExtNode& node, const Charge& charge);
int residue(const ExtNode& node, const Charge& charge, const Modulus& e);

/// Membership in the extended Young diagram of bp.
bool is_extended_node(const Bipartition& bp, const ExtNode& node);

/// Removable nodes of bp, component 1 first, rows increasing.
std::vector<ExtNode> removable_nodes(const Bipartition& bp);
/// Addable nodes of bp, component 1 first, rows increasing.
std::vector<ExtNode> addable_nodes(const Bipartition& bp);

Bipartition add_node(const Bipartition& bp, const ExtNode& node);
Bipartition remove_node(const Bipartition& bp, const ExtNode& node);

enum class NatureKind { A, R, Bv, Bh };

struct Nature {
    NatureKind kind = NatureKind::A;
    bool is_virtual = false;

    /// R and Bv nodes lie on the vertical boundary; A and Bh do not.
    bool on_vertical_boundary() const { return kind == NatureKind::R || kind == NatureKind::Bv; }

    friend bool operator==(const Nature&, const Nature&) = default;
};

std::string to_string(NatureKind kind);
std::string to_string(const Nature& nature);

struct NatureEntry {
    Nature nature;
    ExtNode node;
};

/// The unique node of the given content in component c which is addable or on
/// the boundary of the extended diagram, together with its nature.
NatureEntry nature_at(const Bipartition& bp, const Charge& charge, int content, Component c);

struct ContentWindow {
    int lo = 0;
    int hi = 0;

    bool contains(int j) const { return lo <= j && j <= hi; }
    bool contains(const ContentWindow& w) const { return lo <= w.lo && w.hi <= hi; }
    friend bool operator==(const ContentWindow&, const ContentWindow&) = default;
};

/// Smallest window outside of which every slot of bp is a virtual B_v (below)
/// or a virtual B_h (above).
ContentWindow active_window(const Bipartition& bp, const Charge& charge);

/// The conservative window [min(s) - n - 1, max(s) + n + 1] for rank n.
ContentWindow rank_window(const Charge& charge, int rank);

class NatureTable {
public:
    NatureTable(Charge charge, ContentWindow window, std::vector<NatureEntry> entries);

    const Charge& charge() const { return charge_; }
    const ContentWindow& window() const { return window_; }
    const NatureEntry& at(int content, Component c) const;

    /// Entries in increasing node order: for each content, component 2 then component 1.
    const std::vector<NatureEntry>& entries() const { return entries_; }

private:
    Charge charge_;
    ContentWindow window_;
    std::vector<NatureEntry> entries_;
};

/// Throws std::invalid_argument when window does not cover active_window(bp, charge).
NatureTable nature_table(const Bipartition& bp, const Charge& charge, const ContentWindow& window);

/// Strict node order: smaller content first; at equal content component 2 < component 1.
/// Throws std::invalid_argument for distinct nodes sharing content and component.
bool node_less(const ExtNode& g1, const ExtNode& g2, const Charge& charge);

using BoundarySeq = std::vector<ExtNode>;

/// Vertical-boundary nodes with content in window, in decreasing node order.
BoundarySeq boundary_sequence(const Bipartition& bp, const Charge& charge, const ContentWindow& window);

/// Total order comparing boundary sequences position by position.
std::strong_ordering order_uglov(const Bipartition& x, const Bipartition& y, const Charge& charge);
bool uglov_less(const Bipartition& x, const Bipartition& y, const Charge& charge);

/// Lexicographic order on (first component, second component).
std::strong_ordering order_lex(const Bipartition& x, const Bipartition& y);

/// Self-test of the asymptotic case: requires s1 - s2 > n - 1 and checks that
/// order_uglov and order_lex agree on every pair of bipartitions of rank n.
bool orders_agree_asymptotic(int n, const Charge& charge);

/// Precomputed comparison key: encoded vertical-boundary slots in decreasing
/// order down to a fixed floor. Keys built with the same charge and floor
/// compare exactly like order_uglov.
class UglovKey {
public:
    UglovKey(const Bipartition& bp, const Charge& charge, int floor);

    friend bool operator==(const UglovKey&, const UglovKey&) = default;
    friend auto operator<=>(const UglovKey&, const UglovKey&) = default;

private:
    std::vector<int> slots_;
};

/// A floor low enough for all bipartitions of rank <= n.
int key_floor(const Charge& charge, int n);

}  // namespace uglov
