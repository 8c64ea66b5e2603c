#include "uglov/diagrams.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uglov {

Modulus Modulus::finite(int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2 (got " + std::to_string(e) + ")");
    Modulus m;
    m.value_ = e;
    return m;
}

int Modulus::reduce(int content) const {
    if (!is_finite()) return content;
    const int r = content % value_;
    return r < 0 ? r + value_ : r;
}

std::string to_string(const Modulus& e) { return e.is_finite() ? std::to_string(e.value()) : "inf"; }

std::string to_string(const ExtNode& node) {
    std::ostringstream os;
    os << '(' << node.row << ',' << node.col << ',' << static_cast<int>(node.comp) << ')';
    return os.str();
}

int content(const ExtNode& node, const Charge& charge) { return node.col - node.row + charge[node.comp]; }

int residue(const ExtNode& node, const Charge& charge, const Modulus& e) {
    return e.reduce(content(node, charge));
}

bool is_extended_node(const Bipartition& bp, const ExtNode& node) {
    const Partition& lam = bp[node.comp];
    if (node.row < 0 || node.col < 0) return false;
    if (node.row == 0 && node.col == 0) return false;
    if (node.row == 0) return node.col > lam[1];
    if (node.col == 0) return node.row > lam.length();
    return node.row <= lam.length() && node.col <= lam[node.row];
}

std::vector<ExtNode> removable_nodes(const Bipartition& bp) {
    std::vector<ExtNode> out;
    for (Component c : kComponents) {
        const Partition& lam = bp[c];
        for (int a = 1; a <= lam.length(); ++a)
            if (lam[a] > lam[a + 1]) out.push_back({a, lam[a], c});
    }
    return out;
}

std::vector<ExtNode> addable_nodes(const Bipartition& bp) {
    std::vector<ExtNode> out;
    for (Component c : kComponents) {
        const Partition& lam = bp[c];
        for (int a = 1; a <= lam.length() + 1; ++a)
            if (a == 1 || lam[a - 1] > lam[a]) out.push_back({a, lam[a] + 1, c});
    }
    return out;
}

Bipartition add_node(const Bipartition& bp, const ExtNode& node) {
    if (node.row < 1 || node.col != bp[node.comp][node.row] + 1)
        throw std::invalid_argument("node " + to_string(node) + " is not addable");
    return bp.with_row_delta(node.comp, node.row, +1);
}

Bipartition remove_node(const Bipartition& bp, const ExtNode& node) {
    if (node.row < 1 || node.col < 1 || node.col != bp[node.comp][node.row])
        throw std::invalid_argument("node " + to_string(node) + " is not removable");
    return bp.with_row_delta(node.comp, node.row, -1);
}

std::string to_string(NatureKind kind) {
    switch (kind) {
        case NatureKind::A: return "A";
        case NatureKind::R: return "R";
        case NatureKind::Bv: return "Bv";
        case NatureKind::Bh: return "Bh";
    }
    return "?";
}

std::string to_string(const Nature& nature) { return to_string(nature.kind) + (nature.is_virtual ? "*" : ""); }

NatureEntry nature_at(const Bipartition& bp, const Charge& charge, int j, Component c) {
    const Partition& lam = bp[c];
    const int diag = j - charge[c];  // b - a along the slot

    std::optional<ExtNode> addable;
    for (int a = 1; a <= lam.length() + 1; ++a) {
        if ((a == 1 || lam[a - 1] > lam[a]) && lam[a] + 1 - a == diag) addable = ExtNode{a, lam[a] + 1, c};
    }

    std::optional<ExtNode> vertical;
    if (-diag > lam.length()) {
        vertical = ExtNode{-diag, 0, c};
    } else {
        for (int a = 1; a <= lam.length(); ++a)
            if (lam[a] - a == diag) vertical = ExtNode{a, lam[a], c};
    }

    std::optional<ExtNode> horizontal;
    if (diag > lam[1]) {
        horizontal = ExtNode{0, diag, c};
    } else {
        for (int b = 1; b <= lam[1]; ++b)
            if (b - lam.column_length(b) == diag) horizontal = ExtNode{lam.column_length(b), b, c};
    }

    if (addable) {
        if (vertical || horizontal) throw std::logic_error("slot holds both an addable and a boundary node");
        return {{NatureKind::A, false}, *addable};
    }
    if (vertical && horizontal) {
        if (*vertical != *horizontal) throw std::logic_error("slot holds two distinct boundary nodes");
        return {{NatureKind::R, false}, *vertical};
    }
    if (vertical) return {{NatureKind::Bv, vertical->col == 0}, *vertical};
    if (horizontal) return {{NatureKind::Bh, horizontal->row == 0}, *horizontal};
    throw std::logic_error("empty slot in nature classification");
}

ContentWindow active_window(const Bipartition& bp, const Charge& charge) {
    ContentWindow w{charge.s1 - bp.first().length() - 1, charge.s1 + bp.first()[1]};
    w.lo = std::min(w.lo, charge.s2 - bp.second().length() - 1);
    w.hi = std::max(w.hi, charge.s2 + bp.second()[1]);
    return w;
}

ContentWindow rank_window(const Charge& charge, int rank) {
    return {std::min(charge.s1, charge.s2) - rank - 1, std::max(charge.s1, charge.s2) + rank + 1};
}

NatureTable::NatureTable(Charge charge, ContentWindow window, std::vector<NatureEntry> entries)
    : charge_(charge), window_(window), entries_(std::move(entries)) {}

const NatureEntry& NatureTable::at(int j, Component c) const {
    if (!window_.contains(j)) throw std::out_of_range("content " + std::to_string(j) + " outside table window");
    const auto idx = static_cast<std::size_t>(2 * (j - window_.lo) + (c == Component::first ? 1 : 0));
    return entries_[idx];
}

NatureTable nature_table(const Bipartition& bp, const Charge& charge, const ContentWindow& window) {
    const ContentWindow need = active_window(bp, charge);
    // the lowest slot of the active window is always a virtual B_v, so it may be cut
    if (window.lo > need.lo + 1 || window.hi < need.hi || window.lo > window.hi) {
        std::ostringstream os;
        os << "window [" << window.lo << ',' << window.hi << "] is too small; need at least [" << need.lo + 1 << ','
           << need.hi << ']';
        throw std::invalid_argument(os.str());
    }
    std::vector<NatureEntry> entries;
    entries.reserve(static_cast<std::size_t>(2 * (window.hi - window.lo + 1)));
    for (int j = window.lo; j <= window.hi; ++j) {
        entries.push_back(nature_at(bp, charge, j, Component::second));
        entries.push_back(nature_at(bp, charge, j, Component::first));
    }
    return {charge, window, std::move(entries)};
}

bool node_less(const ExtNode& g1, const ExtNode& g2, const Charge& charge) {
    const int c1 = content(g1, charge);
    const int c2 = content(g2, charge);
    if (c1 != c2) return c1 < c2;
    if (g1.comp != g2.comp) return g1.comp == Component::second;
    if (g1 == g2) return false;
    throw std::invalid_argument("nodes " + to_string(g1) + " and " + to_string(g2) + " are incomparable");
}

namespace {

// Monotone encoding of a (content, component) slot under the node order.
int slot_code(int cont, Component c) { return 2 * cont + (c == Component::first ? 1 : 0); }

template <typename Visit>
void for_each_vertical(const Bipartition& bp, const Charge& charge, int floor, Visit&& visit) {
    for (Component c : kComponents) {
        const Partition& lam = bp[c];
        for (int a = 1;; ++a) {
            const int cont = lam[a] - a + charge[c];
            if (cont < floor) break;
            visit(ExtNode{a, lam[a], c}, cont);
        }
    }
}

}  // namespace

BoundarySeq boundary_sequence(const Bipartition& bp, const Charge& charge, const ContentWindow& window) {
    BoundarySeq seq;
    for_each_vertical(bp, charge, window.lo, [&](const ExtNode& node, int cont) {
        if (cont <= window.hi) seq.push_back(node);
    });
    std::sort(seq.begin(), seq.end(), [&](const ExtNode& x, const ExtNode& y) {
        return slot_code(content(x, charge), x.comp) > slot_code(content(y, charge), y.comp);
    });
    return seq;
}

UglovKey::UglovKey(const Bipartition& bp, const Charge& charge, int floor) {
    for_each_vertical(bp, charge, floor, [&](const ExtNode& node, int cont) { slots_.push_back(slot_code(cont, node.comp)); });
    std::sort(slots_.begin(), slots_.end(), std::greater<>());
}

int key_floor(const Charge& charge, int n) { return std::min(charge.s1, charge.s2) - n - 1; }

std::strong_ordering order_uglov(const Bipartition& x, const Bipartition& y, const Charge& charge) {
    if (x == y) return std::strong_ordering::equal;
    const int floor = key_floor(charge, std::max(x.rank(), y.rank()));
    return UglovKey(x, charge, floor) <=> UglovKey(y, charge, floor);
}

bool uglov_less(const Bipartition& x, const Bipartition& y, const Charge& charge) {
    return order_uglov(x, y, charge) == std::strong_ordering::less;
}

std::strong_ordering order_lex(const Bipartition& x, const Bipartition& y) {
    for (Component c : kComponents) {
        const int len = std::max(x[c].length(), y[c].length());
        for (int i = 1; i <= len; ++i)
            if (x[c][i] != y[c][i]) return x[c][i] <=> y[c][i];
    }
    return std::strong_ordering::equal;
}

bool orders_agree_asymptotic(int n, const Charge& charge) {
    if (charge.s1 - charge.s2 <= n - 1)
        throw std::invalid_argument("asymptotic agreement needs s1 - s2 > n - 1");
    const auto all = bipartitions_of(n);
    for (const auto& x : all)
        for (const auto& y : all)
            if (order_uglov(x, y, charge) != order_lex(x, y)) return false;
    return true;
}

}  // namespace uglov
