#include "uglov/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace uglov {

void FockVector::add(const Bipartition& bp, Coeff coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.rank() != bp.rank())
        throw std::invalid_argument("Fock vector terms must share one rank");
    auto [it, inserted] = terms_.try_emplace(bp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector::Coeff FockVector::coeff(const Bipartition& bp) const {
    const auto it = terms_.find(bp);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> FockVector::rank() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.rank();
}

FockVector f_action(const FockVector& v, int j, const CrystalParams& p) {
    FockVector out;
    for (const auto& [bp, c] : v.terms())
        for (const ExtNode& node : addable_nodes(bp))
            if (residue(node, p.charge, p.e) == j) out.add(add_node(bp, node), c);
    return out;
}

FockVector e_action(const FockVector& v, int j, const CrystalParams& p) {
    FockVector out;
    for (const auto& [bp, c] : v.terms())
        for (const ExtNode& node : removable_nodes(bp))
            if (residue(node, p.charge, p.e) == j) out.add(remove_node(bp, node), c);
    return out;
}

FockVector apply_monomial(const std::vector<int>& word, const FockVector& v, const CrystalParams& p) {
    FockVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = f_action(out, *it, p);
    return out;
}

SignatureWord signature_word(const Bipartition& bp, int j, const CrystalParams& p) {
    SignatureWord word;
    for (const ExtNode& node : addable_nodes(bp))
        if (residue(node, p.charge, p.e) == j) word.push_back({node, NodeTag::addable});
    for (const ExtNode& node : removable_nodes(bp))
        if (residue(node, p.charge, p.e) == j) word.push_back({node, NodeTag::removable});
    std::sort(word.begin(), word.end(), [&](const SignatureEntry& x, const SignatureEntry& y) {
        return node_less(x.node, y.node, p.charge);
    });
    return word;
}

SignatureWord reduce_word(const SignatureWord& word) {
    // stack-based cancellation: an addable letter annihilates the nearest
    // surviving removable letter to its left
    SignatureWord kept;
    for (const SignatureEntry& letter : word) {
        if (letter.tag == NodeTag::addable && !kept.empty() && kept.back().tag == NodeTag::removable) {
            kept.pop_back();
        } else {
            kept.push_back(letter);
        }
    }
    return kept;
}

namespace {

std::vector<ExtNode> survivors(const Bipartition& bp, int j, const CrystalParams& p, NodeTag tag) {
    std::vector<ExtNode> out;
    for (const SignatureEntry& letter : reduce_word(signature_word(bp, j, p)))
        if (letter.tag == tag) out.push_back(letter.node);
    return out;
}

}  // namespace

std::vector<ExtNode> normal_removable_nodes(const Bipartition& bp, int j, const CrystalParams& p) {
    return survivors(bp, j, p, NodeTag::removable);
}

std::vector<ExtNode> normal_addable_nodes(const Bipartition& bp, int j, const CrystalParams& p) {
    return survivors(bp, j, p, NodeTag::addable);
}

std::optional<ExtNode> good_addable_node(const Bipartition& bp, int j, const CrystalParams& p) {
    const auto nodes = normal_addable_nodes(bp, j, p);
    if (nodes.empty()) return std::nullopt;
    return nodes.back();
}

std::optional<ExtNode> good_removable_node(const Bipartition& bp, int j, const CrystalParams& p) {
    const auto nodes = normal_removable_nodes(bp, j, p);
    if (nodes.empty()) return std::nullopt;
    return nodes.front();
}

std::vector<int> candidate_residues(const Bipartition& bp, const CrystalParams& p) {
    std::vector<int> out;
    if (p.e.is_finite()) {
        for (int j = 0; j < p.e.value(); ++j) out.push_back(j);
        return out;
    }
    for (const ExtNode& node : addable_nodes(bp)) out.push_back(content(node, p.charge));
    for (const ExtNode& node : removable_nodes(bp)) out.push_back(content(node, p.charge));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<PeelStep> peel_step(const Bipartition& bp, const CrystalParams& p) {
    for (int j : candidate_residues(bp, p))
        if (auto node = good_removable_node(bp, j, p)) return PeelStep{j, *node};
    return std::nullopt;
}

std::optional<std::vector<int>> peel_residues(const Bipartition& bp, const CrystalParams& p) {
    // A connected component of the crystal is closed under removing good
    // nodes, so any single peeling path decides membership.
    std::vector<int> residues;
    Bipartition cur = bp;
    while (!cur.empty()) {
        const auto step = peel_step(cur, p);
        if (!step) return std::nullopt;
        residues.push_back(step->residue);
        cur = remove_node(cur, step->node);
    }
    return residues;
}

std::optional<Bipartition> build_by_good_nodes(const Bipartition& start, const std::vector<int>& residues,
                                               const CrystalParams& p) {
    Bipartition cur = start;
    for (int j : residues) {
        const auto node = good_addable_node(cur, j, p);
        if (!node) return std::nullopt;
        cur = add_node(cur, *node);
    }
    return cur;
}

bool is_uglov(const Bipartition& bp, const CrystalParams& p) { return peel_residues(bp, p).has_value(); }

std::vector<std::set<Bipartition>> enumerate_uglov_layers(int n, const CrystalParams& p) {
    std::vector<std::set<Bipartition>> layers{{Bipartition{}}};
    for (int k = 1; k <= n; ++k) {
        std::set<Bipartition> next;
        for (const Bipartition& bp : layers.back())
            for (int j : candidate_residues(bp, p))
                if (auto node = good_addable_node(bp, j, p)) next.insert(add_node(bp, *node));
        layers.push_back(std::move(next));
    }
    return layers;
}

std::set<Bipartition> enumerate_uglov(int n, const CrystalParams& p) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    return std::move(enumerate_uglov_layers(n, p).back());
}

bool in_fundamental_domain(const Charge& charge, const Modulus& e) {
    return e.is_finite() && 0 <= charge.s1 && charge.s1 <= charge.s2 && charge.s2 < e.value();
}

namespace {

void require_fundamental(const CrystalParams& p) {
    if (!in_fundamental_domain(p.charge, p.e))
        throw std::invalid_argument("FLOTW test needs a charge with 0 <= s1 <= s2 < e");
}

}  // namespace

bool flotw_dominance_holds(const Bipartition& bp, const CrystalParams& p) {
    require_fundamental(p);
    const int shift12 = p.charge.s2 - p.charge.s1;
    const int shift21 = p.e.value() + p.charge.s1 - p.charge.s2;
    const Partition& l1 = bp.first();
    const Partition& l2 = bp.second();
    const int reach = l1.length() + l2.length() + 1;
    for (int i = 1; i <= reach; ++i) {
        if (l1[i] < l2[i + shift12]) return false;
        if (l2[i] < l1[i + shift21]) return false;
    }
    return true;
}

bool flotw_residue_condition_holds(const Bipartition& bp, const CrystalParams& p) {
    require_fundamental(p);
    const int e = p.e.value();
    const int widest = std::max(bp.first()[1], bp.second()[1]);
    for (int k = 1; k <= widest; ++k) {
        std::vector<bool> seen(static_cast<std::size_t>(e), false);
        int distinct = 0;
        for (Component c : kComponents) {
            for (int a = 1; a <= bp[c].length(); ++a) {
                if (bp[c][a] != k) continue;
                const auto r = static_cast<std::size_t>(residue(ExtNode{a, k, c}, p.charge, p.e));
                if (!seen[r]) {
                    seen[r] = true;
                    ++distinct;
                }
            }
        }
        if (distinct == e) return false;
    }
    return true;
}

bool is_flotw(const Bipartition& bp, const CrystalParams& p) {
    return flotw_dominance_holds(bp, p) && flotw_residue_condition_holds(bp, p);
}

Bipartition support_max(const FockVector& v, const Charge& charge) {
    if (v.is_zero()) throw std::invalid_argument("support of the zero vector is empty");
    const int floor = key_floor(charge, *v.rank());
    const Bipartition* best = nullptr;
    std::optional<UglovKey> best_key;
    for (const auto& [bp, c] : v.terms()) {
        UglovKey key(bp, charge, floor);
        if (!best_key || *best_key < key) {
            best = &bp;
            best_key = std::move(key);
        }
    }
    return *best;
}

Bipartition max_of_monomial(const std::vector<int>& word, const CrystalParams& p) {
    if (word.empty()) throw std::invalid_argument("monomial word must be nonempty");
    const FockVector v = apply_monomial(word, FockVector::basis(Bipartition{}), p);
    if (v.is_zero()) throw std::invalid_argument("monomial acts as zero on the empty bipartition");
    return support_max(v, p.charge);
}

}  // namespace uglov
