#include "uglov/admissible.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace uglov {

namespace {

void require_finite(const CrystalParams& p, const char* what) {
    if (!p.e.is_finite()) throw std::invalid_argument(std::string(what) + " needs a finite e");
}

void require_fundamental(const CrystalParams& p, const char* what) {
    if (!in_fundamental_domain(p.charge, p.e))
        throw std::invalid_argument(std::string(what) + " needs a charge with 0 <= s1 <= s2 < e");
}

bool is_removable(const Bipartition& bp, const ExtNode& node) {
    return node.row >= 1 && node.col >= 1 && bp[node.comp][node.row] == node.col &&
           bp[node.comp][node.row + 1] < node.col;
}

Bipartition remove_all(Bipartition bp, const std::vector<ExtNode>& nodes) {
    for (const ExtNode& node : nodes) bp = remove_node(bp, node);
    return bp;
}

// Slots of residue j over the active window with the given nature predicate.
template <typename Pred>
std::vector<ExtNode> slots_where(const Bipartition& bp, int j, const CrystalParams& p, Pred&& pred) {
    std::vector<ExtNode> out;
    const ContentWindow w = active_window(bp, p.charge);
    for (int cont = w.lo; cont <= w.hi; ++cont) {
        if (p.e.reduce(cont) != j) continue;
        for (Component c : kComponents) {
            const NatureEntry entry = nature_at(bp, p.charge, cont, c);
            if (pred(entry.nature)) out.push_back(entry.node);
        }
    }
    return out;
}

bool dominates_addable_and_bv(const Bipartition& bp, const ExtNode& top, int j, const CrystalParams& p) {
    const auto rivals = slots_where(bp, j, p, [](const Nature& n) {
        return n.kind == NatureKind::A || n.kind == NatureKind::Bv;
    });
    return std::all_of(rivals.begin(), rivals.end(),
                       [&](const ExtNode& x) { return node_less(x, top, p.charge); });
}

}  // namespace

std::optional<std::vector<ExtNode>> find_period(const Bipartition& bp, const CrystalParams& p,
                                                const std::optional<ExtNode>& through) {
    require_finite(p, "period detection");
    const int e = p.e.value();
    // non-virtual vertical-boundary nodes keyed by (column, content, component)
    std::map<std::pair<int, int>, std::vector<ExtNode>> by_column_content;
    for (Component c : kComponents) {
        const Partition& lam = bp[c];
        for (int a = 1; a <= lam.length(); ++a) {
            const ExtNode node{a, lam[a], c};
            by_column_content[{lam[a], content(node, p.charge)}].push_back(node);
        }
    }
    std::vector<ExtNode> chain;
    auto extend = [&](auto&& self, int column, int cont, int min_comp) -> bool {
        if (static_cast<int>(chain.size()) == e)
            return !through || std::find(chain.begin(), chain.end(), *through) != chain.end();
        const auto it = by_column_content.find({column, cont});
        if (it == by_column_content.end()) return false;
        for (const ExtNode& node : it->second) {
            if (static_cast<int>(node.comp) < min_comp) continue;
            chain.push_back(node);
            if (self(self, column, cont + 1, static_cast<int>(node.comp))) return true;
            chain.pop_back();
        }
        return false;
    };
    for (const auto& [key, nodes] : by_column_content) {
        chain.clear();
        if (extend(extend, key.first, key.second, 1)) return chain;
    }
    return std::nullopt;
}

bool has_period(const Bipartition& bp, const CrystalParams& p) { return find_period(bp, p).has_value(); }

bool one_connected(const Bipartition& bp, const ExtNode& g1, const ExtNode& g2, const CrystalParams& p) {
    require_finite(p, "(1)-connectedness");
    if (!is_removable(bp, g1) || !is_removable(bp, g2))
        throw std::invalid_argument("(1)-connectedness is defined for removable nodes");
    if (residue(g1, p.charge, p.e) != residue(g2, p.charge, p.e))
        throw std::invalid_argument("(1)-connected nodes must share a residue");
    if (!node_less(g1, g2, p.charge)) throw std::invalid_argument("(1)-connectedness expects g1 < g2");
    return find_period(remove_node(bp, g2), p, g1).has_value();
}

std::optional<ExtNode> two_connected(const Bipartition& bp, const ExtNode& g1, const CrystalParams& p) {
    require_fundamental(p, "(2)-connectedness");
    if (!is_removable(bp, g1)) throw std::invalid_argument("(2)-connectedness is defined for removable nodes");
    const Partition& l1 = bp.first();
    const Partition& l2 = bp.second();
    const int a = g1.row;
    if (g1.comp == Component::first) {
        const int row = a + p.charge.s2 - p.charge.s1;
        if (l1[a] == l2[row]) return ExtNode{row, l2[row], Component::second};
    } else {
        const int row = a + p.e.value() + p.charge.s1 - p.charge.s2;
        if (l2[a] == l1[row]) return ExtNode{row, l1[row], Component::first};
    }
    return std::nullopt;
}

ExtNode max_removable_node(const Bipartition& bp, const Charge& charge) {
    const auto nodes = removable_nodes(bp);
    if (nodes.empty()) throw std::invalid_argument("the empty bipartition has no removable node");
    return *std::max_element(nodes.begin(), nodes.end(),
                             [&](const ExtNode& x, const ExtNode& y) { return node_less(x, y, charge); });
}

ExtNode class_seed(const Bipartition& bp, const CrystalParams& p) {
    require_fundamental(p, "class seeds");
    if (bp.empty()) throw std::invalid_argument("the empty bipartition has no class seed");
    const int e = p.e.value();
    const int k = std::max(bp.first()[1], bp.second()[1]);
    // right ends of the rows of length k; FLOTW guarantees their residues miss some value
    std::vector<ExtNode> ends;
    std::vector<bool> present(static_cast<std::size_t>(e), false);
    for (Component c : kComponents) {
        for (int a = 1; a <= bp[c].length() && bp[c][a] == k; ++a) {
            const ExtNode node{a, k, c};
            ends.push_back(node);
            present[static_cast<std::size_t>(residue(node, p.charge, p.e))] = true;
        }
    }
    std::optional<ExtNode> best;
    for (const ExtNode& node : ends) {
        const int j = residue(node, p.charge, p.e);
        if (present[static_cast<std::size_t>((j + e - 1) % e)] || !is_removable(bp, node)) continue;
        if (!best || node_less(*best, node, p.charge)) best = node;
    }
    if (!best) throw std::invalid_argument(to_string(bp) + " has no class seed; it is not FLOTW");
    return *best;
}

std::vector<ExtNode> removable_class(const Bipartition& bp, const ExtNode& seed, const CrystalParams& p) {
    require_fundamental(p, "removable classes");
    if (bp.empty() || seed != class_seed(bp, p))
        throw std::invalid_argument("class must grow from the seed given by class_seed");
    const int j = residue(seed, p.charge, p.e);
    std::vector<ExtNode> pool;
    for (const ExtNode& node : removable_nodes(bp))
        if (residue(node, p.charge, p.e) == j) pool.push_back(node);
    std::sort(pool.begin(), pool.end(), [&](const ExtNode& x, const ExtNode& y) { return node_less(x, y, p.charge); });

    std::vector<std::size_t> parent(pool.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto index_of_node = [&](const ExtNode& node) -> std::optional<std::size_t> {
        const auto it = std::find(pool.begin(), pool.end(), node);
        if (it == pool.end()) return std::nullopt;
        return static_cast<std::size_t>(it - pool.begin());
    };
    for (std::size_t x = 0; x < pool.size(); ++x) {
        for (std::size_t y = x + 1; y < pool.size(); ++y)
            if (one_connected(bp, pool[x], pool[y], p)) parent[find(x)] = find(y);
        if (const auto partner = two_connected(bp, pool[x], p))
            if (const auto y = index_of_node(*partner)) parent[find(x)] = find(*y);
    }
    const std::size_t root = find(*index_of_node(seed));
    std::vector<ExtNode> cls;
    for (std::size_t x = 0; x < pool.size(); ++x)
        if (find(x) == root) cls.push_back(pool[x]);
    return cls;
}

std::vector<ClassStep> flotw_class_steps(const Bipartition& bp, const CrystalParams& p) {
    require_fundamental(p, "the FLOTW recursion");
    if (!is_flotw(bp, p)) throw std::invalid_argument(to_string(bp) + " is not FLOTW");
    std::vector<ClassStep> steps;
    Bipartition cur = bp;
    while (!cur.empty()) {
        ClassStep step;
        step.before = cur;
        step.seed = class_seed(cur, p);
        step.residue = residue(step.seed, p.charge, p.e);
        step.nodes = removable_class(cur, step.seed, p);
        step.after = remove_all(cur, step.nodes);
        if (!is_flotw(step.after, p))
            throw std::logic_error("class removal left the FLOTW set at " + to_string(step.after));
        cur = step.after;
        steps.push_back(std::move(step));
    }
    return steps;
}

ResidueSeq adm_flotw(const Bipartition& bp, const CrystalParams& p) {
    const auto steps = flotw_class_steps(bp, p);
    ResidueSeq seq;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) seq.insert(seq.end(), it->nodes.size(), it->residue);
    return seq;
}

ResidueSeq adm(const Bipartition& bp, const CrystalParams& p) {
    require_finite(p, "the admissible sequence");
    if (!is_uglov(bp, p)) throw std::invalid_argument(to_string(bp) + " is not Uglov");
    const MovePath path = reduce_to_fundamental(p.charge, p.e);
    return adm_flotw(psi(bp, path, p.e), {p.e, path.end()});
}

DjmReport verify_djm_forward(const Bipartition& bp, const CrystalParams& p) {
    DjmReport report;
    report.bp = bp;
    report.adm = adm(bp, p);
    const ResidueSeq word(report.adm.rbegin(), report.adm.rend());
    report.expansion = apply_monomial(word, FockVector::basis(Bipartition{}), p);
    if (report.expansion.is_zero()) {
        report.message = "expansion vanishes";
        return report;
    }
    report.max = support_max(report.expansion, p.charge);
    if (report.expansion.coeff(bp) == 0) {
        report.message = "coefficient of bp is zero";
    } else if (*report.max != bp) {
        report.message = "support contains " + to_string(*report.max) + " above bp";
    } else {
        report.pass = true;
    }
    return report;
}

ConverseReport verify_djm_converse(int n, const CrystalParams& p) {
    require_finite(p, "the converse search");
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    ConverseReport report;
    report.rank = n;
    const int e = p.e.value();
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    // fill the word from its last letter, which acts first
    auto descend = [&](auto&& self, int pos, const FockVector& v) -> void {
        if (pos < 0) {
            ++report.words_checked;
            if (v.is_zero()) return;
            ++report.nonzero_words;
            Bipartition top = support_max(v, p.charge);
            if (!is_uglov(top, p)) report.counterexamples.push_back({word, top});
            report.maxima.insert(std::move(top));
            return;
        }
        for (int j = 0; j < e; ++j) {
            word[static_cast<std::size_t>(pos)] = j;
            self(self, pos - 1, f_action(v, j, p));
        }
    };
    descend(descend, n - 1, FockVector::basis(Bipartition{}));
    report.maxima_cover_uglov = report.maxima == enumerate_uglov(n, p);
    return report;
}

namespace {

// Cells still needed before the rows can form a partition: each row must reach the longest row below it.
int partition_deficit(const std::vector<int>& rows) {
    int need = 0, below = 0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        below = std::max(below, *it);
        need += below - *it;
    }
    return need;
}

}  // namespace

std::set<Bipartition> row_standard_shapes(const ResidueSeq& word, const CrystalParams& p) {
    const int n = static_cast<int>(word.size());
    using State = std::array<std::vector<int>, 2>;  // filled length of rows 1..n per component
    std::set<State> frontier{{std::vector<int>(static_cast<std::size_t>(n), 0),
                              std::vector<int>(static_cast<std::size_t>(n), 0)}};
    for (int k = 0; k < n; ++k) {
        std::set<State> next;
        for (const State& st : frontier) {
            for (Component c : kComponents) {
                const auto& rows = st[static_cast<std::size_t>(index_of(c))];
                for (int a = 1; a <= n; ++a) {
                    const int len = rows[static_cast<std::size_t>(a - 1)];
                    if (p.e.reduce(len + 1 - a + p.charge[c]) != word[static_cast<std::size_t>(k)]) continue;
                    State grown = st;
                    ++grown[static_cast<std::size_t>(index_of(c))][static_cast<std::size_t>(a - 1)];
                    if (partition_deficit(grown[0]) + partition_deficit(grown[1]) > n - k - 1) continue;
                    next.insert(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    std::set<Bipartition> shapes;
    for (const State& st : frontier) {
        if (!std::is_sorted(st[0].begin(), st[0].end(), std::greater<>()) ||
            !std::is_sorted(st[1].begin(), st[1].end(), std::greater<>()))
            continue;
        shapes.emplace(Partition(st[0]), Partition(st[1]));
    }
    return shapes;
}

CorollaryReport verify_djm_corollary(const Bipartition& bp, const CrystalParams& p) {
    CorollaryReport report;
    report.bp = bp;
    report.adm = adm(bp, p);
    report.shapes = row_standard_shapes(report.adm, p);
    if (!report.shapes.contains(bp)) {
        report.message = "bp admits no row-standard tableau with its own admissible sequence";
        return report;
    }
    for (const Bipartition& mu : report.shapes) {
        if (mu != bp && !uglov_less(mu, bp, p.charge)) {
            report.message = "shape " + to_string(mu) + " is not below bp";
            return report;
        }
    }
    report.pass = true;
    return report;
}

PropbReport propb_checks(const Bipartition& bp, const CrystalParams& p) {
    PropbReport report;
    report.bp = bp;
    require_finite(p, "propb checks");
    if (!is_uglov(bp, p)) throw std::invalid_argument(to_string(bp) + " is not Uglov");
    if (bp.empty()) {
        report.pass = true;
        return report;
    }
    const MovePath path = reduce_to_fundamental(p.charge, p.e);
    const CrystalParams home{p.e, path.end()};
    const Bipartition image = psi(bp, path, p.e);
    const ClassStep top = flotw_class_steps(image, home).front();
    report.residue = top.residue;
    const int j = top.residue;
    const std::size_t r = top.nodes.size();

    const auto home_normals = normal_removable_nodes(image, j, home);
    if (home_normals.size() < r || !std::equal(top.nodes.begin(), top.nodes.end(), home_normals.end() - static_cast<std::ptrdiff_t>(r))) {
        report.message = "top class of " + to_string(image) + " is not made of its greatest normal nodes";
        return report;
    }
    const auto normals = normal_removable_nodes(bp, j, p);
    if (normals.size() != home_normals.size()) {
        report.message = "normal node count changed under the isomorphism";
        return report;
    }
    report.eta.assign(normals.end() - static_cast<std::ptrdiff_t>(r), normals.end());
    const ExtNode eta1 = report.eta.front();
    auto above = [&](const ExtNode& x) { return node_less(eta1, x, p.charge); };

    for (const ExtNode& node : addable_nodes(bp)) {
        if (residue(node, p.charge, p.e) == j && above(node)) {
            report.message = "addable node " + to_string(node) + " lies above eta_1";
            return report;
        }
    }
    const auto real_bh = slots_where(bp, j, p, [](const Nature& n) { return n.kind == NatureKind::Bh && !n.is_virtual; });
    const auto bv = slots_where(bp, j, p, [](const Nature& n) { return n.kind == NatureKind::Bv; });
    if (std::any_of(real_bh.begin(), real_bh.end(), above) && std::any_of(bv.begin(), bv.end(), above)) {
        report.message = "both a non-virtual B_h and a B_v node lie above eta_1";
        return report;
    }
    report.pass = true;
    return report;
}

ClassProperties class_properties(const ClassStep& step, const CrystalParams& p) {
    require_fundamental(p, "class properties");
    ClassProperties props;
    const auto& nodes = step.nodes;
    const int j = step.residue;

    props.suffixes_flotw = true;
    props.prefixes_flotw = true;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const std::vector<ExtNode> suffix(nodes.begin() + static_cast<std::ptrdiff_t>(k), nodes.end());
        const std::vector<ExtNode> prefix(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k + 1));
        if (!is_flotw(remove_all(step.before, suffix), p)) props.suffixes_flotw = false;
        if (!is_flotw(remove_all(step.before, prefix), p)) props.prefixes_flotw = false;
    }
    props.seed_dominates = dominates_addable_and_bv(step.before, step.seed, j, p);
    props.minimum_dominates = dominates_addable_and_bv(step.before, nodes.front(), j, p);

    const ExtNode& g1 = nodes.front();
    const auto real_bh = slots_where(step.before, j, p, [](const Nature& n) { return n.kind == NatureKind::Bh && !n.is_virtual; });
    const bool bh_above = std::any_of(real_bh.begin(), real_bh.end(), [&](const ExtNode& x) { return node_less(g1, x, p.charge); });
    props.bh_implies_link = !bh_above;
    props.bh_implies_link_to_last = !bh_above;
    for (std::size_t k = 1; bh_above && k < nodes.size(); ++k) {
        if (!one_connected(step.before, g1, nodes[k], p)) continue;
        props.bh_implies_link_to_last = true;
        if (k + 1 < nodes.size()) props.bh_implies_link = true;
    }
    return props;
}

}  // namespace uglov
