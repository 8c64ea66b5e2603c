#pragma once

// Exhaustive checks shared by the property tests and the acceptance runner.
// Each returns a Tally so callers can decide how much of a grid to sweep.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

namespace suites {

using namespace uglov;

struct Tally {
    long checked = 0;
    long failed = 0;
    long skipped = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first = what;
    }
    void merge(const Tally& other) {
        checked += other.checked;
        skipped += other.skipped;
        if (other.failed && !failed) first = other.first;
        failed += other.failed;
    }
    bool ok() const { return failed == 0; }
};

inline std::string where(const Bipartition& bp, const CrystalParams& p) {
    std::ostringstream out;
    out << to_string(bp) << " e=" << to_string(p.e) << " s=(" << p.charge.s1 << "," << p.charge.s2 << ")";
    return out.str();
}

inline std::vector<Bipartition> uglov_up_to(int n, const CrystalParams& p) {
    std::vector<Bipartition> out;
    for (const auto& layer : enumerate_uglov_layers(n, p)) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

inline std::vector<CrystalParams> fundamental_params(int e) {
    std::vector<CrystalParams> out;
    for (int s1 = 0; s1 < e; ++s1)
        for (int s2 = s1; s2 < e; ++s2) out.push_back(testing::params(e, s1, s2));
    return out;
}

// ---- crystal ----

inline Tally forward(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const DjmReport r = verify_djm_forward(bp, p);
        t.check(r.pass, where(bp, p) + ": " + r.message);
    }
    return t;
}

inline Tally converse(int n, const CrystalParams& p) {
    Tally t;
    for (int k = 1; k <= n; ++k) {
        const ConverseReport r = verify_djm_converse(k, p);
        t.check(r.counterexamples.empty(), "rank " + std::to_string(k) + " " + where(Bipartition{}, p) + ": non-Uglov maximum");
        t.check(r.maxima_cover_uglov, "rank " + std::to_string(k) + " " + where(Bipartition{}, p) + ": Uglov set not covered");
    }
    return t;
}

inline Tally flotw_equivalence(int n, const CrystalParams& p) {
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const Bipartition& bp : bipartitions_of(k)) t.check(is_flotw(bp, p) == is_uglov(bp, p), where(bp, p));
    return t;
}

inline Tally good_node_round_trip(int n, const CrystalParams& p) {
    Tally t;
    const int e = p.e.value();
    for (int k = 0; k <= n; ++k)
        for (const Bipartition& bp : bipartitions_of(k))
            for (int j = 0; j < e; ++j) {
                if (const auto g = good_removable_node(bp, j, p))
                    t.check(good_addable_node(remove_node(bp, *g), j, p) == g, where(bp, p) + " remove/add j=" + std::to_string(j));
                if (const auto g = good_addable_node(bp, j, p))
                    t.check(good_removable_node(add_node(bp, *g), j, p) == g, where(bp, p) + " add/remove j=" + std::to_string(j));
            }
    return t;
}

inline Tally monomial_maxima(int len, const CrystalParams& p) {
    Tally t;
    const int e = p.e.value();
    std::vector<int> word;
    auto walk = [&](auto&& self) -> void {
        if (!word.empty()) {
            const auto v = apply_monomial(word, FockVector::basis(Bipartition{}), p);
            if (!v.is_zero()) t.check(is_uglov(support_max(v, p.charge), p), "word of length " + std::to_string(word.size()));
        }
        if (static_cast<int>(word.size()) == len) return;
        for (int j = 0; j < e; ++j) {
            word.push_back(j);
            self(self);
            word.pop_back();
        }
    };
    walk(walk);
    return t;
}

inline Tally period_exclusion(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) t.check(!has_period(bp, p), where(bp, p));
    return t;
}

// ---- diagrams ----

inline bool transition_allowed(NatureKind here, NatureKind next) {
    const bool here_up = here == NatureKind::A || here == NatureKind::Bh;
    if (here_up) return next == NatureKind::Bh || next == NatureKind::R;
    return next == NatureKind::Bv || next == NatureKind::A;
}

inline Tally nature_transitions(int n, const Charge& s) {
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const Bipartition& bp : bipartitions_of(k)) {
            const auto w = rank_window(s, k);
            const NatureTable table = nature_table(bp, s, w);
            for (Component c : kComponents)
                for (int j = w.lo; j < w.hi; ++j)
                    t.check(transition_allowed(table.at(j, c).nature.kind, table.at(j + 1, c).nature.kind),
                            to_string(bp) + " content " + std::to_string(j));
            int r = 0, a = 0;
            for (const NatureEntry& entry : table.entries()) {
                r += entry.nature.kind == NatureKind::R;
                a += entry.nature.kind == NatureKind::A;
            }
            t.check(r == static_cast<int>(removable_nodes(bp).size()), to_string(bp) + " R slots");
            t.check(a == static_cast<int>(addable_nodes(bp).size()), to_string(bp) + " A slots");
        }
    return t;
}

inline Tally boundary_tail(int n, const Charge& s) {
    Tally t;
    const int top = std::min(s.s1, s.s2) - n - 1;
    const ContentWindow deep{top - 2 * n - 4, top};
    const auto reference = boundary_sequence(Bipartition{}, s, deep);
    for (int k = 0; k <= n; ++k)
        for (const Bipartition& bp : bipartitions_of(k)) t.check(boundary_sequence(bp, s, deep) == reference, to_string(bp));
    return t;
}

// ---- isomorphism ----

inline std::vector<MovePath> test_paths(const Charge& s, const Modulus& e) {
    using M = ChargeMove;
    const int v = e.value();
    return {MovePath(s, {M::sigma1}, e),
            MovePath(s, {M::tau}, e),
            MovePath(s, {M::tau_inv}, e),
            MovePath(s, {M::y1}, e),
            MovePath(s, {M::y2_inv}, e),
            MovePath(s, {M::sigma1, M::y1, M::tau}, e),
            reduce_to_fundamental(s, e),
            path_between(s, {s.s2 + 2 * v, s.s1 - v}, e)};
}

inline Tally psi_bijectivity(int n, const CrystalParams& p) {
    Tally t;
    for (const MovePath& path : test_paths(p.charge, p.e))
        for (int k = 0; k <= n; ++k) {
            std::set<Bipartition> image;
            for (const Bipartition& bp : enumerate_uglov(k, p)) image.insert(psi(bp, path, p.e));
            t.check(image == enumerate_uglov(k, {p.e, path.end()}), "rank " + std::to_string(k) + " " + where(Bipartition{}, p));
        }
    return t;
}

inline Tally psi_functoriality(int n, const CrystalParams& p) {
    Tally t;
    const auto paths = test_paths(p.charge, p.e);
    for (const Bipartition& bp : uglov_up_to(n, p))
        for (const MovePath& first : paths) {
            const Bipartition mid = psi(bp, first, p.e);
            for (const MovePath& second : test_paths(first.end(), p.e)) {
                const Bipartition two_steps = psi(mid, second, p.e);
                t.check(psi(bp, first.then(second, p.e), p.e) == two_steps, where(bp, p) + " composite");
                t.check(psi(bp, path_between(p.charge, second.end(), p.e), p.e) == two_steps, where(bp, p) + " direct");
            }
        }
    return t;
}

inline Tally psi_tau_shortcut(int n, const CrystalParams& p) {
    Tally t;
    const MovePath tau(p.charge, {ChargeMove::tau}, p.e);
    for (const Bipartition& bp : uglov_up_to(n, p)) t.check(psi(bp, tau, p.e) == bp.swapped(), where(bp, p));
    return t;
}

inline Tally psi_commutation(int n, const CrystalParams& p) {
    Tally t;
    for (const MovePath& path : test_paths(p.charge, p.e)) {
        const CrystalParams q{p.e, path.end()};
        for (const Bipartition& bp : uglov_up_to(n, p)) {
            const Bipartition img = psi(bp, path, p.e);
            for (int j = 0; j < p.e.value(); ++j) {
                const auto g = good_removable_node(bp, j, p);
                const auto h = good_removable_node(img, j, q);
                t.check(g.has_value() == h.has_value(), where(bp, p) + " removal exists");
                if (g && h) t.check(psi(remove_node(bp, *g), path, p.e) == remove_node(img, *h), where(bp, p) + " removal");
                if (bp.rank() == n) continue;
                const auto a = good_addable_node(bp, j, p);
                const auto b = good_addable_node(img, j, q);
                t.check(a.has_value() == b.has_value(), where(bp, p) + " addition exists");
                if (a && b) t.check(psi(add_node(bp, *a), path, p.e) == add_node(img, *b), where(bp, p) + " addition");
            }
        }
    }
    return t;
}

inline Tally psi_normal_counts(int n, const CrystalParams& p) {
    Tally t;
    for (const MovePath& path : test_paths(p.charge, p.e)) {
        const CrystalParams q{p.e, path.end()};
        for (const Bipartition& bp : uglov_up_to(n, p)) {
            const Bipartition img = psi(bp, path, p.e);
            for (int j = 0; j < p.e.value(); ++j) {
                t.check(normal_removable_nodes(bp, j, p).size() == normal_removable_nodes(img, j, q).size(), where(bp, p));
                t.check(normal_addable_nodes(bp, j, p).size() == normal_addable_nodes(img, j, q).size(), where(bp, p));
            }
        }
    }
    return t;
}

// Removing the largest normal j-nodes eta_m..eta_N on both sides commutes with psi.
inline std::vector<MovePath> single_moves(const Charge& s, const Modulus& e) {
    std::vector<MovePath> out;
    for (ChargeMove m : {ChargeMove::sigma1, ChargeMove::tau, ChargeMove::tau_inv, ChargeMove::y1, ChargeMove::y1_inv,
                         ChargeMove::y2, ChargeMove::y2_inv})
        out.emplace_back(s, std::vector<ChargeMove>{m}, e);
    return out;
}

// With split_equal_content false, a cut between two normal nodes of the same content (on either side) is skipped.
inline Tally psi_top_normal_removal(int n, const CrystalParams& p, const std::vector<MovePath>& paths,
                                    bool split_equal_content) {
    Tally t;
    for (const MovePath& path : paths) {
        const CrystalParams q{p.e, path.end()};
        for (const Bipartition& bp : uglov_up_to(n, p)) {
            const Bipartition img = psi(bp, path, p.e);
            for (int j = 0; j < p.e.value(); ++j) {
                const auto eta = normal_removable_nodes(bp, j, p);
                const auto zeta = normal_removable_nodes(img, j, q);
                if (eta.size() != zeta.size()) continue;
                Bipartition lam = bp, mu = img;
                for (std::size_t m = eta.size(); m-- > 0;) {
                    lam = remove_node(lam, eta[m]);
                    mu = remove_node(mu, zeta[m]);
                    if (!is_uglov(lam, p)) break;
                    const bool tie = m > 0 && (content(eta[m - 1], p.charge) == content(eta[m], p.charge) ||
                                               content(zeta[m - 1], q.charge) == content(zeta[m], q.charge));
                    if (tie && !split_equal_content) {
                        ++t.skipped;
                        continue;
                    }
                    const bool ok = is_uglov(mu, q) && psi(lam, path, p.e) == mu;
                    t.check(ok, where(bp, p) + " j=" + std::to_string(j) + " m=" + std::to_string(m + 1));
                }
            }
        }
    }
    return t;
}

inline Tally psi_sigma1_natures(int n, const CrystalParams& p) {
    Tally t;
    const MovePath sigma(p.charge, {ChargeMove::sigma1}, p.e);
    for (const Bipartition& bp : uglov_up_to(n, p))
        t.check(psi_nature_check(bp, psi(bp, sigma, p.e), sigma.start(), sigma.end()), where(bp, p));
    return t;
}

inline Tally psi_e_independence(int n, const CrystalParams& p) {
    Tally t;
    if (p.charge.s1 > p.charge.s2) return t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const auto r = psi_e_independence_check(bp, p.charge, p.e);
        if (!r) {
            ++t.skipped;
            continue;
        }
        t.check(*r, where(bp, p));
    }
    return t;
}

// ---- admissible ----

inline Tally adm_invariance(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const ResidueSeq seq = adm(bp, p);
        for (const MovePath& path : test_paths(p.charge, p.e))
            t.check(adm(psi(bp, path, p.e), {p.e, path.end()}) == seq, where(bp, p));
    }
    return t;
}

inline Tally adm_rebuild(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p))
        t.check(build_by_good_nodes(Bipartition{}, adm(bp, p), p) == bp, where(bp, p));
    return t;
}

struct ClassTallies {
    Tally suffixes, prefixes, seed_dominates, minimum_dominates, bh_link, bh_link_to_last;
};

inline ClassTallies class_tallies(int n, const CrystalParams& p) {
    ClassTallies t;
    for (const Bipartition& bp : uglov_up_to(n, p))
        for (const ClassStep& step : flotw_class_steps(bp, p)) {
            const ClassProperties props = class_properties(step, p);
            const std::string at = where(step.before, p);
            t.suffixes.check(props.suffixes_flotw, at);
            t.prefixes.check(props.prefixes_flotw, at);
            t.seed_dominates.check(props.seed_dominates, at);
            t.minimum_dominates.check(props.minimum_dominates, at);
            t.bh_link.check(props.bh_implies_link, at);
            t.bh_link_to_last.check(props.bh_implies_link_to_last, at);
        }
    return t;
}

inline Tally propb(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const PropbReport r = propb_checks(bp, p);
        t.check(r.pass, where(bp, p) + ": " + r.message);
    }
    return t;
}

inline Tally corollary(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const CorollaryReport r = verify_djm_corollary(bp, p);
        t.check(r.pass, where(bp, p) + ": " + r.message);
    }
    return t;
}

// Every term of the Adm monomial comes from an addition sequence, hence from a row-standard filling.
inline Tally monomial_inside_row_standard(int n, const CrystalParams& p) {
    Tally t;
    for (const Bipartition& bp : uglov_up_to(n, p)) {
        const ResidueSeq seq = adm(bp, p);
        const ResidueSeq word(seq.rbegin(), seq.rend());
        const auto shapes = row_standard_shapes(seq, p);
        const FockVector v = apply_monomial(word, FockVector::basis(Bipartition{}), p);
        for (const auto& [mu, coeff] : v.terms())
            t.check(coeff > 0 && shapes.count(mu) == 1, where(bp, p) + " term " + to_string(mu));
    }
    return t;
}

}  // namespace suites
