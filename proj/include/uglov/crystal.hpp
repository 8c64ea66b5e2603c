#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "uglov/diagrams.hpp"

namespace uglov {

struct CrystalParams {
    Modulus e = Modulus::finite(2);
    Charge charge;
};

/// Element of the level-two Fock space at v = 1, restricted to one rank.
class FockVector {
public:
    using Coeff = std::int64_t;

    FockVector() = default;
    static FockVector basis(const Bipartition& bp) {
        FockVector v;
        v.add(bp, 1);
        return v;
    }

    /// Adds coeff to the coefficient of bp, dropping it when it becomes 0.
    void add(const Bipartition& bp, Coeff coeff);
    Coeff coeff(const Bipartition& bp) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Rank shared by all terms; nullopt for the zero vector.
    std::optional<int> rank() const;
    const std::map<Bipartition, Coeff>& terms() const { return terms_; }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    std::map<Bipartition, Coeff> terms_;
};

/// Chevalley operator f_j: sum over ways to add one j-node.
FockVector f_action(const FockVector& v, int j, const CrystalParams& p);
/// Chevalley operator e_j: sum over ways to remove one j-node.
FockVector e_action(const FockVector& v, int j, const CrystalParams& p);

/// Applies f_{word[0]} ... f_{word[k-1]} to v, the last letter acting first.
FockVector apply_monomial(const std::vector<int>& word, const FockVector& v, const CrystalParams& p);

enum class NodeTag { addable, removable };

struct SignatureEntry {
    ExtNode node;
    NodeTag tag;

    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

using SignatureWord = std::vector<SignatureEntry>;

/// Addable and removable j-nodes of bp in increasing node order.
SignatureWord signature_word(const Bipartition& bp, int j, const CrystalParams& p);

/// Cancels adjacent (removable, addable) pairs until the word reads A^p R^q.
SignatureWord reduce_word(const SignatureWord& word);

/// Normal removable j-nodes (the surviving R letters), increasing.
std::vector<ExtNode> normal_removable_nodes(const Bipartition& bp, int j, const CrystalParams& p);
std::vector<ExtNode> normal_addable_nodes(const Bipartition& bp, int j, const CrystalParams& p);

std::optional<ExtNode> good_addable_node(const Bipartition& bp, int j, const CrystalParams& p);
std::optional<ExtNode> good_removable_node(const Bipartition& bp, int j, const CrystalParams& p);

/// Residues that can label an edge into or out of bp: all of I for finite e,
/// the residues of bp's addable and removable nodes for infinite e.
std::vector<int> candidate_residues(const Bipartition& bp, const CrystalParams& p);

/// One peeling step: smallest residue j with a good removable node.
struct PeelStep {
    int residue;
    ExtNode node;
};
std::optional<PeelStep> peel_step(const Bipartition& bp, const CrystalParams& p);

/// Residues of successive good-node removals down to the empty bipartition,
/// youngest first; nullopt if peeling gets stuck (bp is not Uglov).
std::optional<std::vector<int>> peel_residues(const Bipartition& bp, const CrystalParams& p);

/// Adds good nodes with residues taken in order; nullopt if some step has no good node.
std::optional<Bipartition> build_by_good_nodes(const Bipartition& start, const std::vector<int>& residues,
                                               const CrystalParams& p);

bool is_uglov(const Bipartition& bp, const CrystalParams& p);

/// Uglov bipartitions of rank exactly n, by breadth-first good-node closure.
std::set<Bipartition> enumerate_uglov(int n, const CrystalParams& p);

/// All layers 0..n of the breadth-first closure.
std::vector<std::set<Bipartition>> enumerate_uglov_layers(int n, const CrystalParams& p);

/// Charge in the fundamental domain 0 <= s1 <= s2 < e (finite e).
bool in_fundamental_domain(const Charge& charge, const Modulus& e);

/// Non-recursive FLOTW characterization; requires a charge in the fundamental domain.
bool is_flotw(const Bipartition& bp, const CrystalParams& p);
/// First FLOTW condition (cyclic part dominance).
bool flotw_dominance_holds(const Bipartition& bp, const CrystalParams& p);
/// Second FLOTW condition: rows of any fixed length k > 0 miss some residue at their right end.
bool flotw_residue_condition_holds(const Bipartition& bp, const CrystalParams& p);

/// Maximum (for the Uglov order) of the support of the monomial applied to the empty
/// bipartition. Throws std::invalid_argument on an empty word or a zero expansion.
Bipartition max_of_monomial(const std::vector<int>& word, const CrystalParams& p);

/// Maximum of a nonzero vector's support under order_uglov.
Bipartition support_max(const FockVector& v, const Charge& charge);

}  // namespace uglov
