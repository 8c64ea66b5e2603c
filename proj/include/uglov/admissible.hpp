#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uglov/crystal.hpp"
#include "uglov/isomorphism.hpp"

namespace uglov {

/// Residues in the order they are added, oldest first.
using ResidueSeq = std::vector<int>;

/// A period: e non-virtual vertical-boundary nodes sitting in one column, with
/// contents increasing by one and weakly increasing components. Returns the
/// first one found (lowest content), optionally required to contain `through`.
std::optional<std::vector<ExtNode>> find_period(const Bipartition& bp, const CrystalParams& p,
                                                const std::optional<ExtNode>& through = std::nullopt);

bool has_period(const Bipartition& bp, const CrystalParams& p);

/// g1 <_s g2 are removable nodes of one residue; true when removing g2 leaves a
/// period passing through g1. Throws std::invalid_argument on bad input.
bool one_connected(const Bipartition& bp, const ExtNode& g1, const ExtNode& g2, const CrystalParams& p);

/// Partner of a removable node under the FLOTW equality shifts, if any.
/// Requires a charge in the fundamental domain.
std::optional<ExtNode> two_connected(const Bipartition& bp, const ExtNode& g1, const CrystalParams& p);

/// The <_s-maximal removable node of a nonempty bipartition.
ExtNode max_removable_node(const Bipartition& bp, const Charge& charge);

/// Starting node of the next class removal (FLOTW bipartition, charge in the
/// fundamental domain). Among the right ends of the longest rows, take those
/// whose residue j has no j-1 beside it in that column; return the largest.
ExtNode class_seed(const Bipartition& bp, const CrystalParams& p);

/// Removable nodes of residue(seed) equivalent to seed under the closure of
/// (1)- and (2)-connectedness, increasing. seed must equal class_seed(bp, p).
std::vector<ExtNode> removable_class(const Bipartition& bp, const ExtNode& seed, const CrystalParams& p);

/// One step of the FLOTW recursion: the class removed from `before`.
struct ClassStep {
    Bipartition before;
    int residue = 0;
    ExtNode seed;
    std::vector<ExtNode> nodes;  // increasing
    Bipartition after;
};

/// Class removals from bp down to the empty bipartition, first removal first.
std::vector<ClassStep> flotw_class_steps(const Bipartition& bp, const CrystalParams& p);

ResidueSeq adm_flotw(const Bipartition& bp, const CrystalParams& p);

/// Admissible residue sequence of an Uglov bipartition at any charge (finite e),
/// transported from the fundamental domain.
ResidueSeq adm(const Bipartition& bp, const CrystalParams& p);

struct DjmReport {
    Bipartition bp;
    ResidueSeq adm;
    FockVector expansion;
    std::optional<Bipartition> max;
    bool pass = false;
    std::string message;
};

/// Expands f_{i_n} ... f_{i_1} applied to the empty bipartition for Adm = (i_1..i_n)
/// and checks that bp is the strict maximum of the support.
DjmReport verify_djm_forward(const Bipartition& bp, const CrystalParams& p);

struct MonomialCounterexample {
    std::vector<int> word;
    Bipartition max;
};

struct ConverseReport {
    int rank = 0;
    std::size_t words_checked = 0;
    std::size_t nonzero_words = 0;
    std::set<Bipartition> maxima;
    bool maxima_cover_uglov = false;
    std::vector<MonomialCounterexample> counterexamples;
    bool pass() const { return counterexamples.empty() && maxima_cover_uglov; }
};

/// Every word in I^n: the maximum of the monomial's support must be Uglov, and
/// every Uglov bipartition of rank n must occur as such a maximum.
ConverseReport verify_djm_converse(int n, const CrystalParams& p);

/// Shapes admitting a row-standard tableau whose residue sequence is `word`.
std::set<Bipartition> row_standard_shapes(const ResidueSeq& word, const CrystalParams& p);

struct CorollaryReport {
    Bipartition bp;
    ResidueSeq adm;
    std::set<Bipartition> shapes;
    bool pass = false;
    std::string message;
};

CorollaryReport verify_djm_corollary(const Bipartition& bp, const CrystalParams& p);

struct PropbReport {
    Bipartition bp;
    int residue = 0;
    std::vector<ExtNode> eta;  // increasing
    bool pass = false;
    std::string message;
};

/// For the top class of the fundamental-domain image, transports the class to
/// bp through normal nodes and checks that (1) no addable j-node exceeds eta_1
/// and (2) a non-virtual B_h j-node above eta_1 excludes any B_v j-node above it.
PropbReport propb_checks(const Bipartition& bp, const CrystalParams& p);

/// Properties of one FLOTW class removal (g_1 < ... < g_r).
struct ClassProperties {
    bool suffixes_flotw = false;     // removing (g_k..g_r) stays FLOTW for every k
    bool prefixes_flotw = false;     // removing (g_1..g_k) stays FLOTW for every k
    bool seed_dominates = false;     // seed beats every addable and B_v j-node
    bool minimum_dominates = false;  // g_1 beats every addable and B_v j-node
    bool bh_implies_link = false;    // a non-virtual B_h j-node above g_1 forces a (1)-link g_1 ~ g_2..g_{r-1}
    bool bh_implies_link_to_last = false;  // same, with g_r allowed as the partner
};

ClassProperties class_properties(const ClassStep& step, const CrystalParams& p);

}  // namespace uglov
