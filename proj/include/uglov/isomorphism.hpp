#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uglov/crystal.hpp"

namespace uglov {

/// Generators of the extended affine symmetric group acting on charges, and
/// the inverses needed to reach the fundamental domain from any charge.
enum class ChargeMove { sigma1, tau, tau_inv, y1, y1_inv, y2, y2_inv };

std::string to_string(ChargeMove m);
ChargeMove parse_charge_move(const std::string& name);

/// sigma1 swaps; y1/y2 shift one entry by e; tau = sigma1 y1, so tau.(s1,s2) = (s2, s1+e).
/// Only sigma1 is defined for infinite e.
Charge apply_move(const Charge& charge, ChargeMove m, const Modulus& e);

class MovePath {
public:
    explicit MovePath(Charge start) : start_(start), end_(start) {}
    MovePath(Charge start, std::vector<ChargeMove> moves, const Modulus& e);

    const Charge& start() const { return start_; }
    const Charge& end() const { return end_; }
    const std::vector<ChargeMove>& moves() const { return moves_; }

    void push(ChargeMove m, const Modulus& e);
    /// Path from end() back to start().
    MovePath inverse(const Modulus& e) const;
    /// This path followed by next; next must start where this one ends.
    MovePath then(const MovePath& next, const Modulus& e) const;

private:
    Charge start_;
    Charge end_;
    std::vector<ChargeMove> moves_;
};

/// Shifts both entries into [0, e) with y-moves, then swaps if needed.
MovePath reduce_to_fundamental(const Charge& charge, const Modulus& e);

/// Some path between two charges in one orbit; throws if the orbits differ.
MovePath path_between(const Charge& from, const Charge& to, const Modulus& e);

/// Crystal isomorphism between the Uglov sets at path.start() and path.end(),
/// computed by peeling to the empty bipartition and rebuilding with good nodes.
/// Throws std::invalid_argument when bp is not Uglov at path.start().
Bipartition psi(const Bipartition& bp, const MovePath& path, const Modulus& e);

/// The sigma1 nature-transformation table: whether (component 2, component 1)
/// natures may become (image2, image1).
bool sigma1_nature_allowed(NatureKind from2, NatureKind from1, NatureKind to2, NatureKind to1);

/// Checks every content slot of (bp, image) against the sigma1 table.
/// Requires charge_to == sigma1 . charge_from.
bool psi_nature_check(const Bipartition& bp, const Bipartition& image, const Charge& charge_from,
                      const Charge& charge_to);

/// Compares the sigma1 image at e with the one at e = infinity. nullopt when bp
/// is outside one of the two Uglov sets.
std::optional<bool> psi_e_independence_check(const Bipartition& bp, const Charge& charge_from, const Modulus& e);

}  // namespace uglov
