#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uglov/admissible.hpp"

namespace testing {

inline uglov::Bipartition bp(const std::string& text) { return uglov::parse_bipartition(text); }

inline uglov::CrystalParams params(int e, int s1, int s2) { return {uglov::Modulus::finite(e), {s1, s2}}; }
inline uglov::CrystalParams params_inf(int s1, int s2) { return {uglov::Modulus::infinite(), {s1, s2}}; }

inline uglov::ExtNode node(int a, int b, int c) { return {a, b, uglov::Component(c)}; }

// The charges swept by the exhaustive tests.
inline const std::vector<uglov::Charge>& grid_charges() {
    static const std::vector<uglov::Charge> charges{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {3, 0}, {-2, 1}};
    return charges;
}

}  // namespace testing
