#include "uglov/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace uglov {

namespace {

struct MoveName {
    ChargeMove move;
    const char* name;
};

constexpr std::array<MoveName, 7> kMoveNames{{
    {ChargeMove::sigma1, "sigma1"},
    {ChargeMove::tau, "tau"},
    {ChargeMove::tau_inv, "tau^-1"},
    {ChargeMove::y1, "y1"},
    {ChargeMove::y1_inv, "y1^-1"},
    {ChargeMove::y2, "y2"},
    {ChargeMove::y2_inv, "y2^-1"},
}};

ChargeMove inverse_of(ChargeMove m) {
    switch (m) {
        case ChargeMove::sigma1: return ChargeMove::sigma1;
        case ChargeMove::tau: return ChargeMove::tau_inv;
        case ChargeMove::tau_inv: return ChargeMove::tau;
        case ChargeMove::y1: return ChargeMove::y1_inv;
        case ChargeMove::y1_inv: return ChargeMove::y1;
        case ChargeMove::y2: return ChargeMove::y2_inv;
        case ChargeMove::y2_inv: return ChargeMove::y2;
    }
    throw std::logic_error("unknown charge move");
}

// floor division for possibly negative numerators
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::string to_string(ChargeMove m) {
    for (const auto& entry : kMoveNames)
        if (entry.move == m) return entry.name;
    throw std::logic_error("unknown charge move");
}

ChargeMove parse_charge_move(const std::string& name) {
    for (const auto& entry : kMoveNames)
        if (name == entry.name) return entry.move;
    throw std::invalid_argument("unknown charge move '" + name + "'");
}

Charge apply_move(const Charge& charge, ChargeMove m, const Modulus& e) {
    if (m == ChargeMove::sigma1) return {charge.s2, charge.s1};
    if (!e.is_finite()) throw std::invalid_argument(to_string(m) + " needs a finite e");
    const int step = e.value();
    switch (m) {
        case ChargeMove::tau: return {charge.s2, charge.s1 + step};
        case ChargeMove::tau_inv: return {charge.s2 - step, charge.s1};
        case ChargeMove::y1: return {charge.s1 + step, charge.s2};
        case ChargeMove::y1_inv: return {charge.s1 - step, charge.s2};
        case ChargeMove::y2: return {charge.s1, charge.s2 + step};
        case ChargeMove::y2_inv: return {charge.s1, charge.s2 - step};
        case ChargeMove::sigma1: break;
    }
    throw std::logic_error("unreachable");
}

MovePath::MovePath(Charge start, std::vector<ChargeMove> moves, const Modulus& e) : MovePath(start) {
    for (ChargeMove m : moves) push(m, e);
}

void MovePath::push(ChargeMove m, const Modulus& e) {
    end_ = apply_move(end_, m, e);
    moves_.push_back(m);
}

MovePath MovePath::inverse(const Modulus& e) const {
    MovePath out(end_);
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) out.push(inverse_of(*it), e);
    return out;
}

MovePath MovePath::then(const MovePath& next, const Modulus& e) const {
    if (next.start() != end_) throw std::invalid_argument("paths do not compose");
    MovePath out = *this;
    for (ChargeMove m : next.moves()) out.push(m, e);
    return out;
}

MovePath reduce_to_fundamental(const Charge& charge, const Modulus& e) {
    if (!e.is_finite()) throw std::invalid_argument("the fundamental domain needs a finite e");
    const int step = e.value();
    MovePath path(charge);
    const int k1 = floor_div(charge.s1, step);
    const int k2 = floor_div(charge.s2, step);
    for (int i = 0; i < std::abs(k1); ++i) path.push(k1 > 0 ? ChargeMove::y1_inv : ChargeMove::y1, e);
    for (int i = 0; i < std::abs(k2); ++i) path.push(k2 > 0 ? ChargeMove::y2_inv : ChargeMove::y2, e);
    if (path.end().s1 > path.end().s2) path.push(ChargeMove::sigma1, e);
    return path;
}

MovePath path_between(const Charge& from, const Charge& to, const Modulus& e) {
    if (!e.is_finite()) {
        if (from == to) return MovePath(from);
        if (apply_move(from, ChargeMove::sigma1, e) == to) return MovePath(from, {ChargeMove::sigma1}, e);
        throw std::invalid_argument("charges are not related by a swap");
    }
    const MovePath down = reduce_to_fundamental(from, e);
    const MovePath up = reduce_to_fundamental(to, e);
    if (down.end() != up.end()) throw std::invalid_argument("charges lie in different orbits");
    return down.then(up.inverse(e), e);
}

Bipartition psi(const Bipartition& bp, const MovePath& path, const Modulus& e) {
    const CrystalParams from{e, path.start()};
    const CrystalParams to{e, path.end()};
    auto residues = peel_residues(bp, from);
    if (!residues) throw std::invalid_argument(to_string(bp) + " is not Uglov at the path start");
    std::reverse(residues->begin(), residues->end());
    const auto image = build_by_good_nodes(Bipartition{}, *residues, to);
    if (!image) throw std::logic_error("rebuilding along the peel sequence failed; crystals are not isomorphic");
    return *image;
}

bool sigma1_nature_allowed(NatureKind from2, NatureKind from1, NatureKind to2, NatureKind to1) {
    using K = NatureKind;
    struct Row {
        K from2, from1;
        std::vector<std::array<K, 2>> images;
    };
    static const std::vector<Row> table{
        {K::R, K::R, {{K::R, K::R}}},
        {K::A, K::R, {{K::A, K::R}}},
        {K::Bv, K::R, {{K::R, K::Bv}, {K::Bv, K::R}}},
        {K::Bh, K::R, {{K::Bh, K::R}}},
        {K::R, K::A, {{K::R, K::A}, {K::Bh, K::Bv}}},
        {K::A, K::A, {{K::A, K::A}}},
        {K::Bv, K::A, {{K::Bv, K::A}, {K::A, K::Bv}}},
        {K::Bh, K::A, {{K::Bh, K::A}}},
        {K::R, K::Bh, {{K::R, K::Bh}, {K::Bh, K::R}}},
        {K::A, K::Bh, {{K::A, K::Bh}, {K::Bh, K::A}}},
        {K::Bv, K::Bh, {{K::R, K::A}, {K::Bv, K::Bh}, {K::Bh, K::Bv}}},
        {K::Bh, K::Bh, {{K::Bh, K::Bh}}},
        {K::R, K::Bv, {{K::R, K::Bv}}},
        {K::A, K::Bv, {{K::A, K::Bv}}},
        {K::Bv, K::Bv, {{K::Bv, K::Bv}}},
        {K::Bh, K::Bv, {{K::Bh, K::Bv}}},
    };
    for (const Row& row : table) {
        if (row.from2 != from2 || row.from1 != from1) continue;
        return std::find(row.images.begin(), row.images.end(), std::array<K, 2>{to2, to1}) != row.images.end();
    }
    return false;
}

bool psi_nature_check(const Bipartition& bp, const Bipartition& image, const Charge& charge_from,
                      const Charge& charge_to) {
    if (charge_to != Charge{charge_from.s2, charge_from.s1})
        throw std::invalid_argument("nature check applies to a single sigma1 move");
    if (charge_from.s1 > charge_from.s2) return psi_nature_check(image, bp, charge_to, charge_from);
    const ContentWindow wa = active_window(bp, charge_from);
    const ContentWindow wb = active_window(image, charge_to);
    for (int j = std::min(wa.lo, wb.lo); j <= std::max(wa.hi, wb.hi); ++j) {
        const NatureKind from2 = nature_at(bp, charge_from, j, Component::second).nature.kind;
        const NatureKind from1 = nature_at(bp, charge_from, j, Component::first).nature.kind;
        const NatureKind to2 = nature_at(image, charge_to, j, Component::second).nature.kind;
        const NatureKind to1 = nature_at(image, charge_to, j, Component::first).nature.kind;
        if (!sigma1_nature_allowed(from2, from1, to2, to1)) return false;
    }
    return true;
}

std::optional<bool> psi_e_independence_check(const Bipartition& bp, const Charge& charge_from, const Modulus& e) {
    if (charge_from.s1 > charge_from.s2) throw std::invalid_argument("e-independence check expects s1 <= s2");
    const Modulus inf = Modulus::infinite();
    if (!is_uglov(bp, {e, charge_from}) || !is_uglov(bp, {inf, charge_from})) return std::nullopt;
    const MovePath finite_path(charge_from, {ChargeMove::sigma1}, e);
    const MovePath infinite_path(charge_from, {ChargeMove::sigma1}, inf);
    return psi(bp, finite_path, e) == psi(bp, infinite_path, inf);
}

}  // namespace uglov
