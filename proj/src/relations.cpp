#include "mzv/relations.hpp"

#include <algorithm>

#include "mzv/errors.hpp"

namespace mzv {

int Relation::max_weight() const {
    int w = 0;
    for (const auto& [k, c] : lhs.terms()) w = std::max(w, k.weight());
    for (const auto& [k, c] : rhs.terms()) w = std::max(w, k.weight());
    return w;
}

namespace {

std::string fmt_int(int v) { return std::to_string(v); }

// L.H.S. of the generalized restricted sum formula, before any zeta_plus
// shift: sum over m_1+...+m_r = r+t (m_i >= 1) and |a_{m_i}| = k_i+m_i-1 of
// (a_{m_1},...,a_{m_r},{1}^s).
FormalSum grsf_lhs_raw(const Index& k, int s, int t) {
    if (k.empty()) throw EmptyIndex("generalized restricted sum formula needs non-empty k");
    const int r = k.depth();
    FormalSum out;
    for (const auto& m : compositions(r + t, r, 1)) {
        // Blocks a_{m_i}: all compositions of k_i+m_i-1 into m_i positive parts.
        std::vector<std::vector<ExponentVector>> blocks;
        blocks.reserve(static_cast<size_t>(r));
        bool feasible = true;
        for (int i = 0; i < r && feasible; ++i) {
            blocks.push_back(
                compositions(k.parts()[static_cast<size_t>(i)] + m[static_cast<size_t>(i)] - 1,
                             m[static_cast<size_t>(i)], 1));
            feasible = !blocks.back().empty();
        }
        if (!feasible) continue;
        std::vector<size_t> pick(static_cast<size_t>(r), 0);
        for (;;) {
            std::vector<int> parts;
            for (int i = 0; i < r; ++i) {
                const auto& a = blocks[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]];
                parts.insert(parts.end(), a.begin(), a.end());
            }
            parts.insert(parts.end(), static_cast<size_t>(s), 1);
            out.add_term(Index(std::move(parts)), 1);
            int i = r - 1;
            while (i >= 0 && ++pick[static_cast<size_t>(i)] == blocks[static_cast<size_t>(i)].size())
                pick[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

// R.H.S. before the zeta_plus shift. For r = 1 the general form
// degenerates: sum over |e| = t of (k_1,{1}^s) + e.
FormalSum grsf_rhs_raw(const Index& k, int s, int t) {
    if (k.empty()) throw EmptyIndex("generalized restricted sum formula needs non-empty k");
    const int r = k.depth();
    FormalSum out;
    if (r == 1) {
        Index base = concat(k, Index::ones(s));
        for (const auto& e : compositions(t, base.depth(), 0)) out.add_term(add(base, e), 1);
        return out;
    }
    for (int l = 0; l <= t; ++l) {
        for (const auto& m : compositions(t - l, r - 1, 0)) {
            std::vector<int> parts;
            for (int i = 0; i < r - 1; ++i) {
                parts.push_back(k.parts()[static_cast<size_t>(i)]);
                parts.insert(parts.end(), static_cast<size_t>(m[static_cast<size_t>(i)]), 1);
            }
            parts.push_back(k.parts().back());
            parts.insert(parts.end(), static_cast<size_t>(s), 1);
            Index base(std::move(parts));
            for (const auto& e : compositions(l, base.depth(), 0)) out.add_term(add(base, e), 1);
        }
    }
    return out;
}

}  // namespace

Relation grsf_sides(const Index& k, int t) {
    Relation rel;
    rel.name = "grsf";
    rel.params = {{"k", format_index(k)}, {"t", fmt_int(t)}};
    rel.lhs = zeta_plus_sum(grsf_lhs_raw(k, 0, t));
    rel.rhs = zeta_plus_sum(grsf_rhs_raw(k, 0, t));
    return rel;
}

Relation grsf_ones_sides(const Index& k, int s, int t) {
    Relation rel;
    rel.name = "grsf-ones";
    rel.params = {{"k", format_index(k)}, {"s", fmt_int(s)}, {"t", fmt_int(t)}};
    rel.lhs = zeta_plus_sum(grsf_lhs_raw(k, s, t));
    rel.rhs = zeta_plus_sum(grsf_rhs_raw(k, s, t));
    return rel;
}

Relation sum_formula_sides(int k, int u) {
    if (u < 1 || k - u < 1) throw InvalidParams("sum formula needs k - u >= 1 and u >= 1");
    Relation rel = grsf_sides(Index{k - u}, u - 1);
    rel.name = "sum-formula";
    rel.params = {{"k", fmt_int(k)}, {"u", fmt_int(u)}};
    return rel;
}

Relation ohno_sides(const Index& k, int l, Flavor flavor) {
    if (k.empty()) throw EmptyIndex("ohno_sides needs non-empty k");
    Relation rel;
    rel.name = "ohno";
    rel.params = {{"k", format_index(k)},
                  {"l", fmt_int(l)},
                  {"flavor", flavor == Flavor::Real ? "real" : "finite"}};
    rel.flavor = flavor;
    const Index dual = hoffman_dual(k);
    FormalSum lhs, rhs;
    for (const auto& e : compositions(l, k.depth(), 0)) lhs.add_term(add(k, e), 1);
    for (const auto& e : compositions(l, dual.depth(), 0)) rhs.add_term(hoffman_dual(add(dual, e)), 1);
    if (flavor == Flavor::Real) {
        lhs = zeta_plus_sum(lhs);
        rhs = zeta_plus_sum(rhs);
    }
    rel.lhs = std::move(lhs);
    rel.rhs = std::move(rhs);
    return rel;
}

Relation grsf_finite_sides(const Index& k, int t) {
    Relation rel;
    rel.name = "grsf-finite";
    rel.params = {{"k", format_index(k)}, {"t", fmt_int(t)}};
    rel.flavor = Flavor::Finite;
    rel.lhs = grsf_lhs_raw(k, 0, t);
    rel.rhs = k.depth() == 1 ? FormalSum::term(Index{k.front() + t}) : grsf_rhs_raw(k, 0, t);
    return rel;
}

FormalSum k_sub_u(const Index& k, int u) {
    if (k.depth() < 2) throw DepthTooSmall("k_u needs depth(k) >= 2");
    std::vector<int> inner(k.parts().begin() + 1, k.parts().end() - 1);
    FormalSum out;
    const FormalSum shuffled = naive_shuffle(Index(std::move(inner)), Index::ones(u));
    for (const auto& [m, c] : shuffled.terms()) {
        std::vector<int> parts{k.parts().front()};
        parts.insert(parts.end(), m.parts().begin(), m.parts().end());
        parts.push_back(k.parts().back());
        out.add_term(Index(std::move(parts)), c);
    }
    return out;
}

FormalSum k_sub_u(const FormalSum& s, int u) {
    FormalSum out;
    for (const auto& [k, c] : s.terms()) out += k_sub_u(k, u).scaled(c);
    return out;
}

std::pair<FormalSum, FormalSum> f_sides(const Index& k, int t) {
    Relation rel = grsf_sides(k, t);
    return {std::move(rel.lhs), std::move(rel.rhs)};
}

std::pair<FormalSum, FormalSum> f_sides(const FormalSum& s, int t) {
    FormalSum lhs, rhs;
    for (const auto& [k, c] : s.terms()) {
        auto [a, b] = f_sides(k, t);
        lhs += a.scaled(c);
        rhs += b.scaled(c);
    }
    return {std::move(lhs), std::move(rhs)};
}

std::pair<FormalSum, FormalSum> g_sides(const Index& k, int t) {
    Relation rel = ohno_sides(k, t, Flavor::Real);
    return {std::move(rel.lhs), std::move(rel.rhs)};
}

std::pair<FormalSum, FormalSum> g_sides(const FormalSum& s, int t) {
    FormalSum lhs, rhs;
    for (const auto& [k, c] : s.terms()) {
        auto [a, b] = g_sides(k, t);
        lhs += a.scaled(c);
        rhs += b.scaled(c);
    }
    return {std::move(lhs), std::move(rhs)};
}

bool lemma_first_check(const Index& k, int t) {
    if (k.depth() < 2) throw DepthTooSmall("lemma checks need depth(k) >= 2");
    auto [f_l, f_r] = f_sides(k, t);
    FormalSum sum_gl, sum_gr;
    for (int u = 0; u <= t; ++u) {
        sum_gl += g_sides(k_sub_u(k, t - u), u).first;
        sum_gr += g_sides(k_sub_u(k, u), t - u).second;
    }
    return f_r == sum_gl && f_l == sum_gr;
}

bool lemma_second_check(const Index& k, int t) {
    if (k.depth() < 2) throw DepthTooSmall("lemma checks need depth(k) >= 2");
    auto [g_l, g_r] = g_sides(k, t);
    FormalSum acc = g_l - g_r;  // g(k,t)
    for (int u = 0; u <= t; ++u) {
        auto [f_l, f_r] = f_sides(k_sub_u(k, u), t - u);
        FormalSum f = f_l - f_r;
        acc += (u % 2 == 0) ? f : f.scaled(-1);  // + sum (-1)^u f(k_u, t-u)
    }
    return acc.zero();
}

FormalSum grsf_ones_defect(const Index& k, int s, int t) {
    if (t < 0) return {};
    Relation rel = grsf_ones_sides(k, s, t);
    return rel.lhs - rel.rhs;
}

}  // namespace mzv
