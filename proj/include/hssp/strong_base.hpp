#pragma once

// Strong bases: the defining intersection condition, the Frobenius
// separation characterization, separator counting, randomized construction,
// and deterministic bases for ±1-affine and function-graph groups.

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "hssp/group.hpp"

namespace hssp {

// The family of subgroups a base targets.  All families used here are closed
// under conjugation, so verify_base may use the simplified criterion.
struct SubgroupFamily {
    std::vector<Subgroup> members;
};

// Frobenius complements: the stabilizer of the kernel identity and its
// conjugates by kernel elements.
inline SubgroupFamily frobenius_complements(const ActionPtr& act) {
    const Group& G = act->group();
    SubgroupFamily fam;
    Subgroup h0 = stabilizer(0, *act);
    std::set<std::vector<long long>> seen;
    for (long long z = 0; z < G.k_size(); ++z) {
        Subgroup hz = h0.conjugate(GroupElem{z, 0});
        if (seen.insert(hz.sorted_codes()).second) fam.members.push_back(hz);
    }
    return fam;
}

// Standard complements A_Q of a function graph group.
inline SubgroupFamily standard_complements(const std::shared_ptr<const FunctionGraphGroup>& fg) {
    SubgroupFamily fam;
    for (long long qc = 0; qc < fg->k_size(); ++qc)
        fam.members.push_back(fg_conjugate_complement(fg, fg->poly_of(qc)));
    return fam;
}

inline SubgroupFamily closed_subgroups(const GroupPtr& g, const Action& act) {
    SubgroupFamily fam;
    for (auto& h : all_subgroups(g))
        if (is_closed(h, act)) fam.members.push_back(h);
    return fam;
}

struct BaseSet {
    ActionPtr action;
    std::vector<long long> points;  // distinct domain elements
};

// z separates u and v (kernel elements of a Frobenius group) when
// v∘z is not in the H-orbit of u∘z, H the stabilizer of the kernel identity.
inline bool separates(long long z, long long u, long long v, const ActionPtr& act,
                      const Subgroup& complement) {
    if (u == v) throw DomainMismatchError("separation requires u != v");
    GroupElem gu{u, 0}, gv{v, 0};
    long long uz = act->apply(gu, z), vz = act->apply(gv, z);
    return orbit(complement, uz, *act).count(vz) == 0;
}

inline long long count_separators(long long u, long long v, const ActionPtr& act,
                                  const Subgroup& complement) {
    long long n = 0;
    for (long long z = 0; z < act->group().k_size(); ++z)
        if (separates(z, u, v, act, complement)) ++n;
    return n;
}

// The intersection condition: for every H in the family (closed under
// conjugation), ∩_{m in B} H G_m = H.
inline bool verify_base(const BaseSet& b, const SubgroupFamily& family) {
    if (b.points.empty()) return false;
    const Group& G = b.action->group();
    for (const Subgroup& h : family.members) {
        // intersection of the products H * G_m over the base points
        std::set<long long> inter;
        bool first = true;
        for (long long m : b.points) {
            Subgroup gm = stabilizer(m, *b.action);
            std::set<long long> prod;
            for (const auto& he : h.elements())
                for (const auto& se : gm.elements())
                    prod.insert(G.encode(G.mul(he, se)));
            if (first) {
                inter = std::move(prod);
                first = false;
            } else {
                std::set<long long> next;
                for (long long c : inter)
                    if (prod.count(c)) next.insert(c);
                inter = std::move(next);
            }
        }
        if (static_cast<long long>(inter.size()) != h.size()) return false;
        for (const auto& he : h.elements())
            if (!inter.count(G.encode(he))) return false;
    }
    return true;
}

// Full ∀g form of the definition, for a single subgroup H (no conjugation
// closure assumed).  Used as an independent oracle in tests.
inline bool verify_base_full(const BaseSet& b, const Subgroup& h) {
    if (b.points.empty()) return false;
    const Group& G = b.action->group();
    for (long long gi = 0; gi < G.order(); ++gi) {
        GroupElem g = G.decode(gi);
        std::set<long long> inter;
        bool first = true;
        for (long long m : b.points) {
            long long gm = b.action->apply(g, m);
            Subgroup stab = stabilizer(gm, *b.action);
            std::set<long long> prod;
            for (const auto& he : h.elements())
                for (const auto& se : stab.elements())
                    prod.insert(G.encode(G.mul(he, se)));
            if (first) {
                inter = std::move(prod);
                first = false;
            } else {
                std::set<long long> next;
                for (long long c : inter)
                    if (prod.count(c)) next.insert(c);
                inter = std::move(next);
            }
        }
        if (static_cast<long long>(inter.size()) != h.size()) return false;
    }
    return true;
}

// l = ceil(log2 C(|K|,2) + log2 1/eps), the union-bound constant from the
// randomized construction.
inline int random_base_size(long long kernel_size, double epsilon) {
    double pairs = 0.5 * static_cast<double>(kernel_size) * static_cast<double>(kernel_size - 1);
    return static_cast<int>(std::ceil(std::log2(pairs) + std::log2(1.0 / epsilon)));
}

inline BaseSet random_base(const ActionPtr& act, double epsilon, std::uint64_t seed) {
    const Group& G = act->group();
    long long ks = G.k_size();
    Subgroup complement = stabilizer(0, *act);
    if (complement.size() == ks - 1)
        throw SharplyTwoTransitiveError("no small strong base in a sharply 2-transitive group");
    int l = random_base_size(ks, epsilon);
    std::mt19937_64 rng(seed);
    std::set<long long> chosen;
    while (static_cast<long long>(chosen.size()) < std::min<long long>(l, ks))
        chosen.insert(static_cast<long long>(rng() % ks));
    return BaseSet{act, std::vector<long long>(chosen.begin(), chosen.end())};
}

// Smallest verified 2-point base for Aff_q({±1}); existence is part of the
// reduction for the HQPP equivalence.
inline BaseSet deterministic_base_pm1(const ActionPtr& act) {
    const Group& G = act->group();
    auto fam = frobenius_complements(act);
    for (long long a = 0; a < G.k_size(); ++a)
        for (long long b = a + 1; b < G.k_size(); ++b) {
            BaseSet cand{act, {a, b}};
            if (verify_base(cand, fam)) return cand;
        }
    throw BadBaseError("no 2-point strong base found");
}

// Base points (x_i, 0) for the d+1 smallest abscissas: a polynomial of
// degree <= d vanishing on d+1 points is zero.
inline BaseSet fg_point_base(const std::shared_ptr<const FunctionGraphGroup>& fg, int n = 1) {
    if (n >= 2)
        throw NoPolynomialSizeBaseError("no polynomial-size bases exist for n >= 2");
    const Field& F = *fg->field();
    int d = fg->degree_bound();
    if (F.q() < d + 1) throw FieldTooSmallError("need d+1 distinct abscissas");
    auto act = std::make_shared<ShiftingAction>(fg);
    std::vector<long long> pts;
    for (int x = 0; x <= d; ++x) pts.push_back(act->encode_point(x, 0));
    return BaseSet{act, pts};
}

}  // namespace hssp
