#pragma once

// Level-set oracles with query accounting for every problem family.
// Solvers see only the LevelSetOracle interface: query() and query_count().
// Hidden answers live in the ProblemInstance, harness side.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hssp/group.hpp"
#include "hssp/linalg.hpp"
#include "hssp/poly.hpp"

namespace hssp {

class LevelSetOracle {
public:
    virtual ~LevelSetOracle() = default;

    virtual long long domain_size() const = 0;

    long long query(long long m) const {
        counter_.fetch_add(1, std::memory_order_relaxed);
        return eval(m);
    }
    long long query_count() const { return counter_.load(std::memory_order_relaxed); }
    void reset_count() const { counter_.store(0, std::memory_order_relaxed); }

    // Harness-side evaluation without query accounting (promise validation,
    // exhaustive test scans).  Solvers must use query().
    long long peek(long long m) const { return eval(m); }

protected:
    virtual long long eval(long long m) const = 0;

private:
    mutable std::atomic<long long> counter_{0};
};

using OraclePtr = std::shared_ptr<const LevelSetOracle>;

class TableOracle : public LevelSetOracle {
public:
    explicit TableOracle(std::vector<long long> canon) : canon_(std::move(canon)) {}
    long long domain_size() const override { return static_cast<long long>(canon_.size()); }

protected:
    long long eval(long long m) const override {
        if (m < 0 || m >= domain_size()) throw DomainMismatchError("oracle query out of domain");
        return canon_[m];
    }

private:
    std::vector<long long> canon_;
};

// Replaces the canonical class ids by a seeded random bijection into fresh
// labels.  Used to check that solvers depend only on level-set structure.
class ScrambledOracle : public LevelSetOracle {
public:
    ScrambledOracle(OraclePtr inner, std::uint64_t seed) : inner_(std::move(inner)), rng_(seed) {}
    long long domain_size() const override { return inner_->domain_size(); }

protected:
    long long eval(long long m) const override {
        long long raw = inner_->peek(m);
        auto it = relabel_.find(raw);
        if (it == relabel_.end()) {
            long long fresh;
            do {
                fresh = static_cast<long long>(rng_() & 0x7fffffffffffLL);
            } while (used_.count(fresh));
            used_.insert(fresh);
            it = relabel_.emplace(raw, fresh).first;
        }
        return it->second;
    }

private:
    OraclePtr inner_;
    mutable std::mt19937_64 rng_;
    mutable std::map<long long, long long> relabel_;
    mutable std::set<long long> used_;
};

enum class Family { HSP, HSSP, HPP, HQPP, HPGP, GroverHSSP, ZpmZpHSP };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::HSP: return "hsp";
        case Family::HSSP: return "hssp";
        case Family::HPP: return "hpp";
        case Family::HQPP: return "hqpp";
        case Family::HPGP: return "hpgp";
        case Family::GroverHSSP: return "grover";
        case Family::ZpmZpHSP: return "zpmzp";
    }
    return "?";
}

// Hidden answers, harness side only.
struct HiddenAnswer {
    std::shared_ptr<const Subgroup> subgroup;  // HSP/HSSP
    std::optional<int> u;                      // HQPP / Grover c
    std::optional<MultiPoly> poly;             // HPP / HPGP
    std::optional<std::vector<int>> vec;       // ZpmZp v
};

struct ProblemInstance {
    Family family;
    OraclePtr oracle;
    FieldPtr field;          // when field-parametrized
    GroupPtr group;          // when group-parametrized
    ActionPtr action;        // for HSSP-style instances
    int n = 1;
    int d = 0;
    bool left_cosets = false;  // HSP coset convention
    HiddenAnswer hidden;
};

// ----------------------------------------------------------------------------
// Constructors

// f(x) = f(y) <=> Hx = Hy (right cosets by default; left when requested).
// The domain is G itself, canon = min over the coset.
inline ProblemInstance make_hsp_oracle(const GroupPtr& g, const Subgroup& h, bool left = false) {
    const Group& G = *g;
    std::vector<long long> canon(G.order());
    for (long long i = 0; i < G.order(); ++i) {
        GroupElem x = G.decode(i);
        long long best = -1;
        for (const auto& e : h.elements()) {
            long long c = G.encode(left ? G.mul(x, e) : G.mul(e, x));
            if (best < 0 || c < best) best = c;
        }
        canon[i] = best;
    }
    ProblemInstance inst;
    inst.family = Family::HSP;
    inst.oracle = std::make_shared<TableOracle>(std::move(canon));
    inst.group = g;
    inst.left_cosets = left;
    inst.hidden.subgroup = std::make_shared<Subgroup>(h);
    return inst;
}

// f(x) = f(y) <=> H∘x = H∘y; requires H closed under the action.
inline ProblemInstance make_hssp_oracle(const ActionPtr& act, const Subgroup& h) {
    if (!is_closed(h, *act)) throw NotClosedError("subgroup is not closed under the action");
    Partition pi = subgroup_star(h, *act);
    ProblemInstance inst;
    inst.family = Family::HSSP;
    inst.oracle = std::make_shared<TableOracle>(pi.classof());
    inst.group = act->group_ptr();
    inst.action = act;
    inst.hidden.subgroup = std::make_shared<Subgroup>(h);
    return inst;
}

// Level sets of P_u(x) = x^2 - 2ux: the pairs {x, 2u - x}.
inline ProblemInstance make_hqpp_oracle(const FieldPtr& f, int u) {
    const Field& F = *f;
    if (F.p() == 2) throw EvenCharacteristicError("HQPP requires odd characteristic");
    int two_u = F.add(u, u);
    std::vector<long long> canon(F.q());
    for (int x = 0; x < F.q(); ++x) canon[x] = std::min(x, F.sub(two_u, x));
    ProblemInstance inst;
    inst.family = Family::HQPP;
    inst.oracle = std::make_shared<TableOracle>(std::move(canon));
    inst.field = f;
    inst.hidden.u = u;
    return inst;
}

inline long long encode_point(const Field& F, const std::vector<int>& x) {
    long long code = 0;
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) code = code * F.q() + x[i];
    return code;
}
inline std::vector<int> decode_point(const Field& F, long long code, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) { x[i] = static_cast<int>(code % F.q()); code /= F.q(); }
    return x;
}

// f(x) = f(y) <=> P(x) = P(y) on F_q^n.
inline ProblemInstance make_hpp_oracle(const FieldPtr& f, int n, const MultiPoly& p) {
    const Field& F = *f;
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= F.q();
    std::vector<long long> labels(size);
    for (long long m = 0; m < size; ++m) labels[m] = p.eval(decode_point(F, m, n));
    ProblemInstance inst;
    inst.family = Family::HPP;
    inst.oracle = std::make_shared<TableOracle>(Partition::from_labels(labels).classof());
    inst.field = f;
    inst.n = n;
    inst.hidden.poly = p.drop_constant();
    return inst;
}

// f(x,y) = f(x',y') <=> y - Q(x) = y' - Q(x') on F_q^n x F_q.
// Point encoding: y is the least significant digit.
inline ProblemInstance make_hpgp_oracle(const FieldPtr& f, int n, const MultiPoly& q_poly) {
    const Field& F = *f;
    long long xs = 1;
    for (int i = 0; i < n; ++i) xs *= F.q();
    std::vector<long long> labels(xs * F.q());
    for (long long xc = 0; xc < xs; ++xc) {
        auto x = decode_point(F, xc, n);
        int qx = q_poly.eval(x);
        for (int y = 0; y < F.q(); ++y)
            labels[xc * F.q() + y] = F.sub(y, qx);
    }
    ProblemInstance inst;
    inst.family = Family::HPGP;
    inst.oracle = std::make_shared<TableOracle>(Partition::from_labels(labels).classof());
    inst.field = f;
    inst.n = n;
    inst.d = q_poly.total_degree();
    inst.hidden.poly = q_poly.drop_constant();
    return inst;
}

inline long long hpgp_point(const Field& F, const std::vector<int>& x, int y) {
    return encode_point(F, x) * F.q() + y;
}

// Grover's search as an HSSP over Aff_q: f_c(x) = delta_{c,x} hides the
// stabilizer H_c = {((1-a)c, a) : a in F_q^*}.
inline ProblemInstance make_grover_oracle(const FieldPtr& f, int c) {
    const Field& F = *f;
    std::vector<long long> labels(F.q());
    for (int x = 0; x < F.q(); ++x) labels[x] = (x == c) ? 1 : 0;
    auto g = make_full_affine(f);
    auto act = std::make_shared<KernelAction>(g);
    std::vector<GroupElem> stab;
    for (int a = 1; a < F.q(); ++a) stab.push_back(g->make(F.mul(F.sub(F.one(), a), c), a));
    ProblemInstance inst;
    inst.family = Family::GroverHSSP;
    inst.oracle = std::make_shared<TableOracle>(Partition::from_labels(labels).classof());
    inst.field = f;
    inst.group = g;
    inst.action = act;
    inst.hidden.u = c;
    inst.hidden.subgroup = std::make_shared<Subgroup>(g, std::move(stab));
    return inst;
}

// Q_v(t) = sum_{j=0}^{t-1} A^j v; the subgroup H_v = <(v,1)> consists of the
// pairs (Q_v(t), t) and its cosets are {(Q_v(t)+y, t)}.
inline std::vector<int> zpmzp_qv(const ZpmZpGroup& g, const std::vector<int>& v, int t) {
    std::vector<int> acc(g.m(), 0);
    for (int j = 0; j < t; ++j) {
        const auto& aj = g.a_power(j);
        for (int i = 0; i < g.m(); ++i) {
            int s = acc[i];
            for (int l = 0; l < g.m(); ++l) s = (s + aj[i][l] * v[l]) % g.p();
            acc[i] = s;
        }
    }
    return acc;
}

inline ProblemInstance make_zpmzp_oracle(const std::shared_ptr<const ZpmZpGroup>& g,
                                         const std::vector<int>& v) {
    auto hv = Subgroup(g, {GroupElem{g->encode_vec(v), 1 % g->p()}});
    // left cosets make the level sets exactly those of y - Q_v(t)
    ProblemInstance inst = make_hsp_oracle(g, hv, true);
    inst.family = Family::ZpmZpHSP;
    inst.hidden.vec = v;
    return inst;
}

// ----------------------------------------------------------------------------
// Promise validation: the Definition-1 biconditional, exhaustive for small
// domains and randomized (10^4 pairs) otherwise.

inline bool validate_promise(const ProblemInstance& inst, std::uint64_t seed = 12345) {
    const LevelSetOracle& f = *inst.oracle;
    long long n = f.domain_size();

    auto same_hidden_class = [&](long long x, long long y) -> bool {
        switch (inst.family) {
            case Family::HSP:
            case Family::ZpmZpHSP: {
                const Group& G = *inst.group;
                // Hx = Hy <=> y x^{-1} in H; xH = yH <=> x^{-1} y in H
                GroupElem gx = G.decode(x), gy = G.decode(y);
                GroupElem w = inst.left_cosets ? G.mul(G.inv(gx), gy) : G.mul(gy, G.inv(gx));
                return inst.hidden.subgroup->contains(w);
            }
            case Family::HSSP:
            case Family::GroverHSSP: {
                auto ox = orbit(*inst.hidden.subgroup, x, *inst.action);
                return ox.count(y) > 0;
            }
            case Family::HQPP: {
                const Field& F = *inst.field;
                int u = *inst.hidden.u;
                int px = F.sub(F.mul(static_cast<int>(x), static_cast<int>(x)),
                               F.mul(F.add(u, u), static_cast<int>(x)));
                int py = F.sub(F.mul(static_cast<int>(y), static_cast<int>(y)),
                               F.mul(F.add(u, u), static_cast<int>(y)));
                return px == py;
            }
            case Family::HPP: {
                const Field& F = *inst.field;
                return inst.hidden.poly->eval(decode_point(F, x, inst.n)) ==
                       inst.hidden.poly->eval(decode_point(F, y, inst.n));
            }
            case Family::HPGP: {
                const Field& F = *inst.field;
                int yx = static_cast<int>(x % F.q()), yy = static_cast<int>(y % F.q());
                auto px = decode_point(F, x / F.q(), inst.n);
                auto py = decode_point(F, y / F.q(), inst.n);
                return F.sub(yx, inst.hidden.poly->eval(px)) == F.sub(yy, inst.hidden.poly->eval(py));
            }
        }
        return false;
    };

    auto check_pair = [&](long long x, long long y) {
        return (f.peek(x) == f.peek(y)) == same_hidden_class(x, y);
    };

    if (n * n <= 512LL * 512LL) {
        for (long long x = 0; x < n; ++x)
            for (long long y = x; y < n; ++y)
                if (!check_pair(x, y)) return false;
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 10000; ++t)
            if (!check_pair(static_cast<long long>(rng() % n), static_cast<long long>(rng() % n)))
                return false;
    }
    return true;
}

}  // namespace hssp
