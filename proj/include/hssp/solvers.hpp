#pragma once

// Desk-scale solvers closing the reductions: brute-force HSP and HSSP
// identification, a simulated abelian coset sampler with an honest
// reconstructor, the univariate quadratic quotient procedure, a direct
// univariate graph-polynomial solver, and a Grover scan counter.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hssp/linalg.hpp"
#include "hssp/oracle.hpp"
#include "hssp/strong_base.hpp"

namespace hssp {

// The unique subgroup in the family whose coset partition matches the
// oracle's level sets.  Queries all of G.
inline Subgroup brute_force_hsp(const LevelSetOracle& oracle, const GroupPtr& g,
                                const std::vector<Subgroup>& family) {
    const Group& G = *g;
    if (oracle.domain_size() != G.order()) throw DomainMismatchError("oracle domain is not G");
    std::vector<long long> labels(G.order());
    for (long long i = 0; i < G.order(); ++i) labels[i] = oracle.query(i);
    Partition pf = Partition::from_labels(labels);

    std::optional<Subgroup> found;
    for (const auto& h : family) {
        std::vector<long long> coset(G.order());
        for (long long i = 0; i < G.order(); ++i) {
            GroupElem x = G.decode(i);
            long long best = -1;
            for (const auto& e : h.elements()) {
                long long c = G.encode(G.mul(e, x));
                if (best < 0 || c < best) best = c;
            }
            coset[i] = best;
        }
        if (Partition::from_labels(coset) == pf) {
            if (found && *found != h) throw AmbiguousAnswerError("several subgroups fit the oracle");
            found = h;
        }
    }
    if (!found) throw NoConsistentSubgroupError("no subgroup in the family fits the oracle");
    return *found;
}

// pi_f* : queries all of M, returns the symmetry subgroup of the level-set
// partition.  When a family is given, membership is asserted.
inline Subgroup brute_force_hssp(const LevelSetOracle& oracle, const ActionPtr& act,
                                 const std::vector<Subgroup>* family = nullptr) {
    if (oracle.domain_size() != act->domain_size())
        throw DomainMismatchError("oracle domain is not the action domain");
    std::vector<long long> labels(act->domain_size());
    for (long long m = 0; m < act->domain_size(); ++m) labels[m] = oracle.query(m);
    Partition pf = Partition::from_labels(labels);
    Subgroup h = partition_star(pf, *act);
    if (family) {
        bool member = false;
        for (const auto& cand : *family)
            if (cand == h) { member = true; break; }
        if (!member) throw NoConsistentSubgroupError("symmetry subgroup outside the target family");
    }
    return h;
}

// ----------------------------------------------------------------------------
// Simulated coset sampling over Z_p^m.  The sampler is harness-side: it reads
// the hidden generators to produce the distribution the quantum Fourier
// sampling would; the reconstructor sees samples only.

class CosetSampler {
public:
    CosetSampler(FieldPtr prime_field, int m, std::vector<std::vector<int>> hidden_gens,
                 std::uint64_t seed)
        : field_(std::move(prime_field)), m_(m), rng_(seed) {
        if (field_->k() != 1) throw DomainMismatchError("coset sampler needs a prime field");
        MatrixFq gens(field_, 0, m_);
        for (auto& g : hidden_gens) gens.append_row(g);
        perp_basis_ = mat_kernel_basis(gens);
    }

    // uniform sample from H-perp
    std::vector<int> sample() {
        const Field& F = *field_;
        std::vector<int> v(m_, 0);
        for (const auto& b : perp_basis_) {
            int c = static_cast<int>(rng_() % F.q());
            for (int i = 0; i < m_; ++i) v[i] = F.add(v[i], F.mul(c, b[i]));
        }
        return v;
    }

    int perp_rank() const { return static_cast<int>(perp_basis_.size()); }

private:
    FieldPtr field_;
    int m_;
    std::mt19937_64 rng_;
    std::vector<std::vector<int>> perp_basis_;
};

// H = kernel of the sample matrix; exact once the samples span H-perp.
inline std::vector<std::vector<int>> reconstruct_from_samples(
    const FieldPtr& prime_field, int m, const std::vector<std::vector<int>>& samples) {
    MatrixFq s(prime_field, 0, m);
    for (const auto& row : samples) s.append_row(row);
    return mat_kernel_basis(s);
}

// ----------------------------------------------------------------------------
// Procedure for level sets of a x^2 + b x over odd F_q: decides a = 0 and
// returns b/a when a != 0.  Only the partition shape is used: a != 0 gives one
// singleton and (q-1)/2 pairs with constant pair sum -b/a; a = 0, b != 0 is
// injective.

struct QuotientReport {
    bool azero = false;
    std::optional<int> ratio;  // b/a, present iff azero is false
    long long queries = 0;
};

inline QuotientReport procedure_R(const FieldPtr& f,
                                  const std::function<long long(int)>& query) {
    const Field& F = *f;
    if (F.p() == 2) throw EvenCharacteristicError("quotient procedure requires odd q");
    std::map<long long, std::vector<int>> classes;
    for (int x = 0; x < F.q(); ++x) classes[query(x)].push_back(x);
    QuotientReport rep;
    rep.queries = F.q();

    if (static_cast<int>(classes.size()) == F.q()) {
        rep.azero = true;
        return rep;
    }
    int singletons = 0, pair_sum = -1;
    bool ok = true;
    for (const auto& [label, xs] : classes) {
        if (xs.size() == 1) {
            ++singletons;
        } else if (xs.size() == 2) {
            int s = F.add(xs[0], xs[1]);
            if (pair_sum == -1) pair_sum = s;
            else if (pair_sum != s) ok = false;
        } else {
            ok = false;
        }
    }
    if (!ok || singletons != 1 || pair_sum == -1)
        throw PromiseViolationError("level sets are not those of a nonzero a x^2 + b x");
    // the singleton x0 satisfies 2 x0 = -b/a = pair sum
    for (const auto& [label, xs] : classes)
        if (xs.size() == 1 && F.add(xs[0], xs[0]) != pair_sum)
            throw PromiseViolationError("singleton inconsistent with the pair sums");
    rep.azero = false;
    rep.ratio = F.neg(pair_sum);
    return rep;
}

// ----------------------------------------------------------------------------
// Direct univariate graph-polynomial solver: f(x,y) = f(0,0) iff
// y = Q(x) - Q(0), so scanning y per abscissa reads off Q - Q(0).
// Point code convention: (x, y) -> x q + y.

inline FieldPoly hpgp1_direct_solver(const LevelSetOracle& oracle, const FieldPtr& f, int d) {
    const Field& F = *f;
    if (F.q() < d + 1) throw FieldTooSmallError("need d+1 distinct abscissas");
    std::vector<std::pair<int, int>> pts;
    pts.emplace_back(0, 0);
    long long ref = oracle.query(0);  // f(0, 0)
    for (int x = 1; x <= d; ++x) {
        int qx = -1;
        for (int y = 0; y < F.q(); ++y) {
            if (oracle.query(static_cast<long long>(x) * F.q() + y) == ref) {
                qx = y;
                break;
            }
        }
        if (qx < 0) throw PromiseViolationError("no level-set match on an abscissa column");
        pts.emplace_back(x, qx);
    }
    return lagrange_interpolate(f, pts, d);
}

// ----------------------------------------------------------------------------
// Classical Grover scan with query accounting: boolean point oracle, queried
// in a fixed order until the marked element is found.

struct GroverReport {
    int c = -1;
    long long queries = 0;
};

inline GroverReport grover_scan(const FieldPtr& f, int c,
                                const std::vector<int>* order = nullptr) {
    const Field& F = *f;
    std::vector<long long> delta(F.q(), 0);
    if (c < 0 || c >= F.q()) throw DomainMismatchError("target outside the field");
    delta[c] = 1;
    TableOracle oracle(std::move(delta));
    GroverReport rep;
    for (int i = 0; i < F.q(); ++i) {
        int x = order ? (*order)[i] : i;
        if (oracle.query(x) == 1) {
            rep.c = x;
            break;
        }
    }
    rep.queries = oracle.query_count();
    if (rep.c < 0) throw PromiseViolationError("no marked element found");
    return rep;
}

// (b, a) -> (1 - a)^{-1} b, constant on the non-identity elements of H_c.
inline int grover_recover_c(const AffineGroup& g, const Subgroup& h) {
    const Field& F = *g.field();
    std::optional<int> c;
    for (const auto& e : h.elements()) {
        int a = g.h_value(e.h);
        if (a == F.one()) {
            if (e.k != 0) throw PromiseViolationError("pure translation in a point stabilizer");
            continue;
        }
        int cand = F.div(static_cast<int>(e.k), F.sub(F.one(), a));
        if (c && *c != cand) throw PromiseViolationError("stabilizer elements disagree on the fixed point");
        c = cand;
    }
    if (!c) throw AmbiguousAnswerError("trivial subgroup fixes every point");
    return *c;
}

}  // namespace hssp
