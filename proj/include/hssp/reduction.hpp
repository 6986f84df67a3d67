#pragma once

// Reductions between the problem families: HSSP to HSP through strong bases,
// the quadratic-polynomial / affine-symmetry equivalence, the univariate
// graph-polynomial route through function graph groups, and the
// Z_p^m x| Z_p construction.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hssp/oracle.hpp"
#include "hssp/solvers.hpp"
#include "hssp/strong_base.hpp"

namespace hssp {

// f_HSP(g) = (f(g o m_1), ..., f(g o m_t)); one lifted query costs exactly
// t inner queries.  Tuples are interned into fresh integer labels.
class LiftedOracle : public LevelSetOracle {
public:
    LiftedOracle(OraclePtr inner, BaseSet base)
        : inner_(std::move(inner)), base_(std::move(base)) {
        if (inner_->domain_size() != base_.action->domain_size())
            throw DomainMismatchError("inner oracle domain is not the action domain");
    }

    long long domain_size() const override { return base_.action->group().order(); }
    const BaseSet& base() const { return base_; }
    const OraclePtr& inner() const { return inner_; }

protected:
    long long eval(long long code) const override {
        GroupElem g = base_.action->group().decode(code);
        std::vector<long long> tuple;
        tuple.reserve(base_.points.size());
        for (long long m : base_.points) tuple.push_back(inner_->query(act(*base_.action, g, m)));
        auto it = intern_.find(tuple);
        if (it == intern_.end())
            it = intern_.emplace(std::move(tuple), static_cast<long long>(intern_.size())).first;
        return it->second;
    }

private:
    OraclePtr inner_;
    BaseSet base_;
    mutable std::map<std::vector<long long>, long long> intern_;
};

// HSSP instance + strong base -> HSP instance over the same group.  When
// verify is set the coset biconditional is checked exhaustively and a failing
// base is reported as BadBase.
inline ProblemInstance lift_hssp_to_hsp(const ProblemInstance& inst, const BaseSet& b,
                                        bool verify = true) {
    if (!inst.action) throw DomainMismatchError("instance carries no action");
    auto lifted = std::make_shared<LiftedOracle>(inst.oracle, b);
    ProblemInstance out;
    out.family = Family::HSP;
    out.oracle = lifted;
    out.field = inst.field;
    out.group = inst.action->group_ptr();
    out.hidden = inst.hidden;

    if (verify) {
        if (!out.hidden.subgroup) throw DomainMismatchError("verification needs the hidden subgroup");
        const Group& G = *out.group;
        const Subgroup& h = *out.hidden.subgroup;
        std::vector<long long> labels(G.order());
        for (long long i = 0; i < G.order(); ++i) labels[i] = lifted->peek(i);
        std::vector<long long> canon(G.order());
        for (long long i = 0; i < G.order(); ++i) {
            GroupElem x = G.decode(i);
            long long best = -1;
            for (const auto& e : h.elements()) {
                long long c = G.encode(G.mul(e, x));
                if (best < 0 || c < best) best = c;
            }
            canon[i] = best;
        }
        for (long long i = 0; i < G.order(); ++i)
            for (long long j = i + 1; j < G.order(); ++j)
                if ((labels[i] == labels[j]) != (canon[i] == canon[j]))
                    throw BadBaseError("lifted oracle violates the coset promise");
        lifted->reset_count();
        inst.oracle->reset_count();
    }
    return out;
}

// ----------------------------------------------------------------------------
// Quadratic / affine-symmetry equivalence over odd q.

// The level sets of x^2 - 2ux are the orbits {x+u', -x+u'}-style pairs of
// H_u = {(0,1), (2u,-1)} acting on F_q; same oracle, reinterpreted.
inline ProblemInstance hqpp_to_hssp(const ProblemInstance& inst) {
    if (inst.family != Family::HQPP) throw DomainMismatchError("expected a quadratic instance");
    const Field& F = *inst.field;
    auto g = make_affine_pm1(inst.field);
    auto act = std::make_shared<KernelAction>(GroupPtr(g));
    ProblemInstance out;
    out.family = Family::HSSP;
    out.oracle = inst.oracle;
    out.field = inst.field;
    out.group = g;
    out.action = act;
    int u = *inst.hidden.u;
    out.hidden.u = u;
    out.hidden.subgroup =
        std::make_shared<Subgroup>(GroupPtr(g), std::vector<GroupElem>{g->make(F.add(u, u), F.neg(F.one()))});
    return out;
}

inline ProblemInstance hssp_to_hqpp(const ProblemInstance& inst) {
    if (inst.family != Family::HSSP) throw DomainMismatchError("expected a symmetry instance");
    auto g = std::dynamic_pointer_cast<const AffineGroup>(inst.group);
    if (!g) throw DomainMismatchError("expected an affine group");
    const Field& F = *g->field();
    ProblemInstance out;
    out.family = Family::HQPP;
    out.oracle = inst.oracle;
    out.field = g->field();
    // the reflection (2u, -1) encodes u
    int u = -1;
    for (const auto& e : inst.hidden.subgroup->elements())
        if (g->h_value(e.h) == F.neg(F.one())) u = F.div(static_cast<int>(e.k), F.add(F.one(), F.one()));
    if (u < 0) throw DomainMismatchError("subgroup carries no reflection");
    out.hidden.u = u;
    return out;
}

// f_min(b) = min(f(b,1), f(b,-1)); level sets {b, 2u-b}.  Two inner queries
// per outer query.
class MinPairOracle : public LevelSetOracle {
public:
    MinPairOracle(OraclePtr inner, int q) : inner_(std::move(inner)), q_(q) {
        if (inner_->domain_size() != 2LL * q_) throw DomainMismatchError("expected a 2q-element group domain");
    }
    long long domain_size() const override { return q_; }

protected:
    long long eval(long long b) const override {
        return std::min(inner_->query(2 * b), inner_->query(2 * b + 1));
    }

private:
    OraclePtr inner_;
    int q_;
};

inline ProblemInstance affine_hsp_to_hqpp(const ProblemInstance& inst) {
    if (inst.family != Family::HSP) throw DomainMismatchError("expected an HSP instance");
    auto g = std::dynamic_pointer_cast<const AffineGroup>(inst.group);
    if (!g || g->h_size() != 2) throw DomainMismatchError("expected Aff_q({+-1})");
    const Field& F = *g->field();
    if (F.p() == 2) throw EvenCharacteristicError("the folding needs odd q");
    ProblemInstance out;
    out.family = Family::HQPP;
    out.oracle = std::make_shared<MinPairOracle>(inst.oracle, F.q());
    out.field = g->field();
    out.hidden = inst.hidden;
    if (!out.hidden.u && inst.hidden.subgroup) {
        for (const auto& e : inst.hidden.subgroup->elements())
            if (g->h_value(e.h) == F.neg(F.one()))
                out.hidden.u = F.div(static_cast<int>(e.k), F.add(F.one(), F.one()));
    }
    return out;
}

// Brute-force identification of u from any HQPP-shaped oracle: the unique
// singleton level set sits at x = u.
inline int brute_force_hqpp(const LevelSetOracle& oracle, const FieldPtr& f) {
    const Field& F = *f;
    std::map<long long, std::vector<int>> classes;
    for (int x = 0; x < F.q(); ++x) classes[oracle.query(x)].push_back(x);
    std::vector<int> singles;
    for (const auto& [label, xs] : classes)
        if (xs.size() == 1) singles.push_back(xs[0]);
    if (singles.size() != 1) throw PromiseViolationError("expected exactly one singleton level set");
    return singles[0];
}

// ----------------------------------------------------------------------------
// Univariate graph polynomials through function graph groups.

inline ProblemInstance hpgp1_to_hsp(const ProblemInstance& inst, bool verify = true) {
    if (inst.family != Family::HPGP || inst.n != 1)
        throw DomainMismatchError("expected a univariate graph instance");
    const FieldPtr& f = inst.field;
    if (f->q() < inst.d + 1) throw FieldTooSmallError("need d+1 distinct abscissas");
    auto fg = make_function_graph(f, inst.d);
    auto act = std::make_shared<ShiftingAction>(fg);

    ProblemInstance hssp;
    hssp.family = Family::HSSP;
    hssp.oracle = inst.oracle;
    hssp.field = f;
    hssp.group = fg;
    hssp.action = act;
    if (inst.hidden.poly) {
        std::vector<int> c(inst.d + 1, 0);
        for (const auto& [e, coef] : inst.hidden.poly->terms()) c[e[0]] = coef;
        hssp.hidden.subgroup =
            std::make_shared<Subgroup>(fg_conjugate_complement(fg, FieldPoly(f, std::move(c))));
    }
    BaseSet base = fg_point_base(fg);
    return lift_hssp_to_hsp(hssp, base, verify);
}

// Q - Q(0) from any generating set of a standard complement: each element
// (R, s) has R = Q - a_s Q, and R(s) = Q(s) - Q(0).
inline FieldPoly recover_poly_from_complement(const std::shared_ptr<const FunctionGraphGroup>& fg,
                                              const std::vector<GroupElem>& gens) {
    const Field& F = *fg->field();
    Subgroup sub(fg, gens);
    if (sub.size() != F.q())
        throw NotGeneratingError("shift components do not generate the additive group");
    std::vector<std::pair<int, int>> pts;
    std::set<int> seen;
    for (const auto& e : sub.elements()) {
        if (!seen.insert(e.h).second)
            throw NotGeneratingError("generators lie in no common standard complement");
        pts.emplace_back(e.h, fg->poly_of(e.k).eval(e.h));
    }
    return lagrange_interpolate(fg->field(), pts, fg->degree_bound());
}

struct Hpgp1Report {
    FieldPoly poly;         // Q - Q(0)
    long long queries = 0;
    std::string path;
};

// Path A: the full group-theoretic route; path B: direct level-set scan.
inline Hpgp1Report solve_hpgp1(const ProblemInstance& inst, const std::string& path = "B") {
    Hpgp1Report rep;
    rep.path = path;
    inst.oracle->reset_count();
    if (path == "A") {
        ProblemInstance hsp = hpgp1_to_hsp(inst, false);
        auto fg = std::dynamic_pointer_cast<const FunctionGraphGroup>(hsp.group);
        Subgroup h = brute_force_hsp(*hsp.oracle, hsp.group, standard_complements(fg).members);
        rep.poly = recover_poly_from_complement(fg, h.elements());
    } else if (path == "B") {
        rep.poly = hpgp1_direct_solver(*inst.oracle, inst.field, inst.d);
    } else {
        ProblemInstance copy = inst;
        Hpgp1Report a = solve_hpgp1(copy, "A");
        Hpgp1Report b = solve_hpgp1(copy, "B");
        if (!(a.poly == b.poly)) throw PromiseViolationError("solution paths disagree");
        rep.poly = b.poly;
        rep.queries = a.queries + b.queries;
        rep.path = "both";
        return rep;
    }
    rep.queries = inst.oracle->query_count();
    return rep;
}

// ----------------------------------------------------------------------------
// Z_p^m x| Z_p: the hidden subgroup H_v = <(v,1)> seen as an m-dimensional
// graph problem for the coordinate polynomials of Q_v(t).

inline int zpmzp_degree_bound(const ZpmZpGroup& g) {
    // nilpotency index of A - I
    int m = g.m();
    std::vector<std::vector<int>> n(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            n[i][j] = (g.a_matrix()[i][j] + (i == j ? g.p() - 1 : 0)) % g.p();
    auto is_zero = [&](const std::vector<std::vector<int>>& x) {
        for (const auto& row : x)
            for (int e : row)
                if (e) return false;
        return true;
    };
    std::vector<std::vector<int>> pw(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) pw[i][i] = 1;
    for (int d = 0; d <= m; ++d) {
        if (is_zero(pw)) return d;
        std::vector<std::vector<int>> nx(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int s = 0;
                for (int l = 0; l < m; ++l) s = (s + pw[i][l] * n[l][j]) % g.p();
                nx[i][j] = s;
            }
        pw = std::move(nx);
    }
    throw DomainMismatchError("A - I is not nilpotent; A^p != I");
}

struct ZpmZpReport {
    std::vector<int> v;
    int d = 0;
    long long queries = 0;
    std::vector<FieldPoly> coord_polys;  // Q_v per coordinate
};

inline ZpmZpReport solve_zpmzp(const ProblemInstance& inst) {
    auto g = std::dynamic_pointer_cast<const ZpmZpGroup>(inst.group);
    if (!g) throw DomainMismatchError("expected a Z_p^m x| Z_p group");
    const LevelSetOracle& f = *inst.oracle;
    int p = g->p(), m = g->m();
    auto fp = field_make(p, 1);
    inst.oracle->reset_count();

    // disentangle the columns: for each t the matching y with
    // f(y, t) = f(0, 0) is exactly Q_v(t)
    long long ref = f.query(g->encode(GroupElem{0, 0}));
    std::vector<std::vector<int>> qv(p);
    for (int t = 0; t < p; ++t) {
        long long hit = -1;
        for (long long y = 0; y < g->k_size(); ++y)
            if (f.query(g->encode(GroupElem{y, t})) == ref) { hit = y; break; }
        if (hit < 0) throw PromiseViolationError("no coset representative in a column");
        qv[t] = g->decode_vec(hit);
    }

    ZpmZpReport rep;
    rep.d = zpmzp_degree_bound(*g);
    int dcap = std::min(rep.d, p - 1);
    // one univariate graph instance per coordinate
    for (int i = 0; i < m; ++i) {
        std::vector<long long> labels(static_cast<size_t>(p) * p);
        for (int t = 0; t < p; ++t)
            for (int y = 0; y < p; ++y)
                labels[static_cast<size_t>(t) * p + y] = fp->sub(y, qv[t][i]);
        TableOracle view(Partition::from_labels(labels).classof());
        rep.coord_polys.push_back(hpgp1_direct_solver(view, fp, dcap));
    }
    rep.v.resize(m);
    for (int i = 0; i < m; ++i) rep.v[i] = rep.coord_polys[i].eval(1 % p);
    if (rep.v != qv[1 % p]) throw PromiseViolationError("interpolated map disagrees with the scan");
    rep.queries = inst.oracle->query_count();
    return rep;
}

}  // namespace hssp
