#pragma once

// Exponent sets, monomial counting, the generalized Vandermonde point-set
// construction, and the multivariate-to-univariate graph-polynomial reduction.

#include <cmath>
#include <functional>
#include <vector>

#include "hssp/linalg.hpp"
#include "hssp/oracle.hpp"
#include "hssp/poly.hpp"

namespace hssp {

// exponent vectors alpha != 0 with sum <= d and alpha_i <= min(d, q-1),
// in graded lexicographic order
struct ExponentSet {
    int q = 0, j = 0, d = 0;
    std::vector<std::vector<int>> exponents;
};

namespace detail {

inline long long binom(long long top, long long k) {
    if (top < 0 || k < 0 || k > top) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

}  // namespace detail

// closed-form size of the exponent set; the cap branch is the
// inclusion-exclusion sum over violated local degrees
inline long long exponent_count(int q, int j, int d) {
    if (q - 1 >= d) return detail::binom(d + j, j) - 1;
    long long total = 0;
    for (int i = 0; i <= j; ++i) {
        long long term = detail::binom(j, i) * detail::binom(static_cast<long long>(d) - static_cast<long long>(i) * q + j, j);
        total += (i % 2 == 0) ? term : -term;
    }
    return total - 1;
}

inline ExponentSet exponent_set(int q, int j, int d) {
    ExponentSet es{q, j, d, {}};
    int cap = std::min(d, q - 1);
    std::vector<int> cur(j, 0);
    std::function<void(int, int, int)> rec = [&](int pos, int used, int target) {
        if (pos == j) {
            if (used == target) es.exponents.push_back(cur);
            return;
        }
        for (int e = 0; e <= std::min(cap, target - used); ++e) {
            cur[pos] = e;
            rec(pos + 1, used + e, target);
        }
        cur[pos] = 0;
    };
    for (int total = 1; total <= d; ++total) {
        size_t before = es.exponents.size();
        rec(0, 0, total);
        // graded order outer, lexicographic inner: the recursion emits
        // smallest-first on the leading variable; reverse for standard lex
        std::reverse(es.exponents.begin() + before, es.exponents.end());
    }
    if (static_cast<long long>(es.exponents.size()) != exponent_count(q, j, d))
        throw Error("exponent enumeration disagrees with the closed-form count");
    return es;
}

struct VandermondeSystem {
    ExponentSet exponents;
    std::vector<std::vector<int>> points;  // V^(j), |points| = |exponents|
    MatrixFq matrix;                       // m_alpha(v), rows by point
};

namespace detail {

inline int eval_monomial(const Field& F, const std::vector<int>& alpha, const std::vector<int>& v) {
    int r = F.one();
    for (size_t i = 0; i < alpha.size(); ++i) r = F.mul(r, F.pow(v[i], alpha[i]));
    return r;
}

}  // namespace detail

inline VandermondeSystem build_vandermonde(const FieldPtr& f, int j, int d) {
    const Field& F = *f;
    ExponentSet es = exponent_set(F.q(), j, d);
    int b = std::min(d, F.q() - 1);

    if (j == 1) {
        // b distinct nonzero elements, 1 first; a scaled Vandermonde matrix
        std::vector<std::vector<int>> pts;
        pts.push_back({F.one()});
        for (int c = 1; c < F.q() && static_cast<int>(pts.size()) < b; ++c)
            if (c != F.one()) pts.push_back({c});
        MatrixFq m(f, 0, static_cast<int>(es.exponents.size()));
        for (const auto& v : pts) {
            std::vector<int> row;
            for (const auto& a : es.exponents) row.push_back(detail::eval_monomial(F, a, v));
            m.append_row(row);
        }
        return {std::move(es), std::move(pts), std::move(m)};
    }

    VandermondeSystem prev = build_vandermonde(f, j - 1, d);
    int target = static_cast<int>(es.exponents.size());
    std::vector<std::vector<int>> pts{std::vector<int>(j, F.one())};
    MatrixFq L(f, 0, target);
    auto add_point = [&](const std::vector<int>& v) {
        std::vector<int> row;
        for (const auto& a : es.exponents) row.push_back(detail::eval_monomial(F, a, v));
        L.append_row(row);
        pts.push_back(v);
    };
    {
        std::vector<int> row;
        for (const auto& a : es.exponents) row.push_back(detail::eval_monomial(F, a, pts[0]));
        L.append_row(row);
    }

    for (int guard = 0; guard <= target + 1; ++guard) {
        if (mat_rank(L) == target) break;
        if (guard == target + 1) throw Error("point search failed to reach full rank");
        // nonzero polynomial G vanishing on the current points
        auto c = mat_kernel_vector(L);
        if (!c) throw Error("rank deficient matrix has no kernel vector");

        // split G = sum_i F_i(x_1..x_{j-1}) x_j^i and take the lowest
        // nonzero layer
        int low = -1;
        for (int i = 0; i <= b && low < 0; ++i) {
            for (size_t t = 0; t < es.exponents.size(); ++t)
                if ((*c)[t] != 0 && es.exponents[t][j - 1] == i) { low = i; break; }
        }
        auto layer_value = [&](const std::vector<int>& w, int i) {
            int acc = 0;
            for (size_t t = 0; t < es.exponents.size(); ++t) {
                if ((*c)[t] == 0 || es.exponents[t][j - 1] != i) continue;
                std::vector<int> beta(es.exponents[t].begin(), es.exponents[t].end() - 1);
                acc = F.add(acc, F.mul((*c)[t], detail::eval_monomial(F, beta, w)));
            }
            return acc;
        };
        auto g_value = [&](const std::vector<int>& w, int x) {
            int acc = 0;
            for (int i = 0; i <= b; ++i) acc = F.add(acc, F.mul(layer_value(w, i), F.pow(x, i)));
            return acc;
        };

        // prefix from V^(j-1) where the low layer does not vanish, then a
        // last coordinate keeping G nonzero; fall back to a full grid scan
        std::vector<int> found;
        for (const auto& w : prev.points) {
            if (layer_value(w, low) == 0) continue;
            for (int x = 0; x < F.q() && found.empty(); ++x)
                if (g_value(w, x) != 0) {
                    found = w;
                    found.push_back(x);
                }
            if (!found.empty()) break;
        }
        if (found.empty()) {
            long long grid = 1;
            for (int i = 0; i < j; ++i) grid *= F.q();
            for (long long code = 0; code < grid && found.empty(); ++code) {
                std::vector<int> u = decode_point(F, code, j);
                std::vector<int> w(u.begin(), u.end() - 1);
                if (g_value(w, u.back()) != 0) found = u;
            }
        }
        if (found.empty()) throw Error("nonzero polynomial with no nonzero value");
        add_point(found);
    }
    return {std::move(es), std::move(pts), std::move(L)};
}

// ----------------------------------------------------------------------------
// Multivariate reduction: solve the univariate problem for
// P_v(x) = Q(v_1 x, ..., v_n x) over every v in V^(n), then recover the
// coefficients from the generalized Vandermonde system.

// Univariate solver contract: returns Q - Q(0) for a univariate graph oracle.
using UniHpgpSolver = std::function<FieldPoly(const LevelSetOracle&, const FieldPtr&, int)>;

// oracle over (x restricted to the line v x, y)
class LineRestrictedOracle : public LevelSetOracle {
public:
    LineRestrictedOracle(OraclePtr inner, FieldPtr f, std::vector<int> v)
        : inner_(std::move(inner)), field_(std::move(f)), v_(std::move(v)) {}
    long long domain_size() const override {
        return static_cast<long long>(field_->q()) * field_->q();
    }

protected:
    long long eval(long long code) const override {
        const Field& F = *field_;
        int x = static_cast<int>(code / F.q()), y = static_cast<int>(code % F.q());
        std::vector<int> pt(v_.size());
        for (size_t i = 0; i < v_.size(); ++i) pt[i] = F.mul(v_[i], x);
        return inner_->query(encode_point(F, pt) * F.q() + y);
    }

private:
    OraclePtr inner_;
    FieldPtr field_;
    std::vector<int> v_;
};

struct HpgpReductionReport {
    MultiPoly poly;
    long long univariate_solves = 0;
    long long queries = 0;
    double learned_bits = 0;
    double lower_bound_bits = 0;
};

inline HpgpReductionReport reduce_hpgp_multivariate(const ProblemInstance& inst,
                                                    const UniHpgpSolver& solve_univariate) {
    if (inst.family != Family::HPGP) throw DomainMismatchError("expected a graph instance");
    const FieldPtr& f = inst.field;
    const Field& F = *f;
    int n = inst.n, d = inst.d;
    if (F.q() < d + 1) throw FieldTooSmallError("univariate step needs d+1 abscissas");
    VandermondeSystem sys = build_vandermonde(f, n, d);
    int size = static_cast<int>(sys.exponents.exponents.size());
    inst.oracle->reset_count();

    // per-point univariate solves: coefficient l of P_v is the homogeneous
    // part Q_l evaluated at v
    std::vector<std::vector<int>> qlv(sys.points.size(), std::vector<int>(d + 1, 0));
    for (size_t pi = 0; pi < sys.points.size(); ++pi) {
        LineRestrictedOracle line(inst.oracle, f, sys.points[pi]);
        FieldPoly pv = solve_univariate(line, f, d);
        for (int l = 1; l <= d; ++l) qlv[pi][l] = pv.coeff(l);
    }

    // per-degree subsystems
    std::vector<int> z_deg(size, 0);
    for (int l = 1; l <= d; ++l) {
        std::vector<int> cols;
        for (int t = 0; t < size; ++t) {
            int s = 0;
            for (int e : sys.exponents.exponents[t]) s += e;
            if (s == l) cols.push_back(t);
        }
        if (cols.empty()) continue;
        MatrixFq sub(f, static_cast<int>(sys.points.size()), static_cast<int>(cols.size()));
        std::vector<int> rhs(sys.points.size());
        for (size_t r = 0; r < sys.points.size(); ++r) {
            for (size_t ci = 0; ci < cols.size(); ++ci) sub.at(static_cast<int>(r), static_cast<int>(ci)) = sys.matrix.at(static_cast<int>(r), cols[ci]);
            rhs[r] = qlv[r][l];
        }
        std::vector<int> sol;
        try {
            sol = mat_solve(sub, rhs);
        } catch (const InconsistentSystemError&) {
            throw PromiseViolationError("homogeneous slice does not fit a degree-l part");
        }
        for (size_t ci = 0; ci < cols.size(); ++ci) z_deg[cols[ci]] = sol[ci];
    }

    // full square system as an independent consistency check
    std::vector<int> y(sys.points.size());
    for (size_t r = 0; r < sys.points.size(); ++r) {
        int acc = 0;
        for (int l = 1; l <= d; ++l) acc = F.add(acc, qlv[r][l]);
        y[r] = acc;
    }
    std::vector<int> z_full = mat_solve(sys.matrix, y);
    if (z_full != z_deg) throw PromiseViolationError("degree slices disagree with the full system");

    HpgpReductionReport rep;
    MultiPoly q(f, n);
    for (int t = 0; t < size; ++t)
        if (z_full[t] != 0) q.add_term(sys.exponents.exponents[t], z_full[t]);
    rep.poly = std::move(q);
    rep.univariate_solves = size;
    rep.queries = inst.oracle->query_count();
    rep.learned_bits = static_cast<double>(d) * size * std::log2(static_cast<double>(F.q()));
    rep.lower_bound_bits = static_cast<double>(size) * std::log2(static_cast<double>(F.q()));
    return rep;
}

// Learned bits versus the entropy lower bound for a multivariate graph
// instance: the reduction reads d |I^(n)| log2(q) bits while the answer
// holds |I^(n)| log2(q); the ratio is exactly d.
struct InformationReport {
    long long coefficients = 0;  // |I^(n)|
    double learned_bits = 0;
    double lower_bound_bits = 0;
    double ratio = 0;
};

inline InformationReport information_ratio(const ProblemInstance& inst) {
    if (inst.family != Family::HPGP) throw DomainMismatchError("expected a graph instance");
    InformationReport rep;
    rep.coefficients = exponent_count(inst.field->q(), inst.n, inst.d);
    double lg = std::log2(static_cast<double>(inst.field->q()));
    rep.learned_bits = static_cast<double>(inst.d) * rep.coefficients * lg;
    rep.lower_bound_bits = static_cast<double>(rep.coefficients) * lg;
    rep.ratio = rep.learned_bits / rep.lower_bound_bits;
    return rep;
}

}  // namespace hssp
