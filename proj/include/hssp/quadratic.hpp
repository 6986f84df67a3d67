#pragma once

// Recovery of hidden quadratic polynomials from level-set oracles by O(n^2)
// univariate restrictions.  The quotient procedure is pluggable so the
// reduction is testable independently of how the univariate step is realized.

#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hssp/linalg.hpp"
#include "hssp/solvers.hpp"

namespace hssp {

using RProc = std::function<QuotientReport(const FieldPtr&, const std::function<long long(int)>&)>;

inline RProc default_rproc() {
    return [](const FieldPtr& f, const std::function<long long(int)>& q) {
        return procedure_R(f, q);
    };
}

// Hidden bivariate quadratic a11 x1^2 + a22 x2^2 + a12 x1 x2 + b1 x1 + b2 x2,
// recovered up to a common scalar.  Coefficient order (a11,a22,a12,b1,b2).
struct BivariateResult {
    bool zero = false;
    std::array<int, 5> v{};
    std::set<std::string> branches;
    long long r_calls = 0;
};

namespace detail {

enum class ProbeKind { Zero, AZero, Ratio };
struct Probe {
    ProbeKind kind;
    int ratio = 0;
};

struct BivarContext {
    FieldPtr f;
    std::function<long long(int, int)> query;
    const RProc& rproc;
    long long r_calls = 0;

    // restriction (x1, x2) = (s1 x + t1, s2 x + t2); the restricted
    // polynomial is a x^2 + b x + const with
    //   a = a11 s1^2 + a22 s2^2 + a12 s1 s2
    //   b = 2 a11 s1 t1 + 2 a22 s2 t2 + a12 (s1 t2 + s2 t1) + b1 s1 + b2 s2
    Probe probe(int s1, int t1, int s2, int t2) {
        const Field& F = *f;
        std::vector<long long> vals(F.q());
        bool constant = true;
        for (int x = 0; x < F.q(); ++x) {
            vals[x] = query(F.add(F.mul(s1, x), t1), F.add(F.mul(s2, x), t2));
            if (vals[x] != vals[0]) constant = false;
        }
        if (constant) return {ProbeKind::Zero};
        QuotientReport rep = rproc(f, [&](int x) { return vals[x]; });
        ++r_calls;
        if (rep.azero) return {ProbeKind::AZero};
        return {ProbeKind::Ratio, *rep.ratio};
    }
};

inline void normalize_first_nonzero(std::vector<int>& v, const Field& F) {
    for (int c : v) {
        if (c != 0) {
            int s = F.inv(c);
            for (int& x : v) x = F.mul(x, s);
            return;
        }
    }
}

}  // namespace detail

inline BivariateResult solve_bivariate_quadratic(const FieldPtr& f,
                                                 const std::function<long long(int, int)>& query,
                                                 const RProc& rproc, bool allow_zero = false) {
    const Field& F = *f;
    BivariateResult out;

    if (F.q() == 2) {
        // x^2 = x, so the hidden polynomial is a12 x1 x2 + b1 x1 + b2 x2
        long long f00 = query(0, 0);
        int b1 = query(1, 0) != f00;
        int b2 = query(0, 1) != f00;
        int a12 = (query(1, 1) != f00) ^ b1 ^ b2;
        out.branches.insert("q2");
        if (!a12 && !b1 && !b2) {
            if (!allow_zero) throw PromiseViolationError("constant oracle on the plane");
            out.zero = true;
            out.branches.insert("zero");
            return out;
        }
        out.v = {0, 0, a12, b1, b2};
        return out;
    }
    if (F.p() == 2) throw EvenCharacteristicError("even non-prime fields are not supported");

    detail::BivarContext ctx{f, query, rproc};
    auto fin = [&](std::vector<int> v) {
        detail::normalize_first_nonzero(v, F);
        for (int i = 0; i < 5; ++i) out.v[i] = v[i];
        out.r_calls = ctx.r_calls;
        return out;
    };
    int one = F.one(), two = F.add(one, one);

    detail::Probe p1 = ctx.probe(one, 0, 0, 0);  // a = a11, b = b1
    detail::Probe p2 = ctx.probe(0, 0, one, 0);  // a = a22, b = b2

    if (p1.kind == detail::ProbeKind::Ratio && p2.kind == detail::ProbeKind::Ratio) {
        // both squares present; scale a11 = 1
        int b1 = p1.ratio;
        detail::Probe p3 = ctx.probe(one, 0, 0, one);  // a = a11, b = a12 + b1
        if (p3.kind != detail::ProbeKind::Ratio)
            throw PromiseViolationError("inconsistent restriction answers");
        int a12 = F.sub(p3.ratio, b1);
        int a22;
        if (a12 != 0) {
            detail::Probe p4 = ctx.probe(0, one, one, 0);  // a = a22, b = a12 + b2
            if (p4.kind != detail::ProbeKind::Ratio || p4.ratio == p2.ratio)
                throw PromiseViolationError("inconsistent restriction answers");
            a22 = F.div(a12, F.sub(p4.ratio, p2.ratio));
            out.branches.insert("sq-cross");
        } else {
            detail::Probe p5 = ctx.probe(one, 0, one, 0);  // a = a11+a22, b = b1+b2
            if (p5.kind != detail::ProbeKind::Ratio) {
                a22 = F.neg(one);
            } else {
                // shift the diagonal restriction: a unchanged, b gains 2 a22
                detail::Probe p6 = ctx.probe(one, 0, one, one);
                if (p6.kind != detail::ProbeKind::Ratio)
                    throw PromiseViolationError("inconsistent restriction answers");
                int w = F.sub(p6.ratio, p5.ratio);  // 2 a22 / (a11 + a22)
                if (w == two) throw PromiseViolationError("inconsistent restriction answers");
                a22 = F.div(w, F.sub(two, w));
            }
            out.branches.insert("sq-diag");
        }
        int b2 = F.mul(p2.ratio, a22);
        return fin({one, a22, a12, b1, b2});
    }

    if (p1.kind == detail::ProbeKind::Ratio || p2.kind == detail::ProbeKind::Ratio) {
        if (p1.kind != detail::ProbeKind::Ratio) {
            // mirror case: solve with the variables swapped
            BivariateResult s = solve_bivariate_quadratic(
                f, [&](int x1, int x2) { return query(x2, x1); }, rproc, allow_zero);
            out = s;
            out.r_calls += ctx.r_calls;
            std::swap(out.v[0], out.v[1]);
            std::swap(out.v[3], out.v[4]);
            out.branches.insert("swap");
            return out;
        }
        // a11 != 0, a22 = 0; scale a11 = 1
        int b1 = p1.ratio;
        detail::Probe p3 = ctx.probe(one, 0, 0, one);
        if (p3.kind != detail::ProbeKind::Ratio)
            throw PromiseViolationError("inconsistent restriction answers");
        int a12 = F.sub(p3.ratio, b1);
        int b2;
        if (p2.kind == detail::ProbeKind::Zero) {
            b2 = 0;
            out.branches.insert("one-sq-plain");
        } else if (a12 == 0) {
            detail::Probe p5 = ctx.probe(one, 0, one, 0);  // a = a11, b = b1 + b2
            if (p5.kind != detail::ProbeKind::Ratio)
                throw PromiseViolationError("inconsistent restriction answers");
            b2 = F.sub(p5.ratio, b1);
            out.branches.insert("one-sq-diag");
        } else {
            // (x, alpha x) with 1 + alpha a12 != 0
            int bad = F.neg(F.inv(a12));
            int alpha = 0;
            for (int c = 1; c < F.q(); ++c)
                if (c != bad) { alpha = c; break; }
            detail::Probe pa = ctx.probe(one, 0, alpha, 0);  // a = 1 + alpha a12, b = b1 + alpha b2
            if (pa.kind != detail::ProbeKind::Ratio)
                throw PromiseViolationError("inconsistent restriction answers");
            int a = F.add(one, F.mul(alpha, a12));
            b2 = F.div(F.sub(F.mul(pa.ratio, a), b1), alpha);
            out.branches.insert("one-sq-slope");
        }
        return fin({one, 0, a12, b1, b2});
    }

    // a11 = a22 = 0
    detail::Probe p5 = ctx.probe(one, 0, one, 0);  // a = a12, b = b1 + b2
    if (p5.kind == detail::ProbeKind::Ratio) {
        // scale a12 = 1; separate b1, b2 with a second slope
        int alpha = -1;
        for (int c = 2; c < F.q(); ++c)
            if (c != 0 && c != one) { alpha = c; break; }
        if (alpha < 0) throw FieldTooSmallError("need three field elements");
        detail::Probe pa = ctx.probe(one, 0, alpha, 0);  // a = alpha a12, b = b1 + alpha b2
        if (pa.kind != detail::ProbeKind::Ratio)
            throw PromiseViolationError("inconsistent restriction answers");
        int b2 = F.div(F.sub(F.mul(pa.ratio, alpha), p5.ratio), F.sub(alpha, one));
        int b1 = F.sub(p5.ratio, b2);
        out.branches.insert("cross-only");
        return fin({0, 0, one, b1, b2});
    }

    // purely linear: kernel scan over the plane (the abelian stand-in)
    long long f00 = query(0, 0);
    std::vector<std::pair<int, int>> kernel;
    for (int x1 = 0; x1 < F.q(); ++x1)
        for (int x2 = 0; x2 < F.q(); ++x2)
            if (query(x1, x2) == f00) kernel.emplace_back(x1, x2);
    if (static_cast<int>(kernel.size()) == F.q() * F.q()) {
        if (!allow_zero) throw PromiseViolationError("constant oracle on the plane");
        out.zero = true;
        out.branches.insert("zero");
        out.r_calls = ctx.r_calls;
        return out;
    }
    if (static_cast<int>(kernel.size()) != F.q())
        throw PromiseViolationError("level set of 0 is not a line");
    for (auto [z1, z2] : kernel) {
        if (z1 == 0 && z2 == 0) continue;
        out.branches.insert("linear");
        return fin({0, 0, 0, z2, F.neg(z1)});
    }
    throw PromiseViolationError("level set of 0 is degenerate");
}

// ----------------------------------------------------------------------------
// n variables: pair restrictions plus linking substitutions, assembled into
// one homogeneous linear system whose kernel must be the scalar line.

struct QuadraticResult {
    std::vector<int> coeffs;  // a_11..a_nn, a_ij (i<j lex), b_1..b_n
    std::set<std::string> branches;
    long long r_calls = 0;
    long long bivariate_calls = 0;
};

namespace detail {

// substitution token per variable: value = cx * x + cy * y + c1
struct Sub {
    std::vector<std::array<int, 3>> c;
};

struct QuadSystem {
    FieldPtr f;
    int n;
    bool drop_diag;                 // q = 2: x^2 = x folds the diagonal away
    std::vector<int> comp_of_diag;  // -1 when dropped
    std::vector<std::vector<int>> comp_of_cross;
    std::vector<int> comp_of_b;
    int ncomp = 0;

    explicit QuadSystem(FieldPtr fld, int nvars)
        : f(std::move(fld)), n(nvars), drop_diag(f->q() == 2) {
        comp_of_diag.assign(n, -1);
        comp_of_cross.assign(n, std::vector<int>(n, -1));
        comp_of_b.assign(n, -1);
        if (!drop_diag)
            for (int i = 0; i < n; ++i) comp_of_diag[i] = ncomp++;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) comp_of_cross[i][j] = ncomp++;
        for (int i = 0; i < n; ++i) comp_of_b[i] = ncomp++;
    }

    // coefficient rows of the substituted bivariate quadratic
    // (A11, A22, A12, B1, B2) as linear forms in the hidden coefficients
    std::array<std::vector<int>, 5> rows_for(const Sub& s) const {
        const Field& F = *f;
        std::array<std::vector<int>, 5> rows;
        for (auto& r : rows) r.assign(ncomp, 0);
        auto add = [&](int row, int comp, int val) {
            if (comp >= 0 && val != 0) rows[row][comp] = F.add(rows[row][comp], val);
        };
        int two = F.add(F.one(), F.one());
        auto emit = [&](int comp, int xx, int yy, int xy, int bx, int by) {
            if (drop_diag) {
                // x^2 = x and y^2 = y
                bx = F.add(bx, xx);
                by = F.add(by, yy);
                xx = yy = 0;
            }
            add(0, comp, xx);
            add(1, comp, yy);
            add(2, comp, xy);
            add(3, comp, bx);
            add(4, comp, by);
        };
        for (int i = 0; i < n; ++i) {
            auto [cx, cy, c1] = s.c[i];
            // a_ii sigma_i^2
            emit(comp_of_diag[i], F.mul(cx, cx), F.mul(cy, cy), F.mul(two, F.mul(cx, cy)),
                 F.mul(two, F.mul(cx, c1)), F.mul(two, F.mul(cy, c1)));
            // b_i sigma_i
            emit(comp_of_b[i], 0, 0, 0, cx, cy);
            for (int j = i + 1; j < n; ++j) {
                auto [dx, dy, d1] = s.c[j];
                emit(comp_of_cross[i][j], F.mul(cx, dx), F.mul(cy, dy),
                     F.add(F.mul(cx, dy), F.mul(cy, dx)), F.add(F.mul(cx, d1), F.mul(c1, dx)),
                     F.add(F.mul(cy, d1), F.mul(c1, dy)));
            }
        }
        return rows;
    }
};

}  // namespace detail

inline QuadraticResult solve_multivariate_quadratic(
    const FieldPtr& f, int n, const std::function<long long(const std::vector<int>&)>& query,
    const RProc& rproc) {
    const Field& F = *f;
    if (n < 2) throw ArityMismatchError("need at least two variables");
    QuadraticResult out;

    auto pack = [&](std::vector<int> diag, std::vector<std::vector<int>> cross, std::vector<int> b) {
        out.coeffs.clear();
        for (int i = 0; i < n; ++i) out.coeffs.push_back(diag[i]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.coeffs.push_back(cross[i][j]);
        for (int i = 0; i < n; ++i) out.coeffs.push_back(b[i]);
        detail::normalize_first_nonzero(out.coeffs, F);
    };

    if (n == 2) {
        BivariateResult r = solve_bivariate_quadratic(
            f, [&](int x1, int x2) { return query({x1, x2}); }, rproc, false);
        out.branches = r.branches;
        out.r_calls = r.r_calls;
        out.bivariate_calls = 1;
        pack({r.v[0], r.v[1]}, {{0, r.v[2]}, {0, 0}}, {r.v[3], r.v[4]});
        return out;
    }

    detail::QuadSystem sys(f, n);
    struct ProbeRec {
        std::array<std::vector<int>, 5> rows;
        BivariateResult res;
    };
    std::vector<ProbeRec> recs;

    auto run_sub = [&](const detail::Sub& s, const std::string& tag) {
        auto sub_query = [&](int x, int y) {
            std::vector<int> pt(n);
            for (int i = 0; i < n; ++i) {
                auto [cx, cy, c1] = s.c[i];
                pt[i] = F.add(F.add(F.mul(cx, x), F.mul(cy, y)), c1);
            }
            return query(pt);
        };
        BivariateResult r = solve_bivariate_quadratic(f, sub_query, rproc, true);
        out.r_calls += r.r_calls;
        ++out.bivariate_calls;
        if (!r.zero) out.branches.insert(tag);
        for (const auto& b : r.branches) out.branches.insert(b);
        recs.push_back(ProbeRec{sys.rows_for(s), std::move(r)});
    };

    auto solve_system = [&]() -> std::optional<std::vector<int>> {
        int scales = 0;
        for (const auto& r : recs)
            if (!r.res.zero) ++scales;
        MatrixFq m(f, 0, sys.ncomp + scales);
        int scol = sys.ncomp;
        for (const auto& r : recs) {
            int col = r.res.zero ? -1 : scol++;
            for (int c = 0; c < 5; ++c) {
                std::vector<int> row(sys.ncomp + scales, 0);
                for (int k = 0; k < sys.ncomp; ++k) row[k] = r.rows[c][k];
                if (col >= 0) row[col] = F.neg(r.res.v[c]);
                m.append_row(row);
            }
        }
        auto basis = mat_kernel_basis(m);
        if (basis.size() != 1) return std::nullopt;
        std::vector<int> z(basis[0].begin(), basis[0].begin() + sys.ncomp);
        bool nonzero = false;
        for (int c : z) nonzero = nonzero || c != 0;
        if (!nonzero) throw PromiseViolationError("oracle is constant on every restriction");
        return z;
    };

    auto unit = [&](int which) {  // 0: x, 1: y, 2: 1, 3: 0
        std::array<int, 3> c{0, 0, 0};
        if (which < 3) c[which] = F.one();
        return c;
    };

    // pair restrictions, everything else pinned to zero
    bool cross_only = true;
    bool any_nonzero = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            detail::Sub s;
            s.c.assign(n, unit(3));
            s.c[i] = unit(0);
            s.c[j] = unit(1);
            run_sub(s, "pair");
            const BivariateResult& r = recs.back().res;
            if (!r.zero) {
                any_nonzero = true;
                for (int c = 0; c < 5; ++c)
                    if (c != 2 && r.v[c] != 0) cross_only = false;
            }
        }
    if (!any_nonzero) throw PromiseViolationError("oracle is constant on every pair plane");

    auto z = solve_system();
    // a disconnected scale graph (or a pure cross-term polynomial, where the
    // proof substitutes shared values) needs linking restrictions
    if (!z || cross_only) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::array<int, 3> tri{i, j, k};
                    for (int x_at = 0; x_at < 3; ++x_at) {
                        detail::Sub anchor;  // one variable x, two variables y
                        anchor.c.assign(n, unit(3));
                        for (int t = 0; t < 3; ++t) anchor.c[tri[t]] = unit(t == x_at ? 0 : 1);
                        run_sub(anchor, "triple-anchor");
                        detail::Sub one_sub;  // one variable pinned to 1
                        one_sub.c.assign(n, unit(3));
                        int pos = 0;
                        for (int t = 0; t < 3; ++t)
                            one_sub.c[tri[t]] = unit(t == x_at ? 2 : pos++);
                        run_sub(one_sub, "triple-subst1");
                    }
                }
        z = solve_system();
    }
    if (!z && n >= 4) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        const std::array<std::array<int, 4>, 3> pairings{
                            {{i, j, k, l}, {i, k, j, l}, {i, l, j, k}}};
                        for (const auto& p : pairings) {
                            detail::Sub match;  // two variables x, two variables y
                            match.c.assign(n, unit(3));
                            match.c[p[0]] = match.c[p[1]] = unit(0);
                            match.c[p[2]] = match.c[p[3]] = unit(1);
                            run_sub(match, "match4");
                        }
                    }
        z = solve_system();
    }
    if (!z) throw PromiseViolationError("restrictions do not determine the polynomial");

    std::vector<int> diag(n, 0), b(n, 0);
    std::vector<std::vector<int>> cross(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (sys.comp_of_diag[i] >= 0) diag[i] = (*z)[sys.comp_of_diag[i]];
        b[i] = (*z)[sys.comp_of_b[i]];
        for (int j = i + 1; j < n; ++j) cross[i][j] = (*z)[sys.comp_of_cross[i][j]];
    }
    pack(diag, cross, b);
    return out;
}

}  // namespace hssp
