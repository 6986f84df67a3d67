#pragma once

// The release gate: ten properties checked end to end at desk scale.  Shared
// by the dedicated test binary and the command-line runner so both report the
// same pass/fail lines.

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hssp/quadratic.hpp"
#include "hssp/reduction.hpp"
#include "hssp/vandermonde.hpp"

namespace hssp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

namespace detail {

// proper subgroups of F_q^*, excluding the trivial one and the full group
inline std::vector<std::vector<int>> proper_multiplicative_subgroups(const FieldPtr& f) {
    const Field& F = *f;
    std::vector<std::vector<int>> out;
    for (int n = F.q() - 1; n > 1; --n) {
        if ((F.q() - 1) % n != 0 || n == F.q() - 1) continue;
        // the unique subgroup of order n of a cyclic group: the d-th powers
        int d = (F.q() - 1) / n;
        int gen = 0;
        for (int c = 1; c < F.q() && !gen; ++c) {
            int x = c, ord = 1;
            while (x != F.one()) { x = F.mul(x, c); ++ord; }
            if (ord == F.q() - 1) gen = c;
        }
        std::set<int> h;
        int gd = F.pow(gen, d);
        int x = F.one();
        do {
            h.insert(x);
            x = F.mul(x, gd);
        } while (x != F.one());
        out.emplace_back(h.begin(), h.end());
    }
    return out;
}

// smallest base (by size then lex) passing verify_base for the family
inline BaseSet search_base(const ActionPtr& act, const SubgroupFamily& family) {
    long long n = act->domain_size();
    for (int t = 2; t <= 5 && t <= n; ++t) {
        std::vector<long long> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            BaseSet cand{act, idx};
            if (verify_base(cand, family)) return cand;
            int pos = t - 1;
            while (pos >= 0 && idx[pos] == n - t + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    throw BadBaseError("no small base for this family");
}

}  // namespace detail

inline CriterionResult criterion_lifted_promise() {
    CriterionResult r{1, "lifted coset promise on the Frobenius grid"};
    int instances = 0;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto f = field_make(p, k);
        for (const auto& hvals : detail::proper_multiplicative_subgroups(f)) {
            auto g = make_affine(f, hvals);
            auto act = std::make_shared<KernelAction>(GroupPtr(g));
            auto family = frobenius_complements(act);
            BaseSet base = detail::search_base(act, family);
            for (const auto& h : family.members) {
                auto inst = make_hssp_oracle(act, h);
                lift_hssp_to_hsp(inst, base, true);  // throws BadBase on any pair
                ++instances;
            }
        }
    }
    r.pass = instances > 0;
    r.detail = std::to_string(instances) + " lifted instances verified pairwise";
    return r;
}

inline CriterionResult criterion_separator_bound() {
    CriterionResult r{2, "separator count bound"};
    long long checked = 0;
    bool ok = true;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto f = field_make(p, k);
        for (const auto& hvals : detail::proper_multiplicative_subgroups(f)) {
            auto g = make_affine(f, hvals);
            auto act = std::make_shared<KernelAction>(GroupPtr(g));
            Subgroup stab = stabilizer(0, *act);
            long long kk = f->q(), hh = stab.size();
            for (long long u = 0; u < kk && ok; ++u)
                for (long long v = u + 1; v < kk && ok; ++v) {
                    long long c = count_separators(u, v, act, stab);
                    ok = c >= kk - hh + 1 && 2 * c > kk;
                    ++checked;
                }
        }
    }
    r.pass = ok;
    r.detail = std::to_string(checked) + " pairs checked";
    return r;
}

inline CriterionResult criterion_random_base(bool quick) {
    CriterionResult r{3, "randomized base failure rate"};
    int trials = quick ? 60 : 200;
    bool ok = true;
    std::ostringstream det;
    auto run = [&](const FieldPtr& f, const std::vector<int>& hvals, double eps) {
        auto g = make_affine(f, hvals);
        auto act = std::make_shared<KernelAction>(GroupPtr(g));
        auto family = frobenius_complements(act);
        int fails = 0;
        for (int t = 0; t < trials; ++t) {
            BaseSet b = random_base(act, eps, 1000 + t);
            if (!verify_base(b, family)) ++fails;
        }
        double freq = static_cast<double>(fails) / trials;
        double bound = eps + 3 * std::sqrt(eps * (1 - eps) / trials);
        ok = ok && freq <= bound;
        det << "eps=" << eps << " q=" << f->q() << " freq=" << freq << " bound=" << bound << "; ";
    };
    auto f9 = field_make(3, 2);
    auto f13 = field_make(13, 1);
    std::vector<int> h3{1, 3, 9};  // order-3 subgroup of F_13^*
    for (double eps : {0.25, 0.0625}) {
        run(f9, {f9->one(), f9->neg(f9->one())}, eps);
        run(f13, h3, eps);
    }
    r.pass = ok;
    r.detail = det.str();
    return r;
}

inline CriterionResult criterion_hqpp_chain() {
    CriterionResult r{4, "quadratic equivalence chain"};
    bool ok = true;
    int count = 0;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}, {3, 3}}) {
        auto f = field_make(p, k);
        for (int u = 0; u < f->q() && ok; ++u) {
            auto quad = make_hqpp_oracle(f, u);
            // route 1: symmetry instance, lifted, brute-force coset solver
            auto sym = hqpp_to_hssp(quad);
            BaseSet base = deterministic_base_pm1(sym.action);
            auto hsp = lift_hssp_to_hsp(sym, base, false);
            auto family = frobenius_complements(sym.action);
            Subgroup h = brute_force_hsp(*hsp.oracle, hsp.group, family.members);
            auto back = hssp_to_hqpp([&] {
                ProblemInstance s = sym;
                s.hidden.subgroup = std::make_shared<Subgroup>(h);
                return s;
            }());
            ok = ok && *back.hidden.u == u;
            // route 2: fold the lifted coset oracle back to a quadratic oracle
            auto folded = affine_hsp_to_hqpp(hsp);
            ok = ok && brute_force_hqpp(*folded.oracle, f) == u;
            ++count;
        }
    }
    r.pass = ok;
    r.detail = std::to_string(count) + " hidden points, both routes";
    return r;
}

inline CriterionResult criterion_multivariate_quadratic(bool quick) {
    CriterionResult r{5, "multivariate quadratic recovery"};
    int per_point = quick ? 60 : 500;
    std::mt19937_64 rng(52);
    std::set<std::string> branches;
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
            auto f = field_make(p, k);
            for (int trial = 0; trial < per_point && ok; ++trial) {
                MultiPoly poly(f, n);
                for (int i = 0; i < n; ++i) {
                    std::vector<int> e(n, 0);
                    if (f->q() > 2) {
                        e[i] = 2;
                        int c = static_cast<int>(rng() % f->q());
                        if (c) poly.add_term(e, c);
                        e[i] = 0;
                    }
                    e[i] = 1;
                    int c = static_cast<int>(rng() % f->q());
                    if (c) poly.add_term(e, c);
                    e[i] = 0;
                    for (int j = i + 1; j < n; ++j) {
                        std::vector<int> e2(n, 0);
                        e2[i] = e2[j] = 1;
                        c = static_cast<int>(rng() % f->q());
                        if (c) poly.add_term(e2, c);
                    }
                }
                if (poly.is_zero()) continue;
                auto res = solve_multivariate_quadratic(
                    f, n, [&](const std::vector<int>& x) -> long long { return poly.eval(x); },
                    default_rproc());
                // expected coefficients in solver order, same normalization
                std::vector<int> truth;
                for (int i = 0; i < n; ++i) {
                    std::vector<int> e(n, 0);
                    e[i] = 2;
                    truth.push_back(f->q() == 2 ? 0 : poly.coeff(e));
                }
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        std::vector<int> e(n, 0);
                        e[i] = e[j] = 1;
                        truth.push_back(poly.coeff(e));
                    }
                for (int i = 0; i < n; ++i) {
                    std::vector<int> e(n, 0);
                    e[i] = 1;
                    truth.push_back(poly.coeff(e));
                }
                detail::normalize_first_nonzero(truth, *f);
                ok = res.coeffs == truth && res.r_calls <= 20LL * n * n;
                branches.insert(res.branches.begin(), res.branches.end());
            }
        }
    }
    for (const char* b : {"q2", "sq-cross", "sq-diag", "swap", "one-sq-plain", "one-sq-diag",
                          "one-sq-slope", "cross-only", "linear", "pair"})
        ok = ok && branches.count(b) == 1;
    r.pass = ok;
    std::ostringstream det;
    det << branches.size() << " branches hit";
    r.detail = det.str();
    return r;
}

inline CriterionResult criterion_vandermonde_grid() {
    CriterionResult r{6, "generalized vandermonde grid"};
    bool ok = true;
    int built = 0;
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}})
        for (int j = 1; j <= 3 && ok; ++j)
            for (int d = 1; d <= 4 && ok; ++d) {
                auto f = field_make(p, k);
                long long size = exponent_count(f->q(), j, d);
                if (size > 400) continue;
                auto sys = build_vandermonde(f, j, d);
                ok = static_cast<long long>(sys.exponents.exponents.size()) == size &&
                     static_cast<long long>(sys.points.size()) == size &&
                     mat_rank(sys.matrix) == size;
                ++built;
            }
    ok = ok && exponent_count(2, 2, 2) == 3;
    r.pass = ok;
    r.detail = std::to_string(built) + " systems built full rank";
    return r;
}

inline CriterionResult criterion_hpgp_end_to_end(bool quick) {
    CriterionResult r{7, "multivariate graph recovery"};
    int per_point = quick ? 30 : 200;
    std::mt19937_64 rng(53);
    bool ok = true;
    struct Pt { int n, d, q; };
    for (auto [n, d, q] : std::vector<Pt>{{2, 2, 5}, {2, 3, 7}, {3, 2, 5}, {3, 3, 7}}) {
        auto f = field_make(q, 1);
        auto es = exponent_set(q, n, d);
        long long size = exponent_count(q, n, d);
        for (int trial = 0; trial < per_point && ok; ++trial) {
            MultiPoly poly(f, n);
            for (const auto& e : es.exponents) {
                int c = static_cast<int>(rng() % q);
                if (c) poly.add_term(e, c);
            }
            auto inst = make_hpgp_oracle(f, n, poly);
            inst.d = d;
            auto rep = reduce_hpgp_multivariate(
                inst, [](const LevelSetOracle& o, const FieldPtr& ff, int dd) {
                    return hpgp1_direct_solver(o, ff, dd);
                });
            double want_bits = static_cast<double>(d) * size * std::log2(static_cast<double>(q));
            ok = rep.poly == poly && rep.univariate_solves == size &&
                 std::abs(rep.learned_bits - want_bits) < 1e-9;
        }
    }
    r.pass = ok;
    r.detail = "grid (n,d,q) in {(2,2,5),(2,3,7),(3,2,5),(3,3,7)}";
    return r;
}

inline CriterionResult criterion_hpgp_group_path() {
    CriterionResult r{8, "graph problem through the function graph group"};
    bool ok = true;
    int count = 0;
    for (int q : {3, 5}) {
        auto f = field_make(q, 1);
        for (int c1 = 0; c1 < q && ok; ++c1) {
            MultiPoly poly(f, 1);
            if (c1) poly.add_term({1}, c1);
            auto inst = make_hpgp_oracle(f, 1, poly);
            inst.d = 1;
            auto rep = solve_hpgp1(inst, "A");
            ok = rep.poly == FieldPoly(f, {0, c1});
            ++count;
        }
    }
    r.pass = ok;
    r.detail = std::to_string(count) + " polynomials through path A";
    return r;
}

inline CriterionResult criterion_grover() {
    CriterionResult r{9, "search instance as a symmetry problem"};
    bool ok = true;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}}) {
        auto f = field_make(p, k);
        long long total = 0;
        for (int c = 0; c < f->q() && ok; ++c) {
            auto inst = make_grover_oracle(f, c);
            auto g = std::dynamic_pointer_cast<const AffineGroup>(inst.group);
            // every single generator of the stabilizer recovers c
            for (const auto& e : inst.hidden.subgroup->elements()) {
                if (e.k == 0 && e.h == 0) continue;
                Subgroup single(inst.group, {e});
                ok = ok && grover_recover_c(*g, single) == c;
            }
            total += grover_scan(f, c).queries;
        }
        ok = ok && 2 * total == static_cast<long long>(f->q()) * (f->q() + 1);
    }
    r.pass = ok;
    r.detail = "recovery map and (q+1)/2 scan average";
    return r;
}

inline CriterionResult criterion_galois() {
    CriterionResult r{10, "order-reversing closure suite"};
    bool ok = true;
    long long checked = 0;
    auto f5 = field_make(5, 1);
    auto f7 = field_make(7, 1);
    auto f3 = field_make(3, 1);
    std::vector<ActionPtr> actions{
        std::make_shared<KernelAction>(GroupPtr(make_affine_pm1(f5))),
        std::make_shared<KernelAction>(GroupPtr(make_affine_pm1(f7))),
        std::make_shared<ShiftingAction>(make_function_graph(f3, 1))};
    for (const auto& act : actions) {
        auto subs = all_subgroups(act->group_ptr());
        for (const auto& h : subs) {
            Subgroup cl = closure(h, *act);
            ok = ok && h.subset_of(cl);                    // extensive
            ok = ok && closure(cl, *act) == cl;            // idempotent
            for (const auto& h2 : subs) {  // larger subgroup, coarser orbit partition
                if (!h.subset_of(h2)) continue;
                ok = ok && subgroup_star(h2, *act).coarser_or_equal(subgroup_star(h, *act));
            }
            ++checked;
        }
    }
    r.pass = ok;
    r.detail = std::to_string(checked) + " subgroups across three groups";
    return r;
}

inline std::vector<CriterionResult> run_acceptance(bool quick) {
    std::vector<CriterionResult> out;
    auto timed = [&](CriterionResult (*fn)()) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    auto timed_q = [&](CriterionResult (*fn)(bool)) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn(quick);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    timed(criterion_lifted_promise);
    timed(criterion_separator_bound);
    timed_q(criterion_random_base);
    timed(criterion_hqpp_chain);
    timed_q(criterion_multivariate_quadratic);
    timed(criterion_vandermonde_grid);
    timed_q(criterion_hpgp_end_to_end);
    timed(criterion_hpgp_group_path);
    timed(criterion_grover);
    timed(criterion_galois);
    return out;
}

}  // namespace hssp
