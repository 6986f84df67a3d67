#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hssp/quadratic.hpp"

using namespace hssp;

namespace {

// value oracle for a11 x1^2 + a22 x2^2 + a12 x1 x2 + b1 x1 + b2 x2
std::function<long long(int, int)> plane(const FieldPtr& f, std::array<int, 5> c) {
    return [f, c](int x1, int x2) -> long long {
        const Field& F = *f;
        int v = F.mul(c[0], F.mul(x1, x1));
        v = F.add(v, F.mul(c[1], F.mul(x2, x2)));
        v = F.add(v, F.mul(c[2], F.mul(x1, x2)));
        v = F.add(v, F.mul(c[3], x1));
        return F.add(v, F.mul(c[4], x2));
    };
}

std::array<int, 5> normalized(const FieldPtr& f, std::array<int, 5> c) {
    for (int x : c)
        if (x != 0) {
            int s = f->inv(x);
            for (int& y : c) y = f->mul(y, s);
            break;
        }
    return c;
}

}  // namespace

TEST_CASE("bivariate recovery on fixed instances") {
    auto f5 = field_make(5, 1);
    auto r = solve_bivariate_quadratic(f5, plane(f5, {1, 0, 0, 0, 0}), default_rproc());
    CHECK(r.v == std::array<int, 5>{1, 0, 0, 0, 0});

    auto f7 = field_make(7, 1);
    r = solve_bivariate_quadratic(f7, plane(f7, {2, 0, 0, 0, 3}), default_rproc());
    CHECK(r.v == std::array<int, 5>{1, 0, 0, 0, 5});

    auto f2 = field_make(2, 1);
    r = solve_bivariate_quadratic(f2, plane(f2, {0, 0, 1, 1, 1}), default_rproc());
    CHECK(r.v == std::array<int, 5>{0, 0, 1, 1, 1});
    CHECK(r.branches.count("q2") == 1);
    CHECK(r.r_calls == 0);

    // x1^2 + x1 vanishes identically over F_2: indistinguishable from zero
    CHECK_THROWS_AS(solve_bivariate_quadratic(f2, plane(f2, {0, 0, 0, 0, 0}), default_rproc()),
                    PromiseViolationError);
    r = solve_bivariate_quadratic(f2, plane(f2, {0, 0, 0, 0, 0}), default_rproc(), true);
    CHECK(r.zero);

    auto f4 = field_make(2, 2);
    CHECK_THROWS_AS(solve_bivariate_quadratic(f4, plane(f4, {1, 0, 0, 0, 0}), default_rproc()),
                    EvenCharacteristicError);

    r = solve_bivariate_quadratic(f7, plane(f7, {0, 0, 0, 2, 3}), default_rproc());
    CHECK(r.v == std::array<int, 5>{0, 0, 0, 1, f7->div(3, 2)});
    CHECK(r.branches.count("linear") == 1);

    CHECK_THROWS_AS(solve_bivariate_quadratic(f7, plane(f7, {0, 0, 0, 0, 0}), default_rproc()),
                    PromiseViolationError);
}

TEST_CASE("bivariate recovery is exhaustive over small odd fields") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}}) {
        auto f = field_make(p, k);
        const Field& F = *f;
        long long worst = 0;
        for (int mask = 1; mask < F.q() * F.q() * F.q() * F.q() * F.q(); ++mask) {
            int m = mask;
            std::array<int, 5> c{};
            for (int i = 0; i < 5; ++i) { c[i] = m % F.q(); m /= F.q(); }
            auto r = solve_bivariate_quadratic(f, plane(f, c), default_rproc());
            REQUIRE(r.v == normalized(f, c));
            worst = std::max(worst, r.r_calls);
        }
        CHECK(worst <= 6);
    }
}

namespace {

std::function<long long(const std::vector<int>&)> poly_query(const MultiPoly& p) {
    return [&p](const std::vector<int>& x) -> long long { return p.eval(x); };
}

// coefficients of p in solver order: diagonal, cross terms (lex), linear
std::vector<int> truth_vector(const FieldPtr& f, int n, const MultiPoly& p) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 2;
        v.push_back(f->q() == 2 ? 0 : p.coeff(e));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[i] = e[j] = 1;
            v.push_back(p.coeff(e));
        }
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        v.push_back(p.coeff(e));
    }
    // match the solver's first-nonzero normalization
    for (int x : v)
        if (x != 0) {
            int s = f->inv(x);
            for (int& y : v) y = f->mul(y, s);
            break;
        }
    return v;
}

}  // namespace

TEST_CASE("multivariate recovery on fixed instances") {
    auto f5 = field_make(5, 1);

    MultiPoly match(f5, 4);  // x1 x2 + x3 x4
    match.add_term({1, 1, 0, 0}, 1);
    match.add_term({0, 0, 1, 1}, 1);
    auto r = solve_multivariate_quadratic(f5, 4, poly_query(match), default_rproc());
    CHECK(r.coeffs == truth_vector(f5, 4, match));
    CHECK(r.branches.count("match4") == 1);

    MultiPoly lone(f5, 3);  // x2 x3 needs the substitute-one restriction
    lone.add_term({0, 1, 1}, 1);
    r = solve_multivariate_quadratic(f5, 3, poly_query(lone), default_rproc());
    CHECK(r.coeffs == truth_vector(f5, 3, lone));
    CHECK(r.branches.count("triple-subst1") == 1);

    auto f7 = field_make(7, 1);
    MultiPoly lin(f7, 3);  // 2 x1 + 5 x3
    lin.add_term({1, 0, 0}, 2);
    lin.add_term({0, 0, 1}, 5);
    r = solve_multivariate_quadratic(f7, 3, poly_query(lin), default_rproc());
    CHECK(r.coeffs == truth_vector(f7, 3, lin));
    CHECK(r.branches.count("linear") == 1);

    auto f2 = field_make(2, 1);
    MultiPoly boolean(f2, 3);  // x1 x2 + x3
    boolean.add_term({1, 1, 0}, 1);
    boolean.add_term({0, 0, 1}, 1);
    r = solve_multivariate_quadratic(f2, 3, poly_query(boolean), default_rproc());
    CHECK(r.coeffs == truth_vector(f2, 3, boolean));
    CHECK(r.r_calls == 0);

    MultiPoly zero(f5, 3);
    CHECK_THROWS_AS(solve_multivariate_quadratic(f5, 3, poly_query(zero), default_rproc()),
                    PromiseViolationError);
    CHECK_THROWS_AS(solve_multivariate_quadratic(f5, 1, poly_query(zero), default_rproc()),
                    ArityMismatchError);
}

TEST_CASE("multivariate recovery on random instances stays within budget") {
    std::mt19937_64 rng(20240817);
    for (int n = 2; n <= 5; ++n) {
        for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
            auto f = field_make(p, k);
            for (int trial = 0; trial < 40; ++trial) {
                MultiPoly poly(f, n);
                bool nonzero = false;
                auto put = [&](std::vector<int> e) {
                    int c = static_cast<int>(rng() % f->q());
                    if (c) nonzero = true;
                    if (c) poly.add_term(std::move(e), c);
                };
                for (int i = 0; i < n; ++i) {
                    std::vector<int> e(n, 0);
                    e[i] = 2;
                    if (f->q() > 2) put(e);
                    e[i] = 1;
                    put(e);
                    for (int j = i + 1; j < n; ++j) {
                        std::vector<int> e2(n, 0);
                        e2[i] = e2[j] = 1;
                        put(e2);
                    }
                }
                if (!nonzero || poly.is_zero()) continue;
                auto r = solve_multivariate_quadratic(f, n, poly_query(poly), default_rproc());
                REQUIRE(r.coeffs == truth_vector(f, n, poly));
                CHECK(r.r_calls <= 20LL * n * n);
            }
        }
    }
}
