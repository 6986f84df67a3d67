#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hssp/field.hpp"
#include "hssp/linalg.hpp"
#include "hssp/poly.hpp"

using namespace hssp;

TEST_CASE("field construction") {
    auto f2 = field_make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<int>{0, 1});

    // smallest lex irreducible over F_3 in degree 2 is x^2 + 1
    auto f9 = field_make(3, 2);
    CHECK(f9->q() == 9);
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});

    CHECK_THROWS_AS(field_make(4, 1), NotPrimeError);
    CHECK_THROWS_AS(field_make(2, 17), TooLargeError);

    // determinism
    auto f9b = field_make(3, 2);
    CHECK(f9->modulus() == f9b->modulus());
}

TEST_CASE("basic arithmetic") {
    auto f7 = field_make(7, 1);
    CHECK(f7->inv(6) == 6);  // 6*6 = 36 = 1 mod 7
    for (int x = 0; x < 7; ++x) CHECK(f7->add(x, f7->neg(x)) == 0);

    auto f9 = field_make(3, 2);
    // x has code 3; with modulus x^2+1, x*x = -1 = 2
    CHECK(f9->mul(3, 3) == 2);
    CHECK_THROWS_AS(f9->inv(0), DivisionByZeroError);
}

static void check_field_axioms(const FieldPtr& f) {
    const Field& F = *f;
    if (F.q() <= 49) {
        for (int a = 0; a < F.q(); ++a)
            for (int b = 0; b < F.q(); ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < F.q(); ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
                // Frobenius
                CHECK(F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p())));
            }
        for (int a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == F.one());
    } else {
        std::mt19937 rng(7);
        for (int t = 0; t < 1000; ++t) {
            int a = static_cast<int>(rng() % F.q()), b = static_cast<int>(rng() % F.q());
            int c = static_cast<int>(rng() % F.q());
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("field axioms across a grid") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {5, 2}, {2, 8}, {251, 1}}) {
        check_field_axioms(field_make(p, k));
    }
}

TEST_CASE("polynomial evaluation") {
    auto f7 = field_make(7, 1);
    // P_u with u = 3: x^2 - 6x, at x = 1 gives 1 - 6 = 2
    FieldPoly p(f7, {0, f7->neg(6), 1});
    CHECK(p.eval(1) == 2);
    FieldPoly zero(f7);
    CHECK(zero.eval(5) == 0);

    MultiPoly m(f7, 2);
    m.add_term({1, 2}, 1);
    CHECK(m.eval({2, 3}) == 4);  // 2 * 9 mod 7
}

TEST_CASE("polynomial shift") {
    auto f5 = field_make(5, 1);
    // Q = x^2, a_1 Q = (x-1)^2 = x^2 - 2x + 1; Q - a_1 Q = 2x - 1
    FieldPoly q(f5, {0, 0, 1});
    FieldPoly diff = q.sub(q.shift(1));
    CHECK(diff == FieldPoly(f5, {4, 2}));
}

TEST_CASE("lagrange interpolation") {
    auto f7 = field_make(7, 1);
    FieldPoly sq = lagrange_interpolate(f7, {{0, 0}, {1, 1}, {2, 4}}, 2);
    CHECK(sq == FieldPoly(f7, {0, 0, 1}));

    FieldPoly c = lagrange_interpolate(f7, {{0, 3}, {1, 3}, {2, 3}}, 2);
    CHECK(c == FieldPoly(f7, {3}));

    CHECK_THROWS_AS(lagrange_interpolate(f7, {{0, 0}, {0, 1}}, 1), DuplicateAbscissaError);
    CHECK_THROWS_AS(lagrange_interpolate(f7, {{0, 0}}, 1), TooFewPointsError);
}

TEST_CASE("interpolation round trip") {
    std::mt19937 rng(11);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{7, 1}, {3, 2}, {11, 1}}) {
        auto f = field_make(p, k);
        for (int trial = 0; trial < 50; ++trial) {
            int d = static_cast<int>(rng() % 4);
            std::vector<int> coeffs(d + 1);
            for (int& c : coeffs) c = static_cast<int>(rng() % f->q());
            FieldPoly poly(f, coeffs);
            std::vector<std::pair<int, int>> pts;
            for (int x = 0; x <= d; ++x) pts.push_back({x, poly.eval(x)});
            CHECK(lagrange_interpolate(f, pts, d) == poly);
        }
    }
}

TEST_CASE("multipoly reduction mod x^q - x") {
    auto f2 = field_make(2, 1);
    MultiPoly m(f2, 1);
    m.add_term({2}, 1);  // x^2 reduces to x
    CHECK(m.coeff({1}) == 1);
    m.add_term({1}, 1);  // now cancels
    CHECK(m.is_zero());
}

TEST_CASE("linear algebra") {
    auto f5 = field_make(5, 1);
    MatrixFq id(f5, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(mat_solve(id, {1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(mat_rank(id) == 3);
    CHECK(!mat_kernel_vector(id).has_value());

    MatrixFq z(f5, 1, 2);
    auto kv = mat_kernel_vector(z);
    REQUIRE(kv.has_value());
    CHECK(z.apply(*kv) == std::vector<int>{0});
    CHECK(*kv != std::vector<int>(2, 0));

    auto f7 = field_make(7, 1);
    MatrixFq v(f7, 2, 2);
    v.at(0, 0) = 1; v.at(0, 1) = 1;
    v.at(1, 0) = 2; v.at(1, 1) = 4;
    CHECK(mat_rank(v) == 2);
}

TEST_CASE("linear algebra properties") {
    std::mt19937 rng(3);
    auto f9 = field_make(3, 2);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        MatrixFq m(f9, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<int>(rng() % 9);
        auto kv = mat_kernel_vector(m);
        if (kv) {
            CHECK(m.apply(*kv) == std::vector<int>(rows, 0));
            CHECK(*kv != std::vector<int>(cols, 0));
        } else {
            CHECK(mat_rank(m) == cols);
        }
        // consistent solve: y = M x for random x
        std::vector<int> x(cols);
        for (int& xi : x) xi = static_cast<int>(rng() % 9);
        auto y = m.apply(x);
        if (mat_rank(m) == cols) {
            auto z = mat_solve(m, y);
            CHECK(m.apply(z) == y);
        }
    }
}
