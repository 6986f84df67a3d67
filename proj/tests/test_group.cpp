#include <catch2/catch_amalgamated.hpp>

#include "hssp/group.hpp"
#include "hssp/strong_base.hpp"

using namespace hssp;

namespace {

std::shared_ptr<const AffineGroup> aff7_pm1() {
    auto f = field_make(7, 1);
    return make_affine_pm1(f);
}

}  // namespace

TEST_CASE("affine group structure") {
    auto g = aff7_pm1();
    REQUIRE(g->k_size() == 7);
    REQUIRE(g->h_size() == 2);
    REQUIRE(g->order() == 14);
    CHECK(g->verify_semidirect());
    CHECK(g->h_value(0) == 1);
    CHECK(g->h_value(1) == 6);

    // (b,a)(b',a') = (b + a b', a a')
    auto f = g->field();
    GroupElem x = g->make(1, 6), y = g->make(3, 6);
    GroupElem xy = g->mul(x, y);
    CHECK(xy.k == f->add(1, f->mul(6, 3)));
    CHECK(g->h_value(xy.h) == 1);
    CHECK(g->mul(x, g->inv(x)) == g->identity());

    CHECK_THROWS_AS(make_affine(f, {1, 3}), DomainMismatchError);
    CHECK_THROWS_AS(make_affine(f, {0, 1}), DomainMismatchError);
}

TEST_CASE("kernel action on affine group") {
    auto g = aff7_pm1();
    auto act = std::make_shared<KernelAction>(g);
    REQUIRE(act->domain_size() == 7);
    // g = (1, -1): x -> -x + 1, so 3 -> -2 = 5
    GroupElem e = g->make(1, 6);
    CHECK(act->apply(e, 3) == 5);
    CHECK(act->verify_axioms());

    auto full = make_full_affine(g->field());
    auto fact = std::make_shared<KernelAction>(full);
    CHECK(fact->verify_axioms());
}

TEST_CASE("orbit and stabilizer in affine groups") {
    auto g = aff7_pm1();
    auto act = std::make_shared<KernelAction>(g);
    // H_3 = {(0,1),(6,-1)}: fixes 3, orbit of 1 is {1, 5}
    Subgroup h3(g, {g->make(6, 6)});
    REQUIRE(h3.size() == 2);
    CHECK(orbit(h3, 1, *act) == std::set<long long>{1, 5});
    CHECK(orbit(h3, 3, *act) == std::set<long long>{3});

    auto f5 = field_make(5, 1);
    auto full5 = make_full_affine(f5);
    auto a5 = std::make_shared<KernelAction>(full5);
    Subgroup st = stabilizer(0, *a5);
    CHECK(st.size() == 4);
    for (const auto& e : st.elements()) CHECK(e.k == 0);
}

TEST_CASE("galois connection on affine groups") {
    auto g = aff7_pm1();
    auto act = std::make_shared<KernelAction>(g);
    Subgroup h3(g, {g->make(6, 6)});
    Partition pi = subgroup_star(h3, *act);
    CHECK(pi.class_count() == 4);  // {3}, {1,5}, {2,4}, {0,6}
    CHECK(pi.class_id(1) == 1);
    CHECK(pi.class_id(5) == 1);
    CHECK(pi.class_id(3) == 3);
    Subgroup back = partition_star(pi, *act);
    CHECK(back == h3);
    CHECK(is_closed(h3, *act));
}

TEST_CASE("galois connection properties hold exhaustively") {
    auto f5 = field_make(5, 1);
    auto g = make_affine(f5, {1, 4});
    auto act = std::make_shared<KernelAction>(GroupPtr(g));
    auto subs = all_subgroups(GroupPtr(g));
    REQUIRE(subs.size() >= 4);
    for (const auto& h : subs) {
        Subgroup cl = closure(h, *act);
        CHECK(h.subset_of(cl));                       // extensivity
        CHECK(closure(cl, *act) == cl);               // idempotence
        // monotonicity of star maps: H <= H' implies H'* coarser-or-equal H*... as refinement
        for (const auto& h2 : subs) {
            if (!h.subset_of(h2)) continue;
            Partition p1 = subgroup_star(h, *act);
            Partition p2 = subgroup_star(h2, *act);
            CHECK(p2.coarser_or_equal(p1));
        }
    }
    // adjunction: H <= pi* iff pi coarser-or-equal H*
    for (const auto& h : subs) {
        Partition hstar = subgroup_star(h, *act);
        for (const auto& h2 : subs) {
            Partition pi = subgroup_star(h2, *act);
            bool lhs = h.subset_of(partition_star(pi, *act));
            bool rhs = pi.coarser_or_equal(hstar);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("function graph group law") {
    auto f5 = field_make(5, 1);
    auto fg = make_function_graph(f5, 2);
    REQUIRE(fg->k_size() == 125);
    REQUIRE(fg->h_size() == 5);
    CHECK(fg->verify_semidirect());

    // (Q1,t1)(Q2,t2) = (Q1 + a_{t1} Q2, t1 + t2)
    FieldPoly q1(f5, {0, 0, 1});  // x^2
    FieldPoly q2(f5, {1, 2, 0});  // 2x + 1
    GroupElem a = fg->make(q1, 1), b = fg->make(q2, 3);
    GroupElem ab = fg->mul(a, b);
    CHECK(ab.h == 4);
    FieldPoly expect = q1.add(q2.shift(1));
    CHECK(ab.k == fg->code_of(expect));
}

TEST_CASE("shifting action") {
    auto f5 = field_make(5, 1);
    auto fg = make_function_graph(f5, 2);
    auto act = std::make_shared<ShiftingAction>(fg);
    REQUIRE(act->domain_size() == 25);
    // (x^2, 1) ∘ (2, 0) = (3, 0 + 3^2) = (3, 4)
    FieldPoly q(f5, {0, 0, 1});
    GroupElem g = fg->make(q, 1);
    CHECK(act->apply(g, act->encode_point(2, 0)) == act->encode_point(3, 4));
    CHECK(act->verify_axioms());
}

TEST_CASE("standard complements of function graph groups") {
    auto f5 = field_make(5, 1);
    auto fg = make_function_graph(f5, 2);
    auto act = std::make_shared<ShiftingAction>(fg);
    FieldPoly q(f5, {0, 0, 1});  // x^2

    // a_{Q,1} = (Q - a_1 Q, 1) = (2x - 1, 1) for Q = x^2
    GroupElem a1 = fg_a_qt(*fg, q, 1);
    CHECK(fg->poly_of(a1.k) == FieldPoly(f5, {4, 2}));
    CHECK(a1.h == 1);

    // one-parameter group: a_{Q,s} a_{Q,t} = a_{Q,s+t}
    for (int s = 0; s < 5; ++s)
        for (int t = 0; t < 5; ++t) {
            GroupElem prod = fg->mul(fg_a_qt(*fg, q, s), fg_a_qt(*fg, q, t));
            CHECK(prod == fg_a_qt(*fg, q, f5->add(s, t)));
        }

    Subgroup aq = fg_conjugate_complement(fg, q);
    CHECK(aq.size() == 5);
    CHECK(is_closed(aq, *act));
    // A_Q stabilizes the graph of Q pointwise as a set: orbit of (x, Q(x)) stays on the graph
    for (int x = 0; x < 5; ++x)
        for (long long pt : orbit(aq, act->encode_point(x, q.eval(x)), *act)) {
            auto [px, py] = act->decode_point(pt);
            CHECK(py == q.eval(px));
        }
    // conjugation: A_Q = (Q,0) A_0 (Q,0)^-1
    Subgroup a0 = fg_conjugate_complement(fg, FieldPoly(f5));
    GroupElem shift = fg->make(q, 0);
    CHECK(a0.conjugate(shift) == aq);
}

TEST_CASE("Z_p^m semidirect Z_p group") {
    // p = 3, m = 2, A = [[1,1],[0,1]] (a transvection, order 3)
    auto g = make_zpmzp(3, 2, {{1, 1}, {0, 1}});
    REQUIRE(g->k_size() == 9);
    REQUIRE(g->h_size() == 3);
    CHECK(g->verify_semidirect());
    std::vector<int> v{1, 2};
    // A v = (1*1 + 1*2, 2) = (0, 2)
    CHECK(g->decode_vec(g->twist(1, g->encode_vec(v))) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(make_zpmzp(4, 2, {{1, 1}, {0, 1}}), NotPrimeError);
    CHECK_THROWS_AS(make_zpmzp(3, 2, {{0, 1}, {1, 1}}), DomainMismatchError);
}

TEST_CASE("separators in Frobenius groups") {
    auto f7 = field_make(7, 1);
    auto g = make_affine(f7, {1, 2, 4});  // H = squares, index 2
    auto act = std::make_shared<KernelAction>(GroupPtr(g));
    Subgroup comp = stabilizer(0, *act);
    REQUIRE(comp.size() == 3);

    long long ks = g->k_size(), hs = comp.size();
    for (long long u = 0; u < ks; ++u)
        for (long long v = u + 1; v < ks; ++v) {
            long long c = count_separators(u, v, act, comp);
            CHECK(c >= ks - hs + 1);   // the counting bound
            CHECK(2 * c > ks);         // majority consequence
        }
    CHECK_THROWS_AS(separates(0, 2, 2, act, comp), DomainMismatchError);
}

TEST_CASE("strong base verification") {
    auto f7 = field_make(7, 1);
    auto g = make_affine_pm1(f7);
    auto act = std::make_shared<KernelAction>(GroupPtr(g));
    auto fam = frobenius_complements(act);
    CHECK(fam.members.size() == 7);

    // singletons never separate everything in Aff({±1}): {m} fails
    CHECK_FALSE(verify_base(BaseSet{act, {0}}, fam));
    // but a generic pair works
    BaseSet pair = deterministic_base_pm1(act);
    REQUIRE(pair.points.size() == 2);
    CHECK(verify_base(pair, fam));
    // cross-check the simplified criterion against the full definition
    for (const auto& h : fam.members) {
        CHECK(verify_base_full(pair, h));
        CHECK_FALSE(verify_base_full(BaseSet{act, {0}}, h));
    }
}

TEST_CASE("randomized strong bases") {
    auto f11 = field_make(11, 1);
    auto g = make_affine(f11, {1, 3, 9, 5, 4});  // H of order 5
    auto act = std::make_shared<KernelAction>(GroupPtr(g));
    auto fam = frobenius_complements(act);
    int l = random_base_size(11, 0.125);
    CHECK(l == static_cast<int>(std::ceil(std::log2(55.0) + 3)));
    int hits = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        BaseSet b = random_base(act, 0.125, s);
        if (verify_base(b, fam)) ++hits;
    }
    CHECK(hits >= 18);  // failure rate <= 1/8 per trial

    // sharply 2-transitive: full affine group admits no small base
    auto full = make_full_affine(f11);
    auto fact = std::make_shared<KernelAction>(GroupPtr(full));
    CHECK_THROWS_AS(random_base(fact, 0.125, 1), SharplyTwoTransitiveError);
}

TEST_CASE("function graph point bases") {
    auto f5 = field_make(5, 1);
    auto fg = make_function_graph(f5, 2);
    BaseSet b = fg_point_base(fg);
    REQUIRE(b.points.size() == 3);
    SubgroupFamily fam = standard_complements(fg);
    CHECK(fam.members.size() == 125);
    CHECK(verify_base(b, fam));
    // d points are not enough: x(x-1)(x-2)... no, degree bound 2, so 2 points
    BaseSet short_b{b.action, {b.points[0], b.points[1]}};
    CHECK_FALSE(verify_base(short_b, fam));

    auto f2 = field_make(2, 1);
    CHECK_THROWS_AS(fg_point_base(make_function_graph(f2, 2)), FieldTooSmallError);
    CHECK_THROWS_AS(fg_point_base(fg, 2), NoPolynomialSizeBaseError);
}
