#include <catch2/catch_amalgamated.hpp>

#include "hssp/reduction.hpp"

using namespace hssp;

TEST_CASE("lifted oracle solves the symmetry instance as a coset instance") {
    auto f7 = field_make(7, 1);
    auto g = make_affine_pm1(f7);
    GroupPtr gp(g);
    auto act = std::make_shared<KernelAction>(gp);

    Subgroup h3(gp, {g->make(f7->add(3, 3), 6)});
    auto inst = make_hssp_oracle(act, h3);
    BaseSet base = deterministic_base_pm1(act);
    auto hsp = lift_hssp_to_hsp(inst, base);  // exhaustive promise check inside

    auto family = frobenius_complements(act);
    CHECK(brute_force_hsp(*hsp.oracle, gp, family.members) == h3);

    // one lifted query costs |base| inner queries
    inst.oracle->reset_count();
    hsp.oracle->reset_count();
    hsp.oracle->query(0);
    CHECK(hsp.oracle->query_count() == 1);
    CHECK(inst.oracle->query_count() == static_cast<long long>(base.points.size()));

    // a single point never separates the reflections
    BaseSet weak{act, {0}};
    CHECK_THROWS_AS(lift_hssp_to_hsp(inst, weak), BadBaseError);
}

TEST_CASE("quadratic and affine symmetry instances are the same oracle") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 2}, {3, 3}}) {
        auto f = field_make(p, k);
        for (int u = 0; u < f->q(); ++u) {
            auto quad = make_hqpp_oracle(f, u);
            auto sym = hqpp_to_hssp(quad);
            CHECK(validate_promise(sym));
            CHECK(brute_force_hssp(*sym.oracle, sym.action) == *sym.hidden.subgroup);

            auto back = hssp_to_hqpp(sym);
            CHECK(*back.hidden.u == u);
            CHECK(brute_force_hqpp(*back.oracle, f) == u);

            // full chain: symmetry -> lifted cosets -> folded quadratic
            BaseSet base = deterministic_base_pm1(sym.action);
            auto hsp = lift_hssp_to_hsp(sym, base);
            auto folded = affine_hsp_to_hqpp(hsp);
            CHECK(*folded.hidden.u == u);
            CHECK(brute_force_hqpp(*folded.oracle, f) == u);
        }
    }
    auto f2 = field_make(2, 1);
    CHECK_THROWS_AS(make_hqpp_oracle(f2, 0), EvenCharacteristicError);
}

TEST_CASE("folded oracle identifies u through the pair structure") {
    auto f7 = field_make(7, 1);
    auto g = make_affine_pm1(f7);
    Subgroup h3(GroupPtr(g), {g->make(f7->add(3, 3), 6)});
    auto hsp = make_hsp_oracle(GroupPtr(g), h3);
    auto folded = affine_hsp_to_hqpp(hsp);
    // (b,1) and (2u-b,-1) sit in the same right coset, so the fold pairs b with 2u-b
    CHECK(folded.oracle->query(1) == folded.oracle->query(f7->sub(6, 1)));
    CHECK(brute_force_hqpp(*folded.oracle, f7) == 3);
    CHECK(*folded.hidden.u == 3);
}

TEST_CASE("univariate graph instance through the function graph group") {
    auto f3 = field_make(3, 1);
    // exhaustive over all degree <= 1 polynomials without constant term
    for (int c1 = 0; c1 < 3; ++c1) {
        MultiPoly q(f3, 1);
        if (c1) q.add_term({1}, c1);
        auto inst = make_hpgp_oracle(f3, 1, q);
        inst.d = 1;
        auto rep = solve_hpgp1(inst, "both");
        CHECK(rep.poly == FieldPoly(f3, {0, c1}));
    }

    auto f5 = field_make(5, 1);
    MultiPoly q(f5, 1);
    q.add_term({2}, 1);
    auto inst = make_hpgp_oracle(f5, 1, q);
    auto a = solve_hpgp1(inst, "A");
    auto b = solve_hpgp1(inst, "B");
    CHECK(a.poly == FieldPoly(f5, {0, 0, 1}));
    CHECK(a.poly == b.poly);
    // the direct scan is cheap; the group route queries the whole group
    CHECK(b.queries <= 1 + 2 * 5);

    auto hsp = hpgp1_to_hsp(inst);  // verifies the base promise exhaustively
    CHECK(hsp.family == Family::HSP);
    auto fg = std::dynamic_pointer_cast<const FunctionGraphGroup>(hsp.group);
    REQUIRE(fg);
    CHECK(brute_force_hsp(*hsp.oracle, hsp.group, standard_complements(fg).members) ==
          *hsp.hidden.subgroup);
}

TEST_CASE("polynomial recovery from a standard complement") {
    auto f5 = field_make(5, 1);
    auto fg = make_function_graph(f5, 2);

    // complement of Q = x^2 + 1; recovery drops the constant
    FieldPoly q(f5, {1, 0, 1});
    std::vector<GroupElem> gens{fg_a_qt(*fg, q, 1)};
    CHECK(recover_poly_from_complement(fg, gens) == FieldPoly(f5, {0, 0, 1}));

    // the zero polynomial from the pure shift subgroup
    CHECK(recover_poly_from_complement(fg, {fg_a_qt(*fg, FieldPoly(f5), 1)}).is_zero());

    // identity alone generates nothing
    CHECK_THROWS_AS(recover_poly_from_complement(fg, {fg->identity()}), NotGeneratingError);
    // two elements with equal shift components but different polynomial parts
    std::vector<GroupElem> mixed{fg_a_qt(*fg, q, 1), fg_a_qt(*fg, FieldPoly(f5), 1)};
    CHECK_THROWS_AS(recover_poly_from_complement(fg, mixed), NotGeneratingError);
}

TEST_CASE("twisted product group instances") {
    auto g = make_zpmzp(3, 2, {{1, 1}, {0, 1}});
    CHECK(zpmzp_degree_bound(*g) == 2);

    for (int v0 = 0; v0 < 3; ++v0)
        for (int v1 = 0; v1 < 3; ++v1) {
            std::vector<int> v{v0, v1};
            auto inst = make_zpmzp_oracle(g, v);
            CHECK(validate_promise(inst));
            auto rep = solve_zpmzp(inst);
            CHECK(rep.v == v);
            CHECK(rep.d == 2);
            // coordinate maps agree with the prefix sums everywhere
            for (int t = 0; t < 3; ++t) {
                auto qt = zpmzp_qv(*g, v, t);
                for (int i = 0; i < 2; ++i) CHECK(rep.coord_polys[i].eval(t) == qt[i]);
            }
        }

    // identity twist: Q_v(t) = t v is linear
    auto gid = make_zpmzp(5, 2, {{1, 0}, {0, 1}});
    CHECK(zpmzp_degree_bound(*gid) == 1);
    auto inst = make_zpmzp_oracle(gid, {2, 3});
    auto rep = solve_zpmzp(inst);
    CHECK(rep.v == std::vector<int>{2, 3});
    CHECK(rep.coord_polys[0] == FieldPoly(field_make(5, 1), {0, 2}));

    // m = 3 Jordan block over p = 5: degree 3 coordinate maps
    auto g3 = make_zpmzp(5, 3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(zpmzp_degree_bound(*g3) == 3);
    auto inst3 = make_zpmzp_oracle(g3, {1, 4, 2});
    auto rep3 = solve_zpmzp(inst3);
    CHECK(rep3.v == std::vector<int>{1, 4, 2});
}
