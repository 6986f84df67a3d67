#include <catch2/catch_amalgamated.hpp>

#include "hssp/solvers.hpp"

using namespace hssp;

TEST_CASE("brute force hsp identification") {
    auto f7 = field_make(7, 1);
    auto g = make_affine_pm1(f7);
    GroupPtr gp(g);

    // constant oracle, family = {G}
    TableOracle constant(std::vector<long long>(g->order(), 0));
    Subgroup full = full_subgroup(gp);
    CHECK(brute_force_hsp(constant, gp, {full}) == full);

    std::vector<Subgroup> family;
    for (int u = 0; u < 7; ++u)
        family.emplace_back(gp, std::vector<GroupElem>{g->make(f7->add(u, u), 6)});
    auto inst = make_hsp_oracle(gp, family[4]);
    CHECK(brute_force_hsp(*inst.oracle, gp, family) == family[4]);

    ScrambledOracle scrambled(inst.oracle, 7);
    CHECK(brute_force_hsp(scrambled, gp, family) == family[4]);

    std::vector<long long> odd_labels(g->order());
    for (long long i = 0; i < g->order(); ++i) odd_labels[i] = i / 3;
    TableOracle bad(std::move(odd_labels));
    CHECK_THROWS_AS(brute_force_hsp(bad, gp, family), NoConsistentSubgroupError);
}

TEST_CASE("brute force hssp identification") {
    auto f7 = field_make(7, 1);
    auto g = make_affine_pm1(f7);
    auto act = std::make_shared<KernelAction>(GroupPtr(g));

    std::vector<long long> discrete(7);
    for (int i = 0; i < 7; ++i) discrete[i] = i;
    TableOracle inj(std::move(discrete));
    CHECK(brute_force_hssp(inj, act) == trivial_subgroup(GroupPtr(g)));

    // every closed subgroup round-trips through its orbit oracle
    for (const auto& h : all_subgroups(GroupPtr(g))) {
        if (!is_closed(h, *act)) continue;
        auto inst = make_hssp_oracle(act, h);
        CHECK(brute_force_hssp(*inst.oracle, act) == h);
    }

    // symmetry subgroup of a quadratic level-set oracle
    auto f9 = field_make(3, 2);
    auto g9 = make_affine_pm1(f9);
    auto act9 = std::make_shared<KernelAction>(GroupPtr(g9));
    auto hq = make_hqpp_oracle(f9, 2);
    Subgroup h2(GroupPtr(g9), {g9->make(f9->add(2, 2), f9->neg(f9->one()))});
    CHECK(brute_force_hssp(*hq.oracle, act9) == h2);
}

TEST_CASE("grover instance solved by symmetry") {
    auto f5 = field_make(5, 1);
    for (int c = 0; c < 5; ++c) {
        auto inst = make_grover_oracle(f5, c);
        Subgroup h = brute_force_hssp(*inst.oracle, inst.action);
        CHECK(h == *inst.hidden.subgroup);
        auto g = std::dynamic_pointer_cast<const AffineGroup>(inst.group);
        CHECK(grover_recover_c(*g, h) == c);
    }
}

TEST_CASE("simulated coset sampling") {
    auto f5 = field_make(5, 1);

    // H = everything: only the trivial character remains
    CosetSampler all(f5, 2, {{1, 0}, {0, 1}}, 1);
    CHECK(all.perp_rank() == 0);
    CHECK(all.sample() == std::vector<int>{0, 0});

    CosetSampler s(f5, 2, {{1, 2}}, 42);
    CHECK(s.perp_rank() == 1);
    std::vector<std::vector<int>> samples;
    for (int i = 0; i < 8; ++i) {
        auto v = s.sample();
        // orthogonal to (1,2)
        CHECK((v[0] + 2 * v[1]) % 5 == 0);
        samples.push_back(v);
    }
    auto h = reconstruct_from_samples(f5, 2, samples);
    REQUIRE(h.size() == 1);
    // basis vector spans <(1,2)>
    int scale = h[0][0] != 0 ? f5->div(1, h[0][0]) : 0;
    REQUIRE(scale != 0);
    CHECK(f5->mul(h[0][0], scale) == 1);
    CHECK(f5->mul(h[0][1], scale) == 2);

    // reconstruction succeeds almost always with 4 log2|G| samples
    int log_cnt = static_cast<int>(4 * std::ceil(std::log2(25.0)));
    int good = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        CosetSampler t(f5, 2, {{1, 2}}, seed);
        std::vector<std::vector<int>> batch;
        for (int i = 0; i < log_cnt; ++i) batch.push_back(t.sample());
        auto basis = reconstruct_from_samples(f5, 2, batch);
        if (basis.size() == 1 && basis[0][1] == f5->mul(2, basis[0][0])) ++good;
    }
    CHECK(good >= 990);
}

namespace {

QuotientReport run_r(const FieldPtr& f, int a, int b) {
    const Field& F = *f;
    std::vector<long long> labels(F.q());
    for (int x = 0; x < F.q(); ++x)
        labels[x] = F.add(F.mul(a, F.mul(x, x)), F.mul(b, x));
    auto canon = Partition::from_labels(labels).classof();
    return procedure_R(f, [&](int x) { return canon[x]; });
}

}  // namespace

TEST_CASE("quotient procedure") {
    auto f7 = field_make(7, 1);
    auto rep = run_r(f7, 1, 0);
    CHECK_FALSE(rep.azero);
    CHECK(*rep.ratio == 0);

    rep = run_r(f7, 0, 3);
    CHECK(rep.azero);
    CHECK_FALSE(rep.ratio.has_value());

    auto f5 = field_make(5, 1);
    rep = run_r(f5, 1, 4);
    CHECK(*rep.ratio == 4);

    // exhaustive agreement with ground truth
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
        auto f = field_make(p, k);
        for (int a = 0; a < f->q(); ++a)
            for (int b = 0; b < f->q(); ++b) {
                if (a == 0 && b == 0) continue;
                auto r = run_r(f, a, b);
                if (a == 0) {
                    CHECK(r.azero);
                } else {
                    REQUIRE(r.ratio.has_value());
                    CHECK(*r.ratio == f->div(b, a));
                }
            }
    }

    CHECK_THROWS_AS(procedure_R(field_make(2, 1), [](int) { return 0LL; }),
                    EvenCharacteristicError);
    // a three-element class is not a quadratic or linear pattern
    auto garbage = [](int x) { return static_cast<long long>(x / 3); };
    CHECK_THROWS_AS(procedure_R(f7, garbage), PromiseViolationError);
}

TEST_CASE("direct univariate graph solver") {
    auto f5 = field_make(5, 1);
    MultiPoly q(f5, 1);
    q.add_term({2}, 1);
    auto inst = make_hpgp_oracle(f5, 1, q);
    FieldPoly qq = hpgp1_direct_solver(*inst.oracle, f5, 2);
    CHECK(qq == FieldPoly(f5, {0, 0, 1}));

    MultiPoly zero(f5, 1);
    auto zinst = make_hpgp_oracle(f5, 1, zero);
    CHECK(hpgp1_direct_solver(*zinst.oracle, f5, 2).is_zero());

    auto f7 = field_make(7, 1);
    MultiPoly cubic(f7, 1);
    cubic.add_term({3}, 2);
    cubic.add_term({1}, 1);
    auto cinst = make_hpgp_oracle(f7, 1, cubic);
    CHECK(hpgp1_direct_solver(*cinst.oracle, f7, 3) == FieldPoly(f7, {0, 1, 0, 2}));
}

TEST_CASE("grover scan query counts") {
    auto f5 = field_make(5, 1);
    CHECK(grover_scan(f5, 4).queries == 5);
    CHECK(grover_scan(f5, 0).queries == 1);
    long long total = 0;
    for (int c = 0; c < 5; ++c) {
        auto rep = grover_scan(f5, c);
        CHECK(rep.c == c);
        total += rep.queries;
    }
    CHECK(total == 5 * (5 + 1) / 2);

    std::vector<int> order{4, 3, 2, 1, 0};
    CHECK(grover_scan(f5, 4, &order).queries == 1);
}
