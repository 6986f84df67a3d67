// Experiment runner: builds instances, runs the reductions and solvers, and
// prints one JSON record per result line.  Exit codes: 0 ok, 2 promise
// violation, 3 acceptance failure.

#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hssp/acceptance.hpp"
#include "hssp/serialize.hpp"

using namespace hssp;

namespace {

bool g_pretty = false;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HSSP_LAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 12345;
}

int run_verify_galois(const std::string& group_json) {
    ParsedGroup pg = parse_group(Json::parse(group_json));
    if (!pg.action) throw DomainMismatchError("group kind carries no action for this verb");
    if (pg.group->order() > 2000) throw TooLargeError("group order above the desk-scale cap 2000");
    auto subs = all_subgroups(pg.group);
    bool ok = true;
    for (const auto& h : subs) {
        Subgroup cl = closure(h, *pg.action);
        ok = ok && h.subset_of(cl) && closure(cl, *pg.action) == cl;
        for (const auto& h2 : subs)
            if (h.subset_of(h2))
                ok = ok && subgroup_star(h2, *pg.action).coarser_or_equal(subgroup_star(h, *pg.action));
    }
    emit({{"verb", "verify.galois"},
          {"group_order", pg.group->order()},
          {"subgroups", subs.size()},
          {"pass", ok}});
    return ok ? 0 : 2;
}

int run_base(const std::string& mode, const std::string& group_json, double epsilon,
             std::uint64_t seed, int trials, const std::vector<long long>& points) {
    ParsedGroup pg = parse_group(Json::parse(group_json));
    if (!pg.action) throw DomainMismatchError("group kind carries no action for this verb");
    SubgroupFamily family =
        pg.fg ? standard_complements(pg.fg) : frobenius_complements(pg.action);

    if (mode == "random") {
        int fails = 0;
        for (int t = 0; t < trials; ++t) {
            BaseSet b = random_base(pg.action, epsilon, seed + t);
            bool ok = verify_base(b, family);
            if (!ok) ++fails;
            emit({{"verb", "base.random"}, {"trial", t}, {"points", b.points}, {"ok", ok}});
        }
        emit({{"verb", "base.random.summary"},
              {"trials", trials},
              {"failures", fails},
              {"epsilon", epsilon},
              {"size", random_base_size(pg.action->domain_size(), epsilon)}});
        return 0;
    }
    if (mode == "deterministic") {
        BaseSet b = pg.fg ? fg_point_base(pg.fg) : deterministic_base_pm1(pg.action);
        bool ok = verify_base(b, family);
        emit({{"verb", "base.deterministic"}, {"points", b.points}, {"ok", ok}});
        return ok ? 0 : 2;
    }
    if (mode == "verify") {
        BaseSet b{pg.action, points};
        bool ok = verify_base(b, family);
        emit({{"verb", "base.verify"}, {"points", b.points}, {"ok", ok}});
        return ok ? 0 : 2;
    }
    throw DomainMismatchError("unknown base mode: " + mode);
}

int run_separators(const std::string& group_json) {
    ParsedGroup pg = parse_group(Json::parse(group_json));
    if (!pg.action) throw DomainMismatchError("group kind carries no action for this verb");
    Subgroup stab = stabilizer(0, *pg.action);
    long long k = pg.action->domain_size(), h = stab.size();
    bool ok = true;
    for (long long u = 0; u < k; ++u)
        for (long long v = u + 1; v < k; ++v) {
            long long c = count_separators(u, v, pg.action, stab);
            bool bound = c >= k - h + 1 && 2 * c > k;
            ok = ok && bound;
            emit({{"verb", "separators"}, {"u", u}, {"v", v}, {"count", c}, {"bound_ok", bound}});
        }
    emit({{"verb", "separators.summary"}, {"kernel", k}, {"complement", h}, {"all_bounds", ok}});
    return ok ? 0 : 2;
}

int run_solve_hqpp(int q, const std::string& hidden_json, std::uint64_t seed) {
    auto f = field_from_q(q);
    int u;
    if (!hidden_json.empty()) {
        u = Json::parse(hidden_json).at("u").get<int>();
    } else {
        std::mt19937_64 rng(seed);
        u = static_cast<int>(rng() % f->q());
    }
    auto quad = make_hqpp_oracle(f, u);
    if (!validate_promise(quad)) throw PromiseViolationError("oracle fails the level-set promise");

    auto sym = hqpp_to_hssp(quad);
    BaseSet base = deterministic_base_pm1(sym.action);
    auto hsp = lift_hssp_to_hsp(sym, base, false);
    Subgroup h = brute_force_hsp(*hsp.oracle, hsp.group, frobenius_complements(sym.action).members);
    ProblemInstance found = sym;
    found.hidden.subgroup = std::make_shared<Subgroup>(h);
    int u_group = *hssp_to_hqpp(found).hidden.u;

    auto folded = affine_hsp_to_hqpp(hsp);
    int u_fold = brute_force_hqpp(*folded.oracle, f);
    if (u_group != u_fold) throw PromiseViolationError("solution routes disagree");

    emit({{"verb", "solve.hqpp"},
          {"q", q},
          {"u", u_group},
          {"match", u_group == u},
          {"queries", quad.oracle->query_count()}});
    return u_group == u ? 0 : 2;
}

int run_solve_hpp2(int q, int n, const std::string& hidden_json, std::uint64_t seed) {
    auto f = field_from_q(q);
    MultiPoly poly(f, n);
    if (!hidden_json.empty()) {
        poly = poly_from_json(f, Json::parse(hidden_json));
        poly = poly.drop_constant();
    } else {
        std::mt19937_64 rng(seed);
        auto es = exponent_set(f->q(), n, 2);
        for (const auto& e : es.exponents) {
            int c = static_cast<int>(rng() % f->q());
            if (c) poly.add_term(e, c);
        }
    }
    auto inst = make_hpp_oracle(f, n, poly);
    if (!validate_promise(inst)) throw PromiseViolationError("oracle fails the level-set promise");
    const auto& oracle = *inst.oracle;
    const Field& F = *f;
    auto query = [&](const std::vector<int>& x) { return oracle.query(encode_point(F, x)); };
    auto res = solve_multivariate_quadratic(f, n, query, default_rproc());
    emit({{"verb", "solve.hpp2"},
          {"q", q},
          {"n", n},
          {"coeffs", res.coeffs},
          {"branches", std::vector<std::string>(res.branches.begin(), res.branches.end())},
          {"r_calls", res.r_calls},
          {"queries", inst.oracle->query_count()}});
    return 0;
}

int run_solve_hpgp(int q, int n, int d, const std::string& hidden_json, std::uint64_t seed,
                   const std::string& path) {
    auto f = field_from_q(q);
    MultiPoly poly(f, n);
    if (!hidden_json.empty()) {
        poly = poly_from_json(f, Json::parse(hidden_json)).drop_constant();
    } else {
        std::mt19937_64 rng(seed);
        auto es = exponent_set(f->q(), n, d);
        for (const auto& e : es.exponents) {
            int c = static_cast<int>(rng() % f->q());
            if (c) poly.add_term(e, c);
        }
    }
    auto inst = make_hpgp_oracle(f, n, poly);
    inst.d = d;
    if (!validate_promise(inst)) throw PromiseViolationError("oracle fails the level-set promise");

    if (n == 1) {
        auto rep = solve_hpgp1(inst, path);
        emit({{"verb", "solve.hpgp"},
              {"q", q},
              {"n", 1},
              {"d", d},
              {"path", rep.path},
              {"poly", poly_to_json(rep.poly)},
              {"queries", rep.queries}});
        return 0;
    }
    auto rep = reduce_hpgp_multivariate(inst, [](const LevelSetOracle& o, const FieldPtr& ff, int dd) {
        return hpgp1_direct_solver(o, ff, dd);
    });
    auto info = information_ratio(inst);
    emit({{"verb", "solve.hpgp"},
          {"q", q},
          {"n", n},
          {"d", d},
          {"poly", poly_to_json(rep.poly)},
          {"univariate_solves", rep.univariate_solves},
          {"queries", rep.queries},
          {"learned_bits", rep.learned_bits},
          {"lower_bound_bits", info.lower_bound_bits}});
    return 0;
}

int run_vandermonde(int q, int n, int d, const std::string& emit_path) {
    auto f = field_from_q(q);
    auto sys = build_vandermonde(f, n, d);
    int size = static_cast<int>(sys.points.size());
    emit({{"verb", "vandermonde"},
          {"q", q},
          {"n", n},
          {"d", d},
          {"size", size},
          {"rank", mat_rank(sys.matrix)}});
    if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        out << vandermonde_to_json(sys).dump(2) << "\n";
    }
    return 0;
}

int run_bench_grover(int q) {
    auto f = field_from_q(q);
    long long total = 0;
    for (int c = 0; c < f->q(); ++c) {
        auto rep = grover_scan(f, c);
        total += rep.queries;
        emit({{"verb", "bench.grover"}, {"c", c}, {"queries", rep.queries}});
    }
    emit({{"verb", "bench.grover.summary"},
          {"q", f->q()},
          {"average", static_cast<double>(total) / f->q()},
          {"expected_average", (f->q() + 1) / 2.0}});
    return 0;
}

int run_suite_acceptance(bool quick, int jobs) {
    std::vector<CriterionResult> results;
    if (jobs > 1) {
        using Fn = std::function<CriterionResult()>;
        std::vector<Fn> fns{[] { return criterion_lifted_promise(); },
                            [] { return criterion_separator_bound(); },
                            [quick] { return criterion_random_base(quick); },
                            [] { return criterion_hqpp_chain(); },
                            [quick] { return criterion_multivariate_quadratic(quick); },
                            [] { return criterion_vandermonde_grid(); },
                            [quick] { return criterion_hpgp_end_to_end(quick); },
                            [] { return criterion_hpgp_group_path(); },
                            [] { return criterion_grover(); },
                            [] { return criterion_galois(); }};
        std::vector<std::future<CriterionResult>> futs;
        for (auto& fn : fns)
            futs.push_back(std::async(std::launch::async, [fn] {
                auto t0 = std::chrono::steady_clock::now();
                CriterionResult r = fn();
                r.seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                return r;
            }));
        for (auto& fu : futs) results.push_back(fu.get());
    } else {
        results = run_acceptance(quick);
    }
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        emit({{"verb", "suite.acceptance"},
              {"criterion", r.id},
              {"name", r.name},
              {"pass", r.pass},
              {"seconds", r.seconds},
              {"detail", r.detail}});
    }
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hidden-structure lab"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags usable after the subcommand
    std::uint64_t seed = default_seed();
    int jobs = 1;
    app.add_flag("--pretty", g_pretty, "indent JSON output");
    app.add_option("--seed", seed, "seed for randomized runs");
    app.add_option("--jobs", jobs, "parallel trials where supported");

    std::string group_json;
    double epsilon = 0.0625;
    int trials = 20;
    std::vector<long long> points;
    int q = 5, n = 1, d = 2;
    std::string hidden_json, path = "B", emit_path, base_mode;
    bool quick = false;

    auto* verify = app.add_subcommand("verify", "property suites");
    auto* galois = verify->add_subcommand("galois", "closure laws over all subgroups");
    galois->add_option("--group", group_json, "group descriptor JSON")->required();

    auto* base = app.add_subcommand("base", "strong base construction and checks");
    base->add_option("mode", base_mode, "random|deterministic|verify")->required();
    base->add_option("--group", group_json, "group descriptor JSON")->required();
    base->add_option("--epsilon", epsilon, "failure budget for random bases");
    base->add_option("--trials", trials, "number of random trials");
    base->add_option("--points", points, "base points for verify")->delimiter(',');

    auto* seps = app.add_subcommand("separators", "exhaustive separator-count table");
    seps->add_option("--group", group_json, "group descriptor JSON")->required();

    auto* solve = app.add_subcommand("solve", "run a solver end to end");
    auto* hqpp = solve->add_subcommand("hqpp", "hidden quadratic x^2 - 2ux");
    hqpp->add_option("--q", q, "field size")->required();
    hqpp->add_option("--hidden", hidden_json, "hidden object JSON {\"u\":..}");
    auto* hpp2 = solve->add_subcommand("hpp2", "hidden multivariate quadratic");
    hpp2->add_option("--q", q, "field size")->required();
    hpp2->add_option("--n", n, "variables")->required();
    hpp2->add_option("--hidden", hidden_json, "hidden polynomial JSON");
    auto* hpgp = solve->add_subcommand("hpgp", "hidden polynomial graph");
    hpgp->add_option("--q", q, "field size")->required();
    hpgp->add_option("--n", n, "variables");
    hpgp->add_option("--d", d, "degree bound");
    hpgp->add_option("--hidden", hidden_json, "hidden polynomial JSON");
    hpgp->add_option("--path", path, "A|B|both (univariate only)");

    auto* vand = app.add_subcommand("vandermonde", "build a generalized system");
    vand->add_option("--q", q, "field size")->required();
    vand->add_option("--n", n, "variables")->required();
    vand->add_option("--d", d, "degree bound")->required();
    vand->add_option("--emit", emit_path, "write the full system JSON to a file");

    auto* bench = app.add_subcommand("bench", "query-count tables");
    auto* grover = bench->add_subcommand("grover", "classical scan counts");
    grover->add_option("--q", q, "field size")->required();

    auto* suite = app.add_subcommand("suite", "batteries");
    auto* acceptance = suite->add_subcommand("acceptance", "the full release gate");
    acceptance->add_flag("--quick", quick, "reduced trial counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (galois->parsed()) return run_verify_galois(group_json);
        if (base->parsed()) return run_base(base_mode, group_json, epsilon, seed, trials, points);
        if (seps->parsed()) return run_separators(group_json);
        if (hqpp->parsed()) return run_solve_hqpp(q, hidden_json, seed);
        if (hpp2->parsed()) return run_solve_hpp2(q, n, hidden_json, seed);
        if (hpgp->parsed()) return run_solve_hpgp(q, n, d, hidden_json, seed, path);
        if (vand->parsed()) return run_vandermonde(q, n, d, emit_path);
        if (grover->parsed()) return run_bench_grover(q);
        if (acceptance->parsed()) return run_suite_acceptance(quick, jobs);
        std::cerr << "missing subcommand\n";
        return 1;
    } catch (const PromiseViolationError& e) {
        emit({{"error", "promise_violation"}, {"message", e.what()}});
        return 2;
    } catch (const Error& e) {
        emit({{"error", "domain"}, {"message", e.what()}});
        return 1;
    }
}
