#include <doctest.h>

#include <cmath>

#include "graphmax/constants.hpp"
#include "graphmax/errors.hpp"
#include "graphmax/search.hpp"

using namespace graphmax;
using doctest::Approx;

namespace {

SearchConfig config(Target target, double p, std::size_t restarts = 32) {
    SearchConfig cfg;
    cfg.target = target;
    cfg.p = PExponent(p);
    cfg.restarts = restarts;
    return cfg;
}

}  // namespace

TEST_CASE("estimate_ratio reaches the sharp constants") {
    SUBCASE("K_5 variation, p = 2") {
        const auto r = estimate_ratio(complete(5), config(Target::variation_ratio, 2.0));
        CHECK(r.best_ratio >= 0.8 - 1e-6);
        CHECK(r.best_ratio <= 0.8 + 1e-9);
        REQUIRE(r.closed_form);
        CHECK(r.closed_form->status == ProofStatus::proved);
        CHECK(*r.gap >= -1e-9);
    }
    SUBCASE("S_3 variation, p = 2") {
        const auto r = estimate_ratio(star(3), config(Target::variation_ratio, 2.0));
        CHECK(r.best_ratio == Approx(std::sqrt(5.0) / 3.0).epsilon(1e-6));
        CHECK(r.best_ratio <= std::sqrt(5.0) / 3.0 + 1e-9);
    }
    SUBCASE("K_3 norm, p = 2") {
        const auto r = estimate_ratio(complete(3), config(Target::norm_ratio, 2.0));
        CHECK(std::fabs(r.best_ratio - std::sqrt(4.0 / 3.0)) <= 1e-6);
    }
}

TEST_CASE("search reports are sound and deterministic") {
    auto cfg = config(Target::variation_ratio, 1.5, 12);
    cfg.threads = 1;
    const Graph g = cycle(6);
    const auto a = estimate_ratio(g, cfg);
    cfg.threads = 4;
    const auto b = estimate_ratio(g, cfg);
    CHECK(a.best_ratio == b.best_ratio);
    CHECK(a.best_f == b.best_f);
    CHECK(a.per_restart_best == b.per_restart_best);
    CHECK(a.iterations_used == b.iterations_used);

    CHECK(a.per_restart_best.size() == 12);
    CHECK(a.best_ratio == variation_ratio(g, a.best_f, cfg.p).ratio);
    for (double x : a.best_f.values()) CHECK(x >= 0.0);
    CHECK_FALSE(a.closed_form.has_value());

    cfg.seed += 1;
    const auto c = estimate_ratio(g, cfg);
    CHECK(c.per_restart_best != a.per_restart_best);
}

TEST_CASE("search configuration errors") {
    auto cfg = config(Target::variation_ratio, 2.0);
    cfg.restarts = 0;
    CHECK_THROWS_AS(estimate_ratio(star(3), cfg), DomainError);
    cfg = config(Target::variation_ratio, 2.0);
    cfg.step_min = cfg.step_init;
    CHECK_THROWS_AS(estimate_ratio(star(3), cfg), DomainError);
    CHECK_THROWS_AS(estimate_ratio(build_graph(3, {}), config(Target::variation_ratio, 2.0)),
                    DomainError);
    // norm target works without edges: every vertex is its own ball
    const auto r = estimate_ratio(build_graph(3, {}), config(Target::norm_ratio, 2.0, 4));
    CHECK(r.best_ratio == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("family detection and closed forms") {
    CHECK(detect_family(complete(5)) == Family::complete);
    CHECK(detect_family(star(5)) == Family::star);
    CHECK(detect_family(star(2)) == Family::complete);
    CHECK_FALSE(detect_family(path(4)).has_value());
    CHECK_FALSE(detect_family(complete(1)).has_value());
    const std::vector<Edge> star_off_center{{1, 0}, {1, 2}, {1, 3}};
    CHECK_FALSE(detect_family(build_graph(4, star_off_center)).has_value());

    CHECK(closed_form_for(star(4), Target::norm_ratio, PExponent(2.0), Alpha{}, Centering::centered)
              ->status == ProofStatus::proved);
    CHECK_FALSE(closed_form_for(star(4), Target::norm_ratio, PExponent(3.0), Alpha{},
                                Centering::centered));
    CHECK_FALSE(closed_form_for(star(4), Target::variation_ratio, PExponent(1.0), Alpha(0.5),
                                Centering::centered));
    CHECK_FALSE(closed_form_for(star(4), Target::variation_ratio, PExponent(1.0), Alpha{},
                                Centering::uncentered));
}

TEST_CASE("two-level scan") {
    SUBCASE("K_6 norm") {
        const auto r = two_level_scan(complete(6), Target::norm_ratio, PExponent(2.0));
        REQUIRE(r.two_level);
        CHECK(r.two_level->level_size == 2);
        CHECK(r.two_level->level_value == Approx(4.0).epsilon(1e-5));
        CHECK(r.best_ratio == Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
    }
    SUBCASE("S_4 norm puts gamma at the center") {
        const auto r = two_level_scan(star(4), Target::norm_ratio, PExponent(2.0));
        REQUIRE(r.two_level);
        CHECK(r.two_level->level_size == 1);
        CHECK(r.two_level->includes_center);
        CHECK(r.two_level->level_value == Approx(star_l2_level(4)).epsilon(1e-5));
        CHECK(r.best_ratio == Approx(*l2_norm_star(4).value).epsilon(1e-12));
    }
    SUBCASE("K_4 variation at p = 1 prefers a single spike") {
        const auto r = two_level_scan(complete(4), Target::variation_ratio, PExponent(1.0));
        REQUIRE(r.two_level);
        CHECK(r.two_level->level_size == 1);
        CHECK(r.best_ratio == Approx(0.75).epsilon(1e-9));
    }
    CHECK_THROWS_AS(two_level_scan(path(4), Target::norm_ratio, PExponent(2.0)), DomainError);
}

TEST_CASE("structured search keeps up with generic search on two-valued extremizers") {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (Family family : {Family::complete, Family::star}) {
            if (family == Family::star && n == 3) continue;
            const Graph g = make_family(family, n);
            const auto generic = estimate_ratio(g, config(Target::norm_ratio, 2.0, 8));
            const auto structured = two_level_scan(g, Target::norm_ratio, PExponent(2.0));
            CHECK(structured.best_ratio >= generic.best_ratio - 1e-6);
        }
    }
}

TEST_CASE("conjecture scan") {
    SearchConfig cfg;
    cfg.restarts = 16;
    SUBCASE("complete graphs at small p agree with the conjecture") {
        const std::vector<std::size_t> ns{3, 4, 5, 6, 7, 8};
        const std::vector<PExponent> ps{PExponent(0.3), PExponent(0.5)};
        for (const auto& row : conjecture_scan(Family::complete, ns, ps, cfg)) {
            CHECK(row.best_ratio <= 1.0 - 1.0 / row.n + kScanTolerance);
            CHECK(row.flag == ScanFlag::consistent);
        }
    }
    SUBCASE("S_3 at p = 2 beats 1 - 1/n") {
        const std::vector<std::size_t> ns{3};
        const std::vector<PExponent> ps{PExponent(2.0)};
        const auto rows = conjecture_scan(Family::star, ns, ps, cfg);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].exceeds_one_minus_inverse);
        CHECK(rows[0].best_ratio == Approx(std::sqrt(5.0) / 3.0).epsilon(1e-6));
        CHECK(rows[0].flag == ScanFlag::consistent);
    }
    SUBCASE("stars at p = 0.75") {
        const std::vector<std::size_t> ns{4, 5, 6, 7, 8};
        const std::vector<PExponent> ps{PExponent(0.75)};
        for (const auto& row : conjecture_scan(Family::star, ns, ps, cfg)) {
            CHECK(std::fabs(row.best_ratio - (1.0 - 1.0 / row.n)) <= 1e-6);
            CHECK(row.flag == ScanFlag::consistent);
        }
    }
    const std::vector<std::size_t> none;
    const std::vector<PExponent> ps{PExponent(1.0)};
    CHECK_THROWS_AS(conjecture_scan(Family::star, none, ps, cfg), DomainError);
}

TEST_CASE("continuity probe") {
    const double scales[] = {0.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Graph g = complete(5);
        const VertexFunction f({0.3, 0.9, 0.1, 0.5, 0.7});
        const auto rows = continuity_probe(g, f, scales, PExponent(1.0), PExponent(1.0), Alpha{}, seed);
        REQUIRE(rows.size() == 7);
        CHECK(rows[0].variation_difference == 0.0);
        for (std::size_t i = 2; i < rows.size(); ++i)
            CHECK(rows[i].variation_difference <= rows[i - 1].variation_difference);
        CHECK(rows.back().variation_difference < 1e-4);
        for (const auto& row : rows) {
            REQUIRE(row.bound);
            CHECK(row.variation_difference <= *row.bound + 1e-15);
        }
    }
    const auto disconnected = continuity_probe(build_graph(3, {}), VertexFunction({1, 2, 3}), scales,
                                               PExponent(2.0), PExponent(2.0));
    CHECK_FALSE(disconnected.front().bound.has_value());
    CHECK_THROWS_AS(continuity_probe(star(3), VertexFunction({1, 2}), scales, PExponent(1.0),
                                     PExponent(1.0)),
                    LengthMismatch);
}

TEST_CASE("constant-shift sequence does not converge") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto [f, shifted] = shift_counterexample(n);
        const std::vector<VertexFunction> sequence(5, shifted);
        for (double v : sequence_probe(star(n), f, sequence, PExponent(1.0)))
            CHECK(v >= 1.0 / n + 0.5 - 1e-12);
    }
    const auto [f4, s4] = shift_counterexample(4);
    const std::vector<VertexFunction> one{s4};
    CHECK(sequence_probe(star(4), f4, one, PExponent(1.0)).front() >= 0.75);
}

TEST_CASE("restart streams") {
    RestartStream a(7, 0), b(7, 0), c(7, 1);
    for (int i = 0; i < 10; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(RestartStream(7, 0).next() != c.next());
    CHECK(parse_target("variation") == Target::variation_ratio);
    CHECK(parse_target("l2") == Target::norm_ratio);
    CHECK_THROWS_AS(parse_target("energy"), DomainError);
}
