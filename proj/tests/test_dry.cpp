#include <catch2/catch_amalgamated.hpp>

#include <drycert/dry.hpp>

#include <random>
#include <vector>

using namespace drycert;

namespace {

bool proportional_to_c1(const BaseSurface& base, const DivClass& d) {
    const DivClass k = c1(base);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.c[i] * k.c[j] != d.c[j] * k.c[i]) return false;
    return true;
}

DivClass random_ample(const BaseSurface& base, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-2, 8);
    while (true) {
        DivClass d = DivClass::zero(static_cast<std::size_t>(base.rank));
        for (int i = 0; i < base.rank; ++i) d.c[static_cast<std::size_t>(i)] = coef(rng);
        if (is_ample(base, d)) return d;
    }
}

}  // namespace

TEST_CASE("R on the reference candidates") {
    auto f0 = make_hirzebruch(0);
    CHECK(r_value(f0, DivClass{Rational(7), Rational(8)}, 6) == Rational(13, 3));
    CHECK(r_value(f0, DivClass::zero(2), 6) == Rational(11, 6));
    CHECK(r_value(f0, DivClass{Rational(6), Rational(6)}, 6) == Rational(23, 6));
    CHECK(r_value(f0, DivClass{Rational(8), Rational(8)}, 6) == Rational(9, 2));
}

TEST_CASE("q on the reference candidates") {
    auto f0 = make_hirzebruch(0);
    CHECK(q_value(f0, DivClass{Rational(7), Rational(8)}, 6) == Rational(1, 72));
    CHECK(q_value(f0, DivClass{Rational(8), Rational(8)}, 6) == Rational(1, 36));
    /* phi = ((N+2)/2) c1 makes the shift exactly c1, so q = 1/N^2 */
    for (long long n : {2LL, 4LL, 6LL, 10LL}) {
        DivClass phi = Rational(n + 2, 2) * c1(f0);
        CHECK(q_value(f0, phi, n) == Rational(1, n * n));
    }
}

TEST_CASE("b_max by ray-shooting") {
    auto f0 = make_hirzebruch(0);
    CHECK(b_max(f0, DivClass{Rational(7), Rational(8)}, 6) == Rational(1, 12));
    for (long long n : {2LL, 4LL, 6LL}) {
        DivClass phi = Rational(n + 2, 2) * c1(f0);
        CHECK(b_max(f0, phi, n) == Rational(1, n));
    }
    CHECK_THROWS_AS(b_max(f0, Rational(3) * c1(f0), 6), std::domain_error);
    CHECK_THROWS_AS(b_max(f0, DivClass{Rational(4), Rational(4)}, 6), std::domain_error);
}

TEST_CASE("omega0 evaluation") {
    auto f0 = make_hirzebruch(0);
    DivClass phi78{Rational(7), Rational(8)};
    CHECK(omega0(f0, phi78, 6, Rational(1, 12)) == Rational(29, 6));
    CHECK(omega0(f0, DivClass{Rational(8), Rational(8)}, 6, Rational(1, 6)) == Rational(31, 6));
    /* q = 1, b = 1 sits at the minimum point: omega0 = R + c1^2/2 */
    DivClass phi_q1{Rational(18), Rational(18)};
    REQUIRE(q_value(f0, phi_q1, 6) == 1);
    CHECK(omega0(f0, phi_q1, 6, Rational(1)) == r_value(f0, phi_q1, 6) + Rational(4));
    CHECK_THROWS_AS(omega0(f0, phi78, 6, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(omega0(f0, phi78, 6, Rational(-1, 3)), std::domain_error);
}

TEST_CASE("DRY threshold on the reference candidates") {
    auto f0 = make_hirzebruch(0);
    CHECK(dry_threshold(f0, DivClass{Rational(7), Rational(8)}, 6) == 29);
    CHECK(dry_threshold(f0, DivClass{Rational(8), Rational(8)}, 6) == 31);
    CHECK_THROWS_AS(dry_threshold(f0, Rational(3) * c1(f0), 6), std::domain_error);
}

TEST_CASE("is_dry decisions") {
    auto f0 = make_hirzebruch(0);
    DivClass phi78{Rational(7), Rational(8)};
    CHECK(is_dry(f0, CandidateClass{phi78, Int(30), 6}));
    CHECK_FALSE(is_dry(f0, CandidateClass{phi78, Int(29), 6}));
    CHECK_FALSE(is_dry(f0, CandidateClass{DivClass{Rational(4), Rational(4)}, Int(100), 6}));

    auto ev = evaluate_dry(f0, CandidateClass{phi78, Int(30), 6});
    CHECK(ev.R == Rational(13, 3));
    CHECK(ev.q == Rational(1, 72));
    CHECK(ev.phi_shift_ample);
    REQUIRE(ev.b_max.has_value());
    CHECK(*ev.b_max == Rational(1, 12));
    CHECK(*ev.omega0_at_bmax == Rational(29, 6));
    CHECK(*ev.threshold == 29);
    CHECK(ev.dry);

    auto bad = evaluate_dry(f0, CandidateClass{DivClass{Rational(4), Rational(4)}, Int(100), 6});
    CHECK_FALSE(bad.phi_shift_ample);
    CHECK_FALSE(bad.b_max.has_value());
    CHECK_FALSE(bad.threshold.has_value());
    CHECK_FALSE(bad.dry);
}

TEST_CASE("corollary lower bound") {
    auto f0 = make_hirzebruch(0);
    DivClass phi78{Rational(7), Rational(8)};
    CHECK(corollary_lower_bound_holds(f0, CandidateClass{phi78, Int(30), 6}));
    CHECK_FALSE(corollary_lower_bound_holds(f0, CandidateClass{phi78, Int(26), 6}));
    CHECK_THROWS_AS(
        corollary_lower_bound_holds(f0, CandidateClass{Rational(3) * c1(f0), Int(40), 6}),
        std::domain_error);

    /* necessity: DRY implies the bound, across a sweep of omegas */
    for (int w = 25; w <= 40; ++w) {
        CandidateClass cand{phi78, Int(w), 6};
        if (is_dry(f0, cand)) CHECK(corollary_lower_bound_holds(f0, cand));
    }
}

TEST_CASE("omega0 is strictly decreasing up to b_max") {
    auto f0 = make_hirzebruch(0);
    DivClass phi78{Rational(7), Rational(8)};
    CHECK(omega0(f0, phi78, 6, Rational(1, 24)) > omega0(f0, phi78, 6, Rational(1, 16)));
    CHECK(omega0(f0, phi78, 6, Rational(1, 16)) > omega0(f0, phi78, 6, Rational(1, 12)));

    std::mt19937 rng(4242u);
    std::uniform_int_distribution<int> denom(2, 40);
    for (const auto& base : {make_hirzebruch(0), make_hirzebruch(1), make_del_pezzo(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const long long n = 6;
            DivClass phi = random_ample(base, rng) + Rational(n, 2) * c1(base);
            const Rational bm = b_max(base, phi, n);
            Rational b2 = bm / Rational(denom(rng) % 3 + 1);
            Rational b1 = b2 * Rational(denom(rng), denom(rng) + 17);
            if (b1 == b2) continue;
            if (b1 > b2) std::swap(b1, b2);
            CHECK(omega0(base, phi, n, b1) > omega0(base, phi, n, b2));
        }
    }
}

TEST_CASE("b_max squared stays below q, equality only on proportional shifts") {
    std::mt19937 rng(90210u);
    for (const auto& base :
         {make_hirzebruch(0), make_hirzebruch(1), make_del_pezzo(2), make_del_pezzo(3)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const long long n = 6;
            DivClass shift = random_ample(base, rng);
            DivClass phi = shift + Rational(n, 2) * c1(base);
            const Rational bm = b_max(base, phi, n);
            const Rational qq = q_value(base, phi, n);
            CHECK(bm * bm <= qq);
            if (proportional_to_c1(base, shift))
                CHECK(bm * bm == qq);
            else
                CHECK(bm * bm < qq);
        }
        /* forced proportional instances */
        for (int t = 1; t <= 3; ++t) {
            DivClass phi = Rational(t) * c1(base) + Rational(3) * c1(base);
            const Rational bm = b_max(base, phi, 6);
            CHECK(bm * bm == q_value(base, phi, 6));
        }
    }
}

TEST_CASE("threshold grows along rays") {
    auto f0 = make_hirzebruch(0);
    Rational prev;
    bool first = true;
    for (int t = 3; t <= 8; ++t) {
        DivClass phi{Rational(3 * t), Rational(3 * t)};
        const Rational thr = dry_threshold(f0, phi, 6);
        if (!first) CHECK(thr > prev);
        prev = thr;
        first = false;
    }
}

TEST_CASE("grid search over feasible b agrees with is_dry on reference cases") {
    /* miniature version of the acceptance oracle: scan b = p/q, q <= 240 */
    auto grid_finds = [](const BaseSurface& base, const CandidateClass& cand) {
        const DivClass psi = phi_shift(base, cand.phi, cand.N);
        if (!is_ample(base, psi)) return false;
        const Rational bm = b_max(base, cand.phi, cand.N);
        for (long long qd = 1; qd <= 240; ++qd) {
            /* largest p with p/qd < bm */
            Int p = floor_int(bm * Rational(qd));
            if (Rational(p, Int(qd)) == bm) p -= 1;
            if (p < 1) continue;
            const Rational b(p, Int(qd));
            const DivClass shifted = cand.phi - (Rational(cand.N) * (Rational(1, 2) + b)) * c1(base);
            if (!is_ample(base, shifted)) continue;
            if (Rational(cand.omega) > Rational(cand.N) * omega0(base, cand.phi, cand.N, b))
                return true;
        }
        return false;
    };

    auto f0 = make_hirzebruch(0);
    auto dp2 = make_del_pezzo(2);
    DivClass phi78{Rational(7), Rational(8)};
    CHECK(grid_finds(f0, CandidateClass{phi78, Int(30), 6}));
    CHECK_FALSE(grid_finds(f0, CandidateClass{phi78, Int(29), 6}));
    CHECK(is_dry(f0, CandidateClass{phi78, Int(30), 6}));

    DivClass dp_phi = Rational(4) * c1(dp2);
    const Rational thr = dry_threshold(dp2, dp_phi, 6);
    const Int above = floor_int(thr) + 2;
    CHECK(grid_finds(dp2, CandidateClass{dp_phi, above, 6}));
    CHECK(is_dry(dp2, CandidateClass{dp_phi, above, 6}));
    CHECK_FALSE(grid_finds(dp2, CandidateClass{dp_phi, floor_int(thr), 6}));
    CHECK_FALSE(is_dry(dp2, CandidateClass{dp_phi, floor_int(thr), 6}));
}
