#include <catch2/catch_amalgamated.hpp>

#include <drycert/witness.hpp>

#include <initializer_list>
#include <vector>

using namespace drycert;

namespace {

DivClass dc(std::initializer_list<long long> coords) {
    DivClass d = DivClass::zero(coords.size());
    std::size_t i = 0;
    for (long long v : coords) d.c[i++] = Rational(v);
    return d;
}

std::vector<std::string> labels(const std::vector<ConfigTemplate>& v) {
    std::vector<std::string> out;
    for (const auto& t : v) out.push_back(t.label());
    return out;
}

}  // namespace

TEST_CASE("case table per twist scale and base") {
    auto f0 = make_hirzebruch(0);
    auto f1 = make_hirzebruch(1);
    auto dp3 = make_del_pezzo(3);
    auto p2 = make_projective_plane();

    CHECK(labels(case_table(6, dp3)) ==
          std::vector<std::string>{"balanced-n3-r3", "standard-n3-r3"});
    CHECK(labels(case_table(8, f0)) ==
          std::vector<std::string>{"balanced-n4-r4", "standard-n3-r5"});
    CHECK(labels(case_table(4, f0)) ==
          std::vector<std::string>{"balanced-n2-r2", "standard-n2-r2"});
    CHECK(labels(case_table(5, f0)) == std::vector<std::string>{"standard-n2-r3"});
    CHECK(labels(case_table(10, f1)) ==
          std::vector<std::string>{"balanced-n5-r5", "standard-n3-r7"});

    /* n = N/2 even is admissible only on F0; N in {4,5} has no standard
     * construction off F0. */
    CHECK(labels(case_table(8, f1)) == std::vector<std::string>{"standard-n3-r5"});
    CHECK(case_table(4, dp3).empty());
    CHECK(case_table(5, dp3).empty());

    for (long long n : {1LL, 2LL, 3LL}) CHECK(case_table(n, f0).empty());
    for (long long n : {4LL, 6LL, 8LL}) CHECK(case_table(n, p2).empty());
}

TEST_CASE("balanced precedes standard whenever both apply") {
    auto f0 = make_hirzebruch(0);
    for (long long n : {4LL, 6LL, 8LL, 10LL, 12LL}) {
        const auto configs = case_table(n, f0);
        REQUIRE(configs.size() == 2);
        CHECK(configs[0].twist == Twist::Balanced);
        CHECK(configs[1].twist == Twist::Standard);
        CHECK(configs[0].n == configs[0].r);
        CHECK(configs[1].n + configs[1].r == static_cast<int>(n));
    }
}

TEST_CASE("alpha candidate and sign selection") {
    auto f0 = make_hirzebruch(0);
    auto dp3 = make_del_pezzo(3);
    const ConfigTemplate bal{3, 3, 1, Twist::Balanced};
    const ConfigTemplate std_{3, 3, 1, Twist::Standard};

    CHECK(alpha_candidate(f0, Twist::Balanced) == dc({-1, 1}));
    CHECK(alpha_candidate(f0, Twist::Standard) == dc({-1, 1}));
    CHECK(alpha_candidate(dp3, Twist::Standard) == dc({3, -3, -3, -3}));
    CHECK(alpha_candidate(dp3, Twist::Balanced) == dc({1, -3, 0, 0}));
    CHECK_THROWS_AS(alpha_candidate(make_projective_plane(), Twist::Standard),
                    std::domain_error);

    /* alpha.(eta - n c1) must come out <= 0; the sign flips with eta. */
    CHECK(select_alpha(f0, dc({7, 8}), bal) == dc({-1, 1}));
    CHECK(select_alpha(f0, dc({8, 7}), bal) == dc({1, -1}));
    /* eta proportional to c1 pairs to zero with both candidates: keep +. */
    CHECK(select_alpha(dp3, Rational(4) * c1(dp3), std_) == dc({3, -3, -3, -3}));
    CHECK(select_alpha(dp3, dc({13, -4, -4, -4}), std_) == dc({-3, 3, 3, 3}));

    for (const auto& eta : {dc({7, 8}), dc({8, 7}), dc({9, 9})}) {
        const DivClass a = select_alpha(f0, eta, bal);
        CHECK(intersect(f0, a, eta - Rational(3) * c1(f0)) <= 0);
    }
}

TEST_CASE("H_B is ample and alpha-orthogonal on every base") {
    const ConfigTemplate tmpl{3, 3, 1, Twist::Standard};
    auto f0 = make_hirzebruch(0);
    auto f1 = make_hirzebruch(1);
    CHECK(select_HB(f0, tmpl) == dc({1, 1}));
    CHECK(select_HB(f1, tmpl) == dc({1, 2}));
    CHECK(select_HB(make_del_pezzo(5), tmpl) == c1(make_del_pezzo(5)));
    CHECK_THROWS_AS(select_HB(make_projective_plane(), tmpl), std::domain_error);

    for (int g : {0, 1}) {
        auto fg = make_hirzebruch(g);
        const DivClass h = select_HB(fg, tmpl);
        CHECK(is_ample(fg, h));
        for (Twist t : {Twist::Standard, Twist::Balanced})
            CHECK(intersect(fg, alpha_candidate(fg, t), h) == 0);
    }
    for (int k : {1, 3, 5, 8}) {
        auto dp = make_del_pezzo(k);
        const DivClass h = select_HB(dp, tmpl);
        CHECK(is_ample(dp, h));
        for (Twist t : {Twist::Standard, Twist::Balanced})
            CHECK(intersect(dp, alpha_candidate(dp, t), h) == 0);
    }
}

TEST_CASE("worked instance on F0: realization just past the threshold") {
    auto f0 = make_hirzebruch(0);
    const DivClass phi = dc({7, 8});

    const Verdict below = realize(f0, CandidateClass{phi, Int(29), 6});
    CHECK(below.kind == VerdictKind::NotDry);
    CHECK_FALSE(below.witness.has_value());
    REQUIRE(below.dry_report.threshold.has_value());
    CHECK(*below.dry_report.threshold == Rational(29));

    const Verdict v = realize(f0, CandidateClass{phi, Int(30), 6});
    REQUIRE(v.kind == VerdictKind::Realized);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    CHECK(w.cfg.twist == Twist::Balanced);
    CHECK(w.cfg.n == 3);
    CHECK(w.cfg.r == 3);
    CHECK(w.cfg.alpha == dc({-1, 1}));
    CHECK(w.c2E == 36);
    CHECK(w.condition_report.all_ok());
    CHECK(w.recomputed_c2V.sigma_part == phi);
    CHECK(w.recomputed_c2V.fiber_part == Rational(30));
    CHECK(verify_witness(f0, w, CandidateClass{phi, Int(30), 6}));
}

TEST_CASE("balanced wins the tie when both constructions realize") {
    auto f0 = make_hirzebruch(0);
    const CandidateClass cand{dc({7, 8}), Int(51), 6};

    /* At omega = 51 the standard construction sits exactly on its floor. */
    Witness std_w;
    const ConfigTemplate std_t{3, 3, 1, Twist::Standard};
    const auto fail = detail::attempt_config(f0, cand, std_t, std_w);
    REQUIRE_FALSE(fail.has_value());
    CHECK(std_w.c2E == artamkin_floor(3));
    CHECK(verify_witness(f0, std_w, cand));

    const Verdict v = realize(f0, cand);
    REQUIRE(v.kind == VerdictKind::Realized);
    CHECK(v.witness->cfg.twist == Twist::Balanced);
    CHECK(v.witness->c2E == 57);
}

TEST_CASE("realization floor on dP3 is sharp") {
    auto dp3 = make_del_pezzo(3);
    const DivClass phi = Rational(4) * c1(dp3);
    const ConfigTemplate bal{3, 3, 1, Twist::Balanced};

    Witness w;
    auto fail = detail::attempt_config(dp3, CandidateClass{phi, Int(6), 6}, bal, w);
    REQUIRE(fail.has_value());
    CHECK(*fail == "artamkin");

    fail = detail::attempt_config(dp3, CandidateClass{phi, Int(7), 6}, bal, w);
    REQUIRE_FALSE(fail.has_value());
    CHECK(w.c2E == artamkin_floor(3));

    /* The full pipeline still requires DRY: threshold here is 24. */
    CHECK(realize(dp3, CandidateClass{phi, Int(24), 6}).kind == VerdictKind::NotDry);
    const Verdict v = realize(dp3, CandidateClass{phi, Int(25), 6});
    REQUIRE(v.kind == VerdictKind::Realized);
    CHECK(v.witness->c2E == 23);
    CHECK(verify_witness(dp3, *v.witness, CandidateClass{phi, Int(25), 6}));
}

TEST_CASE("unsupported twist scales give a reasoned verdict") {
    auto dp3 = make_del_pezzo(3);
    /* phi = 4c1 at N = 4 is DRY (threshold 24) but no construction applies. */
    const Verdict v = realize(dp3, CandidateClass{Rational(4) * c1(dp3), Int(25), 4});
    CHECK(v.kind == VerdictKind::Unsupported);
    CHECK(v.reason == "no construction covers N=4 on dP3");
    CHECK_FALSE(v.witness.has_value());

    /* On P2 the shift for phi = 12l is 3l, ample, and the threshold is 69/2. */
    const Verdict p = realize(make_projective_plane(),
                              CandidateClass{dc({12}), Int(60), 6});
    CHECK(p.kind == VerdictKind::Unsupported);
    CHECK(p.reason == "no construction covers N=6 on P2");
}

TEST_CASE("exception candidates report per-config reasons") {
    auto dp8 = make_del_pezzo(8);
    DivClass phi = dc({12, -4, -4, -4, -4, -4, -4, -4, -4});

    CHECK(realize(dp8, CandidateClass{phi, Int(6), 6}).kind == VerdictKind::NotDry);
    for (long long w : {7LL, 8LL, 9LL, 10LL, 11LL}) {
        const Verdict v = realize(dp8, CandidateClass{phi, Int(w), 6});
        REQUIRE(v.kind == VerdictKind::ExceptionCandidate);
        REQUIRE(v.failures.size() == 2);
        CHECK(v.failures[0].config == "balanced-n3-r3");
        CHECK(v.failures[0].reason == "artamkin");
        CHECK(v.failures[1].config == "standard-n3-r3");
        CHECK(v.failures[1].reason == "artamkin");
    }

    /* The window closes at the balanced floor. */
    const Verdict v = realize(dp8, CandidateClass{phi, Int(12), 6});
    REQUIRE(v.kind == VerdictKind::Realized);
    CHECK(v.witness->cfg.twist == Twist::Balanced);
    CHECK(v.witness->c2E == artamkin_floor(3));
}

TEST_CASE("verifier rejects tampered certificates") {
    auto f0 = make_hirzebruch(0);
    const CandidateClass cand{dc({7, 8}), Int(30), 6};
    const Verdict v = realize(f0, cand);
    REQUIRE(v.kind == VerdictKind::Realized);

    Witness w = *v.witness;
    w.c2E -= 1;
    CHECK_FALSE(verify_witness(f0, w, cand));

    w = *v.witness;
    w.cfg.alpha = DivClass::zero(2);
    CHECK_FALSE(verify_witness(f0, w, cand));

    w = *v.witness;
    w.eta = dc({8, 7});
    CHECK_FALSE(verify_witness(f0, w, cand));

    w = *v.witness;
    w.polarization.x = 0;
    CHECK_FALSE(verify_witness(f0, w, cand));

    /* Same witness against the wrong candidate level. */
    CHECK_FALSE(verify_witness(f0, *v.witness, CandidateClass{dc({7, 8}), Int(31), 6}));
}

TEST_CASE("non-integral candidates are rejected at the spectral stage") {
    auto f0 = make_hirzebruch(0);
    DivClass phi{Rational(13, 2), Rational(8)};
    /* DRY holds for this class (threshold 28) but no integral eta exists. */
    CHECK(dry_threshold(f0, phi, 6) == Rational(28));
    CHECK(evaluate_dry(f0, CandidateClass{phi, Int(29), 6}).dry);
    CHECK_THROWS_AS(realize(f0, CandidateClass{phi, Int(29), 6}), std::domain_error);
}

TEST_CASE("shared polarization cache never changes a verdict") {
    auto dp3 = make_del_pezzo(3);
    auto f0 = make_hirzebruch(0);
    detail::PolarCache cache;

    std::vector<std::pair<const BaseSurface*, CandidateClass>> cases;
    for (long long a : {12LL, 13LL})
        for (long long w : {24LL, 25LL, 26LL, 40LL}) {
            DivClass phi = dc({a, -4, -4, -4});
            if (a == 13) phi.c[1] = Rational(-5);
            cases.emplace_back(&dp3, CandidateClass{phi, Int(w), 6});
        }
    for (long long w : {29LL, 30LL, 51LL})
        cases.emplace_back(&f0, CandidateClass{dc({7, 8}), Int(w), 6});

    for (const auto& [base, cand] : cases) {
        const auto configs = case_table(cand.N, *base);
        const Verdict plain = realize_with(*base, cand, configs);
        detail::PolarCache local;
        const Verdict cached = realize_with(*base, cand, configs, &local);
        const Verdict shared = realize_with(*base, cand, configs,
                                            base == &dp3 ? &cache : nullptr);
        for (const Verdict* other : {&cached, &shared}) {
            CHECK(other->kind == plain.kind);
            CHECK(other->witness.has_value() == plain.witness.has_value());
            if (plain.witness) {
                CHECK(other->witness->c2E == plain.witness->c2E);
                CHECK(other->witness->cfg.alpha == plain.witness->cfg.alpha);
                CHECK(other->witness->polarization.rho == plain.witness->polarization.rho);
            }
            REQUIRE(other->failures.size() == plain.failures.size());
            for (std::size_t i = 0; i < plain.failures.size(); ++i) {
                CHECK(other->failures[i].config == plain.failures[i].config);
                CHECK(other->failures[i].reason == plain.failures[i].reason);
            }
        }
    }
}

TEST_CASE("realize is deterministic") {
    auto dp8 = make_del_pezzo(8);
    const CandidateClass cand{dc({12, -4, -4, -4, -4, -4, -4, -4, -4}), Int(12), 6};
    const Verdict a = realize(dp8, cand);
    const Verdict b = realize(dp8, cand);
    REQUIRE(a.kind == b.kind);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->c2E == b.witness->c2E);
    CHECK(a.witness->cfg.alpha == b.witness->cfg.alpha);
    CHECK(a.witness->polarization.rho == b.witness->polarization.rho);
    CHECK(a.witness->polarization.t == b.witness->polarization.t);
}

TEST_CASE("parity gate fires for even fiber rank with odd base parity") {
    auto f1 = make_hirzebruch(1);
    /* n even with 2*lambda odd demands c1 even componentwise; F1 fails it. */
    const ConfigTemplate even_n{2, 4, 1, Twist::Standard};
    Witness w;
    const auto fail = detail::attempt_config(
        f1, CandidateClass{dc({7, 9}), Int(40), 6}, even_n, w);
    REQUIRE(fail.has_value());
    CHECK(*fail == "parity");
}
