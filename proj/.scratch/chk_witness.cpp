#include <cassert>
#include <cstdio>
#include <initializer_list>

#include "drycert/witness.hpp"

using namespace drycert;

static DivClass dc(std::initializer_list<long long> coords) {
    DivClass d = DivClass::zero(coords.size());
    std::size_t i = 0;
    for (long long v : coords) d.c[i++] = Rational(v);
    return d;
}

int main() {
    auto f0 = make_hirzebruch(0);
    auto dp8 = make_del_pezzo(8);

    {
        const Verdict v = realize(f0, CandidateClass{dc({7, 8}), Int(30), 6});
        assert(v.kind == VerdictKind::Realized);
        assert(v.witness->cfg.twist == Twist::Balanced);
        std::printf("f0 (7,8) w=30: c2E=%s\n", v.witness->c2E.str().c_str());
        assert(v.witness->c2E == 36);
        assert(verify_witness(f0, *v.witness, CandidateClass{dc({7, 8}), Int(30), 6}));
    }
    {
        const CandidateClass cand{dc({7, 8}), Int(51), 6};
        Witness w;
        auto fail = detail::attempt_config(f0, cand, ConfigTemplate{3, 3, 1, Twist::Standard}, w);
        assert(!fail);
        std::printf("f0 (7,8) w=51 std: c2E=%s\n", w.c2E.str().c_str());
        assert(w.c2E == 5);
        assert(verify_witness(f0, w, cand));
        const Verdict v = realize(f0, cand);
        assert(v.witness->cfg.twist == Twist::Balanced && v.witness->c2E == 57);
    }
    {
        DivClass phi = dc({12, -4, -4, -4, -4, -4, -4, -4, -4});
        assert(realize(dp8, CandidateClass{phi, Int(6), 6}).kind == VerdictKind::NotDry);
        for (long long w = 7; w <= 11; ++w) {
            const Verdict v = realize(dp8, CandidateClass{phi, Int(w), 6});
            assert(v.kind == VerdictKind::ExceptionCandidate);
            assert(v.failures.size() == 2);
            std::printf("dp8 w=%lld: %s:%s %s:%s\n", w, v.failures[0].config.c_str(),
                        v.failures[0].reason.c_str(), v.failures[1].config.c_str(),
                        v.failures[1].reason.c_str());
            assert(v.failures[0].config == "balanced-n3-r3" && v.failures[0].reason == "artamkin");
            assert(v.failures[1].config == "standard-n3-r3" && v.failures[1].reason == "artamkin");
        }
        const Verdict v12 = realize(dp8, CandidateClass{phi, Int(12), 6});
        assert(v12.kind == VerdictKind::Realized && v12.witness->c2E == 5);
        assert(v12.witness->cfg.twist == Twist::Balanced);
    }
    {
        auto p2 = make_projective_plane();
        assert(evaluate_dry(p2, CandidateClass{dc({12}), Int(60), 6}).dry);
        const Verdict p = realize(p2, CandidateClass{dc({12}), Int(60), 6});
        std::printf("p2 reason: %s\n", p.reason.c_str());
        assert(p.kind == VerdictKind::Unsupported);
        assert(p.reason == "no construction covers N=6 on P2");
        auto thr = dry_threshold(p2, dc({12}), 6);
        std::printf("p2 thr: %s\n", format_rational(thr).c_str());
        assert(thr == Rational(69, 2));
    }
    {
        auto f1 = make_hirzebruch(1);
        Witness w;
        auto fail = detail::attempt_config(f1, CandidateClass{dc({7, 9}), Int(40), 6},
                                           ConfigTemplate{2, 4, 1, Twist::Standard}, w);
        assert(fail && *fail == "parity");
    }
    {
        DivClass phi{Rational(13, 2), Rational(8)};
        auto thr = dry_threshold(f0, phi, 6);
        std::printf("f0 (13/2,8) thr: %s\n", format_rational(thr).c_str());
        assert(thr == Rational(28));
        assert(evaluate_dry(f0, CandidateClass{phi, Int(29), 6}).dry);
        bool threw = false;
        try {
            realize(f0, CandidateClass{phi, Int(29), 6});
        } catch (const std::domain_error&) {
            threw = true;
        }
        assert(threw);
    }
    std::puts("CHK_WITNESS_OK");
    return 0;
}
