#include <drycert/atlas.hpp>
#include <cstdio>
#include <random>
using namespace drycert;
static DivClass dc2(long long a, long long b){return DivClass{Rational(a),Rational(b)};}
int main(){
    std::mt19937 rng(303);
    std::uniform_int_distribution<long long> coef(-10,30);
    std::uniform_int_distribution<long long> level(0,60);
    std::uniform_int_distribution<int> mode(0,4);
    const std::vector<BaseSurface> bases{make_hirzebruch(0),make_hirzebruch(1),make_del_pezzo(3)};
    const long long scales[]={4,6,8,10};
    int dry=0,notdry_ample=0,notample=0,margin_ge1=0,grid_hits=0;
    for(int checked=0;checked<600;++checked){
        const BaseSurface& base=bases[(std::size_t)checked%bases.size()];
        const long long N=scales[(checked/3)%4];
        DivClass phi=DivClass::zero((std::size_t)base.rank);
        for(int i=0;i<base.rank;++i){long long v=coef(rng);
            if(base.kind==BaseKind::DelPezzo&&i>0&&v>0)v=-v;
            phi.c[(std::size_t)i]=Rational(v+(i==0?2*N:0));}
        Int omega(level(rng));
        const DivClass psi=phi_shift(base,phi,N);
        if(is_ample(base,psi)){Int fl=floor_int(dry_threshold(base,phi,N));omega=fl-1+mode(rng);}
        const CandidateClass cand{phi,omega,N};
        const DryEvaluation ev=evaluate_dry(base,cand);
        if(!is_ample(base,psi))++notample;
        else if(ev.dry){++dry; if(Rational(omega)>=*ev.threshold+1)++margin_ge1;}
        else ++notdry_ample;
    }
    std::printf("dry=%d (margin>=1: %d) notdry_ample=%d notample=%d\n",dry,margin_ge1,notdry_ample,notample);
}
