#pragma once

#include <vector>

#include "serre/rep.hpp"

namespace serre {

// Bounded complex, cohomological convention: d^n : C^n -> C^{n+1}.
struct ChainComplex {
    const Algebra* alg = nullptr;
    int min_deg = 0;
    std::vector<Representation> terms;  // terms[i] sits in degree min_deg + i
    std::vector<ModuleMap> diffs;       // diffs[i]: terms[i] -> terms[i+1]

    int max_deg() const { return min_deg + static_cast<int>(terms.size()) - 1; }
    bool empty() const;
    const Representation* term(int deg) const;  // null outside support
    const ModuleMap* diff(int deg) const;       // d^deg, null outside
};

// Checks shapes and d.d = 0.
ChainComplex make_complex(const Algebra& a, int min_deg,
                          std::vector<Representation> terms,
                          std::vector<ModuleMap> diffs);
ChainComplex zero_complex(const Algebra& a);
ChainComplex one_term_complex(Representation m, int deg = 0);
// X[k]: degree n term is X^{n+k}; differentials pick up (-1)^k.
ChainComplex shift(const ChainComplex& x, int k);

std::vector<long> cohomology_dims(const ChainComplex& x);

// Minimal projective resolution placed in degrees -len..0, with the flag set
// when the length cap was hit before exactness.
struct Resolution {
    ChainComplex complex;
    ModuleMap aug;  // degree-0 term -> M
    bool truncated = false;
};
Resolution projective_resolution(const Representation& m, int cap);
// Non-minimal variant: each cover is padded with an extra projective summand
// mapping to zero (resolution-independence testing).
Resolution padded_resolution(const Representation& m, int cap, uint64_t seed);

// dim Ext^n(M, N) from the given resolution of M.
long ext_via(const Resolution& r, const Representation& n, int deg);
long ext(const Representation& m, const Representation& n, int deg);

// Cohomology dimensions of the total Hom complex, for perfect x.
struct HomComplexValue {
    int min_deg = 0;
    std::vector<long> h;  // h[i] = dim H^{min_deg + i}

    long at(int deg) const;
};
HomComplexValue hom_complex_cohomology(const ChainComplex& x,
                                       const ChainComplex& y);
long derived_hom_dim(const ChainComplex& x, const ChainComplex& y);  // H^0

// True when every injective has a projective resolution of length <= cap.
bool injectives_have_finite_pd(const Algebra& a, int cap = 16);

// Termwise exchange functor followed by replacement with a quasi-isomorphic
// bounded complex of projectives (resolution of the complex, totalized with
// sign (-1)^degree).  Requires the finite-projective-dimension hypothesis.
ChainComplex derived_nakayama(const ChainComplex& x);

struct SerreReport {
    bool ok = true;
    std::vector<std::string> lines;
};
// Compares dim H^0 Hom(X[k], derived_nakayama(Y)) with dim H^0 Hom(Y, X[k])
// for k in {-2..2}.
SerreReport serre_duality_check(const ChainComplex& x, const ChainComplex& y);

// Seeded bounded complex of projective sums with random differentials
// satisfying d.d = 0.
ChainComplex random_perfect_complex(const Algebra& a, uint64_t seed);

}  // namespace serre
