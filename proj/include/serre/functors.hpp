#pragma once

#include <optional>
#include <vector>

#include "serre/rep.hpp"

namespace serre {

// A linear form on the algebra, stored by value on each basis element.
struct BimoduleForm {
    std::vector<Rational> values;  // indexed by basis element

    Rational eval(const Algebra& a, const Algebra::Element& x) const;
};

// Trace-like form f with f(xy) = f(yx) and nondegenerate pairing
// (x, y) -> f(xy).  Empty when none exists.
std::optional<BimoduleForm> find_symmetrizing_form(const Algebra& a,
                                                   uint64_t seed = 0);
bool is_symmetric(const Algebra& a, uint64_t seed = 0);

// The permutation i -> j with N(P(i)) = I(i) = P(j) on a self-injective
// algebra; empty entry when I(i) is not projective.
std::vector<std::optional<int>> nakayama_permutation(const Algebra& a,
                                                     uint64_t seed = 0);

// Exchange functor N: sends P(i) to I(i); general modules via a minimal
// projective presentation.
Representation nakayama(const Representation& m);
ModuleMap nakayama(const ModuleMap& f);

// Vertices whose indecomposable projective is also injective.
std::vector<int> projective_injective_vertices(const Algebra& a, uint64_t seed = 0);

// Partial coapproximation at the projective-injective part: on a projective
// it is the trace of the projective-injectives; in general computed through a
// minimal presentation.  The vertex list defaults to the auto-detected
// projective-injective vertices.
Representation coapprox(const Representation& m,
                        const std::optional<std::vector<int>>& projinj = std::nullopt);
ModuleMap coapprox(const ModuleMap& f,
                   const std::optional<std::vector<int>>& projinj = std::nullopt);

// Checks C(C(P(i))) = N(P(i)) for every vertex (the composite of the partial
// coapproximation with itself against the exchange functor).
struct CSquaredReport {
    bool ok = true;
    std::vector<std::string> failures;
};
CSquaredReport verify_c_squared_is_nakayama(const Algebra& a, uint64_t seed = 0);

// Built-in two-vertex example: arrows a: 1 -> 2, b: 2 -> 1 with a*b = 0.
Presentation small_category_o_presentation();

}  // namespace serre
