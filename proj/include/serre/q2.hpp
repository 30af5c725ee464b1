#pragma once

#include <map>
#include <string>
#include <vector>

#include "serre/matrix.hpp"
#include "serre/quiver.hpp"

namespace serre {

// Finite-dimensional Lie superalgebra by structure constants on a
// parity-homogeneous basis.
struct SuperLieAlgebra {
    std::vector<std::string> names;
    std::vector<int> parity;                  // 0 even, 1 odd
    std::vector<std::vector<Vec>> bracket;    // bracket[i][j] in basis coords

    int dim() const { return static_cast<int>(names.size()); }
    Vec apply_bracket(const Vec& x, const Vec& y) const;
};

// The 8-dimensional algebra of 4x4 supermatrices [[A,B],[B,A]], basis
// e11,e12,e21,e22 (even) and f11,f12,f21,f22 (odd, the barred units).
SuperLieAlgebra build_q2();

bool check_super_antisymmetry(const SuperLieAlgebra& g);
bool check_super_jacobi(const SuperLieAlgebra& g);

struct Weight {
    Rational l1, l2;

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const {
        return l1 < o.l1 || (l1 == o.l1 && l2 < o.l2);
    }
};

enum class BlockId { StronglyTypical, Typical, HalfIntegerAtypical, Principal };
std::string block_name(BlockId b);
BlockId block_from_name(const std::string& name);

struct WeightClass {
    bool atypical = false;
    bool parity_self_dual = false;
    BlockId block = BlockId::StronglyTypical;
    // The strong-typicality test (both coordinates nonzero) is a heuristic
    // surfaced to callers, not a proved criterion.
    bool strong_typicality_heuristic = false;
};
WeightClass classify_weight(const Weight& w);  // throws on non-dominant input

// Multiset of diagonal-torus weights with multiplicities, split by parity.
struct CharacterVector {
    std::map<Weight, long> even, odd;

    long total_dim() const;
    long even_dim() const;
    long odd_dim() const;
};

// Character of the irreducible highest-weight module N(w) of the even part,
// dimension w.l1 - w.l2 + 1, placed in the given parity.
CharacterVector irreducible_character(const Weight& w, int parity = 0);
long irreducible_dim(const Weight& w);

CharacterVector character_sum(const CharacterVector& a, const CharacterVector& b);
CharacterVector character_tensor(const CharacterVector& a, const CharacterVector& b);

// Greedy highest-weight decomposition; throws InputError on a multiset that
// is not a non-negative sum of irreducible characters.
std::vector<std::pair<Weight, long>> decompose_character(
    const std::map<Weight, long>& weights);
std::vector<std::pair<Weight, long>> tensor_decompose(const CharacterVector& a,
                                                      const CharacterVector& b);

// Adjoint character of the exterior algebra on the odd part: 16-dimensional,
// equal even and odd halves.
CharacterVector wedge_g1_character();

// Composition bookkeeping for the module induced from N((k,-k)).
struct InducedData {
    CharacterVector character;
    long dim = 0;
    std::vector<Weight> projective_factors;  // highest weights, with repeats
    int projective_length = 0;               // 0 when k = 0 (indecomposable)
    bool indecomposable = false;
    int indecomposable_length = 0;           // set when indecomposable
};
InducedData induced_character(const Rational& k);

// Module over a Lie superalgebra with explicit action matrices; the first
// even_dim coordinates are even.
struct SuperModule {
    int even_dim = 0, odd_dim = 0;
    std::vector<Matrix> action;  // one per basis element of g

    int dim() const { return even_dim + odd_dim; }
};
SuperModule trivial_module(const SuperLieAlgebra& g, int parity);
bool check_module(const SuperLieAlgebra& g, const SuperModule& m);

// dim H^1(g, Hom(l1, l2)) via parity-even cochains in degrees 0..2.
long ext1_super(const SuperLieAlgebra& g, const SuperModule& l1,
                const SuperModule& l2);
// Independent oracle for the pair (trivial even, trivial odd): enumerate
// two-dimensional extensions by solving all bracket constraints directly.
long ext1_trivial_pair_bruteforce(const SuperLieAlgebra& g);

// Block presentations: (a) one vertex, (b) loop with square
// zero, (c)/(d) the truncated infinite families.
Presentation synthesize_block(BlockId b, int n = 0);

struct BlockReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
};
BlockReport verify_block(BlockId b, int n = 0);

}  // namespace serre
