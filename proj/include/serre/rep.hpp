#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "serre/matrix.hpp"
#include "serre/quiver.hpp"

namespace serre {

// Finite-dimensional module: one space per vertex, one matrix per arrow
// (source space -> target space, acting on column vectors).
struct Representation {
    const Algebra* alg = nullptr;
    std::vector<int> dims;
    std::vector<Matrix> arrow;  // arrow[a]: dims[tgt] x dims[src]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Builds and checks a representation: shapes and every relation evaluating to
// the zero map.
Representation make_rep(const Algebra& a, std::vector<int> dims,
                        std::vector<Matrix> arrows);

Representation zero_rep(const Algebra& a);
Representation simple(const Algebra& a, int v);
Representation projective(const Algebra& a, int v);
Representation injective(const Algebra& a, int v);

// Matrix of the action of a path word on M (dims[tgt] x dims[src]).
Matrix path_action(const Representation& m, const std::vector<int>& word);
// Action of a general algebra element between two fixed vertices.
Matrix element_action(const Representation& m, const Algebra::Element& x,
                      int src, int tgt);

struct ModuleMap {
    Representation source, target;
    std::vector<Matrix> comp;  // per vertex

    bool is_zero() const;
};

ModuleMap make_map(const Representation& src, const Representation& tgt,
                  std::vector<Matrix> comp);  // checks the intertwiner condition
ModuleMap identity_map(const Representation& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

// Basis of the intertwiner space Hom(M, N).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);

// Per-vertex subspace, stored as a matrix whose columns span it.
using Subspace = std::vector<Matrix>;

struct SubQuotient {
    Representation rep;
    ModuleMap map;  // inclusion (sub) or projection (quotient)
};

SubQuotient sub_representation(const Representation& m, const Subspace& s);
SubQuotient quotient_representation(const Representation& m, const Subspace& s);

SubQuotient kernel(const ModuleMap& f);    // with inclusion into source
SubQuotient image(const ModuleMap& f);     // with inclusion into target
SubQuotient cokernel(const ModuleMap& f);  // with projection from target

// Multiset of simple labels per layer, as vertex -> multiplicity.
using Layer = std::map<int, int>;

std::vector<Layer> radical_series(const Representation& m);  // top-down
std::vector<Layer> socle_series(const Representation& m);    // bottom-up
std::vector<Layer> loewy_layers(const Representation& m);    // = radical series

// Sum of images of all maps from each generator into M.
SubQuotient trace_submodule(const std::vector<Representation>& generators,
                            const Representation& m);

struct IsoResult {
    bool isomorphic = false;
    std::optional<ModuleMap> witness;
    std::string obstruction;
};

// Randomized with deterministic low-dimension fallback; throws
// UndeterminedError when neither settles the question.
IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        uint64_t seed = 0);

// Contravariant dual, as a module over the given opposite algebra.
Representation dual(const Representation& m, const Algebra& opposite);

// --- projective machinery ------------------------------------------------

// Finite direct sum of indecomposable projectives with bookkeeping for the
// generator of each summand.
struct ProjSum {
    const Algebra* alg = nullptr;
    std::vector<int> verts;  // summand s = P(verts[s])
    Representation rep;

    // Position of basis path `b` of summand `s` inside rep at the path's
    // target vertex.
    int position(int s, int basis_elem) const;
    int generator_position(int s) const;  // position of e_{verts[s]}
    int total_summands() const { return static_cast<int>(verts.size()); }
};

ProjSum proj_sum(const Algebra& a, const std::vector<int>& verts);

// The hom P(verts) -> M determined by Yoneda data (one vector in M at
// verts[s] per summand).
ModuleMap yoneda_map(const ProjSum& p, const Representation& m,
                     const std::vector<Vec>& data);

// Component decomposition of a map between projective sums: entry (t, s) is
// the algebra element of e_{p0.verts[t]} A e_{p1.verts[s]} implementing the
// map P(p1.verts[s]) -> P(p0.verts[t]).
std::vector<std::vector<Algebra::Element>> proj_map_components(
    const ProjSum& p1, const ProjSum& p0, const ModuleMap& d);

// Minimal projective presentation P1 -> P0 -> M -> 0 (covers by tops).
struct ProjPresentation {
    ProjSum p0, p1;
    ModuleMap d;    // P1 -> P0
    ModuleMap eps;  // P0 -> M
};

// Projective cover of M.
struct Cover {
    ProjSum p;
    ModuleMap eps;
};
Cover projective_cover(const Representation& m);
ProjPresentation minimal_presentation(const Representation& m);

// --- serialization -------------------------------------------------------

std::string print_representation(const Representation& m);
Representation parse_representation(const Algebra& a, const std::string& text);

}  // namespace serre
