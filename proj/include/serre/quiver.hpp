#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "serre/rational.hpp"

namespace serre {

// Malformed or rejected input (bad presentation, non-finite-dimensional, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A randomized check ran out of retries and the deterministic fallback is out
// of range.  First-class outcome, never silently coerced to yes/no.
struct UndeterminedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;
    bool same_shape(const Quiver& o) const;
};

// One summand of a relation: coef * (arrow word, read left to right:
// for a: i->j and b: j->k the word {a,b} is a path i->k).
struct PathTerm {
    Rational coef;
    std::vector<int> arrows;
};

// Rational combination of parallel paths, set equal to zero.  All terms must
// share source and target and have length >= 2.
struct Relation {
    std::vector<PathTerm> terms;
};

struct ValidateOptions {
    int length_cap = 64;      // enumeration beyond this signals non-finiteness
    long path_cap = 200000;   // safety valve on tracked paths
};

// Quiver with admissible relations together with a computed path basis per
// vertex pair and the multiplication table on that basis.
class Algebra {
public:
    struct BasisElem {
        int src, tgt;
        std::vector<int> word;  // arrow indices; empty word = idempotent
    };
    using Element = std::vector<std::pair<int, Rational>>;  // sparse, by basis index

    const Quiver& quiver() const { return q_; }
    const std::vector<Relation>& relations() const { return rels_; }
    int num_vertices() const { return static_cast<int>(q_.vertices.size()); }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElem>& basis() const { return basis_; }
    // Basis indices spanning e_i A e_j (paths i -> j).
    const std::vector<int>& basis_at(int i, int j) const {
        return by_pair_[static_cast<size_t>(i) * num_vertices() + j];
    }
    int idempotent(int v) const { return idem_[v]; }
    int arrow_class(int a) const { return arrow_class_[a]; }

    // Product of two basis elements; empty when not composable or zero.
    const Element& mult(int u, int v) const {
        return mult_[static_cast<size_t>(u) * dimension() + v];
    }
    Element multiply(const Element& x, const Element& y) const;

    // Class of an arbitrary composable arrow word.
    Element reduce_word(const std::vector<int>& word) const;

    std::string word_name(const std::vector<int>& word) const;
    std::string element_str(const Element& x) const;

private:
    friend Algebra validate(const Quiver&, const std::vector<Relation>&,
                            const ValidateOptions&);
    Quiver q_;
    std::vector<Relation> rels_;
    std::vector<BasisElem> basis_;
    std::vector<std::vector<int>> by_pair_;
    std::vector<int> idem_;
    std::vector<int> arrow_class_;
    std::vector<Element> mult_;
    // Reduction state kept for reduce_word.
    std::map<std::vector<int>, long> path_id_;
    std::map<uint64_t, std::vector<std::pair<uint64_t, Rational>>> pivot_rows_;
    std::map<uint64_t, int> key_to_basis_;
    std::vector<std::vector<int>> zero_words_;
    int max_basis_len_ = 0;
    int reduce_len_cap_ = 0;

    uint64_t path_key(long id, size_t len) const;
    bool has_zero_subword(const std::vector<int>& word) const;
};

// Checks the presentation (composability, admissibility, local finiteness),
// computes the path basis by breadth-first enumeration with linear-algebra
// reduction modulo the relation ideal, and audits the result.
Algebra validate(const Quiver& q, const std::vector<Relation>& rels,
                 const ValidateOptions& opt = {});

// Entry (i,j) = dim e_i A e_j = multiplicity of the simple at j in P(i).
std::vector<std::vector<long>> cartan_matrix(const Algebra& a);
bool cartan_is_symmetric(const Algebra& a);

struct BiserialCertificate {
    bool ok = true;
    std::string violation;  // offending vertex/arrow when not biserial
};
BiserialCertificate is_special_biserial(const Algebra& a);

// The two infinite quivers of the block classification.
enum class FamilyId { HalfIntegerAtypical, Principal };

struct TruncatedFamily {
    FamilyId family;
    int level = 0;
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<int> unstable_vertices;  // boundary column, excluded from
                                         // interior-stability assertions
    Algebra algebra;
};

// First n columns of the chosen family with all relations fully supported on
// the retained vertices.  n >= 2 for the one-row family, n >= 3 for the
// two-row family.
TruncatedFamily truncate(FamilyId family, int n, const ValidateOptions& opt = {});

// Arrow-reversed algebra (words reversed in every relation).
Algebra opposite_algebra(const Algebra& a);

// --- text presentation format -------------------------------------------
//
//   # comment
//   vertex <label>
//   arrow <name>: <src> -> <tgt>
//   relation <coef> <path> [<+-coef> <path> ...] = 0
//
// where <path> is a*b*c read left to right and <coef> a rational p/q with
// optional sign.  parse(print(x)) == x.

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
};

std::string print_presentation(const Quiver& q, const std::vector<Relation>& rels);
Presentation parse_presentation(const std::string& text);

std::string to_dot(const Quiver& q);
Quiver quiver_from_dot(const std::string& text);

}  // namespace serre
