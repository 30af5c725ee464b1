#include "serre/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace serre {

namespace {

// Column ordering for the elimination: longer paths are eliminated first, so
// the surviving (non-pivot) normal forms are the shortest representatives.
// Smaller key = higher elimination priority.
constexpr uint64_t kLenSlot = 1u << 24;  // path ids per length bucket

uint64_t make_key(size_t len, long id) {
    return (static_cast<uint64_t>(4096 - len) << 24) | static_cast<uint64_t>(id);
}

using SparseRow = std::vector<std::pair<uint64_t, Rational>>;  // sorted by key

}  // namespace

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].src == v) r.push_back(static_cast<int>(i));
    return r;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].tgt == v) r.push_back(static_cast<int>(i));
    return r;
}

bool Quiver::same_shape(const Quiver& o) const {
    if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name != o.arrows[i].name || arrows[i].src != o.arrows[i].src ||
            arrows[i].tgt != o.arrows[i].tgt)
            return false;
    return true;
}

uint64_t Algebra::path_key(long id, size_t len) const { return make_key(len, id); }

bool Algebra::has_zero_subword(const std::vector<int>& word) const {
    for (const auto& z : zero_words_) {
        if (z.size() > word.size()) continue;
        for (size_t i = 0; i + z.size() <= word.size(); ++i)
            if (std::equal(z.begin(), z.end(), word.begin() + i)) return true;
    }
    return false;
}

std::string Algebra::word_name(const std::vector<int>& word) const {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += '*';
        s += q_.arrows[word[i]].name;
    }
    return s;
}

std::string Algebra::element_str(const Element& x) const {
    if (x.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += " + ";
        const auto& be = basis_[x[i].first];
        if (x[i].second != 1) s += to_string(x[i].second) + "*";
        s += be.word.empty() ? "e_" + q_.vertices[be.src] : word_name(be.word);
    }
    return s;
}

Algebra::Element Algebra::reduce_word(const std::vector<int>& word) const {
    if (word.empty()) throw InputError("reduce_word needs a nonempty word");
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (q_.arrows[word[i]].tgt != q_.arrows[word[i + 1]].src)
            throw InputError("non-composable word");
    if (has_zero_subword(word)) return {};
    if (static_cast<int>(word.size()) > reduce_len_cap_)
        throw InputError("word too long to reduce against the computed ideal");
    auto it = path_id_.find(word);
    assert(it != path_id_.end());
    std::map<uint64_t, Rational> work;
    work[path_key(it->second, word.size())] = 1;
    Element out;
    while (!work.empty()) {
        auto [key, coef] = *work.begin();
        work.erase(work.begin());
        if (is_zero(coef)) continue;
        auto piv = pivot_rows_.find(key);
        if (piv != pivot_rows_.end()) {
            for (const auto& [k2, c2] : piv->second)
                if (k2 != key) work[k2] -= coef * c2;
        } else {
            out.emplace_back(key_to_basis_.at(key), coef);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Algebra::Element Algebra::multiply(const Element& x, const Element& y) const {
    std::map<int, Rational> acc;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y)
            for (const auto& [w, cw] : mult(u, v)) acc[w] += cu * cv * cw;
    Element out;
    for (auto& [w, c] : acc)
        if (!is_zero(c)) out.emplace_back(w, c);
    return out;
}

namespace {

struct PathRec {
    int src, tgt;
    std::vector<int> word;
};

struct Eliminator {
    // key -> fully reduced monic row led by that key
    std::map<uint64_t, SparseRow> rows;

    bool is_pivot(uint64_t k) const { return rows.count(k) != 0; }

    // Returns true if the row was independent (new pivot created).
    bool add_row(std::map<uint64_t, Rational> work) {
        SparseRow out;
        while (!work.empty()) {
            auto [key, coef] = *work.begin();
            work.erase(work.begin());
            if (is_zero(coef)) continue;
            auto piv = rows.find(key);
            if (piv != rows.end()) {
                for (const auto& [k2, c2] : piv->second)
                    if (k2 != key) work[k2] -= coef * c2;
            } else {
                out.emplace_back(key, coef);
            }
        }
        if (out.empty()) return false;
        std::sort(out.begin(), out.end());
        uint64_t lead = out.front().first;
        Rational inv = 1 / out.front().second;
        for (auto& [k, c] : out) c *= inv;
        // Back-substitute into existing rows to keep them fully reduced.
        for (auto& [l, row] : rows) {
            auto hit = std::find_if(row.begin(), row.end(),
                                    [&](const auto& e) { return e.first == lead; });
            if (hit == row.end()) continue;
            Rational f = hit->second;
            std::map<uint64_t, Rational> merged(row.begin(), row.end());
            for (const auto& [k, c] : out) merged[k] -= f * c;
            row.clear();
            for (auto& [k, c] : merged)
                if (!is_zero(c)) row.emplace_back(k, c);
        }
        rows[lead] = std::move(out);
        return true;
    }
};

}  // namespace

Algebra validate(const Quiver& q, const std::vector<Relation>& rels_in,
                 const ValidateOptions& opt) {
    // --- syntactic checks ------------------------------------------------
    if (q.vertices.empty()) throw InputError("quiver has no vertices");
    for (size_t i = 0; i < q.vertices.size(); ++i)
        for (size_t j = i + 1; j < q.vertices.size(); ++j)
            if (q.vertices[i] == q.vertices[j])
                throw InputError("duplicate vertex label: " + q.vertices[i]);
    for (size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        if (a.src < 0 || a.src >= static_cast<int>(q.vertices.size()) ||
            a.tgt < 0 || a.tgt >= static_cast<int>(q.vertices.size()))
            throw InputError("arrow " + a.name + " has undeclared endpoint");
        for (size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[j].name == a.name)
                throw InputError("duplicate arrow name: " + a.name);
    }

    std::vector<Relation> rels;
    for (const auto& r : rels_in) {
        // Combine like terms; drop vanishing ones.
        std::map<std::vector<int>, Rational> combined;
        int src = -1, tgt = -1;
        for (const auto& t : r.terms) {
            if (t.arrows.size() < 2)
                throw InputError("relation term of length < 2 (not admissible)");
            for (int a : t.arrows)
                if (a < 0 || a >= static_cast<int>(q.arrows.size()))
                    throw InputError("relation references unknown arrow");
            for (size_t i = 0; i + 1 < t.arrows.size(); ++i)
                if (q.arrows[t.arrows[i]].tgt != q.arrows[t.arrows[i + 1]].src)
                    throw InputError("non-composable relation term");
            int s = q.arrows[t.arrows.front()].src;
            int e = q.arrows[t.arrows.back()].tgt;
            if (src == -1) { src = s; tgt = e; }
            else if (s != src || e != tgt)
                throw InputError("relation terms do not share source and target");
            combined[t.arrows] += t.coef;
        }
        Relation clean;
        for (auto& [w, c] : combined)
            if (!is_zero(c)) clean.terms.push_back({c, w});
        if (!clean.terms.empty()) rels.push_back(std::move(clean));
    }

    // Monomial relations: any path containing such a word is zero outright,
    // which keeps the enumeration small.
    std::vector<std::vector<int>> zero_words;
    for (const auto& r : rels)
        if (r.terms.size() == 1) zero_words.push_back(r.terms[0].arrows);
    auto contains_zero = [&](const std::vector<int>& word) {
        for (const auto& z : zero_words) {
            if (z.size() > word.size()) continue;
            for (size_t i = 0; i + z.size() <= word.size(); ++i)
                if (std::equal(z.begin(), z.end(), word.begin() + i)) return true;
        }
        return false;
    };

    int max_rel = 2;
    for (const auto& r : rels)
        for (const auto& t : r.terms)
            max_rel = std::max(max_rel, static_cast<int>(t.arrows.size()));

    // --- breadth-first path enumeration with elimination -----------------
    std::vector<PathRec> paths;
    std::map<std::vector<int>, long> path_id;
    std::vector<std::vector<long>> by_len(1);
    int nv = static_cast<int>(q.vertices.size());
    for (int v = 0; v < nv; ++v) {
        by_len[0].push_back(static_cast<long>(paths.size()));
        path_id[{}] = -1;  // placeholder; trivial paths handled by vertex
        paths.push_back({v, v, {}});
    }
    // Trivial paths share the empty word; look them up by vertex instead.
    auto trivial_id = [&](int v) { return static_cast<long>(v); };

    Eliminator elim;
    auto key_of = [&](long id) { return make_key(paths[id].word.size(), id); };

    int stable_window = 0;
    bool stable = false;
    int cap = opt.length_cap;
    int final_len = 0;

    for (int L = 1;; ++L) {
        if (L > 2 * opt.length_cap + 2 * max_rel)
            throw InputError("path enumeration exceeded the hard length cap");
        // New paths of length L.
        by_len.push_back({});
        for (long pid : by_len[L - 1]) {
            int end = paths[pid].tgt;
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].src != end) continue;
                std::vector<int> w = paths[pid].word;
                w.push_back(static_cast<int>(ai));
                if (contains_zero(w)) continue;
                long id = static_cast<long>(paths.size());
                if (id > opt.path_cap)
                    throw InputError(
                        "path count cap exceeded; presentation is not finite "
                        "dimensional (or raise the cap)");
                path_id[w] = id;
                by_len[L].push_back(id);
                paths.push_back({paths[pid].src, q.arrows[ai].tgt, std::move(w)});
            }
        }
        // Relation consequences p*r*q.  A row is added at the first stage
        // where every surviving term (the zero-word-containing ones drop out)
        // is an enumerated path, i.e. has length at most L.  With relations
        // whose terms have different lengths the longest raw term may vanish
        // monomially, so waiting for it would delay the row by a stage and
        // defeat the stabilization window; rows retried at later stages just
        // reduce to nothing.
        for (const auto& r : rels) {
            int m = 0, rsrc = q.arrows[r.terms[0].arrows.front()].src,
                rtgt = q.arrows[r.terms[0].arrows.back()].tgt;
            for (const auto& t : r.terms)
                m = std::max(m, static_cast<int>(t.arrows.size()));
            for (int rest = std::max(0, L - m); rest <= L - 2; ++rest) {
                for (int lp = 0; lp <= rest; ++lp) {
                    int lq = rest - lp;
                    if (lp >= static_cast<int>(by_len.size()) ||
                        lq >= static_cast<int>(by_len.size()))
                        continue;
                    for (long pid : by_len[lp]) {
                        if (paths[pid].tgt != rsrc) continue;
                        for (long qid : by_len[lq]) {
                            if (paths[qid].src != rtgt) continue;
                            std::map<uint64_t, Rational> row;
                            bool deferred = false;
                            for (const auto& t : r.terms) {
                                std::vector<int> w = paths[pid].word;
                                w.insert(w.end(), t.arrows.begin(),
                                         t.arrows.end());
                                w.insert(w.end(), paths[qid].word.begin(),
                                         paths[qid].word.end());
                                if (contains_zero(w)) continue;
                                if (static_cast<int>(w.size()) > L) {
                                    // term not yet enumerated; the whole row
                                    // reappears at a later stage
                                    deferred = true;
                                    break;
                                }
                                long id = w.empty() ? trivial_id(paths[pid].src)
                                                    : path_id.at(w);
                                row[make_key(w.size(), id)] += t.coef;
                            }
                            if (!deferred && !row.empty())
                                elim.add_row(std::move(row));
                        }
                    }
                }
            }
        }
        // Stabilization bookkeeping.
        if (!stable) {
            int fresh = 0;
            for (long pid : by_len[L])
                if (!elim.is_pivot(key_of(pid))) ++fresh;
            if (std::getenv("SERRE_DEBUG_VALIDATE")) {
                std::fprintf(stderr, "L=%d new=%zu fresh=%d pivots=%zu\n", L,
                             by_len[L].size(), fresh, elim.rows.size());
                if (fresh > 0 && fresh <= 12)
                    for (long pid : by_len[L])
                        if (!elim.is_pivot(key_of(pid))) {
                            std::string s;
                            for (int a : paths[pid].word)
                                s += q.arrows[a].name + " ";
                            std::fprintf(stderr, "  fresh: %s\n", s.c_str());
                        }
            }
            stable_window = (fresh == 0) ? stable_window + 1 : 0;
            if (stable_window >= max_rel) stable = true;
            if (!stable && L >= opt.length_cap)
                throw InputError(
                    "no stabilization by the length cap: non-nilpotent loop "
                    "structure, the presentation is not finite dimensional");
        }
        if (stable) {
            int maxlen = 0;
            for (size_t id = 0; id < paths.size(); ++id)
                if (!elim.is_pivot(key_of(static_cast<long>(id))))
                    maxlen = std::max(maxlen,
                                      static_cast<int>(paths[id].word.size()));
            int target = 2 * maxlen + 2 * max_rel;
            if (L >= target) { final_len = L; break; }
        }
    }

    // --- assemble the algebra -------------------------------------------
    Algebra alg;
    alg.q_ = q;
    alg.rels_ = rels;
    alg.zero_words_ = zero_words;
    alg.reduce_len_cap_ = final_len;

    std::vector<long> surviving;
    for (size_t id = 0; id < paths.size(); ++id)
        if (!elim.is_pivot(make_key(paths[id].word.size(), id)))
            surviving.push_back(static_cast<long>(id));
    std::stable_sort(surviving.begin(), surviving.end(), [&](long a, long b) {
        if (paths[a].word.size() != paths[b].word.size())
            return paths[a].word.size() < paths[b].word.size();
        return a < b;
    });
    int max_basis_len = 0;
    for (long id : surviving)
        max_basis_len = std::max(max_basis_len,
                                 static_cast<int>(paths[id].word.size()));
    // Everything longer than the basis (with headroom for cutoff artifacts at
    // the enumeration boundary) must have reduced away.
    for (long id : surviving)
        if (static_cast<int>(paths[id].word.size()) > max_basis_len)
            throw InputError("internal: unreduced long path survived");
    alg.max_basis_len_ = max_basis_len;

    alg.idem_.assign(nv, -1);
    alg.arrow_class_.assign(q.arrows.size(), -1);
    alg.by_pair_.assign(static_cast<size_t>(nv) * nv, {});
    for (long id : surviving) {
        int bidx = static_cast<int>(alg.basis_.size());
        const auto& p = paths[id];
        alg.key_to_basis_[make_key(p.word.size(), id)] = bidx;
        if (p.word.empty()) alg.idem_[p.src] = bidx;
        if (p.word.size() == 1) alg.arrow_class_[p.word[0]] = bidx;
        alg.by_pair_[static_cast<size_t>(p.src) * nv + p.tgt].push_back(bidx);
        alg.basis_.push_back({p.src, p.tgt, p.word});
    }
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (alg.arrow_class_[a] < 0 && !contains_zero({a}))
            throw InputError("internal: arrow class missing from basis");
    alg.pivot_rows_ = std::move(elim.rows);
    alg.path_id_ = std::move(path_id);
    for (int v = 0; v < nv; ++v) alg.path_id_[{}] = -1;  // unused marker

    // Multiplication table.
    int d = alg.dimension();
    alg.mult_.assign(static_cast<size_t>(d) * d, {});
    for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
            const auto& bu = alg.basis_[u];
            const auto& bv = alg.basis_[v];
            if (bu.tgt != bv.src) continue;
            if (bu.word.empty()) {
                alg.mult_[static_cast<size_t>(u) * d + v] = {{v, Rational(1)}};
                continue;
            }
            if (bv.word.empty()) {
                alg.mult_[static_cast<size_t>(u) * d + v] = {{u, Rational(1)}};
                continue;
            }
            std::vector<int> w = bu.word;
            w.insert(w.end(), bv.word.begin(), bv.word.end());
            alg.mult_[static_cast<size_t>(u) * d + v] = alg.reduce_word(w);
        }
    }

    // --- audits ----------------------------------------------------------
    {  // direct-sum decomposition
        size_t total = 0;
        for (const auto& lst : alg.by_pair_) total += lst.size();
        if (static_cast<int>(total) != d)
            throw InputError("internal: basis does not decompose over vertex pairs");
        for (int v = 0; v < nv; ++v)
            if (alg.idem_[v] < 0)
                throw InputError("internal: missing idempotent");
    }
    {  // associativity, exhaustive when small
        auto check = [&](int u, int v, int w) {
            Algebra::Element eu{{u, Rational(1)}}, ev{{v, Rational(1)}},
                ew{{w, Rational(1)}};
            auto lhs = alg.multiply(alg.multiply(eu, ev), ew);
            auto rhs = alg.multiply(eu, alg.multiply(ev, ew));
            if (lhs != rhs)
                throw InputError("internal: multiplication table not associative");
        };
        if (d <= 50) {
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v)
                    for (int w = 0; w < d; ++w) check(u, v, w);
        } else {
            std::mt19937_64 rng(12345);
            std::uniform_int_distribution<int> pick(0, d - 1);
            for (int t = 0; t < 2000; ++t) check(pick(rng), pick(rng), pick(rng));
        }
    }
    for (int v = 0; v < nv; ++v) {
        // e_v A e_v must be local: positive-length loops span a nilpotent ideal.
        std::vector<Algebra::Element> layer;
        std::vector<int> loops;
        for (int b : alg.basis_at(v, v))
            if (!alg.basis_[b].word.empty()) {
                loops.push_back(b);
                layer.push_back({{b, Rational(1)}});
            }
        int guard = d + 1;
        while (!layer.empty() && guard-- > 0) {
            std::vector<Algebra::Element> next;
            for (const auto& x : layer)
                for (int l : loops) {
                    auto p = alg.multiply(x, {{l, Rational(1)}});
                    if (!p.empty()) next.push_back(std::move(p));
                }
            layer = std::move(next);
        }
        if (!layer.empty())
            throw InputError("endomorphism ring at vertex " + q.vertices[v] +
                             " is not local (radical not nilpotent)");
    }
    return alg;
}

std::vector<std::vector<long>> cartan_matrix(const Algebra& a) {
    int n = a.num_vertices();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[i][j] = static_cast<long>(a.basis_at(i, j).size());
    return c;
}

bool cartan_is_symmetric(const Algebra& a) {
    auto c = cartan_matrix(a);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (c[i][j] != c[j][i]) return false;
    return true;
}

BiserialCertificate is_special_biserial(const Algebra& a) {
    const Quiver& q = a.quiver();
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (q.arrows_into(v).size() > 2)
            return {false, "vertex " + q.vertices[v] + " has more than two incoming arrows"};
        if (q.arrows_from(v).size() > 2)
            return {false, "vertex " + q.vertices[v] + " has more than two outgoing arrows"};
    }
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int succ = 0, pred = 0;
        for (size_t bi = 0; bi < q.arrows.size(); ++bi) {
            if (q.arrows[ai].tgt == q.arrows[bi].src &&
                !a.reduce_word({static_cast<int>(ai), static_cast<int>(bi)}).empty())
                ++succ;
            if (q.arrows[bi].tgt == q.arrows[ai].src &&
                !a.reduce_word({static_cast<int>(bi), static_cast<int>(ai)}).empty())
                ++pred;
        }
        if (succ > 1)
            return {false, "arrow " + q.arrows[ai].name + " has two nonzero continuations"};
        if (pred > 1)
            return {false, "arrow " + q.arrows[ai].name + " has two nonzero predecessors"};
    }
    return {};
}

namespace {

Relation make_rel(std::initializer_list<std::pair<Rational, std::vector<int>>> terms) {
    Relation r;
    for (auto& [c, w] : terms) r.terms.push_back({c, w});
    return r;
}

}  // namespace

TruncatedFamily truncate(FamilyId family, int n, const ValidateOptions& opt) {
    TruncatedFamily tf;
    tf.family = family;
    tf.level = n;
    Quiver& q = tf.quiver;
    auto& rels = tf.relations;

    if (family == FamilyId::HalfIntegerAtypical) {
        if (n < 2) throw InputError("truncation level must be >= 2 for this family");
        for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
        std::vector<int> A(n - 1), B(n - 1);
        for (int i = 0; i < n - 1; ++i) {
            A[i] = static_cast<int>(q.arrows.size());
            q.arrows.push_back({"a" + std::to_string(i), i, i + 1});
        }
        for (int i = 0; i < n - 1; ++i) {
            B[i] = static_cast<int>(q.arrows.size());
            q.arrows.push_back({"b" + std::to_string(i), i + 1, i});
        }
        for (int i = 0; i + 1 < n - 1; ++i) {
            rels.push_back(make_rel({{1, {A[i], A[i + 1]}}}));
            rels.push_back(make_rel({{1, {B[i + 1], B[i]}}}));
        }
        for (int i = 1; i < n - 1; ++i)
            rels.push_back(make_rel({{1, {A[i], B[i]}}, {-1, {B[i - 1], A[i - 1]}}}));
        if (n == 2)
            // Boundary closure: with a single loop pair no interior relation
            // survives, so the loop at the last vertex is cut instead.
            rels.push_back(make_rel({{1, {B[0], A[0]}}}));
        tf.unstable_vertices = {n - 1};
    } else {
        if (n < 3) throw InputError("truncation level must be >= 3 for this family");
        // Row v carries the un-parity-changed simples, row w their twists.
        for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
        for (int i = 0; i < n; ++i) q.vertices.push_back("w" + std::to_string(i));
        auto V = [&](int i) { return i; };
        auto W = [&](int i) { return n + i; };
        auto add_arrow = [&](const std::string& nm, int s, int t) {
            q.arrows.push_back({nm, s, t});
            return static_cast<int>(q.arrows.size()) - 1;
        };
        int hv = add_arrow("hv", V(0), W(0));
        int hw = add_arrow("hw", W(0), V(0));
        int cv = add_arrow("cv", V(0), V(1));
        int cw = add_arrow("cw", W(0), W(1));
        int dv = add_arrow("dv", V(1), W(0));
        int dw = add_arrow("dw", W(1), V(0));
        std::vector<int> Av(n - 1, -1), Bv(n - 1, -1), Aw(n - 1, -1), Bw(n - 1, -1);
        for (int i = 1; i < n - 1; ++i) {
            Av[i] = add_arrow("av" + std::to_string(i), V(i), V(i + 1));
            Bv[i] = add_arrow("bv" + std::to_string(i), V(i + 1), V(i));
            Aw[i] = add_arrow("aw" + std::to_string(i), W(i), W(i + 1));
            Bw[i] = add_arrow("bw" + std::to_string(i), W(i + 1), W(i));
        }
        for (int i = 1; i + 1 < n - 1; ++i) {
            rels.push_back(make_rel({{1, {Av[i], Av[i + 1]}}}));
            rels.push_back(make_rel({{1, {Bv[i + 1], Bv[i]}}}));
            rels.push_back(make_rel({{1, {Aw[i], Aw[i + 1]}}}));
            rels.push_back(make_rel({{1, {Bw[i + 1], Bw[i]}}}));
        }
        for (int i = 2; i < n - 1; ++i) {
            rels.push_back(make_rel({{1, {Av[i], Bv[i]}}, {-1, {Bv[i - 1], Av[i - 1]}}}));
            rels.push_back(make_rel({{1, {Aw[i], Bw[i]}}, {-1, {Bw[i - 1], Aw[i - 1]}}}));
        }
        // Loops at column one: the a-b loop equals the d-h-c detour.
        rels.push_back(make_rel({{1, {Av[1], Bv[1]}}, {-1, {dv, hw, cv}}}));
        rels.push_back(make_rel({{1, {Aw[1], Bw[1]}}, {-1, {dw, hv, cw}}}));
        // Loops at column zero commute.
        rels.push_back(make_rel({{1, {hv, cw, dw}}, {-1, {cv, dv, hw}}}));
        rels.push_back(make_rel({{1, {hw, cv, dv}}, {-1, {cw, dw, hv}}}));
        // Zero words.
        rels.push_back(make_rel({{1, {hv, hw}}}));
        rels.push_back(make_rel({{1, {hw, hv}}}));
        rels.push_back(make_rel({{1, {cv, Av[1]}}}));
        rels.push_back(make_rel({{1, {cw, Aw[1]}}}));
        rels.push_back(make_rel({{1, {Bv[1], dv}}}));
        rels.push_back(make_rel({{1, {Bw[1], dw}}}));
        rels.push_back(make_rel({{1, {dv, cw}}}));
        rels.push_back(make_rel({{1, {dw, cv}}}));
        tf.unstable_vertices = {V(n - 1), W(n - 1)};
    }
    tf.algebra = validate(tf.quiver, tf.relations, opt);
    return tf;
}

Algebra opposite_algebra(const Algebra& a) {
    Quiver q;
    q.vertices = a.quiver().vertices;
    for (const auto& ar : a.quiver().arrows) q.arrows.push_back({ar.name, ar.tgt, ar.src});
    std::vector<Relation> rels;
    for (const auto& r : a.relations()) {
        Relation rr;
        for (const auto& t : r.terms) {
            PathTerm tt;
            tt.coef = t.coef;
            tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
            rr.terms.push_back(std::move(tt));
        }
        rels.push_back(std::move(rr));
    }
    return validate(q, rels);
}

// --- text formats --------------------------------------------------------

std::string print_presentation(const Quiver& q, const std::vector<Relation>& rels) {
    std::ostringstream os;
    for (const auto& v : q.vertices) os << "vertex " << v << "\n";
    for (const auto& a : q.arrows)
        os << "arrow " << a.name << ": " << q.vertices[a.src] << " -> "
           << q.vertices[a.tgt] << "\n";
    for (const auto& r : rels) {
        os << "relation";
        for (const auto& t : r.terms) {
            os << " " << to_string(t.coef);
            os << " ";
            for (size_t i = 0; i < t.arrows.size(); ++i) {
                if (i) os << "*";
                os << q.arrows[t.arrows[i]].name;
            }
        }
        os << " = 0\n";
    }
    return os.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_any = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        saw_any = true;
        auto fail = [&](const std::string& msg) -> void {
            throw InputError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok[0] == "vertex") {
            if (tok.size() != 2) fail("expected: vertex <label>");
            p.quiver.vertices.push_back(tok[1]);
        } else if (tok[0] == "arrow") {
            // arrow <name>: <src> -> <tgt>
            if (tok.size() != 5 || tok[3] != "->") fail("expected: arrow <name>: <src> -> <tgt>");
            std::string name = tok[1];
            if (name.empty() || name.back() != ':') fail("arrow name must end with ':'");
            name.pop_back();
            int s = p.quiver.vertex_index(tok[2]);
            int e = p.quiver.vertex_index(tok[4]);
            if (s < 0 || e < 0) fail("arrow endpoint not declared");
            p.quiver.arrows.push_back({name, s, e});
        } else if (tok[0] == "relation") {
            if (tok.size() < 4 || tok[tok.size() - 2] != "=" || tok.back() != "0")
                fail("expected: relation <coef> <path> ... = 0");
            Relation r;
            for (size_t i = 1; i + 2 < tok.size(); i += 2) {
                auto c = parse_rational(tok[i]);
                if (!c) fail("bad coefficient: " + tok[i]);
                PathTerm term;
                term.coef = *c;
                std::string path = tok[i + 1];
                std::string cur;
                for (char ch : path + "*") {
                    if (ch == '*') {
                        if (cur.empty()) fail("empty arrow name in path");
                        int ai = p.quiver.arrow_index(cur);
                        if (ai < 0) fail("unknown arrow in relation: " + cur);
                        term.arrows.push_back(ai);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                r.terms.push_back(std::move(term));
            }
            p.relations.push_back(std::move(r));
        } else {
            fail("unknown statement: " + tok[0]);
        }
    }
    if (!saw_any) throw InputError("empty presentation");
    if (p.quiver.vertices.empty()) throw InputError("presentation has no vertices");
    return p;
}

std::string to_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const auto& v : q.vertices) os << "  \"" << v << "\";\n";
    for (const auto& a : q.arrows)
        os << "  \"" << q.vertices[a.src] << "\" -> \"" << q.vertices[a.tgt]
           << "\" [label=\"" << a.name << "\"];\n";
    os << "}\n";
    return os.str();
}

Quiver quiver_from_dot(const std::string& text) {
    Quiver q;
    std::istringstream is(text);
    std::string line;
    auto unquote = [](const std::string& s) -> std::string {
        auto a = s.find('"');
        auto b = s.rfind('"');
        if (a == std::string::npos || b <= a) throw InputError("bad dot token: " + s);
        return s.substr(a + 1, b - a - 1);
    };
    while (std::getline(is, line)) {
        if (line.find("digraph") != std::string::npos || line.find('}') != std::string::npos)
            continue;
        auto arrow_pos = line.find("->");
        if (arrow_pos == std::string::npos) {
            auto semi = line.find(';');
            if (semi == std::string::npos) continue;
            q.vertices.push_back(unquote(line.substr(0, semi)));
        } else {
            auto label_pos = line.find("label=\"");
            if (label_pos == std::string::npos) throw InputError("dot edge without label");
            auto label_end = line.find('"', label_pos + 7);
            std::string name = line.substr(label_pos + 7, label_end - label_pos - 7);
            std::string src = unquote(line.substr(0, arrow_pos));
            std::string tgt = unquote(line.substr(arrow_pos + 2, line.find('[') - arrow_pos - 2));
            int s = q.vertex_index(src), e = q.vertex_index(tgt);
            if (s < 0 || e < 0) throw InputError("dot edge references unknown vertex");
            q.arrows.push_back({name, s, e});
        }
    }
    if (q.vertices.empty()) throw InputError("empty dot graph");
    return q;
}

}  // namespace serre
