#include "serre/rep.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace serre {

namespace {

// Deterministic column basis of the span of the given columns.
Matrix column_basis(const Matrix& m) {
    auto rr = rref(m.transpose());
    std::vector<Vec> rows;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        Vec r(m.rows());
        for (int j = 0; j < m.rows(); ++j) r[j] = rr.reduced.at(static_cast<int>(i), j);
        rows.push_back(std::move(r));
    }
    return Matrix::from_columns(m.rows(), rows);
}

bool in_span(const Matrix& span_cols, const Vec& v) {
    return solve(span_cols, v).has_value();
}

}  // namespace

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Representation make_rep(const Algebra& a, std::vector<int> dims,
                        std::vector<Matrix> arrows) {
    Representation m;
    m.alg = &a;
    m.dims = std::move(dims);
    m.arrow = std::move(arrows);
    if (static_cast<int>(m.dims.size()) != a.num_vertices() ||
        m.arrow.size() != a.quiver().arrows.size())
        throw InputError("representation shape mismatch");
    for (size_t i = 0; i < m.arrow.size(); ++i) {
        const auto& ar = a.quiver().arrows[i];
        if (m.arrow[i].rows() != m.dims[ar.tgt] || m.arrow[i].cols() != m.dims[ar.src])
            throw InputError("arrow matrix shape mismatch for " + ar.name);
    }
    for (const auto& r : a.relations()) {
        int s = a.quiver().arrows[r.terms[0].arrows.front()].src;
        int t = a.quiver().arrows[r.terms[0].arrows.back()].tgt;
        Matrix total(m.dims[t], m.dims[s]);
        for (const auto& term : r.terms)
            total = total + path_action(m, term.arrows) * term.coef;
        if (!total.is_zero())
            throw InputError("relation does not evaluate to zero on representation");
    }
    return m;
}

Representation zero_rep(const Algebra& a) {
    Representation m;
    m.alg = &a;
    m.dims.assign(a.num_vertices(), 0);
    for (const auto& ar : a.quiver().arrows) {
        (void)ar;
        m.arrow.emplace_back(0, 0);
    }
    return m;
}

Representation simple(const Algebra& a, int v) {
    std::vector<int> dims(a.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix> arrows;
    for (const auto& ar : a.quiver().arrows)
        arrows.emplace_back(dims[ar.tgt], dims[ar.src]);
    return make_rep(a, std::move(dims), std::move(arrows));
}

Matrix path_action(const Representation& m, const std::vector<int>& word) {
    if (word.empty()) throw InputError("path_action needs a nonempty word");
    Matrix acc = m.arrow[word[0]];
    for (size_t i = 1; i < word.size(); ++i) acc = m.arrow[word[i]] * acc;
    return acc;
}

Matrix element_action(const Representation& m, const Algebra::Element& x,
                      int src, int tgt) {
    Matrix acc(m.dims[tgt], m.dims[src]);
    for (const auto& [b, c] : x) {
        const auto& be = m.alg->basis()[b];
        assert(be.src == src && be.tgt == tgt);
        if (be.word.empty())
            acc = acc + Matrix::identity(m.dims[src]) * c;
        else
            acc = acc + path_action(m, be.word) * c;
    }
    return acc;
}

Representation projective(const Algebra& a, int v) {
    std::vector<int> dims(a.num_vertices());
    for (int w = 0; w < a.num_vertices(); ++w)
        dims[w] = static_cast<int>(a.basis_at(v, w).size());
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        const auto& src_basis = a.basis_at(v, ar.src);
        const auto& tgt_basis = a.basis_at(v, ar.tgt);
        Matrix f(dims[ar.tgt], dims[ar.src]);
        for (size_t col = 0; col < src_basis.size(); ++col) {
            auto prod = a.mult(src_basis[col], a.arrow_class(static_cast<int>(ai)));
            for (const auto& [b, c] : prod) {
                auto it = std::find(tgt_basis.begin(), tgt_basis.end(), b);
                assert(it != tgt_basis.end());
                f.at(static_cast<int>(it - tgt_basis.begin()), static_cast<int>(col)) = c;
            }
        }
        arrows.push_back(std::move(f));
    }
    return make_rep(a, std::move(dims), std::move(arrows));
}

Representation injective(const Algebra& a, int v) {
    // Dual of paths ending at v: component at w is (e_w A e_v)^*.
    std::vector<int> dims(a.num_vertices());
    for (int w = 0; w < a.num_vertices(); ++w)
        dims[w] = static_cast<int>(a.basis_at(w, v).size());
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        const auto& src_basis = a.basis_at(ar.src, v);  // columns
        const auto& tgt_basis = a.basis_at(ar.tgt, v);  // rows
        Matrix f(dims[ar.tgt], dims[ar.src]);
        // (a . phi)(p) = phi(a * p): transpose of left multiplication.
        for (size_t row = 0; row < tgt_basis.size(); ++row) {
            auto prod = a.mult(a.arrow_class(static_cast<int>(ai)), tgt_basis[row]);
            for (const auto& [b, c] : prod) {
                auto it = std::find(src_basis.begin(), src_basis.end(), b);
                assert(it != src_basis.end());
                f.at(static_cast<int>(row), static_cast<int>(it - src_basis.begin())) = c;
            }
        }
        arrows.push_back(std::move(f));
    }
    return make_rep(a, std::move(dims), std::move(arrows));
}

bool ModuleMap::is_zero() const {
    for (const auto& m : comp)
        if (!m.is_zero()) return false;
    return true;
}

ModuleMap make_map(const Representation& src, const Representation& tgt,
                  std::vector<Matrix> comp) {
    if (src.alg != tgt.alg) throw InputError("module map across different algebras");
    ModuleMap f{src, tgt, std::move(comp)};
    const Algebra& a = *src.alg;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        if (!(tgt.arrow[ai] * f.comp[ar.src] == f.comp[ar.tgt] * src.arrow[ai]))
            throw InputError("map does not commute with arrow " + ar.name);
    }
    return f;
}

ModuleMap identity_map(const Representation& m) {
    std::vector<Matrix> comp;
    for (int d : m.dims) comp.push_back(Matrix::identity(d));
    return {m, m, std::move(comp)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    std::vector<Matrix> comp;
    for (size_t v = 0; v < f.comp.size(); ++v) comp.push_back(g.comp[v] * f.comp[v]);
    return {f.source, g.target, std::move(comp)};
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
    return f.comp == g.comp;
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
    if (m.alg != n.alg) throw InputError("hom_space across different algebras");
    const Algebra& a = *m.alg;
    int nv = a.num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    int unknowns = offset[nv];
    int rows = 0;
    for (const auto& ar : a.quiver().arrows) rows += n.dims[ar.tgt] * m.dims[ar.src];
    Matrix cons(rows, unknowns);
    int r0 = 0;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        // n.arrow * f_src - f_tgt * m.arrow = 0
        for (int i = 0; i < n.dims[ar.tgt]; ++i)
            for (int j = 0; j < m.dims[ar.src]; ++j) {
                int row = r0 + i * m.dims[ar.src] + j;
                for (int k = 0; k < n.dims[ar.src]; ++k)
                    cons.at(row, offset[ar.src] + k * m.dims[ar.src] + j) +=
                        n.arrow[ai].at(i, k);
                for (int k = 0; k < m.dims[ar.tgt]; ++k)
                    cons.at(row, offset[ar.tgt] + i * m.dims[ar.tgt] + k) -=
                        m.arrow[ai].at(k, j);
            }
        r0 += n.dims[ar.tgt] * m.dims[ar.src];
    }
    std::vector<ModuleMap> basis;
    for (const auto& sol : kernel_basis(cons)) {
        std::vector<Matrix> comp;
        for (int v = 0; v < nv; ++v) {
            Matrix f(n.dims[v], m.dims[v]);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    f.at(i, j) = sol[offset[v] + i * m.dims[v] + j];
            comp.push_back(std::move(f));
        }
        basis.push_back({m, n, std::move(comp)});
    }
    return basis;
}

SubQuotient sub_representation(const Representation& m, const Subspace& s) {
    const Algebra& a = *m.alg;
    std::vector<Matrix> bases;
    for (int v = 0; v < a.num_vertices(); ++v) bases.push_back(column_basis(s[v]));
    std::vector<int> dims;
    for (const auto& b : bases) dims.push_back(b.cols());
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        // arrow restricted to the subspace, in subspace coordinates
        Matrix img = m.arrow[ai] * bases[ar.src];
        auto sol = solve_matrix(bases[ar.tgt], img);
        if (!sol) throw InputError("subspace not closed under arrow " +
                                   a.quiver().arrows[ai].name);
        arrows.push_back(std::move(*sol));
    }
    Representation sub = make_rep(a, std::move(dims), std::move(arrows));
    return {sub, make_map(sub, m, std::move(bases))};
}

SubQuotient quotient_representation(const Representation& m, const Subspace& s) {
    const Algebra& a = *m.alg;
    std::vector<Matrix> proj;  // per vertex: quotient coords from ambient coords
    std::vector<int> dims;
    for (int v = 0; v < a.num_vertices(); ++v) {
        Matrix b = column_basis(s[v]);
        // Complement = non-pivot coordinates of the row-reduced span.
        auto rr = rref(b.transpose());
        std::vector<bool> pivot(m.dims[v], false);
        for (int c : rr.pivot_cols) pivot[c] = true;
        std::vector<int> free;
        for (int i = 0; i < m.dims[v]; ++i)
            if (!pivot[i]) free.push_back(i);
        Matrix p(static_cast<int>(free.size()), m.dims[v]);
        // Quotient coordinate = free coordinate after eliminating the span.
        for (size_t i = 0; i < free.size(); ++i) {
            p.at(static_cast<int>(i), free[i]) = 1;
            for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
                p.at(static_cast<int>(i), rr.pivot_cols[r]) =
                    -rr.reduced.at(static_cast<int>(r), free[i]);
        }
        // p * (span basis) = 0 and p restricted to free coords = id.
        dims.push_back(static_cast<int>(free.size()));
        proj.push_back(std::move(p));
    }
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        // Induced map: q_tgt . arrow on representatives.  Representatives of
        // quotient coordinates are the free unit vectors.
        auto rrv = rref(column_basis(s[ar.src]).transpose());
        std::vector<bool> pivot(m.dims[ar.src], false);
        for (int c : rrv.pivot_cols) pivot[c] = true;
        std::vector<int> free;
        for (int i = 0; i < m.dims[ar.src]; ++i)
            if (!pivot[i]) free.push_back(i);
        Matrix reps(m.dims[ar.src], static_cast<int>(free.size()));
        for (size_t j = 0; j < free.size(); ++j) reps.at(free[j], static_cast<int>(j)) = 1;
        arrows.push_back(proj[ar.tgt] * (m.arrow[ai] * reps));
    }
    Representation q = make_rep(a, std::move(dims), std::move(arrows));
    return {q, make_map(m, q, std::move(proj))};
}

SubQuotient kernel(const ModuleMap& f) {
    Subspace s;
    for (size_t v = 0; v < f.comp.size(); ++v)
        s.push_back(Matrix::from_columns(f.source.dims[v], kernel_basis(f.comp[v])));
    return sub_representation(f.source, s);
}

SubQuotient image(const ModuleMap& f) {
    Subspace s;
    for (size_t v = 0; v < f.comp.size(); ++v) s.push_back(f.comp[v]);
    return sub_representation(f.target, s);
}

SubQuotient cokernel(const ModuleMap& f) {
    Subspace s;
    for (size_t v = 0; v < f.comp.size(); ++v) s.push_back(f.comp[v]);
    return quotient_representation(f.target, s);
}

namespace {

// Per-vertex spanning matrices of rad M = sum of arrow images over s.
Subspace radical_subspace(const Representation& m, const Subspace& s) {
    const Algebra& a = *m.alg;
    Subspace r;
    for (int v = 0; v < a.num_vertices(); ++v) r.push_back(Matrix(m.dims[v], 0));
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        r[ar.tgt] = Matrix::hcat(r[ar.tgt], m.arrow[ai] * s[ar.src]);
    }
    return r;
}

Layer layer_of(const Representation& m, const Subspace& big, const Subspace& small) {
    Layer l;
    for (size_t v = 0; v < m.dims.size(); ++v) {
        int d = rank(big[v]) - rank(small[v]);
        if (d > 0) l[static_cast<int>(v)] = d;
    }
    return l;
}

}  // namespace

std::vector<Layer> radical_series(const Representation& m) {
    Subspace cur;
    for (int v = 0; v < m.alg->num_vertices(); ++v)
        cur.push_back(Matrix::identity(m.dims[v]));
    std::vector<Layer> layers;
    while (true) {
        Subspace next = radical_subspace(m, cur);
        Layer l = layer_of(m, cur, next);
        bool empty = true;
        for (int v = 0; v < m.alg->num_vertices(); ++v)
            if (rank(cur[v]) > 0) empty = false;
        if (empty) break;
        layers.push_back(std::move(l));
        cur = std::move(next);
    }
    return layers;
}

std::vector<Layer> loewy_layers(const Representation& m) { return radical_series(m); }

std::vector<Layer> socle_series(const Representation& m) {
    const Algebra& a = *m.alg;
    std::vector<Layer> layers;
    Representation cur = m;
    ModuleMap proj = identity_map(m);  // m -> cur
    while (!cur.is_zero()) {
        // socle of cur: per-vertex intersection of arrow kernels
        Subspace soc;
        for (int v = 0; v < a.num_vertices(); ++v) {
            Matrix stacked(0, cur.dims[v]);
            for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai)
                if (a.quiver().arrows[ai].src == v)
                    stacked = Matrix::vcat(stacked, cur.arrow[ai]);
            soc.push_back(Matrix::from_columns(cur.dims[v], kernel_basis(stacked)));
        }
        Layer l;
        for (int v = 0; v < a.num_vertices(); ++v) {
            int d = rank(soc[v]);
            if (d > 0) l[v] = d;
        }
        layers.push_back(std::move(l));
        auto q = quotient_representation(cur, soc);
        proj = compose(q.map, proj);
        cur = q.rep;
    }
    return layers;
}

SubQuotient trace_submodule(const std::vector<Representation>& generators,
                            const Representation& m) {
    Subspace s;
    for (int v = 0; v < m.alg->num_vertices(); ++v) s.push_back(Matrix(m.dims[v], 0));
    for (const auto& g : generators) {
        if (g.alg != m.alg) throw InputError("trace generators over a different algebra");
        for (const auto& f : hom_space(g, m))
            for (int v = 0; v < m.alg->num_vertices(); ++v)
                s[v] = Matrix::hcat(s[v], f.comp[v]);
    }
    return sub_representation(m, s);
}

IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        uint64_t seed) {
    if (m.alg != n.alg) throw InputError("isomorphism test across different algebras");
    if (m.dims != n.dims)
        return {false, std::nullopt, "dimension vectors differ"};
    if (m.total_dim() == 0) return {true, identity_map(m), ""};
    auto basis = hom_space(m, n);
    if (basis.empty()) return {false, std::nullopt, "hom space is zero"};
    auto try_combo = [&](const std::vector<Rational>& coef) -> std::optional<ModuleMap> {
        std::vector<Matrix> comp;
        for (int v = 0; v < m.alg->num_vertices(); ++v) {
            Matrix f(n.dims[v], m.dims[v]);
            for (size_t k = 0; k < basis.size(); ++k)
                f = f + basis[k].comp[v] * coef[k];
            if (!is_invertible(f)) return std::nullopt;
            comp.push_back(std::move(f));
        }
        return ModuleMap{m, n, std::move(comp)};
    };
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<long> pick(-17, 17);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Rational> coef(basis.size());
        for (auto& c : coef) c = pick(rng);
        if (auto w = try_combo(coef)) return {true, std::move(*w), ""};
    }
    // Deterministic fallback: the invertibility locus is the nonvanishing set
    // of a polynomial of total degree <= total dimension per variable; a full
    // grid of size deg+1 per variable decides identical vanishing.
    if (basis.size() > 3)
        throw UndeterminedError(
            "randomized isomorphism search failed and the hom space is too "
            "large for the deterministic fallback");
    int deg = m.total_dim();
    std::vector<long> idx(basis.size(), 0);
    while (true) {
        std::vector<Rational> coef(basis.size());
        for (size_t k = 0; k < basis.size(); ++k) coef[k] = idx[k];
        if (auto w = try_combo(coef)) return {true, std::move(*w), ""};
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (idx[k] < deg) { ++idx[k]; break; }
            idx[k] = 0;
        }
        if (k == idx.size()) break;
    }
    return {false, std::nullopt,
            "no invertible combination exists (deterministic grid exhausted)"};
}

Representation dual(const Representation& m, const Algebra& opposite) {
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < m.arrow.size(); ++ai) arrows.push_back(m.arrow[ai].transpose());
    return make_rep(opposite, m.dims, std::move(arrows));
}

// --- projective machinery ------------------------------------------------

int ProjSum::position(int s, int basis_elem) const {
    const Algebra& a = *alg;
    int v = a.basis()[basis_elem].tgt;
    int off = 0;
    for (int t = 0; t < s; ++t) off += static_cast<int>(a.basis_at(verts[t], v).size());
    const auto& lst = a.basis_at(verts[s], v);
    auto it = std::find(lst.begin(), lst.end(), basis_elem);
    assert(it != lst.end());
    return off + static_cast<int>(it - lst.begin());
}

int ProjSum::generator_position(int s) const {
    return position(s, alg->idempotent(verts[s]));
}

ProjSum proj_sum(const Algebra& a, const std::vector<int>& verts) {
    ProjSum p;
    p.alg = &a;
    p.verts = verts;
    std::vector<Representation> parts;
    for (int v : verts) parts.push_back(projective(a, v));
    std::vector<int> dims(a.num_vertices(), 0);
    for (const auto& part : parts)
        for (int v = 0; v < a.num_vertices(); ++v) dims[v] += part.dims[v];
    std::vector<Matrix> arrows;
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const auto& ar = a.quiver().arrows[ai];
        Matrix f(dims[ar.tgt], dims[ar.src]);
        int ro = 0, co = 0;
        for (const auto& part : parts) {
            for (int i = 0; i < part.dims[ar.tgt]; ++i)
                for (int j = 0; j < part.dims[ar.src]; ++j)
                    f.at(ro + i, co + j) = part.arrow[ai].at(i, j);
            ro += part.dims[ar.tgt];
            co += part.dims[ar.src];
        }
        arrows.push_back(std::move(f));
    }
    p.rep = make_rep(a, std::move(dims), std::move(arrows));
    return p;
}

ModuleMap yoneda_map(const ProjSum& p, const Representation& m,
                     const std::vector<Vec>& data) {
    const Algebra& a = *p.alg;
    std::vector<Matrix> comp;
    for (int v = 0; v < a.num_vertices(); ++v)
        comp.emplace_back(m.dims[v], p.rep.dims[v]);
    for (int s = 0; s < p.total_summands(); ++s) {
        for (int v = 0; v < a.num_vertices(); ++v) {
            for (int b : a.basis_at(p.verts[s], v)) {
                const auto& word = a.basis()[b].word;
                Vec img = word.empty() ? data[s] : path_action(m, word).apply(data[s]);
                int col = p.position(s, b);
                for (int i = 0; i < m.dims[v]; ++i) comp[v].at(i, col) = img[i];
            }
        }
    }
    return make_map(p.rep, m, std::move(comp));
}

std::vector<std::vector<Algebra::Element>> proj_map_components(
    const ProjSum& p1, const ProjSum& p0, const ModuleMap& d) {
    const Algebra& a = *p1.alg;
    std::vector<std::vector<Algebra::Element>> comp(
        p0.total_summands(), std::vector<Algebra::Element>(p1.total_summands()));
    for (int s = 0; s < p1.total_summands(); ++s) {
        int j = p1.verts[s];
        Vec img = d.comp[j].column(p1.generator_position(s));
        for (int t = 0; t < p0.total_summands(); ++t) {
            Algebra::Element x;
            for (int b : a.basis_at(p0.verts[t], j)) {
                const Rational& c = img[p0.position(t, b)];
                if (!is_zero(c)) x.emplace_back(b, c);
            }
            std::sort(x.begin(), x.end());
            comp[t][s] = std::move(x);
        }
    }
    return comp;
}

Cover projective_cover(const Representation& m) {
    const Algebra& a = *m.alg;
    // Top basis: complement of rad M, lifted to M.
    Subspace full;
    for (int v = 0; v < a.num_vertices(); ++v) full.push_back(Matrix::identity(m.dims[v]));
    Subspace rad = radical_subspace(m, full);
    std::vector<int> verts;
    std::vector<Vec> data;
    for (int v = 0; v < a.num_vertices(); ++v) {
        Matrix rb = column_basis(rad[v]);
        // unit vectors not in rad span, made independent mod rad
        Matrix acc = rb;
        for (int i = 0; i < m.dims[v]; ++i) {
            Vec e(m.dims[v]);
            e[i] = 1;
            if (in_span(acc, e)) continue;
            acc = Matrix::hcat(acc, Matrix::from_columns(m.dims[v], {e}));
            verts.push_back(v);
            data.push_back(std::move(e));
        }
    }
    Cover c;
    c.p = proj_sum(a, verts);
    c.eps = yoneda_map(c.p, m, data);
    return c;
}

ProjPresentation minimal_presentation(const Representation& m) {
    ProjPresentation pr;
    Cover c0 = projective_cover(m);
    auto k = kernel(c0.eps);
    Cover c1 = projective_cover(k.rep);
    pr.p0 = std::move(c0.p);
    pr.eps = std::move(c0.eps);
    pr.p1 = std::move(c1.p);
    pr.d = compose(k.map, c1.eps);
    return pr;
}

// --- serialization -------------------------------------------------------

std::string print_representation(const Representation& m) {
    const Algebra& a = *m.alg;
    std::ostringstream os;
    for (int v = 0; v < a.num_vertices(); ++v)
        os << "dim " << a.quiver().vertices[v] << " " << m.dims[v] << "\n";
    for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
        const Matrix& f = m.arrow[ai];
        os << "map " << a.quiver().arrows[ai].name;
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) os << " " << to_string(f.at(i, j));
        os << "\n";
    }
    return os.str();
}

Representation parse_representation(const Algebra& a, const std::string& text) {
    std::vector<int> dims(a.num_vertices(), -1);
    std::map<std::string, std::vector<Rational>> maps;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "dim") {
            std::string v;
            int d;
            if (!(ls >> v >> d) || d < 0) throw InputError("bad dim line");
            int vi = a.quiver().vertex_index(v);
            if (vi < 0) throw InputError("unknown vertex: " + v);
            dims[vi] = d;
        } else if (kind == "map") {
            std::string name;
            if (!(ls >> name)) throw InputError("bad map line");
            std::vector<Rational> entries;
            std::string t;
            while (ls >> t) {
                auto r = parse_rational(t);
                if (!r) throw InputError("bad matrix entry: " + t);
                entries.push_back(*r);
            }
            maps[name] = std::move(entries);
        } else {
            throw InputError("unknown statement in representation: " + kind);
        }
    }
    for (int v = 0; v < a.num_vertices(); ++v)
        if (dims[v] < 0) throw InputError("missing dim for vertex " + a.quiver().vertices[v]);
    std::vector<Matrix> arrows;
    for (const auto& ar : a.quiver().arrows) {
        Matrix f(dims[ar.tgt], dims[ar.src]);
        auto it = maps.find(ar.name);
        if (it != maps.end()) {
            if (static_cast<int>(it->second.size()) != f.rows() * f.cols())
                throw InputError("matrix size mismatch for arrow " + ar.name);
            int k = 0;
            for (int i = 0; i < f.rows(); ++i)
                for (int j = 0; j < f.cols(); ++j) f.at(i, j) = it->second[k++];
        } else if (f.rows() * f.cols() != 0) {
            throw InputError("missing map for arrow " + ar.name);
        }
        arrows.push_back(std::move(f));
    }
    return make_rep(a, std::move(dims), std::move(arrows));
}

}  // namespace serre
