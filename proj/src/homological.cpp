#include "serre/homological.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "serre/functors.hpp"

namespace serre {

bool ChainComplex::empty() const {
    for (const auto& t : terms)
        if (!t.is_zero()) return false;
    return true;
}

const Representation* ChainComplex::term(int deg) const {
    if (deg < min_deg || deg > max_deg()) return nullptr;
    return &terms[deg - min_deg];
}

const ModuleMap* ChainComplex::diff(int deg) const {
    int i = deg - min_deg;
    if (i < 0 || i >= static_cast<int>(diffs.size())) return nullptr;
    return &diffs[i];
}

ChainComplex make_complex(const Algebra& a, int min_deg,
                          std::vector<Representation> terms,
                          std::vector<ModuleMap> diffs) {
    if (!terms.empty() && diffs.size() + 1 != terms.size())
        throw InputError("complex needs one differential between consecutive terms");
    ChainComplex x;
    x.alg = &a;
    x.min_deg = min_deg;
    x.terms = std::move(terms);
    x.diffs = std::move(diffs);
    for (size_t i = 0; i < x.diffs.size(); ++i) {
        if (x.diffs[i].source.dims != x.terms[i].dims ||
            x.diffs[i].target.dims != x.terms[i + 1].dims)
            throw InputError("differential shape mismatch");
        if (i + 1 < x.diffs.size() &&
            !compose(x.diffs[i + 1], x.diffs[i]).is_zero())
            throw InputError("differential does not square to zero");
    }
    return x;
}

ChainComplex zero_complex(const Algebra& a) {
    ChainComplex x;
    x.alg = &a;
    return x;
}

ChainComplex one_term_complex(Representation m, int deg) {
    ChainComplex x;
    x.alg = m.alg;
    x.min_deg = deg;
    x.terms.push_back(std::move(m));
    return x;
}

ChainComplex shift(const ChainComplex& x, int k) {
    ChainComplex y = x;
    y.min_deg -= k;
    if (k % 2 != 0)
        for (auto& d : y.diffs)
            for (auto& c : d.comp) c = c * Rational(-1);
    return y;
}

std::vector<long> cohomology_dims(const ChainComplex& x) {
    std::vector<long> h;
    for (int deg = x.min_deg; deg <= x.max_deg(); ++deg) {
        const Representation& t = *x.term(deg);
        long dim = 0;
        for (size_t v = 0; v < t.dims.size(); ++v) {
            long ker = t.dims[v];
            if (const ModuleMap* d = x.diff(deg)) ker -= rank(d->comp[v]);
            long im = 0;
            if (const ModuleMap* d = x.diff(deg - 1)) im = rank(d->comp[v]);
            dim += ker - im;
        }
        h.push_back(dim);
    }
    return h;
}

// --- resolutions ---------------------------------------------------------

namespace {

// Resolution kept with its projective-sum bookkeeping: terms[j] sits in
// cohomological degree -j.
struct Res {
    std::vector<ProjSum> terms;
    std::vector<ModuleMap> d;  // d[j]: terms[j] -> terms[j-1], for j >= 1
    ModuleMap aug;             // terms[0] -> M
    bool truncated = false;

    int len() const { return static_cast<int>(terms.size()); }
};

Res resolve(const Representation& m, int cap, bool padded, uint64_t seed) {
    const Algebra& a = *m.alg;
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5deadbeefull);
    std::uniform_int_distribution<int> pick_vert(0, a.num_vertices() - 1);
    Res r;
    Representation cur = m;
    ModuleMap incl = identity_map(m);  // cur -> previous stage target
    for (int j = 0; j <= cap; ++j) {
        Cover c = projective_cover(cur);
        if (padded && cur.total_dim() > 0) {
            // Append one projective summand mapping to zero: still exact,
            // no longer minimal.
            std::vector<int> verts = c.p.verts;
            verts.push_back(pick_vert(rng));
            ProjSum p = proj_sum(a, verts);
            std::vector<Vec> data;
            for (int s = 0; s < c.p.total_summands(); ++s) {
                int v = c.p.verts[s];
                Vec gen(c.p.rep.dims[v]);
                gen[c.p.generator_position(s)] = 1;
                data.push_back(c.eps.comp[v].apply(gen));
            }
            data.emplace_back(cur.dims[verts.back()]);
            c.p = std::move(p);
            c.eps = yoneda_map(c.p, cur, data);
        }
        if (j == 0)
            r.aug = c.eps;
        else
            r.d.push_back(compose(incl, c.eps));
        r.terms.push_back(c.p);
        auto k = kernel(c.eps);
        if (k.rep.total_dim() == 0) return r;
        cur = k.rep;
        incl = k.map;
    }
    r.truncated = true;
    return r;
}

Resolution to_resolution(const Algebra& a, Res r) {
    Resolution out;
    out.truncated = r.truncated;
    out.aug = r.aug;
    std::vector<Representation> terms;
    std::vector<ModuleMap> diffs;
    for (int j = r.len() - 1; j >= 0; --j) {
        terms.push_back(r.terms[j].rep);
        if (j >= 1) diffs.push_back(r.d[j - 1]);
    }
    out.complex = make_complex(a, -(r.len() - 1), std::move(terms), std::move(diffs));
    return out;
}

Vec flatten(const ModuleMap& f) {
    Vec v;
    for (const auto& c : f.comp)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) v.push_back(c.at(i, j));
    return v;
}

// Coordinates of f in the given hom-space basis.
Vec hom_coords(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
    Vec fv = flatten(f);
    if (basis.empty()) {
        for (const auto& c : fv)
            if (!is_zero(c)) throw InputError("map outside the hom space");
        return {};
    }
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    auto x = solve(Matrix::from_columns(static_cast<int>(fv.size()), cols), fv);
    if (!x) throw InputError("map outside the hom space");
    return *x;
}

ModuleMap zero_map(const Representation& s, const Representation& t) {
    std::vector<Matrix> comp;
    for (size_t v = 0; v < s.dims.size(); ++v)
        comp.emplace_back(t.dims[v], s.dims[v]);
    return {s, t, std::move(comp)};
}

}  // namespace

Resolution projective_resolution(const Representation& m, int cap) {
    return to_resolution(*m.alg, resolve(m, cap, false, 0));
}

Resolution padded_resolution(const Representation& m, int cap, uint64_t seed) {
    return to_resolution(*m.alg, resolve(m, cap, true, seed));
}

long ext_via(const Resolution& r, const Representation& n, int deg) {
    if (deg < 0) throw InputError("ext degree must be nonnegative");
    auto term = [&](int j) -> const Representation* {
        return r.complex.term(-j);
    };
    auto hom_dim_basis = [&](int j) {
        const Representation* p = term(j);
        return p ? hom_space(*p, n) : std::vector<ModuleMap>{};
    };
    auto h_lo = hom_dim_basis(deg - 1);
    auto h_mid = hom_dim_basis(deg);
    auto h_hi = hom_dim_basis(deg + 1);
    // Matrix of precomposition with d: Hom(P_j, N) -> Hom(P_{j+1}, N).
    auto dstar = [&](const std::vector<ModuleMap>& from,
                     const std::vector<ModuleMap>& to, int j) {
        Matrix mat(static_cast<int>(to.size()), static_cast<int>(from.size()));
        const ModuleMap* d = r.complex.diff(-(j + 1));  // P_{j+1} -> P_j
        if (!d) return mat;
        for (size_t c = 0; c < from.size(); ++c) {
            Vec coords = hom_coords(to, compose(from[c], *d));
            for (size_t i = 0; i < coords.size(); ++i)
                mat.at(static_cast<int>(i), static_cast<int>(c)) = coords[i];
        }
        return mat;
    };
    long ker = static_cast<long>(h_mid.size()) - rank(dstar(h_mid, h_hi, deg));
    long im = deg == 0 ? 0 : rank(dstar(h_lo, h_mid, deg - 1));
    return ker - im;
}

long ext(const Representation& m, const Representation& n, int deg) {
    return ext_via(projective_resolution(m, deg + 1), n, deg);
}

// --- hom complex ---------------------------------------------------------

HomComplexValue hom_complex_cohomology(const ChainComplex& x,
                                       const ChainComplex& y) {
    HomComplexValue out;
    if (x.terms.empty() || y.terms.empty()) return out;
    int lo = y.min_deg - x.max_deg();
    int hi = y.max_deg() - x.min_deg;
    // Per total degree k: bases of Hom(X^n, Y^{n+k}) for each block n.
    struct Deg {
        std::vector<int> blocks;                          // values of n
        std::vector<std::vector<ModuleMap>> basis;        // per block
        std::vector<int> offset;                          // into the flat space
        int dim = 0;
    };
    std::map<int, Deg> degs;
    for (int k = lo; k <= hi; ++k) {
        Deg d;
        for (int n = x.min_deg; n <= x.max_deg(); ++n) {
            const Representation* xs = x.term(n);
            const Representation* yt = y.term(n + k);
            if (!xs || !yt) continue;
            d.blocks.push_back(n);
            d.offset.push_back(d.dim);
            d.basis.push_back(hom_space(*xs, *yt));
            d.dim += static_cast<int>(d.basis.back().size());
        }
        degs[k] = std::move(d);
    }
    auto block_index = [](const Deg& d, int n) {
        for (size_t i = 0; i < d.blocks.size(); ++i)
            if (d.blocks[i] == n) return static_cast<int>(i);
        return -1;
    };
    std::map<int, Matrix> dmat;  // differential Hom^k -> Hom^{k+1}
    for (int k = lo; k < hi; ++k) {
        const Deg& from = degs[k];
        const Deg& to = degs[k + 1];
        Matrix mat(to.dim, from.dim);
        Rational sign = (k % 2 == 0) ? 1 : -1;
        for (size_t bi = 0; bi < from.blocks.size(); ++bi) {
            int n = from.blocks[bi];
            for (size_t c = 0; c < from.basis[bi].size(); ++c) {
                const ModuleMap& f = from.basis[bi][c];
                int col = from.offset[bi] + static_cast<int>(c);
                if (const ModuleMap* dy = y.diff(n + k)) {
                    int ti = block_index(to, n);
                    if (ti >= 0) {
                        Vec coords = hom_coords(to.basis[ti], compose(*dy, f));
                        for (size_t i = 0; i < coords.size(); ++i)
                            mat.at(to.offset[ti] + static_cast<int>(i), col) +=
                                coords[i];
                    }
                }
                if (const ModuleMap* dx = x.diff(n - 1)) {
                    int ti = block_index(to, n - 1);
                    if (ti >= 0) {
                        ModuleMap g = compose(f, *dx);
                        for (auto& cm : g.comp) cm = cm * (sign * Rational(-1));
                        Vec coords = hom_coords(to.basis[ti], g);
                        for (size_t i = 0; i < coords.size(); ++i)
                            mat.at(to.offset[ti] + static_cast<int>(i), col) +=
                                coords[i];
                    }
                }
            }
        }
        dmat[k] = std::move(mat);
    }
    out.min_deg = lo;
    for (int k = lo; k <= hi; ++k) {
        long ker = degs[k].dim;
        if (dmat.count(k)) ker -= rank(dmat[k]);
        long im = dmat.count(k - 1) ? rank(dmat[k - 1]) : 0;
        out.h.push_back(ker - im);
    }
    return out;
}

long HomComplexValue::at(int deg) const {
    int i = deg - min_deg;
    if (i < 0 || i >= static_cast<int>(h.size())) return 0;
    return h[i];
}

long derived_hom_dim(const ChainComplex& x, const ChainComplex& y) {
    return hom_complex_cohomology(x, y).at(0);
}

bool injectives_have_finite_pd(const Algebra& a, int cap) {
    for (int i = 0; i < a.num_vertices(); ++i)
        if (projective_resolution(injective(a, i), cap).truncated) return false;
    return true;
}

// --- derived exchange functor --------------------------------------------

namespace {

bool is_projective_rep(const Representation& m) {
    return kernel(projective_cover(m).eps).rep.total_dim() == 0;
}

// Pads a resolution with zero terms up to the given length.
void pad_res(const Algebra& a, Res& r, int len) {
    while (r.len() < len) {
        ProjSum zero = proj_sum(a, {});
        if (r.len() >= 1)
            r.d.push_back(zero_map(zero.rep, r.terms.back().rep));
        r.terms.push_back(std::move(zero));
    }
}

// Horseshoe: resolutions of A and C plus the short exact sequence
// A -incl-> B -proj-> C give a resolution of B on the termwise direct sums.
Res horseshoe(const Algebra& a, const Representation& b, const ModuleMap& incl,
              const ModuleMap& proj, Res ra, Res rc) {
    if (ra.truncated || rc.truncated)
        throw InputError("cannot splice truncated resolutions");
    int len = std::max(ra.len(), rc.len());
    pad_res(a, ra, len);
    pad_res(a, rc, len);
    Res rb;
    rb.truncated = false;
    // sigma: RC_0 -> B lifting the augmentation of C through proj.
    std::vector<Vec> sdata;
    for (int s = 0; s < rc.terms[0].total_summands(); ++s) {
        int v = rc.terms[0].verts[s];
        Vec gen(rc.terms[0].rep.dims[v]);
        gen[rc.terms[0].generator_position(s)] = 1;
        auto y = solve(proj.comp[v], rc.aug.comp[v].apply(gen));
        if (!y) throw InputError("augmentation lift failed");
        sdata.push_back(std::move(*y));
    }
    ModuleMap sigma = rc.terms[0].total_summands() == 0
                          ? zero_map(rc.terms[0].rep, b)
                          : yoneda_map(rc.terms[0], b, sdata);
    // Connecting maps h[j]: RC_j -> RA_{j-1}.
    std::vector<ModuleMap> h(len);
    for (int j = 1; j < len; ++j) {
        std::vector<Vec> data;
        for (int s = 0; s < rc.terms[j].total_summands(); ++s) {
            int v = rc.terms[j].verts[s];
            Vec gen(rc.terms[j].rep.dims[v]);
            gen[rc.terms[j].generator_position(s)] = 1;
            Vec target;
            if (j == 1) {
                Vec w = sigma.comp[v].apply(rc.d[0].comp[v].apply(gen));
                for (auto& c : w) c = -c;
                auto x = solve(incl.comp[v], w);
                if (!x) throw InputError("horseshoe: image not in the sub");
                auto t = solve(ra.aug.comp[v], *x);
                if (!t) throw InputError("horseshoe: cover lift failed");
                target = std::move(*t);
            } else {
                Vec w = h[j - 1].comp[v].apply(rc.d[j - 1].comp[v].apply(gen));
                for (auto& c : w) c = -c;
                auto t = solve(ra.d[j - 2].comp[v], w);
                if (!t) throw InputError("horseshoe: syzygy lift failed");
                target = std::move(*t);
            }
            data.push_back(std::move(target));
        }
        h[j] = rc.terms[j].total_summands() == 0
                   ? zero_map(rc.terms[j].rep, ra.terms[j - 1].rep)
                   : yoneda_map(rc.terms[j], ra.terms[j - 1].rep, data);
    }
    // Assemble block terms and differentials.
    for (int j = 0; j < len; ++j) {
        std::vector<int> verts = ra.terms[j].verts;
        verts.insert(verts.end(), rc.terms[j].verts.begin(), rc.terms[j].verts.end());
        rb.terms.push_back(proj_sum(a, verts));
    }
    for (int j = 1; j < len; ++j) {
        std::vector<Matrix> comp;
        for (int v = 0; v < a.num_vertices(); ++v) {
            int ra_r = ra.terms[j - 1].rep.dims[v], rc_r = rc.terms[j - 1].rep.dims[v];
            int ra_c = ra.terms[j].rep.dims[v], rc_c = rc.terms[j].rep.dims[v];
            Matrix blk(ra_r + rc_r, ra_c + rc_c);
            for (int i = 0; i < ra_r; ++i)
                for (int k = 0; k < ra_c; ++k) blk.at(i, k) = ra.d[j - 1].comp[v].at(i, k);
            for (int i = 0; i < ra_r; ++i)
                for (int k = 0; k < rc_c; ++k) blk.at(i, ra_c + k) = h[j].comp[v].at(i, k);
            for (int i = 0; i < rc_r; ++i)
                for (int k = 0; k < rc_c; ++k)
                    blk.at(ra_r + i, ra_c + k) = rc.d[j - 1].comp[v].at(i, k);
            comp.push_back(std::move(blk));
        }
        rb.d.push_back(make_map(rb.terms[j].rep, rb.terms[j - 1].rep, std::move(comp)));
    }
    {
        std::vector<Matrix> comp;
        for (int v = 0; v < a.num_vertices(); ++v) {
            int ra_c = ra.terms[0].rep.dims[v], rc_c = rc.terms[0].rep.dims[v];
            Matrix blk(b.dims[v], ra_c + rc_c);
            Matrix left = incl.comp[v] * ra.aug.comp[v];
            for (int i = 0; i < b.dims[v]; ++i) {
                for (int k = 0; k < ra_c; ++k) blk.at(i, k) = left.at(i, k);
                for (int k = 0; k < rc_c; ++k) blk.at(i, ra_c + k) = sigma.comp[v].at(i, k);
            }
            comp.push_back(std::move(blk));
        }
        rb.aug = make_map(rb.terms[0].rep, b, std::move(comp));
    }
    return rb;
}

// Cartan-Eilenberg style resolution of a bounded complex, totalized into a
// quasi-isomorphic bounded complex of projectives.
ChainComplex resolve_complex(const ChainComplex& y, int cap) {
    const Algebra& a = *y.alg;
    int lo = y.min_deg, hi = y.max_deg();
    int span = hi - lo + 1;
    // Per column n: the splice data.
    std::vector<Res> rb(span + 1), rz(span), ry(span);
    std::vector<SubQuotient> bsub(span + 1), zsub(span);
    for (int i = 0; i <= span; ++i) {
        int n = lo + i;
        const ModuleMap* din = y.diff(n - 1);
        if (din && i <= span) {
            bsub[i] = image(*din);
        } else {
            const Representation* t = y.term(n);
            Representation zero = zero_rep(a);
            Subspace s;
            Representation amb = t ? *t : zero;
            for (int v = 0; v < a.num_vertices(); ++v)
                s.push_back(Matrix(amb.dims[v], 0));
            bsub[i] = sub_representation(amb, s);
        }
        if (i < span) {
            const ModuleMap* dout = y.diff(n);
            if (dout)
                zsub[i] = kernel(*dout);
            else {
                // last column: Z = whole term
                Subspace s;
                for (int v = 0; v < a.num_vertices(); ++v)
                    s.push_back(Matrix::identity(y.term(n)->dims[v]));
                zsub[i] = sub_representation(*y.term(n), s);
            }
        }
        Representation bmod = bsub[i].rep;
        rb[i] = resolve(bmod, cap, false, 0);
        if (rb[i].truncated)
            throw InputError("complex replacement: resolution cap exceeded");
    }
    for (int i = 0; i < span; ++i) {
        int n = lo + i;
        (void)n;
        // B^n -> Z^n inside Y^n.
        std::vector<Matrix> bz;
        for (int v = 0; v < a.num_vertices(); ++v) {
            auto x = solve_matrix(zsub[i].map.comp[v], bsub[i].map.comp[v]);
            if (!x) throw InputError("boundaries not inside cycles");
            bz.push_back(std::move(*x));
        }
        ModuleMap ibz = make_map(bsub[i].rep, zsub[i].rep, std::move(bz));
        Subspace im_b;
        for (int v = 0; v < a.num_vertices(); ++v) im_b.push_back(ibz.comp[v]);
        SubQuotient hq = quotient_representation(zsub[i].rep, im_b);
        Res rh = resolve(hq.rep, cap, false, 0);
        if (rh.truncated)
            throw InputError("complex replacement: resolution cap exceeded");
        rz[i] = horseshoe(a, zsub[i].rep, ibz, hq.map, rb[i], rh);
        // Z^n -> Y^n -> B^{n+1}.
        const Representation& yn = *y.term(lo + i);
        ModuleMap dbar = [&] {
            const ModuleMap* dout = y.diff(lo + i);
            if (!dout) return zero_map(yn, bsub[i + 1].rep);
            std::vector<Matrix> comp;
            for (int v = 0; v < a.num_vertices(); ++v) {
                auto x = solve_matrix(bsub[i + 1].map.comp[v], dout->comp[v]);
                if (!x) throw InputError("image factorization failed");
                comp.push_back(std::move(*x));
            }
            return make_map(yn, bsub[i + 1].rep, std::move(comp));
        }();
        ry[i] = horseshoe(a, yn, zsub[i].map, dbar, rz[i], rb[i + 1]);
    }
    // Horizontal differential: project onto the trailing B^{n+1} block of
    // R_Y^n and include it as the leading block of R_Y^{n+1}.
    int maxlen = 0;
    for (int i = 0; i < span; ++i) maxlen = std::max(maxlen, ry[i].len());
    for (int i = 0; i < span; ++i) pad_res(a, ry[i], maxlen);
    for (int i = 0; i <= span; ++i) pad_res(a, rb[i], maxlen);
    for (int i = 0; i < span; ++i) pad_res(a, rz[i], maxlen);
    // Totalize: degree m collects (column i, resolution depth j) with
    // (lo + i) - j = m.
    int tot_lo = lo - (maxlen - 1), tot_hi = hi;
    std::vector<Representation> terms;
    std::vector<std::vector<std::pair<int, int>>> parts;  // (i, j) per degree
    for (int m = tot_lo; m <= tot_hi; ++m) {
        std::vector<int> verts;
        std::vector<std::pair<int, int>> pp;
        for (int i = 0; i < span; ++i) {
            int j = (lo + i) - m;
            if (j < 0 || j >= maxlen) continue;
            pp.emplace_back(i, j);
            const auto& vlist = ry[i].terms[j].verts;
            verts.insert(verts.end(), vlist.begin(), vlist.end());
        }
        parts.push_back(std::move(pp));
        terms.push_back(proj_sum(a, verts).rep);
    }
    auto block_dims = [&](int mi, int v) {
        std::vector<int> sizes;
        for (auto [i, j] : parts[mi]) sizes.push_back(ry[i].terms[j].rep.dims[v]);
        return sizes;
    };
    auto part_pos = [&](int mi, int i, int j) {
        for (size_t k = 0; k < parts[mi].size(); ++k)
            if (parts[mi][k] == std::make_pair(i, j)) return static_cast<int>(k);
        return -1;
    };
    std::vector<ModuleMap> diffs;
    for (int m = tot_lo; m < tot_hi; ++m) {
        int mi = m - tot_lo;
        std::vector<Matrix> comp;
        for (int v = 0; v < y.alg->num_vertices(); ++v) {
            auto sdims = block_dims(mi, v);
            auto tdims = block_dims(mi + 1, v);
            int srows = 0, trows = 0;
            for (int d : sdims) srows += d;
            for (int d : tdims) trows += d;
            Matrix blk(trows, srows);
            auto place = [&](int tpart, int spart, const Matrix& sub) {
                int ro = 0, co = 0;
                for (int t = 0; t < tpart; ++t) ro += tdims[t];
                for (int s = 0; s < spart; ++s) co += sdims[s];
                for (int i2 = 0; i2 < sub.rows(); ++i2)
                    for (int j2 = 0; j2 < sub.cols(); ++j2)
                        blk.at(ro + i2, co + j2) += sub.at(i2, j2);
            };
            for (size_t sp = 0; sp < parts[mi].size(); ++sp) {
                auto [i, j] = parts[mi][sp];
                // Vertical: d[j]: depth j -> depth j-1, same column, with
                // sign (-1)^{lo+i}.
                if (j >= 1) {
                    int tp = part_pos(mi + 1, i, j - 1);
                    if (tp >= 0) {
                        Matrix sub = ry[i].d[j - 1].comp[v];
                        if ((lo + i) % 2 != 0) sub = sub * Rational(-1);
                        place(tp, static_cast<int>(sp), sub);
                    }
                }
                // Horizontal: trailing B^{n+1} block to leading block of the
                // next column at the same depth.
                if (i + 1 < span) {
                    int tp = part_pos(mi + 1, i + 1, j);
                    if (tp >= 0) {
                        int bcols = rb[i + 1].terms[j].rep.dims[v];
                        int scols = ry[i].terms[j].rep.dims[v];
                        int trows2 = ry[i + 1].terms[j].rep.dims[v];
                        Matrix sub(trows2, scols);
                        // source block layout: [RZ^i | RB^{i+1}]; target
                        // layout: [RB^{i+1} | RH^{i+1} | RB^{i+2}].
                        int zcols = rz[i].terms[j].rep.dims[v];
                        for (int k = 0; k < bcols; ++k) sub.at(k, zcols + k) = 1;
                        place(tp, static_cast<int>(sp), sub);
                    }
                }
            }
            comp.push_back(std::move(blk));
        }
        diffs.push_back(make_map(terms[mi], terms[mi + 1], std::move(comp)));
    }
    return make_complex(a, tot_lo, std::move(terms), std::move(diffs));
}

}  // namespace

ChainComplex derived_nakayama(const ChainComplex& x) {
    const Algebra& a = *x.alg;
    if (x.terms.empty() || x.empty()) return zero_complex(a);
    std::vector<Representation> nterms;
    for (const auto& t : x.terms) nterms.push_back(nakayama(t));
    std::vector<ModuleMap> ndiffs;
    for (const auto& d : x.diffs) {
        ModuleMap nd = nakayama(d);
        nd.source = nterms[&d - x.diffs.data()];
        nd.target = nterms[&d - x.diffs.data() + 1];
        ndiffs.push_back(std::move(nd));
    }
    ChainComplex nx = make_complex(a, x.min_deg, nterms, ndiffs);
    bool projective = true;
    for (const auto& t : nx.terms)
        if (!is_projective_rep(t)) { projective = false; break; }
    if (projective) return nx;
    if (!injectives_have_finite_pd(a, 16))
        throw InputError("injective of infinite projective dimension");
    return resolve_complex(nx, 16 + 1);
}

SerreReport serre_duality_check(const ChainComplex& x, const ChainComplex& y) {
    SerreReport rep;
    ChainComplex ny = derived_nakayama(y);
    for (int k = -2; k <= 2; ++k) {
        ChainComplex xs = shift(x, k);
        long d1 = derived_hom_dim(xs, ny);
        long d2 = derived_hom_dim(y, xs);
        std::ostringstream os;
        os << "shift " << k << ": dim Hom(X[k], NY) = " << d1
           << ", dim Hom(Y, X[k]) = " << d2 << " -> "
           << (d1 == d2 ? "equal" : "MISMATCH");
        rep.lines.push_back(os.str());
        if (d1 != d2) rep.ok = false;
    }
    return rep;
}

ChainComplex random_perfect_complex(const Algebra& a, uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 0x123456789ull);
    std::uniform_int_distribution<int> nsum(0, 2);
    std::uniform_int_distribution<int> vert(0, a.num_vertices() - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> nterms_pick(1, 3);
    int nterms = nterms_pick(rng);
    std::vector<Representation> terms;
    for (int i = 0; i < nterms; ++i) {
        std::vector<int> verts;
        int k = nsum(rng);
        for (int s = 0; s < k; ++s) verts.push_back(vert(rng));
        terms.push_back(proj_sum(a, verts).rep);
    }
    std::vector<ModuleMap> diffs;
    for (int i = 0; i + 1 < nterms; ++i) {
        auto basis = hom_space(terms[i], terms[i + 1]);
        // Constrain to maps composing to zero with the previous differential.
        std::vector<Vec> admissible;
        if (i == 0 || basis.empty()) {
            for (size_t c = 0; c < basis.size(); ++c) {
                Vec e(basis.size());
                e[c] = 1;
                admissible.push_back(std::move(e));
            }
        } else {
            size_t flat = flatten(compose(basis[0], diffs[i - 1])).size();
            Matrix cons(static_cast<int>(flat), static_cast<int>(basis.size()));
            for (size_t c = 0; c < basis.size(); ++c) {
                Vec f = flatten(compose(basis[c], diffs[i - 1]));
                for (size_t r = 0; r < f.size(); ++r)
                    cons.at(static_cast<int>(r), static_cast<int>(c)) = f[r];
            }
            admissible = kernel_basis(cons);
        }
        std::vector<Matrix> comp;
        for (int v = 0; v < a.num_vertices(); ++v)
            comp.emplace_back(terms[i + 1].dims[v], terms[i].dims[v]);
        for (const auto& dir : admissible) {
            Rational c = coef(rng);
            for (size_t b = 0; b < basis.size(); ++b)
                if (!is_zero(dir[b]))
                    for (int v = 0; v < a.num_vertices(); ++v)
                        comp[v] = comp[v] + basis[b].comp[v] * (c * dir[b]);
        }
        diffs.push_back(make_map(terms[i], terms[i + 1], std::move(comp)));
    }
    return make_complex(a, 0, std::move(terms), std::move(diffs));
}

}  // namespace serre
