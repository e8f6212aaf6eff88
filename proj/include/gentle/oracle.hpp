#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/presentation.hpp"
#include "gentle/ratmat.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Explicit representation: per-vertex dimensions and, for each arrow a, a
// matrix dims[tgt(a)] x dims[src(a)]. Relations must annihilate: for each
// ideal generator the composite of its arrow matrices (left letter first)
// is zero.
struct Representation {
    std::vector<int> dims;  // by vertex index
    std::vector<Mat> mats;  // by arrow index

    static Representation zero(const Presentation& p) {
        Representation m;
        m.dims.assign(static_cast<size_t>(p.n_vertices()), 0);
        m.mats.reserve(static_cast<size_t>(p.n_arrows()));
        for (int a = 0; a < p.n_arrows(); ++a) m.mats.emplace_back(0, 0);
        return m;
    }

    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
};

inline Representation string_to_rep(const Presentation& p, const StringWord& w) {
    if (!is_valid_string(p, w)) throw PreconditionError("string_to_rep needs a valid string");
    Representation m = Representation::zero(p);
    std::vector<int> verts = walk_vertices(p, w);
    std::vector<int> pos_index(verts.size());
    for (size_t k = 0; k < verts.size(); ++k) {
        pos_index[k] = m.dims[static_cast<size_t>(verts[k])];
        m.dims[static_cast<size_t>(verts[k])]++;
    }
    for (int a = 0; a < p.n_arrows(); ++a)
        m.mats[static_cast<size_t>(a)] =
            Mat(m.dims[static_cast<size_t>(p.arrow(a).tgt)], m.dims[static_cast<size_t>(p.arrow(a).src)]);
    for (size_t k = 0; k < w.letters().size(); ++k) {
        Letter l = w.letters()[k];
        Mat& mat = m.mats[static_cast<size_t>(l.arrow)];
        if (!l.inverted)
            mat.at(pos_index[k + 1], pos_index[k]) = Rat(1);  // pos k -> pos k+1
        else
            mat.at(pos_index[k], pos_index[k + 1]) = Rat(1);  // pos k+1 -> pos k
    }
    return m;
}

// True when every ideal generator acts as zero on M.
inline bool satisfies_relations(const Presentation& p, const Representation& m) {
    for (const auto& f : p.forbidden_words()) {
        Mat prod = Mat::identity(m.dims[static_cast<size_t>(p.arrow(f.front()).src)]);
        for (int a : f) prod = m.mats[static_cast<size_t>(a)] * prod;
        if (!prod.is_zero()) return false;
    }
    return true;
}

// dim Homphism space: solutions f of f_{tgt(a)} M(a) = N(a) f_{src(a)} for
// all arrows a, computed by exact rank over the rationals.
inline int hom_dim_linalg(const Presentation& p, const Representation& M,
                          const Representation& N) {
    if (M.dims.size() != static_cast<size_t>(p.n_vertices()) ||
        N.dims.size() != static_cast<size_t>(p.n_vertices()))
        throw PreconditionError("ShapeMismatch: representation over a different quiver");
    // unknowns: entries of f_v (N.dims[v] x M.dims[v]), vertex-major
    std::vector<int> offset(static_cast<size_t>(p.n_vertices() + 1), 0);
    for (int v = 0; v < p.n_vertices(); ++v)
        offset[static_cast<size_t>(v + 1)] =
            offset[static_cast<size_t>(v)] + N.dims[static_cast<size_t>(v)] * M.dims[static_cast<size_t>(v)];
    const int unknowns = offset.back();
    if (unknowns == 0) return 0;
    auto var = [&](int v, int r, int c) {  // entry f_v[r][c]
        return offset[static_cast<size_t>(v)] + r * M.dims[static_cast<size_t>(v)] + c;
    };
    int n_eq = 0;
    for (int a = 0; a < p.n_arrows(); ++a)
        n_eq += N.dims[static_cast<size_t>(p.arrow(a).tgt)] * M.dims[static_cast<size_t>(p.arrow(a).src)];
    Mat sys(n_eq, unknowns);
    int eq = 0;
    for (int a = 0; a < p.n_arrows(); ++a) {
        int s = p.arrow(a).src, t = p.arrow(a).tgt;
        const Mat& Ma = M.mats[static_cast<size_t>(a)];
        const Mat& Na = N.mats[static_cast<size_t>(a)];
        for (int r = 0; r < N.dims[static_cast<size_t>(t)]; ++r)
            for (int c = 0; c < M.dims[static_cast<size_t>(s)]; ++c) {
                // sum_k f_t[r][k] Ma[k][c] - sum_m Na[r][m] f_s[m][c] = 0
                for (int k = 0; k < M.dims[static_cast<size_t>(t)]; ++k)
                    if (!Ma.at(k, c).is_zero())
                        sys.at(eq, var(t, r, k)) = sys.at(eq, var(t, r, k)) + Ma.at(k, c);
                for (int m2 = 0; m2 < N.dims[static_cast<size_t>(s)]; ++m2)
                    if (!Na.at(r, m2).is_zero())
                        sys.at(eq, var(s, m2, c)) = sys.at(eq, var(s, m2, c)) - Na.at(r, m2);
                ++eq;
            }
    }
    return unknowns - linalg::rank(std::move(sys));
}

// The projective P_v as a representation: basis paths out of v graded by
// their targets, arrows acting by right extension.
struct ProjectiveData {
    Representation rep;
    std::vector<Path> paths;                // basis, grouped per target via index below
    std::vector<std::vector<int>> by_vertex;  // basis path indices per target vertex
};

inline ProjectiveData projective_rep(const Presentation& p, int v,
                                     const std::vector<Path>& basis) {
    ProjectiveData pd;
    pd.rep = Representation::zero(p);
    pd.by_vertex.resize(static_cast<size_t>(p.n_vertices()));
    for (const Path& path : basis)
        if (path.source == v) {
            pd.by_vertex[static_cast<size_t>(path.target)].push_back(static_cast<int>(pd.paths.size()));
            pd.paths.push_back(path);
        }
    for (int u = 0; u < p.n_vertices(); ++u)
        pd.rep.dims[static_cast<size_t>(u)] = static_cast<int>(pd.by_vertex[static_cast<size_t>(u)].size());
    // local index of each basis path within its vertex block
    std::vector<int> local(pd.paths.size());
    for (int u = 0; u < p.n_vertices(); ++u)
        for (size_t i = 0; i < pd.by_vertex[static_cast<size_t>(u)].size(); ++i)
            local[static_cast<size_t>(pd.by_vertex[static_cast<size_t>(u)][i])] = static_cast<int>(i);
    for (int a = 0; a < p.n_arrows(); ++a)
        pd.rep.mats[static_cast<size_t>(a)] =
            Mat(pd.rep.dims[static_cast<size_t>(p.arrow(a).tgt)], pd.rep.dims[static_cast<size_t>(p.arrow(a).src)]);
    for (size_t i = 0; i < pd.paths.size(); ++i) {
        const Path& path = pd.paths[i];
        for (int a : p.out_arrows(path.target)) {
            std::vector<int> ext = path.arrows;
            ext.push_back(a);
            if (detail::path_hits_forbidden(p, ext)) continue;
            // locate the extended path among the basis
            int j = -1;
            int tgt = p.arrow(a).tgt;
            for (int cand : pd.by_vertex[static_cast<size_t>(tgt)])
                if (pd.paths[static_cast<size_t>(cand)].arrows == ext) {
                    j = cand;
                    break;
                }
            if (j < 0) throw CheckError("projective basis is not closed under extension");
            pd.rep.mats[static_cast<size_t>(a)].at(local[static_cast<size_t>(j)], local[i]) = Rat(1);
        }
    }
    return pd;
}

struct CoverData {
    Representation p0;
    std::vector<Mat> cover;        // per vertex: p0 -> M
    std::vector<int> top_vertices; // one generator vertex per projective summand
    Representation omega;          // kernel of the cover
};

namespace detail {

// Top generators of M: per vertex, a basis of a complement of rad M.
inline std::vector<std::pair<int, Mat>> top_generators(const Presentation& p,
                                                       const Representation& M) {
    std::vector<std::pair<int, Mat>> gens;  // (vertex, column vector)
    for (int v = 0; v < p.n_vertices(); ++v) {
        int d = M.dims[static_cast<size_t>(v)];
        if (d == 0) continue;
        int rad_cols = 0;
        for (int a : p.in_arrows(v)) rad_cols += M.dims[static_cast<size_t>(p.arrow(a).src)];
        Mat rad(d, rad_cols);
        int c0 = 0;
        for (int a : p.in_arrows(v)) {
            const Mat& ma = M.mats[static_cast<size_t>(a)];
            for (int c = 0; c < ma.cols; ++c)
                for (int r = 0; r < d; ++r) rad.at(r, c0 + c) = ma.at(r, c);
            c0 += ma.cols;
        }
        // pivot rows of the column space: echelonize the transpose
        Mat tr(rad.cols, rad.rows);
        for (int r = 0; r < rad.rows; ++r)
            for (int c = 0; c < rad.cols; ++c) tr.at(c, r) = rad.at(r, c);
        std::vector<int> piv_rows = linalg::rref(tr);
        std::vector<bool> covered(static_cast<size_t>(d), false);
        for (int r : piv_rows) covered[static_cast<size_t>(r)] = true;
        for (int r = 0; r < d; ++r) {
            if (covered[static_cast<size_t>(r)]) continue;
            Mat col(d, 1);
            col.at(r, 0) = Rat(1);
            gens.emplace_back(v, std::move(col));
        }
    }
    return gens;
}

}  // namespace detail

// Projective cover P0 ->> M and its kernel (the syzygy), all exact.
inline CoverData projective_cover(const Presentation& p, const Representation& M) {
    std::vector<Path> basis = path_basis(p);
    auto gens = detail::top_generators(p, M);

    CoverData cd;
    cd.p0 = Representation::zero(p);
    std::vector<ProjectiveData> parts;
    for (const auto& [v, x] : gens) {
        cd.top_vertices.push_back(v);
        parts.push_back(projective_rep(p, v, basis));
    }
    // block sums
    std::vector<int> block_offset_per_vertex(static_cast<size_t>(p.n_vertices()), 0);
    std::vector<std::vector<int>> offsets(parts.size(),
                                          std::vector<int>(static_cast<size_t>(p.n_vertices()), 0));
    for (size_t g = 0; g < parts.size(); ++g)
        for (int v = 0; v < p.n_vertices(); ++v) {
            offsets[g][static_cast<size_t>(v)] = cd.p0.dims[static_cast<size_t>(v)];
            cd.p0.dims[static_cast<size_t>(v)] += parts[g].rep.dims[static_cast<size_t>(v)];
        }
    for (int a = 0; a < p.n_arrows(); ++a) {
        int s = p.arrow(a).src, t = p.arrow(a).tgt;
        Mat m(cd.p0.dims[static_cast<size_t>(t)], cd.p0.dims[static_cast<size_t>(s)]);
        for (size_t g = 0; g < parts.size(); ++g) {
            const Mat& blk = parts[g].rep.mats[static_cast<size_t>(a)];
            for (int r = 0; r < blk.rows; ++r)
                for (int c = 0; c < blk.cols; ++c)
                    m.at(offsets[g][static_cast<size_t>(t)] + r, offsets[g][static_cast<size_t>(s)] + c) =
                        blk.at(r, c);
        }
        cd.p0.mats[static_cast<size_t>(a)] = std::move(m);
    }
    // cover matrices: generator path e_v.w maps to M(w) applied to the top vector
    cd.cover.clear();
    for (int v = 0; v < p.n_vertices(); ++v)
        cd.cover.push_back(Mat(M.dims[static_cast<size_t>(v)], cd.p0.dims[static_cast<size_t>(v)]));
    for (size_t g = 0; g < parts.size(); ++g) {
        const auto& [gv, gx] = gens[g];
        const ProjectiveData& pd = parts[g];
        // image of each basis path under the cover
        std::vector<Mat> img(pd.paths.size());
        for (size_t i = 0; i < pd.paths.size(); ++i) {
            Mat vec = gx;
            for (int a : pd.paths[i].arrows) vec = M.mats[static_cast<size_t>(a)] * vec;
            img[i] = std::move(vec);
        }
        for (int u = 0; u < p.n_vertices(); ++u) {
            const auto& idxs = pd.by_vertex[static_cast<size_t>(u)];
            for (size_t li = 0; li < idxs.size(); ++li) {
                const Mat& vec = img[static_cast<size_t>(idxs[li])];
                for (int r = 0; r < vec.rows; ++r)
                    cd.cover[static_cast<size_t>(u)].at(r, offsets[g][static_cast<size_t>(u)] +
                                                               static_cast<int>(li)) = vec.at(r, 0);
            }
        }
    }
    // syzygy: per-vertex kernels with the induced arrow action
    std::vector<Mat> ker;
    cd.omega = Representation::zero(p);
    for (int v = 0; v < p.n_vertices(); ++v) {
        Mat k = linalg::nullspace(cd.cover[static_cast<size_t>(v)]);
        cd.omega.dims[static_cast<size_t>(v)] = k.cols;
        ker.push_back(std::move(k));
    }
    for (int a = 0; a < p.n_arrows(); ++a) {
        int s = p.arrow(a).src, t = p.arrow(a).tgt;
        const Mat& ks = ker[static_cast<size_t>(s)];
        const Mat& kt = ker[static_cast<size_t>(t)];
        if (ks.cols == 0 || kt.rows == 0) {
            cd.omega.mats[static_cast<size_t>(a)] = Mat(kt.cols, ks.cols);
            continue;
        }
        Mat image = cd.p0.mats[static_cast<size_t>(a)] * ks;  // lands in ker at t
        cd.omega.mats[static_cast<size_t>(a)] = linalg::solve(kt, image);
    }
    return cd;
}

inline Representation syzygy(const Presentation& p, const Representation& M) {
    return projective_cover(p, M).omega;
}

// dim Ext^1(M,N) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1 -> 0,
// using Hom(P_v, N) = dim N_v for the middle term.
inline int ext1_dim_linalg(const Presentation& p, const Representation& M,
                           const Representation& N, const CoverData* cover = nullptr) {
    CoverData local;
    if (!cover) {
        local = projective_cover(p, M);
        cover = &local;
    }
    int hom_p0 = 0;
    for (int v : cover->top_vertices) hom_p0 += N.dims[static_cast<size_t>(v)];
    int val = hom_dim_linalg(p, cover->omega, N) - hom_p0 + hom_dim_linalg(p, M, N);
    if (val < 0) throw CheckError("negative Ext dimension: broken cover");
    return val;
}

// Memo for sweeps: reps, covers and pairwise dimensions keyed by canonical
// words. Purely an evaluation cache; every entry is computed by the exact
// routines above.
struct OracleCache {
    const Presentation& p;
    std::map<StringWord, Representation> reps;
    std::map<StringWord, CoverData> covers;
    std::map<std::pair<StringWord, StringWord>, int> hom, ext;

    explicit OracleCache(const Presentation& pres) : p(pres) {}

    const Representation& rep(const StringWord& w) {
        StringWord c = canonical(w);
        auto it = reps.find(c);
        if (it == reps.end()) it = reps.emplace(c, string_to_rep(p, c)).first;
        return it->second;
    }
    const CoverData& cover(const StringWord& w) {
        StringWord c = canonical(w);
        auto it = covers.find(c);
        if (it == covers.end()) it = covers.emplace(c, projective_cover(p, rep(c))).first;
        return it->second;
    }
    int hom_dim(const StringWord& w, const StringWord& v) {
        auto key = std::make_pair(canonical(w), canonical(v));
        auto it = hom.find(key);
        if (it == hom.end())
            it = hom.emplace(key, hom_dim_linalg(p, rep(key.first), rep(key.second))).first;
        return it->second;
    }
    int ext1_dim(const StringWord& w, const StringWord& v) {
        auto key = std::make_pair(canonical(w), canonical(v));
        auto it = ext.find(key);
        if (it == ext.end())
            it = ext.emplace(key, ext1_dim_linalg(p, rep(key.first), rep(key.second),
                                                  &cover(key.first)))
                     .first;
        return it->second;
    }
};

}  // namespace gentle
