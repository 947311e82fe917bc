#include "extor/chain_complex.hpp"

#include <algorithm>

namespace extor {

ChainComplex::ChainComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks,
                           std::vector<FreeModuleMap> differentials,
                           std::optional<std::vector<std::vector<int>>> shifts)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)),
      shifts_(std::move(shifts)) {
    if (ranks_.empty()) throw ArgumentError("empty complex");
    if (diffs_.size() + 1 != ranks_.size())
        throw ArgumentError("differential count does not match degree range");
    for (std::size_t t = 0; t < diffs_.size(); ++t) {
        if (diffs_[t].src_rank() != ranks_[t + 1] || diffs_[t].tgt_rank() != ranks_[t])
            throw ArgumentError("differential rank mismatch at degree " +
                                std::to_string(lo_ + 1 + static_cast<int>(t)));
    }
    if (shifts_) {
        if (shifts_->size() != ranks_.size())
            throw ArgumentError("shift table does not match degree range");
        for (std::size_t t = 0; t < ranks_.size(); ++t)
            if ((*shifts_)[t].size() != ranks_[t])
                throw ArgumentError("shift vector length mismatch");
    }
    // d∘d = 0, exact and exhaustive
    for (std::size_t t = 0; t + 1 < diffs_.size(); ++t)
        if (!diffs_[t].compose(diffs_[t + 1]).is_zero())
            throw InternalError("d∘d != 0 at degree " +
                                std::to_string(lo_ + 2 + static_cast<int>(t)));
}

std::size_t ChainComplex::rank(int q) const {
    if (q < lo_ || q > hi()) return 0;
    return ranks_[static_cast<std::size_t>(q - lo_)];
}

std::vector<int> ChainComplex::shifts_at(int q) const {
    if (!shifts_ || q < lo_ || q > hi()) return std::vector<int>(rank(q), 0);
    return (*shifts_)[static_cast<std::size_t>(q - lo_)];
}

const FreeModuleMap& ChainComplex::differential(int q) const {
    if (!has_differential(q)) throw ArgumentError("no differential at degree " + std::to_string(q));
    return diffs_[static_cast<std::size_t>(q - lo_ - 1)];
}

// ---------------------------------------------------------------------------
// Koszul complexes

ChainComplex koszul_complex(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw ArgumentError("Koszul complex of an empty sequence");
    RingPtr ring = fs.front().ring();
    for (const auto& f : fs) check_same_ring(ring, f.ring());
    const int n = static_cast<int>(fs.size());

    bool graded = std::all_of(fs.begin(), fs.end(),
                              [](const Polynomial& f) { return f.is_homogeneous(); });
    std::vector<int> fdeg(fs.size(), 0);
    for (std::size_t i = 0; i < fs.size(); ++i) fdeg[i] = fs[i].is_zero() ? 0 : fs[i].degree();

    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::vector<int>>> bases;  // per degree, subsets
    std::vector<std::vector<int>> shifts;
    for (int q = 0; q <= n; ++q) {
        auto subs = subsets_lex(n, q);
        ranks.push_back(subs.size());
        std::vector<int> sh;
        for (const auto& s : subs) {
            int d = 0;
            for (int i : s) d += fdeg[static_cast<std::size_t>(i)];
            sh.push_back(d);
        }
        shifts.push_back(std::move(sh));
        bases.push_back(std::move(subs));
    }

    std::vector<FreeModuleMap> diffs;
    for (int q = 1; q <= n; ++q) {
        const auto& src = bases[static_cast<std::size_t>(q)];
        const auto& tgt = bases[static_cast<std::size_t>(q - 1)];
        auto tgt_index = [&](const std::vector<int>& s) -> std::size_t {
            auto it = std::lower_bound(tgt.begin(), tgt.end(), s);
            return static_cast<std::size_t>(it - tgt.begin());
        };
        std::vector<std::vector<Polynomial>> mat(
            tgt.size(), std::vector<Polynomial>(src.size(), Polynomial::zero(ring)));
        for (std::size_t j = 0; j < src.size(); ++j) {
            const auto& s = src[j];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                int i = s[pos];
                std::vector<int> rest;
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != pos) rest.push_back(s[t]);
                Polynomial term = (pos % 2 == 0) ? fs[static_cast<std::size_t>(i)]
                                                 : -fs[static_cast<std::size_t>(i)];
                std::size_t row = tgt_index(rest);
                mat[row][j] = mat[row][j] + term;
            }
        }
        diffs.push_back(FreeModuleMap(ring, src.size(), tgt.size(), std::move(mat),
                                      shifts[static_cast<std::size_t>(q)],
                                      shifts[static_cast<std::size_t>(q - 1)]));
    }
    return ChainComplex(ring, 0, std::move(ranks), std::move(diffs),
                        graded ? std::optional(shifts) : std::nullopt);
}

// ---------------------------------------------------------------------------
// tensor product of complexes

namespace {

struct TensorLayout {
    struct Block {
        int p, q;
        std::size_t offset;  // flat offset of (p, q, 0, 0)
        std::size_t ra, rb;  // rank(C_p), rank(D_q)
    };
    std::vector<Block> blocks;
    std::size_t total = 0;

    static TensorLayout at(const ChainComplex& c, const ChainComplex& d, int n) {
        TensorLayout l;
        for (int p = std::max(c.lo(), n - d.hi()); p <= std::min(c.hi(), n - d.lo()); ++p) {
            int q = n - p;
            std::size_t ra = c.rank(p), rb = d.rank(q);
            if (ra == 0 || rb == 0) continue;
            l.blocks.push_back({p, q, l.total, ra, rb});
            l.total += ra * rb;
        }
        return l;
    }

    const Block* find(int p) const {
        for (const auto& b : blocks)
            if (b.p == p) return &b;
        return nullptr;
    }
};

}  // namespace

ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d) {
    check_same_ring(c.ring(), d.ring());
    const RingPtr& ring = c.ring();
    const int lo = c.lo() + d.lo();
    const int hi = c.hi() + d.hi();

    bool graded = c.has_shifts() && d.has_shifts();
    std::vector<std::size_t> ranks;
    std::vector<std::vector<int>> shifts;
    std::vector<TensorLayout> layouts;
    for (int n = lo; n <= hi; ++n) {
        TensorLayout l = TensorLayout::at(c, d, n);
        ranks.push_back(l.total);
        std::vector<int> sh(l.total, 0);
        for (const auto& b : l.blocks) {
            std::vector<int> sa = c.shifts_at(b.p), sb = d.shifts_at(b.q);
            for (std::size_t a = 0; a < b.ra; ++a)
                for (std::size_t bb = 0; bb < b.rb; ++bb)
                    sh[b.offset + a * b.rb + bb] = sa[a] + sb[bb];
        }
        shifts.push_back(std::move(sh));
        layouts.push_back(std::move(l));
    }

    std::vector<FreeModuleMap> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        const TensorLayout& src = layouts[static_cast<std::size_t>(n - lo)];
        const TensorLayout& tgt = layouts[static_cast<std::size_t>(n - 1 - lo)];
        std::vector<std::vector<Polynomial>> mat(
            tgt.total, std::vector<Polynomial>(src.total, Polynomial::zero(ring)));
        for (const auto& blk : src.blocks) {
            for (std::size_t a = 0; a < blk.ra; ++a)
                for (std::size_t b = 0; b < blk.rb; ++b) {
                    std::size_t col = blk.offset + a * blk.rb + b;
                    // d_C x ⊗ y
                    if (c.has_differential(blk.p)) {
                        const FreeModuleMap& dc = c.differential(blk.p);
                        if (const auto* t = tgt.find(blk.p - 1)) {
                            for (std::size_t i = 0; i < dc.tgt_rank(); ++i) {
                                const Polynomial& e = dc.entry(i, a);
                                if (e.is_zero()) continue;
                                std::size_t row = t->offset + i * t->rb + b;
                                mat[row][col] = mat[row][col] + e;
                            }
                        }
                    }
                    // (-1)^p x ⊗ d_D y
                    if (d.has_differential(blk.q)) {
                        const FreeModuleMap& dd = d.differential(blk.q);
                        if (const auto* t = tgt.find(blk.p)) {
                            bool flip = (blk.p % 2) != 0;
                            for (std::size_t i = 0; i < dd.tgt_rank(); ++i) {
                                const Polynomial& e = dd.entry(i, b);
                                if (e.is_zero()) continue;
                                std::size_t row = t->offset + a * t->rb + i;
                                mat[row][col] = mat[row][col] + (flip ? -e : e);
                            }
                        }
                    }
                }
        }
        diffs.push_back(FreeModuleMap(ring, src.total, tgt.total, std::move(mat),
                                      shifts[static_cast<std::size_t>(n - lo)],
                                      shifts[static_cast<std::size_t>(n - 1 - lo)]));
    }
    return ChainComplex(ring, lo, std::move(ranks), std::move(diffs),
                        graded ? std::optional(shifts) : std::nullopt);
}

// ---------------------------------------------------------------------------
// shuffle identification (K(fs) ⊗ K(gs))_n ≅ K(fs‖gs)_n

std::vector<FreeModuleMap> koszul_tensor_iso(const std::vector<Polynomial>& fs,
                                             const std::vector<Polynomial>& gs) {
    if (fs.empty() && gs.empty()) throw ArgumentError("empty Koszul split");
    RingPtr ring = fs.empty() ? gs.front().ring() : fs.front().ring();
    const int nf = static_cast<int>(fs.size());
    const int ng = static_cast<int>(gs.size());
    const int n = nf + ng;

    std::vector<Polynomial> all = fs;
    all.insert(all.end(), gs.begin(), gs.end());
    bool graded = std::all_of(all.begin(), all.end(),
                              [](const Polynomial& f) { return f.is_homogeneous(); });
    std::vector<int> fdeg;
    for (const auto& f : all) fdeg.push_back(f.is_zero() ? 0 : f.degree());

    std::vector<FreeModuleMap> out;
    for (int deg = 0; deg <= n; ++deg) {
        auto tgt = subsets_lex(n, deg);
        auto tgt_index = [&](const std::vector<int>& s) -> std::size_t {
            auto it = std::lower_bound(tgt.begin(), tgt.end(), s);
            return static_cast<std::size_t>(it - tgt.begin());
        };
        // source layout: blocks (p, q = deg - p) ascending p, pairs (S, T) S-major
        std::size_t src_rank = 0;
        struct SrcCol {
            std::vector<int> combined;
            int shift;
        };
        std::vector<SrcCol> cols;
        for (int p = std::max(0, deg - ng); p <= std::min(nf, deg); ++p) {
            int q = deg - p;
            auto sf = subsets_lex(nf, p);
            auto sg = subsets_lex(ng, q);
            for (const auto& S : sf)
                for (const auto& T : sg) {
                    std::vector<int> u = S;
                    for (int t : T) u.push_back(t + nf);
                    int sh = 0;
                    for (int i : u) sh += fdeg[static_cast<std::size_t>(i)];
                    cols.push_back({std::move(u), sh});
                }
            src_rank += sf.size() * sg.size();
        }
        std::vector<std::vector<Polynomial>> mat(
            tgt.size(), std::vector<Polynomial>(cols.size(), Polynomial::zero(ring)));
        std::vector<int> src_shifts, tgt_shifts;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            mat[tgt_index(cols[j].combined)][j] = Polynomial::from_long(ring, 1);
            src_shifts.push_back(cols[j].shift);
        }
        for (const auto& s : tgt) {
            int sh = 0;
            for (int i : s) sh += fdeg[static_cast<std::size_t>(i)];
            tgt_shifts.push_back(sh);
        }
        out.push_back(FreeModuleMap(ring, cols.size(), tgt.size(), std::move(mat),
                                    graded ? std::optional(src_shifts) : std::nullopt,
                                    graded ? std::optional(tgt_shifts) : std::nullopt));
    }
    return out;
}

// ---------------------------------------------------------------------------
// homology

FPModule ideal_as_module(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    const auto& gens = ideal.generators();
    if (gens.empty()) return FPModule::zero_module(ring);
    std::vector<ModuleElement> rels = syzygies(gens, ring, ring->order);
    std::optional<std::vector<int>> tgt;
    if (ideal.is_homogeneous()) {
        std::vector<int> s;
        for (const auto& g : gens) s.push_back(g.degree());
        tgt = std::move(s);
    }
    std::optional<std::vector<int>> src;
    if (tgt) {
        std::vector<int> s;
        bool ok = true;
        for (const auto& r : rels) {
            auto d = element_degree(r, *tgt);
            if (!d) {
                ok = false;
                break;
            }
            s.push_back(*d);
        }
        if (ok) src = std::move(s);
    }
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, gens.size(), rels, src, tgt);
    return FPModule::from_presentation(std::move(pres));
}

FPModule homology_with_coefficients(const ChainComplex& c, int q, const FPModule& coeff) {
    const RingPtr& ring = c.ring();
    check_same_ring(ring, coeff.ring());
    if (q < c.lo() || q > c.hi()) return FPModule::zero_module(ring, coeff.annihilator());

    const FreeModuleMap& pm = coeff.presentation();
    const std::size_t s = pm.tgt_rank();
    const std::size_t k = pm.src_rank();
    const std::size_t rq = c.rank(q);
    const std::size_t rqm1 = c.rank(q - 1);
    const std::size_t rqp1 = c.rank(q + 1);
    const std::size_t dim = rq * s;
    if (dim == 0) return FPModule::zero_module(ring, coeff.annihilator());

    auto tensor_with_identity = [&](const FreeModuleMap& f) {
        // f ⊗ Id_s : columns indexed (j, a) -> Σ_i f[i][j] e_{(i,a)}
        std::vector<ModuleElement> cols;
        for (std::size_t j = 0; j < f.src_rank(); ++j)
            for (std::size_t a = 0; a < s; ++a) {
                std::vector<Polynomial> coords(f.tgt_rank() * s, Polynomial::zero(ring));
                for (std::size_t i = 0; i < f.tgt_rank(); ++i)
                    coords[i * s + a] = f.entry(i, j);
                cols.emplace_back(ring, std::move(coords));
            }
        return cols;
    };
    auto identity_tensor_relations = [&](std::size_t slots) {
        // Id_slots ⊗ P : columns indexed (i, b) -> Σ_a P[a][b] e_{(i,a)}
        std::vector<ModuleElement> cols;
        for (std::size_t i = 0; i < slots; ++i)
            for (std::size_t b = 0; b < k; ++b) {
                std::vector<Polynomial> coords(slots * s, Polynomial::zero(ring));
                for (std::size_t a = 0; a < s; ++a) coords[i * s + a] = pm.entry(a, b);
                cols.emplace_back(ring, std::move(coords));
            }
        return cols;
    };

    // kernel generators of the induced map (C_q ⊗ M) -> (C_{q-1} ⊗ M)
    std::vector<ModuleElement> ker_gens;
    if (!c.has_differential(q) || rqm1 == 0) {
        for (std::size_t t = 0; t < dim; ++t)
            ker_gens.push_back(ModuleElement::unit(ring, dim, t));
    } else {
        std::vector<ModuleElement> combined = tensor_with_identity(c.differential(q));
        std::size_t first_block = combined.size();
        for (auto& col : identity_tensor_relations(rqm1)) {
            // pad to live in R^{rqm1*s}: these are target-side relation columns
            combined.push_back(std::move(col));
        }
        // syzygies of [d⊗Id | Id⊗P] inside R^{rqm1*s}; project onto the first block
        std::vector<ModuleElement> syz = syzygies(combined, rqm1 * s, ring, ring->order);
        for (const auto& z : syz) {
            std::vector<Polynomial> head(z.coords().begin(),
                                         z.coords().begin() + static_cast<long>(first_block));
            ModuleElement v(ring, std::move(head));
            if (!v.is_zero()) ker_gens.push_back(std::move(v));
        }
    }

    // image generators: d_{q+1} ⊗ Id columns plus Id ⊗ P columns
    std::vector<ModuleElement> im_gens;
    if (c.has_differential(q + 1) && rqp1 > 0)
        for (auto& col : tensor_with_identity(c.differential(q + 1))) im_gens.push_back(std::move(col));
    for (auto& col : identity_tensor_relations(rq)) im_gens.push_back(std::move(col));

    std::optional<std::vector<int>> ambient_shifts;
    if (c.has_shifts() && coeff.has_shifts()) {
        std::vector<int> cs = c.shifts_at(q);
        std::vector<int> ms = coeff.generator_shifts();
        std::vector<int> sh(dim, 0);
        for (std::size_t i = 0; i < rq; ++i)
            for (std::size_t a = 0; a < s; ++a) sh[i * s + a] = cs[i] + ms[a];
        ambient_shifts = std::move(sh);
    }
    return subquotient(ker_gens, im_gens, dim, ring, ambient_shifts, coeff.annihilator());
}

FPModule homology(const ChainComplex& c, int q) {
    return homology_with_coefficients(c, q, FPModule::free_module(c.ring(), 1));
}

}  // namespace extor
