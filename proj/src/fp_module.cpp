#include "extor/fp_module.hpp"

#include <algorithm>
#include <sstream>

namespace extor {

// ---------------------------------------------------------------------------
// HilbertFunction

bool HilbertFunction::is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
}

std::string HilbertFunction::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    os << "]";
    return os.str();
}

HilbertFunction HilbertFunction::zero(int bound) {
    return HilbertFunction{bound, std::vector<long>(static_cast<std::size_t>(bound) + 1, 0)};
}

HilbertFunction HilbertFunction::plus(const HilbertFunction& o) const {
    HilbertFunction r = zero(std::min(bound, o.bound));
    for (int d = 0; d <= r.bound; ++d) r.dims[static_cast<std::size_t>(d)] = at(d) + o.at(d);
    return r;
}

HilbertFunction HilbertFunction::minus(const HilbertFunction& o) const {
    HilbertFunction r = zero(std::min(bound, o.bound));
    for (int d = 0; d <= r.bound; ++d) r.dims[static_cast<std::size_t>(d)] = at(d) - o.at(d);
    return r;
}

HilbertFunction HilbertFunction::shifted(int s) const {
    HilbertFunction r = zero(bound);
    for (int d = 0; d <= bound; ++d) r.dims[static_cast<std::size_t>(d)] = at(d - s);
    return r;
}

HilbertFunction HilbertFunction::scaled(long k) const {
    HilbertFunction r = *this;
    for (auto& d : r.dims) d *= k;
    return r;
}

// ---------------------------------------------------------------------------
// combinatorics helpers

std::vector<std::vector<int>> subsets_lex(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - q + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < q; ++k)
            cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)] + 1;
    }
    return out;
}

long binomial(int n, int q) {
    if (q < 0 || q > n) return 0;
    long r = 1;
    for (int i = 0; i < q; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// ---------------------------------------------------------------------------
// FPModule

FPModule FPModule::from_presentation(FreeModuleMap presentation, std::optional<Ideal> annihilator) {
    FPModule m;
    m.pres_ = std::move(presentation);
    m.ann_ = std::move(annihilator);
    if (m.ann_) {
        check_same_ring(m.pres_.ring(), m.ann_->ring());
        const GroebnerBasis& gb = m.column_basis();
        for (std::size_t i = 0; i < m.generator_rank(); ++i)
            for (const auto& g : m.ann_->generators()) {
                ModuleElement v = ModuleElement::unit(m.ring(), m.generator_rank(), i).times(g);
                if (!normal_form(v, gb).is_zero())
                    throw ArgumentError(
                        "declared annihilator does not kill generator " + std::to_string(i));
            }
    }
    return m;
}

FPModule FPModule::free_module(RingPtr ring, std::size_t rank,
                               std::optional<std::vector<int>> shifts) {
    if (!shifts) shifts = std::vector<int>(rank, 0);
    FreeModuleMap p(ring, 0, rank, std::vector<std::vector<Polynomial>>(rank),
                    std::vector<int>{}, shifts);
    return from_presentation(std::move(p));
}

FPModule FPModule::zero_module(RingPtr ring, std::optional<Ideal> annihilator) {
    FreeModuleMap p(ring, 0, 0, {}, std::vector<int>{}, std::vector<int>{});
    FPModule m;
    m.pres_ = std::move(p);
    m.ann_ = std::move(annihilator);
    return m;
}

FPModule FPModule::quotient_ring(RingPtr ring, const Ideal& j) {
    std::vector<ModuleElement> cols;
    std::vector<int> src_shifts;
    for (const auto& g : j.generators()) {
        cols.push_back(ModuleElement::from_polynomial(g));
        src_shifts.push_back(g.degree());
    }
    bool graded = j.is_homogeneous();
    FreeModuleMap p = FreeModuleMap::from_columns(
        ring, 1, cols, graded ? std::optional(src_shifts) : std::nullopt,
        std::vector<int>{0});
    return from_presentation(std::move(p), j);
}

std::vector<int> FPModule::generator_shifts() const {
    if (pres_.tgt_shifts()) return *pres_.tgt_shifts();
    return std::vector<int>(generator_rank(), 0);
}

const GroebnerBasis& FPModule::column_basis() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!gb_) {
        gb_ = std::make_shared<GroebnerBasis>(
            buchberger(pres_.columns(), pres_.tgt_rank(), pres_.ring(), pres_.ring()->order));
    }
    return *gb_;
}

bool FPModule::is_zero() const {
    if (generator_rank() == 0) return true;
    return is_zero_module(*this);
}

bool FPModule::is_graded() const {
    std::vector<int> tgt = generator_shifts();
    for (std::size_t j = 0; j < pres_.src_rank(); ++j) {
        ModuleElement col = pres_.column(j);
        if (col.is_zero()) continue;
        if (!element_degree(col, tgt)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// kernels and subquotients

namespace {

// Generator degrees for a list of elements of a shifted free module; present
// only when every element is homogeneous.
std::optional<std::vector<int>> degrees_of(const std::vector<ModuleElement>& elems,
                                           const std::optional<std::vector<int>>& shifts) {
    if (!shifts) return std::nullopt;
    std::vector<int> out;
    out.reserve(elems.size());
    for (const auto& v : elems) {
        auto d = element_degree(v, *shifts);
        if (!d) return std::nullopt;
        out.push_back(*d);
    }
    return out;
}

FPModule canonicalize_zero(FPModule m) {
    if (m.generator_rank() == 0 || m.is_zero())
        return FPModule::zero_module(m.ring(), m.annihilator());
    return m;
}

}  // namespace

std::pair<std::vector<ModuleElement>, FPModule> kernel_with_generators(const FreeModuleMap& f) {
    const RingPtr& ring = f.ring();
    std::vector<ModuleElement> cols = f.columns();
    std::vector<ModuleElement> gens = syzygies(cols, f.tgt_rank(), ring, ring->order);
    // exactness audit
    for (const auto& g : gens)
        if (!f.apply(g).is_zero()) throw InternalError("kernel generator not annihilated by map");
    std::optional<std::vector<int>> gen_degrees = degrees_of(gens, f.src_shifts());
    std::vector<ModuleElement> second = syzygies(gens, f.src_rank(), ring, ring->order);
    std::optional<std::vector<int>> rel_degrees;
    if (gen_degrees) rel_degrees = degrees_of(second, gen_degrees);
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, gens.size(), second, rel_degrees,
                                                     gen_degrees);
    return {std::move(gens), canonicalize_zero(FPModule::from_presentation(std::move(pres)))};
}

FPModule kernel(const FreeModuleMap& f) { return kernel_with_generators(f).second; }

FPModule subquotient(const std::vector<ModuleElement>& ker_gens,
                     const std::vector<ModuleElement>& im_gens, std::size_t ambient_rank,
                     RingPtr ring, std::optional<std::vector<int>> ambient_shifts,
                     std::optional<Ideal> annihilator) {
    // relations: lifts of the image generators, plus syzygies of the kernel gens
    LiftContext lifts(ker_gens, ambient_rank, ring, ring->order);
    std::vector<ModuleElement> rels;
    for (const auto& v : im_gens) {
        if (v.is_zero()) continue;
        auto lifted = lifts.lift(v);
        if (!lifted)
            throw InternalError("image generator outside kernel span (broken complex: d∘d != 0?)");
        ModuleElement rel(ring, std::move(*lifted));
        if (!rel.is_zero()) rels.push_back(std::move(rel));
    }
    for (auto& s : syzygies(ker_gens, ambient_rank, ring, ring->order)) rels.push_back(std::move(s));

    std::optional<std::vector<int>> gen_degrees = degrees_of(ker_gens, ambient_shifts);
    std::optional<std::vector<int>> rel_degrees;
    if (gen_degrees) rel_degrees = degrees_of(rels, gen_degrees);
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, ker_gens.size(), rels, rel_degrees,
                                                     gen_degrees);
    return canonicalize_zero(FPModule::from_presentation(std::move(pres), std::move(annihilator)));
}

// ---------------------------------------------------------------------------
// tensor / restriction / conormal

FPModule tensor_modules(const FPModule& m, const FPModule& n) {
    check_same_ring(m.ring(), n.ring());
    const RingPtr& ring = m.ring();
    const FreeModuleMap& pm = m.presentation();
    const FreeModuleMap& pn = n.presentation();
    const std::size_t rm = pm.tgt_rank(), rn = pn.tgt_rank();

    std::vector<ModuleElement> cols;
    // P_M ⊗ F_N
    for (std::size_t j = 0; j < pm.src_rank(); ++j) {
        ModuleElement cm = pm.column(j);
        for (std::size_t b = 0; b < rn; ++b) {
            std::vector<Polynomial> coords(rm * rn, Polynomial::zero(ring));
            for (std::size_t i = 0; i < rm; ++i) coords[i * rn + b] = cm.coord(i);
            cols.emplace_back(ring, std::move(coords));
        }
    }
    // F_M ⊗ P_N
    for (std::size_t a = 0; a < rm; ++a)
        for (std::size_t j = 0; j < pn.src_rank(); ++j) {
            ModuleElement cn = pn.column(j);
            std::vector<Polynomial> coords(rm * rn, Polynomial::zero(ring));
            for (std::size_t i = 0; i < rn; ++i) coords[a * rn + i] = cn.coord(i);
            cols.emplace_back(ring, std::move(coords));
        }

    std::optional<std::vector<int>> tgt_shifts;
    if (m.has_shifts() && n.has_shifts()) {
        std::vector<int> sm = m.generator_shifts(), sn = n.generator_shifts();
        std::vector<int> s(rm * rn, 0);
        for (std::size_t a = 0; a < rm; ++a)
            for (std::size_t b = 0; b < rn; ++b) s[a * rn + b] = sm[a] + sn[b];
        tgt_shifts = std::move(s);
    }
    std::optional<std::vector<int>> src_shifts;
    if (tgt_shifts) src_shifts = degrees_of(cols, tgt_shifts).value_or(std::vector<int>{});
    if (src_shifts && src_shifts->size() != cols.size()) src_shifts = std::nullopt;

    std::optional<Ideal> ann;
    if (m.annihilator() && n.annihilator())
        ann = m.annihilator()->sum(*n.annihilator());
    else if (m.annihilator())
        ann = m.annihilator();
    else if (n.annihilator())
        ann = n.annihilator();

    FreeModuleMap pres = FreeModuleMap::from_columns(ring, rm * rn, cols, src_shifts, tgt_shifts);
    return canonicalize_zero(FPModule::from_presentation(std::move(pres), std::move(ann)));
}

FPModule restrict_to(const FPModule& m, const Ideal& j) {
    check_same_ring(m.ring(), j.ring());
    const RingPtr& ring = m.ring();
    const std::size_t r = m.generator_rank();
    std::vector<ModuleElement> cols = m.presentation().columns();
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& g : j.generators())
            cols.push_back(ModuleElement::unit(ring, r, i).times(g));

    std::optional<std::vector<int>> tgt_shifts;
    if (m.has_shifts()) tgt_shifts = m.generator_shifts();
    std::optional<std::vector<int>> src_shifts;
    if (tgt_shifts) {
        auto d = degrees_of(cols, tgt_shifts);
        if (d) src_shifts = *d;
    }
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, r, cols, src_shifts, tgt_shifts);
    return canonicalize_zero(FPModule::from_presentation(std::move(pres), j));
}

FPModule conormal(const Ideal& i, const Ideal& j) {
    check_same_ring(i.ring(), j.ring());
    const RingPtr& ring = i.ring();
    for (const auto& f : i.generators())
        if (!j.contains(f))
            throw ArgumentError("conormal requires I ⊆ J; generator " + f.str() + " is outside J");

    const auto& gens = i.generators();
    const std::size_t c = gens.size();
    std::vector<ModuleElement> rels;
    for (auto& s : syzygies(gens, ring, ring->order)) rels.push_back(std::move(s));
    for (std::size_t k = 0; k < c; ++k)
        for (const auto& g : j.generators())
            rels.push_back(ModuleElement::unit(ring, c, k).times(g));

    std::optional<std::vector<int>> tgt_shifts;
    if (i.is_homogeneous()) {
        std::vector<int> s;
        for (const auto& f : gens) s.push_back(f.degree());
        tgt_shifts = std::move(s);
    }
    std::optional<std::vector<int>> src_shifts;
    if (tgt_shifts) {
        auto d = degrees_of(rels, tgt_shifts);
        if (d) src_shifts = *d;
    }
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, c, rels, src_shifts, tgt_shifts);
    return canonicalize_zero(FPModule::from_presentation(std::move(pres), j));
}

// ---------------------------------------------------------------------------
// exterior powers

FPModule exterior_power(const FPModule& m, int q) {
    if (q < 0) throw ArgumentError("negative exterior power");
    const RingPtr& ring = m.ring();
    if (q == 0) {
        if (m.annihilator()) return FPModule::quotient_ring(ring, *m.annihilator());
        if (m.generator_rank() == 0) return FPModule::zero_module(ring);
        return FPModule::free_module(ring, 1);
    }
    if (q == 1) return m;

    // the wedge presentation has C(n,q) rows and C(n,q-1)·k columns; prune
    // redundant generators first to keep n small
    FPModule mm = minimize_presentation(m);
    const FreeModuleMap& p = mm.presentation();
    const int n = static_cast<int>(p.tgt_rank());
    std::vector<std::vector<int>> tgt_subsets = subsets_lex(n, q);
    std::vector<std::vector<int>> wedge_subsets = subsets_lex(n, q - 1);
    auto subset_index = [&](const std::vector<int>& s) -> std::size_t {
        auto it = std::lower_bound(tgt_subsets.begin(), tgt_subsets.end(), s);
        return static_cast<std::size_t>(it - tgt_subsets.begin());
    };

    std::vector<int> base_shifts = mm.generator_shifts();
    std::vector<int> tgt_shifts;
    for (const auto& s : tgt_subsets) {
        int d = 0;
        for (int i : s) d += base_shifts[static_cast<std::size_t>(i)];
        tgt_shifts.push_back(d);
    }

    std::vector<ModuleElement> cols;
    std::vector<int> src_shift_accum;
    bool src_shifts_ok = mm.has_shifts() && p.src_shifts().has_value();
    for (const auto& w : wedge_subsets) {
        for (std::size_t j = 0; j < p.src_rank(); ++j) {
            std::vector<Polynomial> coords(tgt_subsets.size(), Polynomial::zero(ring));
            for (int i = 0; i < n; ++i) {
                const Polynomial& pij = p.entry(static_cast<std::size_t>(i), j);
                if (pij.is_zero()) continue;
                if (std::binary_search(w.begin(), w.end(), i)) continue;  // e_i ∧ e_i = 0
                // sign of sorting e_w1 ∧ ... ∧ e_w(q-1) ∧ e_i
                int pos = static_cast<int>(std::lower_bound(w.begin(), w.end(), i) - w.begin());
                int swaps = (q - 1) - pos;
                std::vector<int> u = w;
                u.insert(u.begin() + pos, i);
                Polynomial signed_p = (swaps % 2 == 0) ? pij : -pij;
                std::size_t row = subset_index(u);
                coords[row] = coords[row] + signed_p;
            }
            cols.emplace_back(ring, std::move(coords));
            if (src_shifts_ok) {
                int d = (*p.src_shifts())[j];
                for (int i : w) d += base_shifts[static_cast<std::size_t>(i)];
                src_shift_accum.push_back(d);
            }
        }
    }

    FreeModuleMap pres = FreeModuleMap::from_columns(
        ring, tgt_subsets.size(), cols,
        src_shifts_ok ? std::optional(src_shift_accum) : std::nullopt,
        mm.has_shifts() ? std::optional(tgt_shifts) : std::nullopt);
    return canonicalize_zero(FPModule::from_presentation(std::move(pres), mm.annihilator()));
}

// ---------------------------------------------------------------------------
// Hilbert functions

namespace {

// Counts degree-d monomials in nvars variables outside the monomial ideal
// generated by `staircase`.
long count_standard_monomials(int nvars, int d, const std::vector<Monomial>& staircase) {
    if (d < 0) return 0;
    long count = 0;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    // depth-first enumeration of exponent vectors of total degree d
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            Monomial mono(exps);
            bool divisible = false;
            for (const auto& s : staircase)
                if (s.divides(mono)) {
                    divisible = true;
                    break;
                }
            if (!divisible) ++count;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (nvars == 0) {
        bool divisible = false;
        for (const auto& s : staircase) divisible |= s.is_one();
        return (d == 0 && !divisible) ? 1 : 0;
    }
    rec(rec, 0, d);
    return count;
}

}  // namespace

HilbertFunction hilbert_function(const FPModule& m, int degree_bound) {
    if (degree_bound < 0) throw ArgumentError("negative degree bound");
    HilbertFunction hf = HilbertFunction::zero(degree_bound);
    if (m.generator_rank() == 0) return hf;
    if (!m.is_graded())
        throw CertificationError("Hilbert function requires a homogeneous presentation");

    const RingPtr& ring = m.ring();
    const std::vector<int> shifts = m.generator_shifts();
    const GroebnerBasis& gb = m.column_basis();
    std::vector<std::vector<Monomial>> staircase(m.generator_rank());
    for (const auto& g : gb.generators()) {
        ModuleTerm lt = leading_module_term(g, gb.module_order());
        staircase[lt.position].push_back(lt.mon);
    }
    const int nvars = static_cast<int>(ring->nvars());
    for (std::size_t i = 0; i < m.generator_rank(); ++i)
        for (int d = 0; d <= degree_bound; ++d)
            hf.dims[static_cast<std::size_t>(d)] +=
                count_standard_monomials(nvars, d - shifts[i], staircase[i]);
    return hf;
}

bool is_zero_module(const FPModule& m) {
    if (m.generator_rank() == 0) return true;
    const GroebnerBasis& gb = m.column_basis();
    for (std::size_t i = 0; i < m.generator_rank(); ++i) {
        ModuleElement e = ModuleElement::unit(m.ring(), m.generator_rank(), i);
        if (!normal_form(e, gb).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// minimization and freeness detection

FPModule minimize_presentation(const FPModule& m) {
    const RingPtr& ring = m.ring();
    std::vector<std::vector<Polynomial>> mat;
    for (std::size_t i = 0; i < m.generator_rank(); ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < m.presentation().src_rank(); ++j)
            row.push_back(m.presentation().entry(i, j));
        mat.push_back(std::move(row));
    }
    std::vector<int> shifts = m.generator_shifts();

    for (;;) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t j = 0; j < (mat.empty() ? 0 : mat[0].size()) && !found; ++j)
            for (std::size_t i = 0; i < mat.size() && !found; ++i) {
                const Polynomial& e = mat[i][j];
                if (!e.is_zero() && e.is_constant()) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        Scalar inv = mat[pi][pj].constant_coefficient().inverse();
        // eliminate generator pi using relation pj
        std::vector<std::vector<Polynomial>> next;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == pi) continue;
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < mat[i].size(); ++j) {
                if (j == pj) continue;
                Polynomial adj = mat[i][j] - mat[i][pj].scaled(inv) * mat[pi][j];
                row.push_back(std::move(adj));
            }
            next.push_back(std::move(row));
        }
        mat = std::move(next);
        shifts.erase(shifts.begin() + static_cast<long>(pi));
        if (mat.empty()) break;
    }

    // drop zero columns
    std::size_t rank = mat.size();
    std::vector<ModuleElement> cols;
    if (rank > 0) {
        std::size_t ncols = mat[0].size();
        for (std::size_t j = 0; j < ncols; ++j) {
            std::vector<Polynomial> coords;
            for (std::size_t i = 0; i < rank; ++i) coords.push_back(mat[i][j]);
            ModuleElement col(ring, std::move(coords));
            if (!col.is_zero()) cols.push_back(std::move(col));
        }
    }
    std::optional<std::vector<int>> tgt = m.has_shifts() ? std::optional(shifts) : std::nullopt;
    std::optional<std::vector<int>> src;
    if (tgt) {
        auto d = degrees_of(cols, tgt);
        if (d) src = *d;
    }
    FreeModuleMap pres = FreeModuleMap::from_columns(ring, rank, cols, src, tgt);
    return FPModule::from_presentation(std::move(pres), m.annihilator());
}

std::optional<std::vector<int>> free_over_quotient(const FPModule& m, const Ideal& j) {
    FPModule mm = minimize_presentation(m);
    const std::size_t r = mm.generator_rank();
    if (r == 0) return std::vector<int>{};
    const RingPtr& ring = mm.ring();
    std::vector<ModuleElement> jf;
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& g : j.generators())
            jf.push_back(ModuleElement::unit(ring, r, i).times(g));
    GroebnerBasis gb = buchberger(jf, r, ring, ring->order);
    for (std::size_t col = 0; col < mm.presentation().src_rank(); ++col) {
        ModuleElement c = mm.presentation().column(col);
        if (c.is_zero()) continue;
        if (jf.empty() || !normal_form(c, gb).is_zero()) return std::nullopt;
    }
    return mm.generator_shifts();
}

}  // namespace extor
