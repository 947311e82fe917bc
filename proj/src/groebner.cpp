#include "extor/groebner.hpp"

#include <algorithm>
#include <set>

namespace extor {

// ---------------------------------------------------------------------------
// division

DivisionResult divide(const ModuleElement& v, const std::vector<ModuleElement>& divisors,
                      const ModuleOrder& mord) {
    const RingPtr& ring = v.ring();
    struct Head {
        ModuleTerm lt;
    };
    std::vector<Head> heads;
    heads.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.is_zero()) throw ArgumentError("zero divisor in division");
        heads.push_back({leading_module_term(d, mord)});
    }

    DivisionResult res{ModuleElement(ring, v.rank()),
                       std::vector<Polynomial>(divisors.size(), Polynomial::zero(ring))};
    ModuleElement work = v;
    while (!work.is_zero()) {
        ModuleTerm lt = leading_module_term(work, mord);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (heads[k].lt.position != lt.position || !heads[k].lt.mon.divides(lt.mon)) continue;
            Monomial q = lt.mon.divide_by(heads[k].lt.mon);
            Scalar c = lt.coeff / heads[k].lt.coeff;
            work = work - divisors[k].times_term(q, c);
            res.quotients[k] =
                res.quotients[k] + Polynomial::term(ring, std::move(q), std::move(c));
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible head term to the remainder
            Polynomial t = Polynomial::term(ring, lt.mon, lt.coeff);
            std::vector<Polynomial> coords = res.remainder.coords();
            coords[lt.position] = coords[lt.position] + t;
            res.remainder = ModuleElement(ring, std::move(coords));
            coords = work.coords();
            coords[lt.position] = coords[lt.position] - t;
            work = ModuleElement(ring, std::move(coords));
        }
    }
    return res;
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& basis) {
    check_same_ring(v.ring(), basis.ring());
    if (v.rank() != basis.rank()) throw ArgumentError("ambient rank mismatch in normal form");
    if (basis.size() == 0) return v;
    return divide(v, basis.generators(), basis.module_order()).remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (basis.rank() != 1) throw ArgumentError("polynomial normal form needs a rank-1 basis");
    return normal_form(ModuleElement::from_polynomial(f), basis).coord(0);
}

// ---------------------------------------------------------------------------
// Buchberger with trace

namespace {

struct TraceEntry {
    ModuleElement elem;
    std::vector<Polynomial> rep;  // coordinates over the input generators
    ModuleTerm lt;
};

struct Pair {
    std::size_t a, b;
    Monomial lcm;
    int deg;
};

struct BuchbergerRun {
    std::vector<TraceEntry> working;              // the full (non-reduced) basis with trace
    std::vector<std::vector<Polynomial>> b_rows;  // input lift: f_j = Σ b_rows[j][k] working[k]
    std::vector<ModuleElement> gb_syzygies;       // syzygies of `working` from zero reductions
};

std::vector<Polynomial> combine_reps(const RingPtr& ring, std::size_t s,
                                     const std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>>& parts) {
    std::vector<Polynomial> out(s, Polynomial::zero(ring));
    for (const auto& [coef, rep] : parts)
        for (std::size_t i = 0; i < s; ++i) out[i] = out[i] + coef * (*rep)[i];
    return out;
}

// Runs Buchberger keeping the trace.  With `use_criteria`, the product (rank 1
// only) and chain criteria prune pairs; syzygy extraction requires them off.
BuchbergerRun run_buchberger(const std::vector<ModuleElement>& gens, std::size_t rank,
                             const RingPtr& ring, const MonomialOrder& ord, bool with_trace,
                             bool use_criteria) {
    ModuleOrder mord{ord};
    BuchbergerRun run;
    const std::size_t s = gens.size();
    auto zero_rep = [&] { return std::vector<Polynomial>(s, Polynomial::zero(ring)); };

    auto divisors_of = [&](const std::vector<TraceEntry>& g) {
        std::vector<ModuleElement> ds;
        ds.reserve(g.size());
        for (const auto& e : g) ds.push_back(e.elem);
        return ds;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (run.working[k].lt.position != run.working[n].lt.position) continue;
            Monomial l = Monomial::lcm(run.working[k].lt.mon, run.working[n].lt.mon);
            queue.push_back({k, n, l, l.degree()});
        }
    };

    // seed: reduce each input against the accumulated list before inserting
    for (std::size_t j = 0; j < s; ++j) {
        if (gens[j].is_zero()) continue;
        if (gens[j].rank() != rank) throw ArgumentError("generator rank mismatch");
        check_same_ring(gens[j].ring(), ring);
        DivisionResult dr = divide(gens[j], divisors_of(run.working), mord);
        if (dr.remainder.is_zero()) continue;
        std::vector<Polynomial> rep = zero_rep();
        if (with_trace) {
            std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
            for (std::size_t k = 0; k < run.working.size(); ++k)
                if (!dr.quotients[k].is_zero()) parts.push_back({-dr.quotients[k], &run.working[k].rep});
            rep = combine_reps(ring, s, parts);
            rep[j] = rep[j] + Polynomial::from_long(ring, 1);
        }
        run.working.push_back({dr.remainder, std::move(rep), leading_module_term(dr.remainder, mord)});
        push_pairs(run.working.size() - 1);
    }

    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto pick_next = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < queue.size(); ++i) {
            const Pair &p = queue[i], &q = queue[best];
            if (p.deg != q.deg ? p.deg < q.deg
                               : (p.a != q.a ? p.a < q.a : p.b < q.b))
                best = i;
        }
        Pair p = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));
        return p;
    };

    while (!queue.empty()) {
        Pair p = pick_next();
        const TraceEntry& ga = run.working[p.a];
        const TraceEntry& gb = run.working[p.b];
        treated.insert({p.a, p.b});

        if (use_criteria) {
            // product criterion (valid for ideals only)
            if (rank == 1 && Monomial::gcd(ga.lt.mon, gb.lt.mon).is_one()) continue;
            // chain criterion
            bool skip = false;
            for (std::size_t v = 0; v < run.working.size() && !skip; ++v) {
                if (v == p.a || v == p.b) continue;
                if (run.working[v].lt.position != ga.lt.position) continue;
                if (!run.working[v].lt.mon.divides(p.lcm)) continue;
                auto key = [](std::size_t x, std::size_t y) {
                    return std::make_pair(std::min(x, y), std::max(x, y));
                };
                if (treated.count(key(p.a, v)) && treated.count(key(v, p.b))) skip = true;
            }
            if (skip) continue;
        }

        Monomial ua = p.lcm.divide_by(ga.lt.mon);
        Monomial ub = p.lcm.divide_by(gb.lt.mon);
        Scalar ca = ga.lt.coeff.inverse();
        Scalar cb = gb.lt.coeff.inverse();
        ModuleElement spoly = ga.elem.times_term(ua, ca) - gb.elem.times_term(ub, cb);

        DivisionResult dr = divide(spoly, divisors_of(run.working), mord);
        if (dr.remainder.is_zero()) {
            if (with_trace) {
                // Schreyer generator: u_a e_a - u_b e_b - Σ q_v e_v over `working`
                ModuleElement syz(ring, run.working.size());
                std::vector<Polynomial> coords = syz.coords();
                coords[p.a] = coords[p.a] + Polynomial::term(ring, ua, ca);
                coords[p.b] = coords[p.b] - Polynomial::term(ring, ub, cb);
                for (std::size_t v = 0; v < run.working.size(); ++v)
                    coords[v] = coords[v] - dr.quotients[v];
                run.gb_syzygies.push_back(ModuleElement(ring, std::move(coords)));
            }
            continue;
        }
        std::vector<Polynomial> rep = zero_rep();
        if (with_trace) {
            std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
            parts.push_back({Polynomial::term(ring, ua, ca), &ga.rep});
            parts.push_back({-Polynomial::term(ring, ub, cb), &gb.rep});
            for (std::size_t v = 0; v < run.working.size(); ++v)
                if (!dr.quotients[v].is_zero()) parts.push_back({-dr.quotients[v], &run.working[v].rep});
            rep = combine_reps(ring, s, parts);
        }
        run.working.push_back({dr.remainder, std::move(rep), leading_module_term(dr.remainder, mord)});
        push_pairs(run.working.size() - 1);
    }

    // input lifts against the final basis
    run.b_rows.reserve(s);
    for (std::size_t j = 0; j < s; ++j) {
        if (gens[j].is_zero()) {
            run.b_rows.push_back(std::vector<Polynomial>(run.working.size(), Polynomial::zero(ring)));
            continue;
        }
        DivisionResult dr = divide(gens[j], divisors_of(run.working), mord);
        if (!dr.remainder.is_zero())
            throw InternalError("input generator fails to reduce against its own basis");
        run.b_rows.push_back(std::move(dr.quotients));
    }
    return run;
}

// Inter-reduction of the working basis into the unique reduced GB, carrying
// input representations along.
GroebnerBasis reduce_basis(const BuchbergerRun& run, std::size_t rank, const RingPtr& ring,
                           const MonomialOrder& ord) {
    ModuleOrder mord{ord};
    std::vector<std::size_t> idx(run.working.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const ModuleTerm &ta = run.working[a].lt, &tb = run.working[b].lt;
        int c = mord.compare(ta.position, ta.mon, tb.position, tb.mon);
        if (c != 0) return c < 0;  // ascending by lead
        return a < b;
    });

    // minimal basis: drop any element whose lead is divisible by a kept lead
    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        const ModuleTerm& lt = run.working[i].lt;
        bool divisible = false;
        for (std::size_t k : kept) {
            const ModuleTerm& kt = run.working[k].lt;
            if (kt.position == lt.position && kt.mon.divides(lt.mon)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(i);
    }

    // tail reduction + monic normalization
    std::vector<ModuleElement> elems;
    std::vector<std::vector<Polynomial>> reps;
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<ModuleElement> others;
        std::vector<const std::vector<Polynomial>*> other_reps;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (k == pos) continue;
            others.push_back(run.working[kept[k]].elem);
            other_reps.push_back(&run.working[kept[k]].rep);
        }
        const TraceEntry& entry = run.working[kept[pos]];
        ModuleElement g = entry.elem;
        std::vector<Polynomial> rep = entry.rep;
        if (!others.empty()) {
            DivisionResult dr = divide(g, others, mord);
            g = dr.remainder;
            for (std::size_t k = 0; k < others.size(); ++k) {
                if (dr.quotients[k].is_zero()) continue;
                for (std::size_t i = 0; i < rep.size(); ++i)
                    rep[i] = rep[i] - dr.quotients[k] * (*other_reps[k])[i];
            }
        }
        Scalar lc = leading_module_term(g, mord).coeff;
        Scalar inv = lc.inverse();
        g = g.scaled(inv);
        for (auto& r : rep) r = r.scaled(inv);
        elems.push_back(std::move(g));
        reps.push_back(std::move(rep));
    }

    // canonical presentation: descending by lead
    std::vector<std::size_t> fin(elems.size());
    for (std::size_t i = 0; i < fin.size(); ++i) fin[i] = i;
    std::sort(fin.begin(), fin.end(), [&](std::size_t a, std::size_t b) {
        ModuleTerm ta = leading_module_term(elems[a], mord);
        ModuleTerm tb = leading_module_term(elems[b], mord);
        return mord.compare(ta.position, ta.mon, tb.position, tb.mon) > 0;
    });
    std::vector<ModuleElement> sorted_elems;
    std::vector<std::vector<Polynomial>> sorted_reps;
    for (std::size_t i : fin) {
        sorted_elems.push_back(std::move(elems[i]));
        sorted_reps.push_back(std::move(reps[i]));
    }
    return GroebnerBasis(ring, rank, ord, std::move(sorted_elems), std::move(sorted_reps));
}

std::vector<ModuleElement> wrap_polys(const std::vector<Polynomial>& gens) {
    std::vector<ModuleElement> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(ModuleElement::from_polynomial(g));
    return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, MonomialOrder ord,
                             std::vector<ModuleElement> gens,
                             std::vector<std::vector<Polynomial>> input_reps)
    : ring_(std::move(ring)), rank_(rank), ord_(ord), gens_(std::move(gens)),
      reps_(std::move(input_reps)) {}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, std::size_t rank, RingPtr ring,
                         MonomialOrder ord) {
    BuchbergerRun run = run_buchberger(gens, rank, ring, ord, /*with_trace=*/true,
                                       /*use_criteria=*/true);
    return reduce_basis(run, rank, ring, ord);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, RingPtr ring, MonomialOrder ord) {
    return buchberger(wrap_polys(gens), 1, std::move(ring), ord);
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank,
                                    RingPtr ring, MonomialOrder ord) {
    const std::size_t s = gens.size();
    if (s == 0) return {};
    BuchbergerRun run = run_buchberger(gens, rank, ring, ord, /*with_trace=*/true,
                                       /*use_criteria=*/false);
    const std::size_t t = run.working.size();

    std::vector<ModuleElement> out;
    auto push_unless_zero = [&](std::vector<Polynomial> coords) {
        ModuleElement v(ring, std::move(coords));
        if (!v.is_zero()) {
            for (const auto& seen : out)
                if (seen == v) return;
            out.push_back(std::move(v));
        }
    };

    // Syzygies of the working basis transported to the inputs: tau_i = Σ_k sigma_k C[k][i].
    // A recorded syzygy only references the entries present when it was found.
    for (const auto& sigma : run.gb_syzygies) {
        std::vector<Polynomial> tau(s, Polynomial::zero(ring));
        for (std::size_t k = 0; k < std::min(t, sigma.rank()); ++k) {
            const Polynomial& sk = sigma.coord(k);
            if (sk.is_zero()) continue;
            for (std::size_t i = 0; i < s; ++i) tau[i] = tau[i] + sk * run.working[k].rep[i];
        }
        push_unless_zero(std::move(tau));
    }

    // Rows of Id - B*C: f_j - Σ_k B[j][k] (Σ_i C[k][i] f_i) = 0
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Polynomial> row(s, Polynomial::zero(ring));
        row[j] = Polynomial::from_long(ring, 1);
        for (std::size_t k = 0; k < t; ++k) {
            const Polynomial& bjk = run.b_rows[j][k];
            if (bjk.is_zero()) continue;
            for (std::size_t i = 0; i < s; ++i) row[i] = row[i] - bjk * run.working[k].rep[i];
        }
        push_unless_zero(std::move(row));
    }

    // exactness audit: every emitted relation must evaluate to zero
    for (const auto& syz : out) {
        ModuleElement acc(ring, rank);
        for (std::size_t i = 0; i < s; ++i)
            if (!syz.coord(i).is_zero()) acc = acc + gens[i].times(syz.coord(i));
        if (!acc.is_zero()) throw InternalError("syzygy fails to evaluate to zero");
    }
    return out;
}

std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens, RingPtr ring,
                                    MonomialOrder ord) {
    return syzygies(wrap_polys(gens), 1, std::move(ring), ord);
}

LiftContext::LiftContext(const std::vector<ModuleElement>& gens, std::size_t rank, RingPtr ring,
                         MonomialOrder ord)
    : ring_(std::move(ring)), ngens_(gens.size()), ord_(ord) {
    BuchbergerRun run = run_buchberger(gens, rank, ring_, ord_, /*with_trace=*/true,
                                       /*use_criteria=*/true);
    basis_.reserve(run.working.size());
    reps_.reserve(run.working.size());
    for (auto& e : run.working) {
        basis_.push_back(std::move(e.elem));
        reps_.push_back(std::move(e.rep));
    }
}

std::optional<std::vector<Polynomial>> LiftContext::lift(const ModuleElement& v) const {
    std::vector<Polynomial> coeffs(ngens_, Polynomial::zero(ring_));
    if (v.is_zero()) return coeffs;
    if (basis_.empty()) return std::nullopt;
    DivisionResult dr = divide(v, basis_, ModuleOrder{ord_});
    if (!dr.remainder.is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (dr.quotients[k].is_zero()) continue;
        for (std::size_t i = 0; i < ngens_; ++i)
            coeffs[i] = coeffs[i] + dr.quotients[k] * reps_[k][i];
    }
    return coeffs;
}

std::optional<std::vector<Polynomial>> lift_through(const ModuleElement& v,
                                                    const std::vector<ModuleElement>& gens,
                                                    std::size_t rank, RingPtr ring,
                                                    MonomialOrder ord) {
    LiftContext ctx(gens, rank, std::move(ring), ord);
    return ctx.lift(v);
}

bool buchberger_criterion_holds(const GroebnerBasis& basis) {
    ModuleOrder mord = basis.module_order();
    const auto& g = basis.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
        ModuleTerm ta = leading_module_term(g[a], mord);
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            ModuleTerm tb = leading_module_term(g[b], mord);
            if (ta.position != tb.position) continue;
            Monomial l = Monomial::lcm(ta.mon, tb.mon);
            ModuleElement s = g[a].times_term(l.divide_by(ta.mon), ta.coeff.inverse()) -
                              g[b].times_term(l.divide_by(tb.mon), tb.coeff.inverse());
            if (!s.is_zero() && !divide(s, g, mord).remainder.is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        check_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

int Ideal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring_->order); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gb_cache_.find(ord.name());
    if (it == gb_cache_.end()) {
        auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, ring_, ord));
        it = gb_cache_.emplace(ord.name(), std::move(gb)).first;
    }
    return *it->second;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_unit() const { return contains(Polynomial::from_long(ring_, 1)); }

bool Ideal::equals(const Ideal& other) const {
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

Ideal Ideal::sum(const Ideal& other) const {
    check_same_ring(ring_, other.ring_);
    std::vector<Polynomial> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(gens));
}

Ideal Ideal::product(const Ideal& other) const {
    check_same_ring(ring_, other.ring_);
    std::vector<Polynomial> gens;
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) gens.push_back(a * b);
    return Ideal(ring_, std::move(gens));
}

int Ideal::krull_dimension() const {
    const GroebnerBasis& gb = groebner();
    std::size_t n = ring_->nvars();
    // supports of the leading monomials of LT(I)
    std::vector<unsigned> supports;
    for (const auto& g : gb.generators()) {
        const Monomial& m = leading_module_term(g, gb.module_order()).mon;
        unsigned mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.exponent(i) > 0) mask |= 1u << i;
        supports.push_back(mask);
    }
    // S independent  <=>  no leading monomial involves only variables of S
    int best = -1;
    for (unsigned sub = 0; sub < (1u << n); ++sub) {
        bool independent = true;
        for (unsigned sup : supports) {
            if ((sup & ~sub) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(sub));
    }
    return best;
}

int Ideal::height() const {
    if (is_unit()) throw ArgumentError("height of the unit ideal is undefined");
    return static_cast<int>(ring_->nvars()) - krull_dimension();
}

bool membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

}  // namespace extor
