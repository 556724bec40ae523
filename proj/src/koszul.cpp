#include "brst/koszul.hpp"

#include "brst/errors.hpp"
#include "brst/probes.hpp"

#include <bit>
#include <numeric>
#include <set>

namespace brst {

int homological_degree(std::uint16_t antighosts)
{
    return std::popcount(antighosts);
}

bool chain_is_zero(const KoszulChain& x)
{
    for (const auto& [mask, c] : x)
        if (!c.is_zero())
            return false;
    return true;
}

std::string chain_str(const KoszulChain& x)
{
    std::string out;
    for (const auto& [mask, c] : x) {
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + c.str() + ")";
        if (mask)
            out += "*" + SuperKey{0, mask}.str();
    }
    return out.empty() ? "0" : out;
}

bool AcyclicityReport::acyclic() const
{
    for (const auto& e : entries)
        if (e.degree >= 1 && e.homology != 0)
            return false;
    return true;
}

std::size_t AcyclicityReport::total_homology(int degree) const
{
    std::size_t n = 0;
    for (const auto& e : entries)
        if (e.degree == degree)
            n += e.homology;
    return n;
}

CheckRecord AcyclicityReport::record(const std::string& id, const std::string& anchor) const
{
    CheckRecord rec = make_record(id, anchor);
    rec.probes = entries.size();
    for (const auto& e : entries) {
        if (e.degree < 1 || e.homology == 0)
            continue;
        rec.nonzero_coefficients += e.homology;
        rec.max_residual_degree = std::max(rec.max_residual_degree, e.weight);
        if (rec.witnesses.size() < 3)
            rec.witnesses.push_back("dim H_" + std::to_string(e.degree) + " = " + std::to_string(e.homology) +
                                    " in weight " + std::to_string(e.weight));
    }
    if (!witness.empty())
        rec.witnesses.push_back("nontrivial cycle " + witness);
    rec.status = acyclic() ? Status::pass : Status::fail;
    std::size_t h0 = total_homology(0);
    rec.detail = "weights 0.." + std::to_string(degree_bound) + ", total dim H_0 = " + std::to_string(h0);
    return rec;
}

namespace {

int below(std::uint16_t set, std::size_t a)
{
    return std::popcount(static_cast<std::uint16_t>(set & ((1u << a) - 1u)));
}

// Integer rescaling of a rational vector.
std::vector<long> integral(const std::vector<Rational>& v)
{
    mpz_class den = 1;
    for (const auto& x : v)
        den = lcm(den, mpz_class(x.get_den()));
    std::vector<long> out;
    for (const auto& x : v) {
        Rational y = x * den;
        out.push_back(y.get_num().get_si());
    }
    return out;
}

void normal_form(const Echelon& ideal, Vector& x)
{
    for (std::size_t r = 0; r < ideal.rank(); ++r) {
        const std::size_t pc = ideal.pivot_cols[r];
        if (x[pc].is_zero())
            continue;
        const Scalar c = x[pc];
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!ideal.reduced(r, j).is_zero())
                x[j] -= c * ideal.reduced(r, j);
    }
}

} // namespace

struct KoszulComplex::Slice {
    using BasisKey = std::pair<std::uint16_t, Monomial>;

    int w = 0;
    FineKey fine;
    std::vector<std::vector<BasisKey>> basis;
    std::vector<std::map<BasisKey, std::size_t>> index;
    std::vector<std::unique_ptr<SliceMap>> d;
    Echelon ideal;

    std::size_t dim(std::size_t i) const { return basis[i].size(); }
};

KoszulComplex::KoszulComplex(MomentMapData J, int degree_bound) : J_(std::move(J)), bound_(degree_bound)
{
    if (J_.J.empty())
        throw ConfigError("moment map has no components");
    if (J_.dim() > kMaxLieDim)
        throw ConfigError("at most " + std::to_string(kMaxLieDim) + " moment map components are supported");
    ctx_ = J_.context();
    std::vector<std::vector<Rational>> rows;
    for (const auto& Ja : J_.J) {
        if (Ja.is_zero() || !Ja.is_homogeneous())
            throw ConfigError("Koszul slices need nonzero homogeneous components, got " + Ja.str());
        gen_degree_.push_back(Ja.degree());
        for (const auto& [m, c] : Ja.terms()) {
            std::vector<Rational> row;
            for (std::size_t v = 0; v < ctx_->size(); ++v)
                row.emplace_back(m[v]);
            rows.push_back(std::move(row));
        }
    }
    for (const auto& v : rational_kernel(rows, ctx_->size()))
        fine_.push_back(integral(v));
}

KoszulComplex::~KoszulComplex() = default;

KoszulComplex::FineKey KoszulComplex::fine_weight(const Monomial& m) const
{
    FineKey k;
    k.reserve(fine_.size());
    for (const auto& row : fine_)
        k.push_back(m.weight(row));
    return k;
}

int KoszulComplex::mask_weight(std::uint16_t mask) const
{
    int w = 0;
    for (std::size_t a = 0; a < rank(); ++a)
        if ((mask >> a) & 1u)
            w += gen_degree_[a];
    return w;
}

void KoszulComplex::require_bound(int w) const
{
    if (w > bound_)
        throw DegreeOverflow("Koszul weight " + std::to_string(w) + " exceeds the degree bound " +
                             std::to_string(bound_));
}

const std::vector<Monomial>& KoszulComplex::monomials(int degree, const FineKey& fine) const
{
    static const std::vector<Monomial> empty;
    auto it = monomials_.find(degree);
    if (it == monomials_.end()) {
        std::map<FineKey, std::vector<Monomial>> buckets;
        for (const auto& m : monomials_of_degree(ctx_->size(), static_cast<unsigned>(degree)))
            buckets[fine_weight(m)].push_back(m);
        it = monomials_.emplace(degree, std::move(buckets)).first;
    }
    auto jt = it->second.find(fine);
    return jt == it->second.end() ? empty : jt->second;
}

const KoszulComplex::Slice& KoszulComplex::slice(int w, const FineKey& fine) const
{
    auto key = std::make_pair(w, fine);
    auto it = slices_.find(key);
    if (it != slices_.end())
        return *it->second;

    const std::size_t l = rank();
    auto s = std::make_unique<Slice>();
    s->w = w;
    s->fine = fine;
    s->basis.resize(l + 1);
    s->index.resize(l + 1);
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        const auto m16 = static_cast<std::uint16_t>(mask);
        const int p = w - mask_weight(m16);
        if (p < 0)
            continue;
        const auto i = static_cast<std::size_t>(homological_degree(m16));
        for (const auto& mon : monomials(p, fine)) {
            s->index[i].emplace(Slice::BasisKey{m16, mon}, s->basis[i].size());
            s->basis[i].emplace_back(m16, mon);
        }
    }
    s->d.resize(l + 1);
    for (std::size_t i = 1; i <= l; ++i) {
        DenseMatrix m(s->dim(i - 1), s->dim(i));
        for (std::size_t col = 0; col < s->dim(i); ++col) {
            const auto& [mask, mon] = s->basis[i][col];
            for (std::size_t a = 0; a < l; ++a) {
                if (!((mask >> a) & 1u))
                    continue;
                const Scalar sign(below(mask, a) % 2 ? -1 : 1);
                const auto rest = static_cast<std::uint16_t>(mask & ~(1u << a));
                for (const auto& [jm, jc] : J_.J[a].terms())
                    m(s->index[i - 1].at({rest, mon * jm}), col) += sign * jc;
            }
        }
        s->d[i] = std::make_unique<SliceMap>("d_" + std::to_string(i), std::move(m));
    }
    DenseMatrix image(l >= 1 ? s->dim(1) : 0, s->dim(0));
    if (l >= 1)
        for (std::size_t r = 0; r < s->dim(0); ++r)
            for (std::size_t c = 0; c < s->dim(1); ++c)
                image(c, r) = s->d[1]->matrix()(r, c);
    s->ideal = row_echelon(image);
    return *slices_.emplace(key, std::move(s)).first->second;
}

std::map<std::pair<int, KoszulComplex::FineKey>, Vector> KoszulComplex::split(const KoszulChain& x, int i) const
{
    std::map<std::pair<int, FineKey>, Vector> out;
    for (const auto& [mask, c] : x) {
        if (homological_degree(mask) != i)
            throw ShapeError("chain is not homogeneous in homological degree");
        for (const auto& [mon, coeff] : c.terms()) {
            const int w = static_cast<int>(mon.degree()) + mask_weight(mask);
            require_bound(w);
            auto key = std::make_pair(w, fine_weight(mon));
            const Slice& s = slice(w, key.second);
            auto [it, fresh] = out.try_emplace(key);
            if (fresh)
                it->second.assign(s.dim(static_cast<std::size_t>(i)), Scalar());
            it->second[s.index[static_cast<std::size_t>(i)].at({mask, mon})] += coeff;
        }
    }
    return out;
}

KoszulChain KoszulComplex::diff(const KoszulChain& x) const
{
    KoszulChain out;
    for (const auto& [mask, c] : x)
        for (std::size_t a = 0; a < rank(); ++a) {
            if (!((mask >> a) & 1u))
                continue;
            const auto rest = static_cast<std::uint16_t>(mask & ~(1u << a));
            Poly term = J_.J[a] * c;
            if (below(mask, a) % 2)
                term = -term;
            auto [it, fresh] = out.try_emplace(rest, Poly(ctx_));
            it->second += term;
        }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

Poly KoszulComplex::res(const Poly& f) const
{
    Poly out(ctx_);
    for (auto& [key, v] : split(KoszulChain{{0, f}}, 0)) {
        const Slice& s = slice(key.first, key.second);
        normal_form(s.ideal, v);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero())
                out.add_term(s.basis[0][k].second, v[k]);
    }
    return out;
}

Poly KoszulComplex::prol(const Poly& f) const
{
    return f;
}

KoszulChain KoszulComplex::h(const KoszulChain& x) const
{
    std::map<int, KoszulChain> by_degree;
    for (const auto& [mask, c] : x)
        if (!c.is_zero())
            by_degree[homological_degree(mask)].emplace(mask, c);

    const auto l = static_cast<int>(rank());
    KoszulChain out;
    for (const auto& [i, chain] : by_degree) {
        const auto ui = static_cast<std::size_t>(i);
        for (auto& [key, v] : split(chain, i)) {
            const Slice& s = slice(key.first, key.second);
            Vector b = v;
            if (i == 0) {
                Vector nf = v;
                normal_form(s.ideal, nf);
                for (std::size_t k = 0; k < b.size(); ++k)
                    b[k] -= nf[k];
            } else {
                auto back = s.d[ui]->solve(s.d[ui]->matrix().apply(v));
                for (std::size_t k = 0; k < b.size(); ++k)
                    b[k] -= (*back)[k];
            }
            if (is_zero(b))
                continue;
            std::optional<Vector> sol;
            if (i < l)
                sol = s.d[ui + 1]->solve(b);
            if (!sol)
                throw AcyclicityViolation("Koszul homology in degree " + std::to_string(i) + " at weight " +
                                          std::to_string(key.first) + ": no canonical preimage");
            for (std::size_t k = 0; k < sol->size(); ++k) {
                if ((*sol)[k].is_zero())
                    continue;
                const auto& [mask, mon] = s.basis[ui + 1][k];
                auto [it, fresh] = out.try_emplace(mask, Poly(ctx_));
                it->second.add_term(mon, (*sol)[k]);
            }
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

SuperElement koszul_diff(const SuperElement& x, const MomentMapData& J)
{
    SuperElement out(x.context(), x.order());
    for (std::size_t a = 0; a < J.dim(); ++a) {
        const Poly& Ja = J.J[a];
        out += map_coefficients(contract_antighost(a, x), [&](const Series& s) { return s * Ja; });
    }
    return out;
}

SuperElement KoszulComplex::diff(const SuperElement& x) const
{
    return koszul_diff(x, J_);
}

SuperElement KoszulComplex::res(const SuperElement& x) const
{
    SuperElement out(x.context(), x.order());
    for (const auto& [key, s] : x.terms()) {
        if (key.antighosts)
            continue;
        Series r(ctx_, x.order());
        for (int j = 0; j <= x.order(); ++j)
            r[j] = res(s[j]);
        r.set_reliable_order(s.reliable_order());
        out.add_term(key, r);
    }
    return out;
}

SuperElement KoszulComplex::prol(const SuperElement& x) const
{
    return x;
}

SuperElement KoszulComplex::h(const SuperElement& x) const
{
    // Chains per (ghost set, power of nu).
    std::map<std::pair<std::uint16_t, int>, KoszulChain> chains;
    for (const auto& [key, s] : x.terms())
        for (int j = 0; j <= x.order(); ++j)
            if (!s[j].is_zero())
                chains[{key.ghosts, j}].emplace(key.antighosts, s[j]);

    std::map<SuperKey, Series> acc;
    for (const auto& [gj, chain] : chains) {
        const auto [ghosts, j] = gj;
        const bool flip = std::popcount(ghosts) % 2 != 0;
        for (const auto& [mask, c] : h(chain)) {
            auto [it, fresh] = acc.try_emplace(SuperKey{ghosts, mask}, Series(ctx_, x.order()));
            it->second[j] += flip ? -c : c;
        }
    }
    SuperElement out(x.context(), x.order());
    const int reliable = x.reliable_order();
    for (auto& [key, s] : acc) {
        s.set_reliable_order(reliable);
        out.add_term(key, s);
    }
    return out;
}

Contraction<SuperElement> KoszulComplex::contraction() const
{
    Contraction<SuperElement> c;
    c.p = LinearOp<SuperElement>("res", [this](const SuperElement& x) { return res(x); });
    c.i = LinearOp<SuperElement>("prol", [this](const SuperElement& x) { return prol(x); });
    c.h = LinearOp<SuperElement>("h", [this](const SuperElement& x) { return h(x); }, -1);
    c.dX = LinearOp<SuperElement>::zero().with_degree(1).flagged(false);
    c.dY = LinearOp<SuperElement>("d", [this](const SuperElement& x) { return diff(x); }, 1);
    c.sc1 = c.sc2 = c.sc3 = true;
    return c;
}

std::vector<Monomial> KoszulComplex::complement_basis(int w) const
{
    require_bound(w);
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ctx_->size(), static_cast<unsigned>(w))) {
        const Slice& s = slice(w, fine_weight(m));
        const std::size_t k = s.index[0].at({0, m});
        bool leading = false;
        for (auto pc : s.ideal.pivot_cols)
            leading = leading || pc == k;
        if (!leading)
            out.push_back(m);
    }
    return out;
}

AcyclicityReport KoszulComplex::check_acyclicity() const
{
    AcyclicityReport rep;
    rep.degree_bound = bound_;
    const std::size_t l = rank();
    for (int w = 0; w <= bound_; ++w) {
        std::set<FineKey> keys;
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            const int p = w - mask_weight(static_cast<std::uint16_t>(mask));
            if (p < 0)
                continue;
            monomials(p, FineKey{});
            for (const auto& [fk, ms] : monomials_.at(p))
                keys.insert(fk);
        }
        std::vector<HomologyEntry> row(l + 1);
        for (std::size_t i = 0; i <= l; ++i)
            row[i] = {w, static_cast<int>(i), 0, 0};
        for (const auto& fk : keys) {
            const Slice& s = slice(w, fk);
            for (std::size_t i = 0; i <= l; ++i) {
                const std::size_t r_in = i >= 1 ? s.d[i]->rank() : 0;
                const std::size_t r_out = i < l ? s.d[i + 1]->rank() : 0;
                const std::size_t hom = s.dim(i) - r_in - r_out;
                row[i].chain_dim += s.dim(i);
                row[i].homology += hom;
                if (i >= 1 && hom > 0 && rep.witness.empty()) {
                    for (const auto& z : kernel_basis(s.d[i]->matrix())) {
                        if (i < l && s.d[i + 1]->solve(z))
                            continue;
                        KoszulChain chain;
                        for (std::size_t k = 0; k < z.size(); ++k)
                            if (!z[k].is_zero()) {
                                auto [it, fresh] = chain.try_emplace(s.basis[i][k].first, Poly(ctx_));
                                it->second.add_term(s.basis[i][k].second, z[k]);
                            }
                        rep.witness = chain_str(chain);
                        break;
                    }
                }
            }
        }
        rep.entries.insert(rep.entries.end(), row.begin(), row.end());
    }
    return rep;
}

} // namespace brst
