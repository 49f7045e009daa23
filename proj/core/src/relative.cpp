#include "relag/relative.hpp"

#include <stdexcept>

namespace relag {

AddCategory::AddCategory(const Module& q, std::uint64_t seed) : q_(q)
{
    for (auto& [m, k] : decompose_with_multiplicity(q, seed)) summands_.push_back(m);
}

std::optional<std::size_t> AddCategory::summand_index(const Module& x) const
{
    for (std::size_t i = 0; i < summands_.size(); ++i)
        if (is_isomorphic(x, summands_[i]).verdict == Verdict::yes) return i;
    return std::nullopt;
}

bool AddCategory::contains(const Module& x) const
{
    for (auto& s : decompose(x))
        if (!summand_index(s.module)) return false;
    return true;
}

namespace {

Module sum_of(const AddCategory& q, const std::vector<std::size_t>& idx, const Module& like)
{
    std::vector<Module> parts;
    for (auto i : idx) parts.push_back(q.summands()[i]);
    return direct_sum_with_maps(parts, like.algebra(), like.side()).sum;
}

std::size_t span_rank(const std::vector<Matrix>& cols, const Field& k)
{
    if (cols.empty()) return 0;
    return rank(Matrix::hstack(cols, k, cols.front().rows()));
}

}  // namespace

Approximation minimal_approximation(const Module& x, const AddCategory& q, ApproxSide side)
{
    const auto& qs = q.summands();
    const Field& k = x.field();
    bool left = side == ApproxSide::left;
    // components: one per basis map between x and a summand
    std::vector<std::size_t> owner;
    std::vector<ModuleMap> comp;
    std::vector<std::size_t> need;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        auto basis = left ? hom_basis(x, qs[j]) : hom_basis(qs[j], x);
        need.push_back(basis.size());
        for (auto& f : basis) {
            owner.push_back(j);
            comp.push_back(f);
        }
    }
    // vectors[i][l]: flattened h o f_i (left) or f_i o h (right) for h between summands
    std::vector<std::vector<std::vector<Matrix>>> vectors(comp.size(), std::vector<std::vector<Matrix>>(qs.size()));
    std::vector<std::vector<std::vector<ModuleMap>>> between(qs.size(), std::vector<std::vector<ModuleMap>>(qs.size()));
    for (std::size_t a = 0; a < qs.size(); ++a)
        for (std::size_t b = 0; b < qs.size(); ++b) between[a][b] = hom_basis(qs[a], qs[b]);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t l = 0; l < qs.size(); ++l) {
            const auto& hs = left ? between[owner[i]][l] : between[l][owner[i]];
            for (auto& h : hs) vectors[i][l].push_back((left ? h.after(comp[i]) : comp[i].after(h)).flatten());
        }
    std::vector<bool> active(comp.size(), true);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        active[i] = false;
        bool still = true;
        for (std::size_t l = 0; l < qs.size() && still; ++l) {
            std::vector<Matrix> cols;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (active[c]) cols.insert(cols.end(), vectors[c][l].begin(), vectors[c][l].end());
            still = span_rank(cols, k) == need[l];
        }
        if (!still) active[i] = true;
    }
    Approximation out;
    std::vector<const ModuleMap*> kept;
    for (std::size_t i = 0; i < comp.size(); ++i)
        if (active[i]) {
            out.terms.push_back(owner[i]);
            kept.push_back(&comp[i]);
        }
    Module term = sum_of(q, out.terms, x);
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < x.num_vertices(); ++w) {
        std::vector<Matrix> parts;
        for (auto* f : kept) parts.push_back(f->block(w));
        blocks.push_back(left ? Matrix::vstack(parts, k, x.dim(w)) : Matrix::hstack(parts, k, x.dim(w)));
    }
    out.map = left ? ModuleMap(x, term, std::move(blocks)) : ModuleMap(term, x, std::move(blocks));
    return out;
}

ModuleMap minimal_approximation(const Module& x, const Module& q, ApproxSide side)
{
    return minimal_approximation(x, AddCategory(q), side).map;
}

namespace {

// Iterated minimal approximations; stops when the remainder vanishes, an
// approximation fails to be mono/epi, or `stages` steps have been taken.
ApproxSequence build_sequence(const Module& x, const AddCategory& q, ApproxDirection dir, std::size_t stages)
{
    ApproxSequence s;
    s.anchor = x;
    s.direction = dir;
    bool co = dir == ApproxDirection::coresolution;
    Module cur = x;
    std::optional<ModuleMap> link;  // cokernel projection / kernel inclusion of the previous stage
    for (std::size_t k = 0; k < stages; ++k) {
        if (k > 0 && cur.is_zero()) break;
        auto ap = minimal_approximation(cur, q, co ? ApproxSide::left : ApproxSide::right);
        bool ok = co ? ap.map.is_injective() : ap.map.is_surjective();
        if (!ok) {
            s.broken_at = k;
            break;
        }
        s.terms.push_back(co ? ap.map.target() : ap.map.source());
        s.term_summands.push_back(ap.terms);
        if (co) {
            s.maps.push_back(link ? ap.map.after(*link) : ap.map);
            auto c = cokernel(ap.map);
            s.remainders.push_back(c.module);
            link = c.projection;
            cur = c.module;
        } else {
            s.maps.push_back(link ? link->after(ap.map) : ap.map);
            auto kk = kernel(ap.map);
            s.remainders.push_back(kk.module);
            link = kk.inclusion;
            cur = kk.module;
        }
    }
    return s;
}

bool remainder_zero(const ApproxSequence& s) { return !s.remainders.empty() && s.remainders.back().is_zero(); }

// Flattened images of the basis of Hom(B, q) under precomposition with f : A -> B
// (contravariant) or of Hom(q, A) under postcomposition (covariant).
std::size_t induced_rank(const ModuleMap& f, const Module& q, bool contravariant)
{
    std::vector<Matrix> cols;
    if (contravariant)
        for (auto& h : hom_basis(f.target(), q)) cols.push_back(h.after(f).flatten());
    else
        for (auto& h : hom_basis(q, f.source())) cols.push_back(f.after(h).flatten());
    return span_rank(cols, f.source().field());
}

}  // namespace

bool verify_approx_sequence(const ApproxSequence& s, const Module& q)
{
    bool co = s.direction == ApproxDirection::coresolution;
    std::size_t n = s.maps.size();
    if (n == 0) return true;
    for (std::size_t i = 0; i < n; ++i)
        if (!s.maps[i].commutes()) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ModuleMap comp = co ? s.maps[i + 1].after(s.maps[i]) : s.maps[i].after(s.maps[i + 1]);
        if (!comp.is_zero()) return false;
    }
    bool closed = remainder_zero(s);
    // Exactness of the underlying sequence by rank counts.
    if (co) {
        if (!s.maps[0].is_injective()) return false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (s.terms[i].total_dim() - s.maps[i + 1].rank() != s.maps[i].rank()) return false;
        if (closed && s.maps[n - 1].rank() != s.terms[n - 1].total_dim()) return false;
    } else {
        if (!s.maps[0].is_surjective()) return false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (s.terms[i].total_dim() - s.maps[i].rank() != s.maps[i + 1].rank()) return false;
        if (closed && s.maps[n - 1].rank() != s.terms[n - 1].total_dim()) return false;
    }
    // Exactness after the preserved functor: Hom(-, q) for coresolutions, Hom(q, -) for resolutions.
    std::size_t first = induced_rank(s.maps[0], q, co);
    std::size_t anchor = co ? hom_dim(s.anchor, q) : hom_dim(q, s.anchor);
    if (first != anchor) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t hom_term = co ? hom_dim(s.terms[i], q) : hom_dim(q, s.terms[i]);
        std::size_t into = induced_rank(s.maps[i + 1], q, co);
        std::size_t out = induced_rank(s.maps[i], q, co);
        if (hom_term - out != into) return false;
    }
    return true;
}

RelDimVerdict rel_dominant_dim(const Module& x, const Module& q, DominantKind kind, std::size_t cap)
{
    AddCategory add(q);
    auto dir = kind == DominantKind::dominant ? ApproxDirection::coresolution : ApproxDirection::resolution;
    ApproxSequence s = build_sequence(x, add, dir, cap + 1);
    RelDimVerdict out{DimensionVerdict::beyond(cap), s};
    if (s.broken_at) out.value = DimensionVerdict::exactly(*s.broken_at, cap);
    return out;
}

RelDimVerdict addq_dimension(const Module& m, const Module& q, AddqKind kind, std::size_t cap)
{
    AddCategory add(q);
    auto dir = kind == AddqKind::codim ? ApproxDirection::coresolution : ApproxDirection::resolution;
    ApproxSequence s = build_sequence(m, add, dir, cap + 1);
    RelDimVerdict out{DimensionVerdict::beyond(cap), s};
    if (m.is_zero())
        out.value = DimensionVerdict::exactly(0, cap);
    else if (remainder_zero(s))
        out.value = DimensionVerdict::exactly(s.remainders.size() - 1, cap);
    return out;
}

RelDimVerdict quasi_generation_degree(const Module& q, GenerationKind kind, std::size_t cap)
{
    if (kind == GenerationKind::generator)
        return addq_dimension(regular_module(q.algebra(), q.side()), q, AddqKind::codim, cap);
    return addq_dimension(coregular_module(q.algebra(), q.side()), q, AddqKind::dim, cap);
}

DoubleCentralizer double_centralizer(const Algebra& a, const Module& q)
{
    if (!q.algebra().same_as(a)) throw std::invalid_argument("double_centralizer: module over a different algebra");
    DoubleCentralizer out;
    out.dim_algebra = a.dim();
    Module basic = multiplicity_free(q);
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < basic.acting().dim(); ++i) cols.push_back(basic.action(i).flatten());
    out.faithful = span_rank(cols, a.field()) == a.dim();
    EndAlgebra e = end_algebra(basic);
    Transported t = transport_module(basic, e);
    out.dim_end = hom_dim(t.module, t.module);
    out.holds = out.faithful && out.dim_end == out.dim_algebra;
    return out;
}

}  // namespace relag
