#include "relag/homology.hpp"

#include <cstdint>
#include <stdexcept>

namespace relag {

std::string DimensionVerdict::to_string() const
{
    return (exact ? "exact(" : "at_least(") + std::to_string(value) + ")";
}

namespace {

// Basis indices of the acting algebra with source v, grouped by target; the
// order matches the basis of the projective P(v).
std::vector<std::vector<std::size_t>> paths_from(const Algebra& b, std::size_t v)
{
    std::vector<std::vector<std::size_t>> at(b.num_vertices());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto info = b.basis_info(i);
        if (info.source == v) at[info.target].push_back(i);
    }
    return at;
}

std::size_t arrow_index_in_basis(const Algebra& b, std::size_t arrow)
{
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto info = b.basis_info(i);
        if (info.length == 1 && info.word[0] == arrow) return i;
    }
    throw std::logic_error("arrow is not a basis element");
}

Module projective_like(const Module& m, std::size_t v)
{
    return structural_module(m.algebra(), v, StructuralKind::projective, m.side());
}

// Hstack of maps into a common target: the induced map from the direct sum of sources.
ModuleMap from_sum(const std::vector<ModuleMap>& parts, const Module& target)
{
    std::vector<Module> sources;
    for (auto& p : parts) sources.push_back(p.source());
    Module sum = direct_sum_with_maps(sources, target.algebra(), target.side()).sum;
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < target.num_vertices(); ++w) {
        std::vector<Matrix> cols;
        for (auto& p : parts) cols.push_back(p.block(w));
        blocks.push_back(Matrix::hstack(cols, target.field(), target.dim(w)));
    }
    return ModuleMap(sum, target, std::move(blocks));
}

// x -> x * a : P(target(a)) -> P(source(a)) for an arrow a of the acting quiver.
ModuleMap right_multiplication(const Module& like, std::size_t arrow)
{
    Algebra b = like.acting();
    const auto& ar = b.quiver().arrows()[arrow];
    std::size_t ai = arrow_index_in_basis(b, arrow);
    Module from = projective_like(like, ar.target);
    Module to = projective_like(like, ar.source);
    auto src = paths_from(b, ar.target);
    auto tgt = paths_from(b, ar.source);
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < b.num_vertices(); ++w) {
        Matrix blk(b.field(), tgt[w].size(), src[w].size());
        for (std::size_t c = 0; c < src[w].size(); ++c) {
            Matrix prod = b.product(src[w][c], ai);
            for (std::size_t r = 0; r < tgt[w].size(); ++r) blk.set(r, c, prod.at(tgt[w][r], 0));
        }
        blocks.push_back(std::move(blk));
    }
    return ModuleMap(from, to, std::move(blocks));
}

struct HomToRegular {
    std::vector<Module> projectives;
    std::vector<std::vector<ModuleMap>> bases;
    std::vector<Matrix> flat;  // columns: flattened basis maps, per vertex

    explicit HomToRegular(const Module& m)
    {
        for (std::size_t v = 0; v < m.num_vertices(); ++v) {
            projectives.push_back(projective_like(m, v));
            bases.push_back(hom_basis(m, projectives.back()));
            std::vector<Matrix> cols;
            for (auto& f : bases.back()) cols.push_back(f.flatten());
            std::size_t rows = 0;
            for (std::size_t w = 0; w < m.num_vertices(); ++w) rows += m.dim(w) * projectives.back().dim(w);
            flat.push_back(Matrix::from_columns(m.field(), rows, cols));
        }
    }

    Matrix coordinates(std::size_t v, const ModuleMap& f) const
    {
        auto x = solve(flat[v], f.flatten());
        if (!x) throw std::logic_error("hom_to_regular: map outside the Hom basis span");
        return *x;
    }
};

}  // namespace

ModuleMap map_from_projective(const Module& m, std::size_t v, const Matrix& element)
{
    Module p = projective_like(m, v);
    auto at = paths_from(m.acting(), v);
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < m.num_vertices(); ++w) {
        std::vector<Matrix> cols;
        for (auto i : at[w]) cols.push_back(m.path_map(v, m.acting().basis_info(i).word) * element);
        blocks.push_back(Matrix::from_columns(m.field(), m.dim(w), cols));
    }
    return ModuleMap(p, m, std::move(blocks));
}

ModuleMap projective_cover(const Module& m)
{
    auto rad = radical_subspace(m);
    std::vector<ModuleMap> parts;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix top = complement_columns(rad[v], m.dim(v));
        for (std::size_t c = 0; c < top.cols(); ++c) parts.push_back(map_from_projective(m, v, top.column(c)));
    }
    return from_sum(parts, m);
}

ModuleMap injective_envelope(const Module& m) { return dualize(projective_cover(dualize(m))); }

Resolution min_proj_resolution(const Module& m, std::size_t length)
{
    Resolution r;
    r.target = m;
    r.kind = ResolutionKind::projective;
    r.syzygies.push_back(m);
    std::optional<ModuleMap> incl;  // Omega^i -> P_{i-1}
    for (std::size_t i = 0; i < length && !r.syzygies.back().is_zero(); ++i) {
        ModuleMap cover = projective_cover(r.syzygies.back());
        r.terms.push_back(cover.source());
        r.maps.push_back(incl ? incl->after(cover) : cover);
        auto k = kernel(cover);
        r.syzygies.push_back(k.module);
        incl = k.inclusion;
    }
    return r;
}

Resolution min_inj_coresolution(const Module& m, std::size_t length)
{
    Resolution p = min_proj_resolution(dualize(m), length);
    Resolution r;
    r.target = m;
    r.kind = ResolutionKind::injective;
    for (auto& t : p.terms) r.terms.push_back(dualize(t));
    for (auto& f : p.maps) r.maps.push_back(dualize(f));
    for (auto& s : p.syzygies) r.syzygies.push_back(dualize(s));
    return r;
}

bool verify_resolution(const Resolution& r)
{
    bool proj = r.kind == ResolutionKind::projective;
    std::size_t n = r.maps.size();
    for (std::size_t i = 0; i < n; ++i) {
        const ModuleMap& f = r.maps[i];
        if (!f.commutes()) return false;
        if (i + 1 < n) {
            ModuleMap comp = proj ? f.after(r.maps[i + 1]) : r.maps[i + 1].after(f);
            if (!comp.is_zero()) return false;
        }
    }
    // Exactness: rank counts. Projective: rank d_0 = dim M, and at P_i the kernel
    // of d_i has the dimension of the image of d_{i+1} (or of the last syzygy).
    for (std::size_t i = 0; i < n; ++i) {
        const ModuleMap& f = r.maps[i];
        std::size_t rk = f.rank();
        std::size_t dom = f.source().total_dim();
        std::size_t cod = f.target().total_dim();
        if (proj) {
            if (i == 0 && rk != cod) return false;
            std::size_t next = i + 1 < n ? r.maps[i + 1].rank() : r.syzygies[i + 1].total_dim();
            if (dom - rk != next) return false;
            if (r.minimal && i + 1 < n) {
                auto rad = radical_subspace(f.source());
                for (std::size_t v = 0; v < f.source().num_vertices(); ++v)
                    if (rank(Matrix::hstack({rad[v], r.maps[i + 1].block(v)}, f.source().field(), f.source().dim(v))) != rad[v].cols())
                        return false;
            }
        } else {
            if (i == 0 && rk != dom) return false;
            std::size_t next = i + 1 < n ? r.maps[i + 1].rank() : r.syzygies[i + 1].total_dim();
            if (cod - rk != next) return false;
            if (r.minimal && i + 1 < n) {
                auto soc = socle_subspace(f.target());
                for (std::size_t v = 0; v < f.target().num_vertices(); ++v) {
                    const Matrix& d = r.maps[i + 1].block(v);
                    if (!(d * soc[v]).is_zero()) return false;
                }
            }
        }
    }
    return true;
}

Module syzygy(const Module& m, std::size_t k)
{
    Resolution r = min_proj_resolution(m, k);
    return r.syzygies.size() > k ? r.syzygies[k] : Module::zero(m.algebra(), m.side());
}

Module cosyzygy(const Module& m, std::size_t k) { return dualize(syzygy(dualize(m), k)); }

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i)
{
    if (!m.compatible(n)) throw std::invalid_argument("ext_dim: modules over different algebras or sides");
    if (i == 0) return hom_dim(m, n);
    Resolution r = min_proj_resolution(m, i);
    if (r.syzygies.size() <= i) return 0;
    // 0 -> Hom(Om^{i-1}, N) -> Hom(P_{i-1}, N) -> Hom(Om^i, N) -> Ext^i(M, N) -> 0
    std::size_t hp = 0;
    const Module& p = r.terms[i - 1];
    std::size_t nv = m.num_vertices();
    auto top = top_dims(p);
    for (std::size_t v = 0; v < nv; ++v) hp += top[v] * n.dim(v);
    return hom_dim(r.syzygies[i], n) + hom_dim(r.syzygies[i - 1], n) - hp;
}

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) { return a > SIZE_MAX - b ? SIZE_MAX : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) { return b != 0 && a > SIZE_MAX / b ? SIZE_MAX : a * b; }

// dim Ext^1(X, N) from the projective cover of X.
std::size_t ext1(const Module& x, const Module& n)
{
    ModuleMap cover = projective_cover(x);
    auto top = top_dims(cover.source());
    std::size_t hp = 0;
    for (std::size_t v = 0; v < x.num_vertices(); ++v) hp += top[v] * n.dim(v);
    return hom_dim(kernel(cover).module, n) + hom_dim(x, n) - hp;
}

}  // namespace

SyzygyGraph::SyzygyGraph(const Algebra& a, Side side) : algebra_(a), side_(side) {}

std::size_t SyzygyGraph::class_of(const Module& x)
{
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (reps_[i].dims() == x.dims() && is_isomorphic(reps_[i], x).verdict == Verdict::yes) return i;
    reps_.push_back(x);
    omega_.emplace_back();
    projective_.emplace_back();
    return reps_.size() - 1;
}

SyzygyGraph::Multiset SyzygyGraph::classes_of(const Module& m)
{
    Multiset out;
    if (m.is_zero()) return out;
    for (auto& s : decompose(m)) ++out[class_of(s.module)];
    return out;
}

bool SyzygyGraph::is_projective(std::size_t c)
{
    if (!projective_[c]) projective_[c] = relag::is_projective(reps_[c]);
    return *projective_[c];
}

const SyzygyGraph::Multiset& SyzygyGraph::omega(std::size_t c)
{
    if (!omega_[c]) {
        Multiset out;
        if (!is_projective(c)) out = classes_of(kernel(projective_cover(reps_[c])).module);
        omega_[c] = std::move(out);
    }
    return *omega_[c];
}

std::vector<SyzygyGraph::Multiset> SyzygyGraph::iterate(const Multiset& start, std::size_t depth)
{
    std::vector<Multiset> out{start};
    for (std::size_t k = 0; k < depth && !out.back().empty(); ++k) {
        Multiset next;
        for (auto [c, mult] : out.back())
            for (auto [d, m2] : omega(c)) next[d] = sat_add(next[d], sat_mul(mult, m2));
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_i)
{
    if (!m.compatible(n)) throw std::invalid_argument("ext_dims: modules over different algebras or sides");
    std::vector<std::size_t> out(max_i, 0);
    if (max_i == 0) return out;
    SyzygyGraph g(m.algebra(), m.side());
    auto layers = g.iterate(g.classes_of(m), max_i - 1);
    std::map<std::size_t, std::size_t> e1;
    for (std::size_t i = 1; i <= max_i && i <= layers.size(); ++i) {
        std::size_t total = 0;
        for (auto [c, mult] : layers[i - 1]) {
            auto it = e1.find(c);
            if (it == e1.end()) it = e1.emplace(c, g.is_projective(c) ? 0 : ext1(g.representative(c), n)).first;
            total = sat_add(total, sat_mul(mult, it->second));
        }
        out[i - 1] = total;
    }
    return out;
}

std::size_t ext_dim_injective(const Module& m, const Module& n, std::size_t i)
{
    if (!m.compatible(n)) throw std::invalid_argument("ext_dim: modules over different algebras or sides");
    if (i == 0) return hom_dim(m, n);
    Resolution r = min_inj_coresolution(n, i);
    if (r.syzygies.size() <= i) return 0;
    // 0 -> Hom(M, Om^{-(i-1)}) -> Hom(M, I_{i-1}) -> Hom(M, Om^{-i}) -> Ext^i(M, N) -> 0
    std::size_t hi = hom_dim(m, r.terms[i - 1]);
    return hom_dim(m, r.syzygies[i]) + hom_dim(m, r.syzygies[i - 1]) - hi;
}

namespace {

DimensionVerdict pd_in(SyzygyGraph& g, const Module& m, std::size_t cap)
{
    if (m.is_zero()) return DimensionVerdict::exactly(0, cap);
    // Omega^{k} M = 0 first at k = pd + 1.
    auto layers = g.iterate(g.classes_of(m), cap + 1);
    if (layers.back().empty()) return DimensionVerdict::exactly(layers.size() - 2, cap);
    return DimensionVerdict::beyond(cap);
}

}  // namespace

DimensionVerdict projective_dimension(const Module& m, std::size_t cap)
{
    SyzygyGraph g(m.algebra(), m.side());
    return pd_in(g, m, cap);
}

DimensionVerdict injective_dimension(const Module& m, std::size_t cap) { return projective_dimension(dualize(m), cap); }

DimensionVerdict pd_id(const Module& m, DimensionKind which, std::size_t cap)
{
    return which == DimensionKind::pd ? projective_dimension(m, cap) : injective_dimension(m, cap);
}

DimensionVerdict gldim(const Algebra& a, std::size_t cap)
{
    SyzygyGraph g(a, Side::left);
    std::size_t best = 0;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        auto d = pd_in(g, structural_module(a, v, StructuralKind::simple, Side::left), cap);
        if (!d.exact) return DimensionVerdict::beyond(cap);
        best = std::max(best, d.value);
    }
    return DimensionVerdict::exactly(best, cap);
}

Module hom_to_regular(const Module& m)
{
    HomToRegular h(m);
    Module shape = Module::zero(m.algebra(), other(m.side()));
    const Quiver& q = m.quiver();
    std::vector<std::size_t> dims;
    for (auto& b : h.bases) dims.push_back(b.size());
    std::vector<Matrix> maps;
    // Arrow a : u -> v of m's acting quiver is v -> u in the result's.
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
        std::size_t u = q.arrows()[ar].source, v = q.arrows()[ar].target;
        ModuleMap rho = right_multiplication(m, ar);
        Matrix mat(m.field(), dims[u], dims[v]);
        for (std::size_t k = 0; k < dims[v]; ++k) mat.set_block(0, k, h.coordinates(u, rho.after(h.bases[v][k])));
        maps.push_back(std::move(mat));
    }
    return Module(m.algebra(), other(m.side()), dims, maps);
}

ModuleMap hom_to_regular(const ModuleMap& f)
{
    HomToRegular hs(f.source());
    HomToRegular ht(f.target());
    Module from = hom_to_regular(f.target());
    Module to = hom_to_regular(f.source());
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < f.source().num_vertices(); ++v) {
        Matrix blk(f.source().field(), to.dim(v), from.dim(v));
        for (std::size_t k = 0; k < from.dim(v); ++k) blk.set_block(0, k, hs.coordinates(v, ht.bases[v][k].after(f)));
        blocks.push_back(std::move(blk));
    }
    return ModuleMap(from, to, std::move(blocks));
}

Module transpose(const Module& m)
{
    if (m.is_zero()) return Module::zero(m.algebra(), other(m.side()));
    Resolution r = min_proj_resolution(m, 2);
    ModuleMap d1 = r.maps.size() > 1 ? r.maps[1] : ModuleMap::zero(Module::zero(m.algebra(), m.side()), r.terms[0]);
    return cokernel(hom_to_regular(d1)).module;
}

Module nakayama(const Module& m, NakayamaDirection d)
{
    return d == NakayamaDirection::forward ? dualize(hom_to_regular(m)) : hom_to_regular(dualize(m));
}

Module ar_translate(const Module& m) { return dualize(transpose(m)); }

Module ar_translate_inverse(const Module& m) { return transpose(dualize(m)); }

Module higher_translate(const Module& m, std::size_t n, bool inverse)
{
    if (n == 0) throw std::invalid_argument("higher_translate needs n >= 1");
    return inverse ? ar_translate_inverse(cosyzygy(m, n - 1)) : ar_translate(syzygy(m, n - 1));
}

}  // namespace relag
