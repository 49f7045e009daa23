#include "relag/repcat.hpp"

#include <numeric>

namespace relag {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

// ------------------------------------------------------------------ Module

Module::Module(Algebra a, Side side, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(a)), side_(side), dims_(std::move(dims)), maps_(std::move(maps))
{
    if (!algebra_.has_path_basis()) throw std::invalid_argument("modules require an algebra with a quiver presentation");
    const Quiver& q = quiver();
    if (dims_.size() != q.num_vertices())
        throw DimensionMismatch("module has " + std::to_string(dims_.size()) + " spaces, quiver has " +
                                std::to_string(q.num_vertices()) + " vertices");
    if (maps_.size() != q.num_arrows())
        throw DimensionMismatch("module has " + std::to_string(maps_.size()) + " maps, quiver has " +
                                std::to_string(q.num_arrows()) + " arrows");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        const Matrix& m = maps_[a];
        std::size_t rows = dims_[arrow.target], cols = dims_[arrow.source];
        if (m.rows() != rows || m.cols() != cols || !(m.field() == field()))
            throw DimensionMismatch("map " + arrow.label + ": expected " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
}

Module Module::zero(const Algebra& a, Side side)
{
    Algebra acting = side == Side::left ? a : a.opposite();
    std::vector<Matrix> maps(acting.quiver().num_arrows(), Matrix(a.field(), 0, 0));
    return Module(a, side, std::vector<std::size_t>(acting.num_vertices(), 0), maps);
}

std::size_t Module::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::size_t Module::offset(std::size_t v) const
{
    return std::accumulate(dims_.begin(), dims_.begin() + static_cast<long>(v), std::size_t{0});
}

Matrix Module::path_map(std::size_t start, const std::vector<std::size_t>& word) const
{
    const Quiver& q = quiver();
    Matrix m = Matrix::identity(field(), dims_.at(start));
    std::size_t at = start;
    for (auto a : word) {
        if (q.arrows()[a].source != at) throw std::invalid_argument("path_map: arrows do not compose");
        m = maps_[a] * m;
        at = q.arrows()[a].target;
    }
    return m;
}

Matrix Module::action(std::size_t i) const
{
    auto info = acting().basis_info(i);
    Matrix out(field(), total_dim(), total_dim());
    out.set_block(offset(info.target), offset(info.source), path_map(info.source, info.word));
    return out;
}

std::optional<std::size_t> Module::violated_relation() const
{
    const auto& pres = acting().presentation();
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        const auto& rel = pres.relations[r];
        std::size_t s = rel.terms.front().path.source, t = rel.terms.front().path.target;
        Matrix sum(field(), dims_[t], dims_[s]);
        for (const auto& term : rel.terms) sum = sum + path_map(s, term.path.arrows).scaled(term.coeff);
        if (!sum.is_zero()) return r;
    }
    return std::nullopt;
}

void Module::check_relations() const
{
    if (auto r = violated_relation()) {
        const auto& pres = acting().presentation();
        std::string text;
        for (const auto& term : pres.relations[*r].terms) {
            if (!text.empty()) text += " + ";
            text += term.coeff.to_string() + " " + path_to_string(pres.quiver, term.path);
        }
        throw RelationViolated("relation " + std::to_string(*r + 1) + " (" + text + ") does not hold");
    }
}

bool Module::operator==(const Module& o) const
{
    if (!compatible(o) || dims_ != o.dims_) return false;
    for (std::size_t a = 0; a < maps_.size(); ++a)
        if (!(maps_[a] == o.maps_[a])) return false;
    return true;
}

// --------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks))
{
    if (!source_.compatible(target_)) throw std::invalid_argument("module map between modules over different algebras or sides");
    if (blocks_.size() != source_.num_vertices()) throw DimensionMismatch("module map: wrong number of blocks");
    for (std::size_t v = 0; v < blocks_.size(); ++v)
        if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
            throw DimensionMismatch("module map: block " + std::to_string(v) + " has the wrong shape");
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target)
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < source.num_vertices(); ++v)
        blocks.emplace_back(source.field(), target.dim(v), source.dim(v));
    return ModuleMap(source, target, std::move(blocks));
}

ModuleMap ModuleMap::identity(const Module& m)
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) blocks.push_back(Matrix::identity(m.field(), m.dim(v)));
    return ModuleMap(m, m, std::move(blocks));
}

ModuleMap ModuleMap::from_total(const Module& source, const Module& target, const Matrix& total)
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < source.num_vertices(); ++v)
        blocks.push_back(total.block(target.offset(v), source.offset(v), target.dim(v), source.dim(v)));
    return ModuleMap(source, target, std::move(blocks));
}

Matrix ModuleMap::total() const { return Matrix::block_diagonal(blocks_, source_.field()); }

Matrix ModuleMap::flatten() const
{
    std::vector<Matrix> parts;
    std::size_t rows = 0;
    for (auto& b : blocks_) {
        parts.push_back(b.flatten());
        rows += b.rows() * b.cols();
    }
    return Matrix::vstack(parts, source_.field(), 1).block(0, 0, rows, 1);
}

bool ModuleMap::commutes() const
{
    const Quiver& q = source_.quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        if (!(target_.arrow_map(a) * blocks_[arrow.source] == blocks_[arrow.target] * source_.arrow_map(a)))
            return false;
    }
    return true;
}

bool ModuleMap::is_zero() const
{
    for (auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

std::size_t ModuleMap::rank() const
{
    std::size_t r = 0;
    for (auto& b : blocks_) r += relag::rank(b);
    return r;
}

bool ModuleMap::is_injective() const { return rank() == source_.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target_.total_dim(); }
bool ModuleMap::is_isomorphism() const { return is_injective() && is_surjective(); }

ModuleMap ModuleMap::after(const ModuleMap& g) const
{
    if (!(g.target_.dims() == source_.dims())) throw DimensionMismatch("composition of incompatible module maps");
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] * g.blocks_[v]);
    return ModuleMap(g.source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_.at(v));
    return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] - o.blocks_.at(v));
    return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::scaled(const Scalar& s) const
{
    std::vector<Matrix> blocks;
    for (auto& b : blocks_) blocks.push_back(b.scaled(s));
    return ModuleMap(source_, target_, std::move(blocks));
}

std::optional<ModuleMap> ModuleMap::inverse() const
{
    std::vector<Matrix> blocks;
    for (auto& b : blocks_) {
        auto inv = relag::inverse(b);
        if (!inv) return std::nullopt;
        blocks.push_back(*inv);
    }
    return ModuleMap(target_, source_, std::move(blocks));
}

// ------------------------------------------------------- structural modules

namespace {

std::optional<std::size_t> arrow_basis_index(const Algebra& b, std::size_t arrow)
{
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto info = b.basis_info(i);
        if (info.length == 1 && info.word[0] == arrow) return i;
    }
    return std::nullopt;
}

Module projective_over(const Algebra& a, Side side, std::size_t v)
{
    Algebra b = side == Side::left ? a : a.opposite();
    const Quiver& q = b.quiver();
    std::vector<std::vector<std::size_t>> at(q.num_vertices());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto info = b.basis_info(i);
        if (info.source == v) at[info.target].push_back(i);
    }
    std::vector<std::size_t> dims;
    for (auto& list : at) dims.push_back(list.size());
    std::vector<Matrix> maps;
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const auto& arrow = q.arrows()[ar];
        Matrix m(a.field(), dims[arrow.target], dims[arrow.source]);
        auto idx = arrow_basis_index(b, ar);
        if (idx) {
            for (std::size_t c = 0; c < at[arrow.source].size(); ++c) {
                Matrix prod = b.product(*idx, at[arrow.source][c]);
                for (std::size_t r = 0; r < at[arrow.target].size(); ++r) m.set(r, c, prod.at(at[arrow.target][r], 0));
            }
        }
        maps.push_back(std::move(m));
    }
    return Module(a, side, dims, maps);
}

}  // namespace

Module structural_module(const Algebra& a, std::size_t vertex, StructuralKind kind, Side side)
{
    if (vertex >= a.num_vertices()) throw std::out_of_range("unknown vertex index " + std::to_string(vertex));
    switch (kind) {
    case StructuralKind::projective:
        return projective_over(a, side, vertex);
    case StructuralKind::injective:
        return dualize(projective_over(a, other(side), vertex));
    case StructuralKind::simple: {
        Module z = Module::zero(a, side);
        std::vector<std::size_t> dims = z.dims();
        dims[vertex] = 1;
        std::vector<Matrix> maps;
        for (const auto& arrow : z.quiver().arrows())
            maps.emplace_back(a.field(), dims[arrow.target], dims[arrow.source]);
        return Module(a, side, dims, maps);
    }
    }
    throw std::logic_error("unreachable");
}

Module regular_module(const Algebra& a, Side side)
{
    std::vector<Module> parts;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) parts.push_back(structural_module(a, v, StructuralKind::projective, side));
    return direct_sum_with_maps(parts, a, side).sum;
}

Module coregular_module(const Algebra& a, Side side)
{
    std::vector<Module> parts;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) parts.push_back(structural_module(a, v, StructuralKind::injective, side));
    return direct_sum_with_maps(parts, a, side).sum;
}

// -------------------------------------------------------------- direct sums

DirectSum direct_sum_with_maps(const std::vector<Module>& ms, const Algebra& a, Side side)
{
    Module zero = Module::zero(a, side);
    for (auto& m : ms)
        if (!m.compatible(zero)) throw std::invalid_argument("direct sum of modules over different algebras or sides");
    std::size_t nv = zero.num_vertices();
    std::vector<std::size_t> dims(nv, 0);
    for (auto& m : ms)
        for (std::size_t v = 0; v < nv; ++v) dims[v] += m.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t ar = 0; ar < zero.quiver().num_arrows(); ++ar) {
        std::vector<Matrix> parts;
        for (auto& m : ms) parts.push_back(m.arrow_map(ar));
        const auto& arrow = zero.quiver().arrows()[ar];
        Matrix bd = Matrix::block_diagonal(parts, a.field());
        maps.push_back(ms.empty() ? Matrix(a.field(), dims[arrow.target], dims[arrow.source]) : bd);
    }
    DirectSum out{Module(a, side, dims, maps), {}, {}};
    std::vector<std::size_t> off(nv, 0);
    for (auto& m : ms) {
        std::vector<Matrix> inc, proj;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix i(a.field(), dims[v], m.dim(v));
            i.set_block(off[v], 0, Matrix::identity(a.field(), m.dim(v)));
            proj.push_back(i.transpose());
            inc.push_back(std::move(i));
            off[v] += m.dim(v);
        }
        out.inclusions.emplace_back(m, out.sum, std::move(inc));
        out.projections.emplace_back(out.sum, m, std::move(proj));
    }
    return out;
}

Module direct_sum(const std::vector<Module>& ms)
{
    if (ms.empty()) throw std::invalid_argument("direct_sum of an empty list needs an algebra; use direct_sum_with_maps");
    return direct_sum_with_maps(ms, ms.front().algebra(), ms.front().side()).sum;
}

Module power(const Module& m, std::size_t copies)
{
    return direct_sum_with_maps(std::vector<Module>(copies, m), m.algebra(), m.side()).sum;
}

ModuleMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<std::vector<ModuleMap>>& parts)
{
    ModuleMap out = ModuleMap::zero(source.sum, target.sum);
    for (std::size_t i = 0; i < target.inclusions.size(); ++i)
        for (std::size_t j = 0; j < source.projections.size(); ++j)
            out = out + target.inclusions[i].after(parts.at(i).at(j)).after(source.projections[j]);
    return out;
}

Module dualize(const Module& m)
{
    std::vector<Matrix> maps;
    for (auto& x : m.arrow_maps()) maps.push_back(x.transpose());
    return Module(m.algebra(), other(m.side()), m.dims(), maps);
}

ModuleMap dualize(const ModuleMap& f)
{
    std::vector<Matrix> blocks;
    for (auto& b : f.blocks()) blocks.push_back(b.transpose());
    return ModuleMap(dualize(f.target()), dualize(f.source()), std::move(blocks));
}

// -------------------------------------------------------- sub and quotient

SubmoduleResult submodule(const Module& m, const Subspace& basis)
{
    const Quiver& q = m.quiver();
    std::vector<std::size_t> dims;
    for (auto& b : basis) dims.push_back(b.cols());
    std::vector<Matrix> maps;
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const auto& arrow = q.arrows()[ar];
        const Matrix& src = basis[arrow.source];
        const Matrix& tgt = basis[arrow.target];
        auto x = solve(tgt, m.arrow_map(ar) * src);
        if (!x) throw std::invalid_argument("submodule: subspace is not closed under arrow " + arrow.label);
        maps.push_back(*x);
    }
    Module sub(m.algebra(), m.side(), dims, maps);
    return {sub, ModuleMap(sub, m, basis)};
}

QuotientResult quotient(const Module& m, const Subspace& basis)
{
    const Quiver& q = m.quiver();
    std::vector<Matrix> comp, proj;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix c = complement_columns(basis[v], m.dim(v));
        Matrix full = Matrix::hstack({basis[v], c}, m.field(), m.dim(v));
        Matrix inv = *inverse(full);
        proj.push_back(inv.block(basis[v].cols(), 0, c.cols(), m.dim(v)));
        dims.push_back(c.cols());
        comp.push_back(std::move(c));
    }
    std::vector<Matrix> maps;
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const auto& arrow = q.arrows()[ar];
        maps.push_back(proj[arrow.target] * m.arrow_map(ar) * comp[arrow.source]);
    }
    Module quo(m.algebra(), m.side(), dims, maps);
    return {quo, ModuleMap(m, quo, proj)};
}

SubmoduleResult kernel(const ModuleMap& f)
{
    Subspace basis;
    for (auto& b : f.blocks()) basis.push_back(kernel_matrix(b));
    return submodule(f.source(), basis);
}

SubmoduleResult image(const ModuleMap& f)
{
    Subspace basis;
    for (auto& b : f.blocks()) basis.push_back(column_space(b));
    return submodule(f.target(), basis);
}

QuotientResult cokernel(const ModuleMap& f)
{
    Subspace basis;
    for (auto& b : f.blocks()) basis.push_back(column_space(b));
    return quotient(f.target(), basis);
}

Subspace radical_subspace(const Module& m)
{
    const Quiver& q = m.quiver();
    Subspace out;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        std::vector<Matrix> parts;
        for (std::size_t ar = 0; ar < q.num_arrows(); ++ar)
            if (q.arrows()[ar].target == v) parts.push_back(m.arrow_map(ar));
        Matrix all = parts.empty() ? Matrix(m.field(), m.dim(v), 0) : Matrix::hstack(parts, m.field(), m.dim(v));
        out.push_back(column_space(all));
    }
    return out;
}

Subspace socle_subspace(const Module& m)
{
    const Quiver& q = m.quiver();
    Subspace out;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        std::vector<Matrix> parts;
        for (std::size_t ar = 0; ar < q.num_arrows(); ++ar)
            if (q.arrows()[ar].source == v) parts.push_back(m.arrow_map(ar));
        if (parts.empty()) {
            out.push_back(Matrix::identity(m.field(), m.dim(v)));
            continue;
        }
        out.push_back(kernel_matrix(Matrix::vstack(parts, m.field(), m.dim(v))));
    }
    return out;
}

std::vector<std::size_t> top_dims(const Module& m)
{
    auto rad = radical_subspace(m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) out.push_back(m.dim(v) - rad[v].cols());
    return out;
}

std::vector<std::size_t> socle_dims(const Module& m)
{
    std::vector<std::size_t> out;
    for (auto& s : socle_subspace(m)) out.push_back(s.cols());
    return out;
}

// --------------------------------------------------------------------- Hom

namespace {

// Unknowns: block f_v (dim n_v x dim m_v) stored row-major at offset[v].
Matrix hom_constraints(const Module& m, const Module& n, std::vector<std::size_t>& offsets)
{
    const Quiver& q = m.quiver();
    std::size_t nv = m.num_vertices();
    offsets.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offsets[v + 1] = offsets[v] + n.dim(v) * m.dim(v);
    std::size_t rows = 0;
    for (const auto& arrow : q.arrows()) rows += n.dim(arrow.target) * m.dim(arrow.source);
    Matrix eq(m.field(), rows, offsets[nv]);
    std::size_t row = 0;
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const auto& arrow = q.arrows()[ar];
        std::size_t u = arrow.source, v = arrow.target;
        const Matrix& na = n.arrow_map(ar);
        const Matrix& ma = m.arrow_map(ar);
        // (N_a f_u - f_v M_a)[r][c] = 0
        for (std::size_t r = 0; r < n.dim(v); ++r)
            for (std::size_t c = 0; c < m.dim(u); ++c, ++row) {
                for (std::size_t k = 0; k < n.dim(u); ++k) {
                    Scalar x = na.at(r, k);
                    if (!x.is_zero()) eq.add_to(row, offsets[u] + k * m.dim(u) + c, x);
                }
                for (std::size_t k = 0; k < m.dim(v); ++k) {
                    Scalar x = ma.at(k, c);
                    if (!x.is_zero()) eq.add_to(row, offsets[v] + r * m.dim(v) + k, -x);
                }
            }
    }
    return eq;
}

ModuleMap map_from_vector(const Module& m, const Module& n, const std::vector<std::size_t>& offsets, const Matrix& x)
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix b(m.field(), n.dim(v), m.dim(v));
        for (std::size_t r = 0; r < n.dim(v); ++r)
            for (std::size_t c = 0; c < m.dim(v); ++c) b.set(r, c, x.at(offsets[v] + r * m.dim(v) + c, 0));
        blocks.push_back(std::move(b));
    }
    return ModuleMap(m, n, std::move(blocks));
}

}  // namespace

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n)
{
    if (!m.compatible(n)) throw std::invalid_argument("hom_basis: modules over different algebras or sides");
    std::vector<std::size_t> offsets;
    Matrix eq = hom_constraints(m, n, offsets);
    std::vector<ModuleMap> out;
    for (auto& k : kernel_basis(eq)) out.push_back(map_from_vector(m, n, offsets, k));
    return out;
}

std::size_t hom_dim(const Module& m, const Module& n)
{
    if (!m.compatible(n)) throw std::invalid_argument("hom_dim: modules over different algebras or sides");
    std::vector<std::size_t> offsets;
    Matrix eq = hom_constraints(m, n, offsets);
    return eq.cols() - rank(eq);
}

ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coeffs, const Module& source, const Module& target)
{
    ModuleMap out = ModuleMap::zero(source, target);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Scalar c = coeffs.at(i, 0);
        if (!c.is_zero()) out = out + basis[i].scaled(c);
    }
    return out;
}

}  // namespace relag
