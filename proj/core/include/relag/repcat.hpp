#pragma once

// Modules as quiver representations, module maps, Hom spaces, duality,
// decomposition into indecomposables and endomorphism algebras.
//
// A right A-module is stored as a left module over A^op: arrow a : u -> v of
// A's quiver acts M_v -> M_u and is kept as a dim(u) x dim(v) matrix, which
// is exactly the left-module matrix of the reversed arrow. `acting()` returns
// the algebra (A or A^op) over which the stored data is a left module.

#include "relag/quiveralg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relag {

enum class Side { left, right };
inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }
std::string to_string(Side s);

class RelationViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DecompositionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Module {
public:
    Module() = default;
    /// `maps` follow the stored convention described above; shapes are checked,
    /// relations are not (see check_relations).
    Module(Algebra a, Side side, std::vector<std::size_t> dims, std::vector<Matrix> maps);
    static Module zero(const Algebra& a, Side side);

    const Algebra& algebra() const { return algebra_; }
    Side side() const { return side_; }
    Algebra acting() const { return side_ == Side::left ? algebra_ : algebra_.opposite(); }
    const Field& field() const { return algebra_.field(); }
    const Quiver& quiver() const { return acting().quiver(); }

    std::size_t num_vertices() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_.at(v); }
    std::size_t total_dim() const;
    std::size_t offset(std::size_t v) const;
    bool is_zero() const { return total_dim() == 0; }

    /// Arrow a of the acting quiver, u -> v, as a dim(v) x dim(u) matrix.
    const Matrix& arrow_map(std::size_t a) const { return maps_.at(a); }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }
    /// Composite along an arrow word of the acting quiver in application order.
    Matrix path_map(std::size_t start, const std::vector<std::size_t>& word) const;
    /// Basis element i of acting() on the whole space (block matrix).
    Matrix action(std::size_t i) const;

    /// Index of the first relation not satisfied, if any.
    std::optional<std::size_t> violated_relation() const;
    /// Throws RelationViolated naming the first violated relation.
    void check_relations() const;

    bool compatible(const Module& o) const { return algebra_.same_as(o.algebra_) && side_ == o.side_; }
    /// Identical dimensions and matrices (not isomorphism).
    bool operator==(const Module& o) const;

private:
    Algebra algebra_;
    Side side_ = Side::left;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
};

class ModuleMap {
public:
    ModuleMap() = default;
    /// blocks[v] is dim_target(v) x dim_source(v).
    ModuleMap(Module source, Module target, std::vector<Matrix> blocks);
    static ModuleMap zero(const Module& source, const Module& target);
    static ModuleMap identity(const Module& m);
    /// Map given by one block-diagonal matrix on total spaces.
    static ModuleMap from_total(const Module& source, const Module& target, const Matrix& total);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Matrix& block(std::size_t v) const { return blocks_.at(v); }
    const std::vector<Matrix>& blocks() const { return blocks_; }
    Matrix total() const;
    /// Blocks concatenated row-major into one column.
    Matrix flatten() const;

    bool commutes() const;
    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;
    std::size_t rank() const;

    /// (*this) o g: apply g first.
    ModuleMap after(const ModuleMap& g) const;
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap scaled(const Scalar& s) const;
    std::optional<ModuleMap> inverse() const;

private:
    Module source_;
    Module target_;
    std::vector<Matrix> blocks_;
};

// ------------------------------------------------------------- building

enum class StructuralKind { projective, injective, simple };

/// Indecomposable projective, injective or simple module at vertex v. Right
/// projectives are e_v A, injectives are duals of opposite-side projectives.
Module structural_module(const Algebra& a, std::size_t vertex, StructuralKind kind, Side side);
/// A as a module over itself (direct sum of all projectives).
Module regular_module(const Algebra& a, Side side);
/// DA on the given side (direct sum of all injectives).
Module coregular_module(const Algebra& a, Side side);

struct DirectSum {
    Module sum;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};

DirectSum direct_sum_with_maps(const std::vector<Module>& ms, const Algebra& a, Side side);
/// Requires a non-empty list; use direct_sum_with_maps for the empty sum.
Module direct_sum(const std::vector<Module>& ms);
Module power(const Module& m, std::size_t copies);
/// Block map between direct sums: parts[i][j] : source_j -> target_i.
ModuleMap block_map(const DirectSum& source, const DirectSum& target,
                    const std::vector<std::vector<ModuleMap>>& parts);

/// Same algebra, opposite side, transposed matrices.
Module dualize(const Module& m);
/// D f : DN -> DM.
ModuleMap dualize(const ModuleMap& f);

// ------------------------------------------------------ sub and quotient

/// Per-vertex column bases of a subspace of a module.
using Subspace = std::vector<Matrix>;

struct SubmoduleResult {
    Module module;
    ModuleMap inclusion;
};

struct QuotientResult {
    Module module;
    ModuleMap projection;
};

/// Submodule spanned by per-vertex bases that are already closed under arrows.
SubmoduleResult submodule(const Module& m, const Subspace& basis);
QuotientResult quotient(const Module& m, const Subspace& basis);
SubmoduleResult kernel(const ModuleMap& f);
SubmoduleResult image(const ModuleMap& f);
QuotientResult cokernel(const ModuleMap& f);

Subspace radical_subspace(const Module& m);
Subspace socle_subspace(const Module& m);
/// Dimension vector of top(M) = M / rad M.
std::vector<std::size_t> top_dims(const Module& m);
std::vector<std::size_t> socle_dims(const Module& m);

// ---------------------------------------------------------------- Hom

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
/// sum_i coeffs(i) * basis[i]
ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coeffs, const Module& source,
                  const Module& target);

// ---------------------------------------------- decomposition, isomorphism

struct Summand {
    Module module;
    ModuleMap inclusion;
    ModuleMap projection;
};

/// Indecomposable summands with inclusions and projections whose composites
/// give the identity; each summand has a certified local endomorphism ring.
std::vector<Summand> decompose(const Module& m, std::uint64_t seed = 0);
/// Summands grouped up to isomorphism, in order of first appearance.
std::vector<std::pair<Module, std::size_t>> decompose_with_multiplicity(const Module& m, std::uint64_t seed = 0);
bool is_indecomposable(const Module& m);
/// One copy of each indecomposable summand.
Module multiplicity_free(const Module& m, std::uint64_t seed = 0);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct IsoResult {
    Verdict verdict = Verdict::unknown;
    std::optional<ModuleMap> witness;
    std::string reason;
};

IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0);
/// True iff every indecomposable summand of x is isomorphic to one of q's.
bool in_add(const Module& x, const Module& q);
/// True iff m has a nonzero projective (resp. injective) direct summand.
bool has_projective_summand(const Module& m);
bool has_injective_summand(const Module& m);
bool is_projective(const Module& m);
bool is_injective(const Module& m);

// ---------------------------------------------------------- End and transport

struct EndAlgebra {
    /// End(M)^op: b_i * b_j corresponds to basis[j] o basis[i].
    Algebra algebra;
    std::vector<ModuleMap> basis;
    Module module;

    ModuleMap element(const Matrix& coords) const;
    Matrix coordinates(const ModuleMap& f) const;
};

EndAlgebra end_algebra(const Module& m);

struct Transported {
    /// Algebra built from the presentation of End(q)^op (left q) or End(q) (right q).
    Algebra algebra;
    BasicPresentation presentation;
    /// q over `algebra`, on the opposite side.
    Module module;
    /// Columns: the transported basis in q's total coordinates.
    Matrix change_of_basis;
};

/// Requires q multiplicity free so that the endomorphism algebra is basic.
Transported transport_module(const Module& q, const EndAlgebra& e);

}  // namespace relag
