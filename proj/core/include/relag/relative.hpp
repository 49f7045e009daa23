#pragma once

// Minimal add(Q)-approximations and the dimensions built from them: relative
// dominant and codominant dimension, add(Q)-dimension and codimension,
// quasi-(co)generator degree, and the double centralizer property.

#include "relag/homology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relag {

/// add(q), represented by one copy of each indecomposable summand of q.
class AddCategory {
public:
    explicit AddCategory(const Module& q, std::uint64_t seed = 0);
    const Module& generator() const { return q_; }
    const std::vector<Module>& summands() const { return summands_; }
    bool contains(const Module& x) const;
    /// Index of the summand isomorphic to the indecomposable x.
    std::optional<std::size_t> summand_index(const Module& x) const;

private:
    Module q_;
    std::vector<Module> summands_;
};

enum class ApproxSide { left, right };

/// A minimal approximation whose add(q)-term is the direct sum of
/// summands()[terms[k]] in order.
struct Approximation {
    ModuleMap map;
    std::vector<std::size_t> terms;
};

/// left: x -> Q_0, every map x -> q factors through it; right: Q_0 -> x dually.
/// Superfluous summands are removed greedily in index order.
Approximation minimal_approximation(const Module& x, const AddCategory& q, ApproxSide side);
ModuleMap minimal_approximation(const Module& x, const Module& q, ApproxSide side);

enum class ApproxDirection { coresolution, resolution };

/// coresolution: 0 -> X -> Q_1 -> Q_2 -> ..., maps[0] : X -> Q_1, exact under Hom(-, q).
/// resolution:   ... -> Q_1 -> Q_0 -> X -> 0, maps[0] : Q_0 -> X, exact under Hom(q, -).
/// remainders[k] is the cokernel (resp. kernel) after k + 1 steps.
struct ApproxSequence {
    Module anchor;
    std::vector<Module> terms;
    std::vector<std::vector<std::size_t>> term_summands;
    std::vector<ModuleMap> maps;
    std::vector<Module> remainders;
    ApproxDirection direction = ApproxDirection::coresolution;
    /// Stage at which an approximation failed to be mono (resp. epi).
    std::optional<std::size_t> broken_at;
};

/// Exactness and functor-exactness re-checked by rank counts.
bool verify_approx_sequence(const ApproxSequence& s, const Module& q);

struct RelDimVerdict {
    DimensionVerdict value;
    ApproxSequence witness;
};

enum class DominantKind { dominant, codominant };
enum class AddqKind { dim, codim };
enum class GenerationKind { generator, cogenerator };

RelDimVerdict rel_dominant_dim(const Module& x, const Module& q, DominantKind kind, std::size_t cap = default_cap);
RelDimVerdict addq_dimension(const Module& m, const Module& q, AddqKind kind, std::size_t cap = default_cap);
RelDimVerdict quasi_generation_degree(const Module& q, GenerationKind kind, std::size_t cap = default_cap);

struct DoubleCentralizer {
    bool holds = false;
    bool faithful = false;
    std::size_t dim_algebra = 0;
    std::size_t dim_end = 0;
};

/// Evaluation map A -> End_Lambda(q) with Lambda = End_A(q)^op; q must be a
/// module over a (either side).
DoubleCentralizer double_centralizer(const Algebra& a, const Module& q);

}  // namespace relag
