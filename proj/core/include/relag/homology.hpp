#pragma once

// Minimal projective resolutions and injective coresolutions, Ext, projective,
// injective and global dimension, transpose, Nakayama functor and the higher
// Auslander-Reiten translates tau_n = D Tr Omega^{n-1}, tau_n^- = Tr D Omega^{-(n-1)}.

#include "relag/repcat.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relag {

inline constexpr std::size_t default_cap = 24;

/// exact(n), or at_least(cap + 1) when the search stopped at the cap.
struct DimensionVerdict {
    bool exact = true;
    std::size_t value = 0;
    std::size_t cap = default_cap;

    static DimensionVerdict exactly(std::size_t n, std::size_t cap) { return {true, n, cap}; }
    static DimensionVerdict beyond(std::size_t cap) { return {false, cap + 1, cap}; }
    bool is_exact(std::size_t n) const { return exact && value == n; }
    bool finite() const { return exact; }
    std::string to_string() const;
    bool operator==(const DimensionVerdict&) const = default;
};

enum class ResolutionKind { projective, injective };

/// Projective: maps[0] : P_0 -> M, maps[i] : P_i -> P_{i-1}.
/// Injective:  maps[0] : M -> I_0, maps[i] : I_{i-1} -> I_i.
/// syzygies[i] is Omega^i M (resp. Omega^{-i} M), syzygies[0] = M.
struct Resolution {
    Module target;
    std::vector<Module> terms;
    std::vector<ModuleMap> maps;
    std::vector<Module> syzygies;
    ResolutionKind kind = ResolutionKind::projective;
    bool minimal = true;

    /// True when the last computed syzygy is zero.
    bool complete() const { return syzygies.back().is_zero(); }
    const Module& syzygy(std::size_t i) const { return syzygies.at(i); }
};

/// Map P(v) -> M sending the idempotent e_v to `element` (a column of M_v).
ModuleMap map_from_projective(const Module& m, std::size_t v, const Matrix& element);
/// Projective cover built from a basis of top(M).
ModuleMap projective_cover(const Module& m);
ModuleMap injective_envelope(const Module& m);

/// Computes Omega^0 .. Omega^length (fewer if a syzygy vanishes) and the
/// covers P_0 .. P_{length-1}.
Resolution min_proj_resolution(const Module& m, std::size_t length);
Resolution min_inj_coresolution(const Module& m, std::size_t length);
/// Rank-count re-verification: consecutive composites vanish, exactness at
/// every term, and (for minimal) each differential lands in the radical.
bool verify_resolution(const Resolution& r);

/// Isomorphism classes of indecomposables reached by taking syzygies, with
/// Omega of each class stored as class multiplicities. Omega^k M is then a
/// multiplicity vector, so depth costs no more than the number of classes.
class SyzygyGraph {
public:
    using Multiset = std::map<std::size_t, std::size_t>;

    SyzygyGraph(const Algebra& a, Side side);
    Multiset classes_of(const Module& m);
    const Multiset& omega(std::size_t c);
    bool is_projective(std::size_t c);
    const Module& representative(std::size_t c) const { return reps_.at(c); }
    std::size_t size() const { return reps_.size(); }
    /// Omega^k of the multiset, k = 0 .. depth (stops early at zero).
    std::vector<Multiset> iterate(const Multiset& start, std::size_t depth);

private:
    std::size_t class_of(const Module& indecomposable);

    Algebra algebra_;
    Side side_;
    std::vector<Module> reps_;
    std::vector<std::optional<Multiset>> omega_;
    std::vector<std::optional<bool>> projective_;
};

Module syzygy(const Module& m, std::size_t k);
Module cosyzygy(const Module& m, std::size_t k);

/// dim Ext^i(M, N) from the minimal projective resolution of M.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);
/// dim Ext^i(M, N) for i = 1 .. max_i via Ext^i(M, N) = Ext^1(Omega^{i-1} M, N)
/// summed over the syzygy classes (values saturate at SIZE_MAX).
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_i);
/// dim Ext^i(M, N) from the minimal injective coresolution of N.
std::size_t ext_dim_injective(const Module& m, const Module& n, std::size_t i);

enum class DimensionKind { pd, id };

DimensionVerdict projective_dimension(const Module& m, std::size_t cap = default_cap);
DimensionVerdict injective_dimension(const Module& m, std::size_t cap = default_cap);
DimensionVerdict pd_id(const Module& m, DimensionKind which, std::size_t cap = default_cap);
DimensionVerdict gldim(const Algebra& a, std::size_t cap = default_cap);

/// Hom_A(M, A) as a module on the other side; vertex v carries Hom(M, P(v)).
Module hom_to_regular(const Module& m);
/// Hom_A(f, A) : Hom(N, A) -> Hom(M, A) for f : M -> N.
ModuleMap hom_to_regular(const ModuleMap& f);

Module transpose(const Module& m);
enum class NakayamaDirection { forward, inverse };
/// nu = D Hom(-, A), nu^- = Hom(D-, A); both keep the side.
Module nakayama(const Module& m, NakayamaDirection d = NakayamaDirection::forward);
Module ar_translate(const Module& m);
Module ar_translate_inverse(const Module& m);
/// tau_n (inverse = false) or tau_n^- (inverse = true), n >= 1.
Module higher_translate(const Module& m, std::size_t n, bool inverse = false);

}  // namespace relag
