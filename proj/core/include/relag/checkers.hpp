#pragma once

// Decision procedures for relative Auslander-Gorenstein pairs and
// (n, m, l)-quasi-precluster tilting modules, the correspondence between
// them, Cohen-Macaulay membership and perpendicular windows.

#include "relag/relative.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relag {

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class HypothesisViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RoundTripFailure : public std::runtime_error {
public:
    RoundTripFailure(std::string invariant, std::size_t expected, std::size_t actual);
    const std::string& invariant() const { return invariant_; }
    std::size_t expected() const { return expected_; }
    std::size_t actual() const { return actual_; }

private:
    std::string invariant_;
    std::size_t expected_;
    std::size_t actual_;
};

struct SelfOrthogonality {
    bool holds = true;
    std::optional<std::size_t> failing_degree;
    /// Degrees 1..checked_up_to were tested; complete when pd q <= cap.
    std::size_t checked_up_to = 0;
    bool complete = true;
};

SelfOrthogonality check_self_orthogonal(const Module& q, std::size_t cap = default_cap);

struct IgVerdict {
    bool ig = false;
    std::size_t n = 0;  // id A = id A_A = findim A when ig
    DimensionVerdict left;
    DimensionVerdict right;
};

IgVerdict check_iwanaga_gorenstein(const Algebra& a, std::size_t cap = default_cap);

struct PairReport {
    Algebra algebra;
    Module q;
    IgVerdict ig;
    RelDimVerdict domdim;
    SelfOrthogonality self_orthogonal;
    DimensionVerdict m;  // id q
    DimensionVerdict l;  // pd q
    DimensionVerdict gldim;
    bool is_pair = false;
    std::optional<std::size_t> n;
    std::string reason;
    bool auslander_pair = false;
    /// n >= m + l + 2
    bool correspondence_hypothesis = false;
};

PairReport check_relative_ag_pair(const Algebra& a, const Module& q, std::size_t cap = default_cap);

struct ConditionResult {
    bool pass = false;
    std::string detail;
    std::optional<RelDimVerdict> witness;
};

struct QpctReport {
    Algebra lambda;
    Module q;
    std::size_t n = 0, m = 0, l = 0;
    bool forced = false;
    /// dim Ext^i(q, q) for i = 1 .. n - 2
    std::vector<std::size_t> ext_table;
    Module tau;          // tau_{n-m-1} q
    Module tau_inverse;  // tau^-_{n-l-1} q
    std::array<ConditionResult, 5> conditions;
    bool pass = false;
};

/// Throws HypothesisViolated when n < m + l + 2 unless `force`.
QpctReport check_qpct(const Algebra& lambda, const Module& q, std::size_t n, std::size_t m, std::size_t l,
                      std::size_t cap = default_cap, bool force = false);

struct Correspondence {
    bool from_pair = true;
    PairReport pair;
    QpctReport qpct;
    /// Lambda with q_lambda (pair input) or A with q_a (qpct input), presented.
    EndAlgebra other_end;
    Transported other;
    /// Transport of `other.module` back: realizes End of the other side.
    EndAlgebra back_end;
    Transported back;
    DoubleCentralizer round_trip;
    /// Pair input: the pair re-derived on the far side of the round trip.
    /// Qpct input: the pair checked on (A, q_a).
    PairReport rederived;
};

/// pair -> (End_A(q)^op, q); the algebra side of the round trip is checked by
/// the double centralizer and by re-deriving (n, m, l). Throws RoundTripFailure.
Correspondence correspond_from_pair(const Algebra& a, const Module& q, std::size_t cap = default_cap,
                                    bool force = false);
/// qpct -> (End_Lambda(q), q).
Correspondence correspond_from_qpct(const Algebra& lambda, const Module& q, std::size_t n, std::size_t m,
                                    std::size_t l, std::size_t cap = default_cap, bool force = false);

enum class CmStatus { cm, not_cm, cm_up_to_cap };
std::string to_string(CmStatus s);

struct CmVerdict {
    CmStatus status = CmStatus::cm;
    std::optional<std::size_t> failing_degree;
};

/// Ext^i(m, A) = 0 for i >= 1; complete when A is Iwanaga-Gorenstein within cap.
CmVerdict cm_check(const Module& m, const Algebra& a, std::size_t cap = default_cap);

struct WindowVerdict {
    bool inside = true;
    /// First nonvanishing Ext^i(x, q) resp. Ext^j(q, x).
    std::optional<std::size_t> left_failure;
    std::optional<std::size_t> right_failure;
};

WindowVerdict perp_window_check(const Module& x, const Module& q, std::size_t left_depth, std::size_t right_depth);

/// Hom_B(x, q) as a module over c, where c acts on q through B-endomorphisms:
/// `idempotents[v]` projects q onto its c-vertex v part and `arrows[a]` is the
/// action of arrow a of the acting quiver of (c, side).
Module hom_into_bimodule(const Module& x, const Module& q, const Algebra& c, Side side,
                         const std::vector<ModuleMap>& idempotents, const std::vector<ModuleMap>& arrows);

struct TheoremBCandidate {
    Module module;
    WindowVerdict window;
    bool in_add_q = false;
    /// Set for window members: Hom_Lambda(X, Q) over A.
    std::optional<Module> image;
    std::optional<CmVerdict> image_cm;
    bool image_projective = false;
    bool double_dual_iso = false;
};

struct TheoremBReport {
    std::size_t left_depth = 0;
    std::size_t right_depth = 0;
    std::vector<TheoremBCandidate> candidates;
    /// Window membership coincides with add Q (checked when the pair is an Auslander pair).
    std::optional<bool> window_equals_add;
    bool pass = true;
};

/// Candidates are modules over c.other.algebra on the side of c.other.module.
TheoremBReport theorem_b_check(const Correspondence& c, const std::vector<Module>& candidates,
                               std::size_t cap = default_cap);

}  // namespace relag
