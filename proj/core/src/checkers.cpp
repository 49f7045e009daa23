#include "relag/checkers.hpp"

namespace relag {

RoundTripFailure::RoundTripFailure(std::string invariant, std::size_t expected, std::size_t actual)
    : std::runtime_error("round trip failed: " + invariant + " expected " + std::to_string(expected) + ", got " +
                         std::to_string(actual)),
      invariant_(std::move(invariant)), expected_(expected), actual_(actual)
{
}

std::string to_string(CmStatus s)
{
    switch (s) {
    case CmStatus::cm: return "cm";
    case CmStatus::not_cm: return "not_cm";
    case CmStatus::cm_up_to_cap: return "cm_up_to_cap";
    }
    return "?";
}

SelfOrthogonality check_self_orthogonal(const Module& q, std::size_t cap)
{
    SelfOrthogonality out;
    auto pd = projective_dimension(q, cap);
    out.complete = pd.finite();
    out.checked_up_to = pd.finite() ? pd.value : cap;
    auto dims = ext_dims(q, q, out.checked_up_to);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] != 0) {
            out.holds = false;
            out.failing_degree = i + 1;
            break;
        }
    return out;
}

IgVerdict check_iwanaga_gorenstein(const Algebra& a, std::size_t cap)
{
    IgVerdict out;
    out.left = injective_dimension(regular_module(a, Side::left), cap);
    out.right = injective_dimension(regular_module(a, Side::right), cap);
    if (out.left.finite() && out.right.finite()) {
        if (out.left.value != out.right.value)
            throw InternalInconsistency("injective dimensions of the regular modules differ: " +
                                        std::to_string(out.left.value) + " and " + std::to_string(out.right.value));
        out.ig = true;
        out.n = out.left.value;
    }
    return out;
}

PairReport check_relative_ag_pair(const Algebra& a, const Module& q, std::size_t cap)
{
    if (!q.algebra().same_as(a)) throw std::invalid_argument("check_relative_ag_pair: module over a different algebra");
    PairReport r;
    r.algebra = a;
    r.q = q;
    r.ig = check_iwanaga_gorenstein(a, cap);
    r.self_orthogonal = check_self_orthogonal(q, cap);
    r.domdim = rel_dominant_dim(regular_module(a, q.side()), q, DominantKind::dominant, cap);
    r.m = injective_dimension(q, cap);
    r.l = projective_dimension(q, cap);
    r.gldim = gldim(a, cap);
    if (!r.ig.ig) {
        r.reason = "not Iwanaga-Gorenstein up to cap " + std::to_string(cap);
    } else if (!r.self_orthogonal.holds) {
        r.reason = "Ext^" + std::to_string(*r.self_orthogonal.failing_degree) + "(Q, Q) != 0";
    } else if (!r.self_orthogonal.complete) {
        r.reason = "self-orthogonality verified only up to cap " + std::to_string(cap);
    } else if (r.domdim.value.finite() && r.domdim.value.value < r.ig.n) {
        r.reason = "Q-domdim A = " + std::to_string(r.domdim.value.value) + " < id A = " + std::to_string(r.ig.n);
    } else {
        r.is_pair = true;
        r.n = r.domdim.value.finite() ? r.domdim.value.value : r.ig.n;
    }
    r.auslander_pair = r.is_pair && r.gldim.finite();
    r.correspondence_hypothesis =
        r.is_pair && r.m.finite() && r.l.finite() && *r.n >= r.m.value + r.l.value + 2;
    return r;
}

QpctReport check_qpct(const Algebra& lambda, const Module& q, std::size_t n, std::size_t m, std::size_t l,
                      std::size_t cap, bool force)
{
    if (!q.algebra().same_as(lambda)) throw std::invalid_argument("check_qpct: module over a different algebra");
    if (n < m + l + 2 && !force)
        throw HypothesisViolated("n = " + std::to_string(n) + " < m + l + 2 = " + std::to_string(m + l + 2));
    QpctReport r;
    r.lambda = lambda;
    r.q = q;
    r.n = n;
    r.m = m;
    r.l = l;
    r.forced = n < m + l + 2;
    r.tau = Module::zero(lambda, q.side());
    r.tau_inverse = r.tau;

    auto& c1 = r.conditions[0];
    r.ext_table = n >= 3 ? ext_dims(q, q, n - 2) : std::vector<std::size_t>{};
    c1.pass = true;
    for (std::size_t i = 0; i < r.ext_table.size(); ++i)
        if (r.ext_table[i] != 0) {
            c1.pass = false;
            c1.detail = "Ext^" + std::to_string(i + 1) + "(Q, Q) has dimension " + std::to_string(r.ext_table[i]);
            break;
        }
    if (c1.pass) c1.detail = "Ext^i(Q, Q) = 0 for 1 <= i <= " + std::to_string(n >= 2 ? n - 2 : 0);

    auto& c2 = r.conditions[1];
    c2.witness = quasi_generation_degree(q, GenerationKind::generator, cap);
    c2.pass = c2.witness->value.is_exact(l);
    c2.detail = "generator degree " + c2.witness->value.to_string() + ", required exact(" + std::to_string(l) + ")";

    auto& c3 = r.conditions[2];
    c3.witness = quasi_generation_degree(q, GenerationKind::cogenerator, cap);
    c3.pass = c3.witness->value.is_exact(m);
    c3.detail = "cogenerator degree " + c3.witness->value.to_string() + ", required exact(" + std::to_string(m) + ")";

    auto& c4 = r.conditions[3];
    if (n >= m + 2) {
        r.tau = higher_translate(q, n - m - 1);
        c4.witness = addq_dimension(r.tau, q, AddqKind::dim, cap);
        c4.pass = c4.witness->value.finite() && c4.witness->value.value <= m;
        c4.detail = "add(Q)-dimension of tau_" + std::to_string(n - m - 1) + "(Q) is " + c4.witness->value.to_string() +
                    ", required <= " + std::to_string(m);
    } else {
        c4.pass = true;
        c4.detail = "vacuous: n - m - 1 < 1";
    }

    auto& c5 = r.conditions[4];
    if (n >= l + 2) {
        r.tau_inverse = higher_translate(q, n - l - 1, true);
        c5.witness = addq_dimension(r.tau_inverse, q, AddqKind::codim, cap);
        c5.pass = c5.witness->value.finite() && c5.witness->value.value <= l;
        c5.detail = "add(Q)-codimension of tau^-_" + std::to_string(n - l - 1) + "(Q) is " +
                    c5.witness->value.to_string() + ", required <= " + std::to_string(l);
    } else {
        c5.pass = true;
        c5.detail = "vacuous: n - l - 1 < 1";
    }

    r.pass = true;
    for (auto& c : r.conditions) r.pass = r.pass && c.pass;
    return r;
}

namespace {

std::size_t faithful_rank(const Module& q)
{
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < q.acting().dim(); ++i) cols.push_back(q.action(i).flatten());
    if (cols.empty()) return 0;
    return rank(Matrix::hstack(cols, q.field(), cols.front().rows()));
}

// Fills the far side of a correspondence and the double centralizer certificate.
void close_round_trip(Correspondence& c, const Algebra& start, const Module& start_module)
{
    c.back_end = end_algebra(c.other.module);
    c.round_trip.dim_algebra = start.dim();
    c.round_trip.dim_end = c.back_end.algebra.dim();
    if (c.round_trip.dim_end != c.round_trip.dim_algebra)
        throw RoundTripFailure("dim End(Q) over the transported algebra", c.round_trip.dim_algebra,
                               c.round_trip.dim_end);
    std::size_t fr = faithful_rank(start_module);
    c.round_trip.faithful = fr == start.dim();
    if (!c.round_trip.faithful) throw RoundTripFailure("rank of the evaluation map", start.dim(), fr);
    c.round_trip.holds = true;
    c.back = transport_module(c.other.module, c.back_end);
}

std::size_t exact_value(const DimensionVerdict& d, const char* what)
{
    if (!d.finite()) throw HypothesisViolated(std::string(what) + " exceeds the cap");
    return d.value;
}

}  // namespace

Correspondence correspond_from_pair(const Algebra& a, const Module& q, std::size_t cap, bool force)
{
    Correspondence c;
    c.from_pair = true;
    c.pair = check_relative_ag_pair(a, q, cap);
    if (!c.pair.is_pair) throw HypothesisViolated("not a relative Auslander-Gorenstein pair: " + c.pair.reason);
    std::size_t n = *c.pair.n;
    std::size_t m = exact_value(c.pair.m, "id Q");
    std::size_t l = exact_value(c.pair.l, "pd Q");
    if (!c.pair.correspondence_hypothesis && !force)
        throw HypothesisViolated("n = " + std::to_string(n) + " < m + l + 2 = " + std::to_string(m + l + 2));
    Module basic = multiplicity_free(q);
    c.other_end = end_algebra(basic);
    c.other = transport_module(basic, c.other_end);
    c.qpct = check_qpct(c.other.algebra, c.other.module, n, m, l, cap, force);
    close_round_trip(c, a, basic);
    c.rederived = check_relative_ag_pair(c.back.algebra, c.back.module, cap);
    if (!c.rederived.is_pair) throw RoundTripFailure("pair property after the round trip", 1, 0);
    if (*c.rederived.n != n) throw RoundTripFailure("n after the round trip", n, *c.rederived.n);
    if (c.rederived.m.value != m) throw RoundTripFailure("m after the round trip", m, c.rederived.m.value);
    if (c.rederived.l.value != l) throw RoundTripFailure("l after the round trip", l, c.rederived.l.value);
    return c;
}

Correspondence correspond_from_qpct(const Algebra& lambda, const Module& q, std::size_t n, std::size_t m,
                                    std::size_t l, std::size_t cap, bool force)
{
    Correspondence c;
    c.from_pair = false;
    c.qpct = check_qpct(lambda, q, n, m, l, cap, force);
    if (!c.qpct.pass && !force) throw HypothesisViolated("not an (n, m, l)-quasi-precluster tilting module");
    Module basic = multiplicity_free(q);
    c.other_end = end_algebra(basic);
    c.other = transport_module(basic, c.other_end);
    c.pair = check_relative_ag_pair(c.other.algebra, c.other.module, cap);
    close_round_trip(c, lambda, basic);
    c.rederived = c.pair;
    if (!c.pair.is_pair) throw RoundTripFailure("pair property of (End(Q), Q)", 1, 0);
    if (c.pair.ig.n > n) throw RoundTripFailure("id A <= n", n, c.pair.ig.n);
    if (c.pair.domdim.value.finite() && c.pair.domdim.value.value < n)
        throw RoundTripFailure("Q-domdim A >= n", n, c.pair.domdim.value.value);
    if (c.pair.m.value != m) throw RoundTripFailure("id Q", m, c.pair.m.value);
    if (c.pair.l.value != l) throw RoundTripFailure("pd Q", l, c.pair.l.value);
    return c;
}

CmVerdict cm_check(const Module& m, const Algebra& a, std::size_t cap)
{
    CmVerdict out;
    auto ig = check_iwanaga_gorenstein(a, cap);
    std::size_t depth = ig.ig ? ig.n : cap;
    auto dims = ext_dims(m, regular_module(a, m.side()), depth);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] != 0) {
            out.status = CmStatus::not_cm;
            out.failing_degree = i + 1;
            return out;
        }
    out.status = ig.ig ? CmStatus::cm : CmStatus::cm_up_to_cap;
    return out;
}

WindowVerdict perp_window_check(const Module& x, const Module& q, std::size_t left_depth, std::size_t right_depth)
{
    WindowVerdict out;
    auto left = ext_dims(x, q, left_depth);
    for (std::size_t i = 0; i < left.size(); ++i)
        if (left[i] != 0) {
            out.left_failure = i + 1;
            break;
        }
    auto right = ext_dims(q, x, right_depth);
    for (std::size_t i = 0; i < right.size(); ++i)
        if (right[i] != 0) {
            out.right_failure = i + 1;
            break;
        }
    out.inside = !out.left_failure && !out.right_failure;
    return out;
}

Module hom_into_bimodule(const Module& x, const Module& q, const Algebra& c, Side side,
                         const std::vector<ModuleMap>& idempotents, const std::vector<ModuleMap>& arrows)
{
    const Field& k = x.field();
    auto h = hom_basis(x, q);
    std::size_t rows = ModuleMap::zero(x, q).flatten().rows();
    std::vector<std::vector<ModuleMap>> basis(idempotents.size());
    std::vector<Matrix> flat;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < idempotents.size(); ++v) {
        std::vector<ModuleMap> cands;
        std::vector<Matrix> cols;
        for (auto& f : h) {
            cands.push_back(idempotents[v].after(f));
            cols.push_back(cands.back().flatten());
        }
        Matrix all = Matrix::from_columns(k, rows, cols);
        auto piv = rref(all).pivots;
        for (auto p : piv) basis[v].push_back(cands[p]);
        flat.push_back(all.columns(piv));
        dims.push_back(piv.size());
    }
    Module shape = Module::zero(c, side);
    const Quiver& quiver = shape.quiver();
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a) {
        std::size_t from = quiver.arrows()[a].source, to = quiver.arrows()[a].target;
        Matrix mat(k, dims[to], dims[from]);
        for (std::size_t j = 0; j < dims[from]; ++j) {
            auto coords = solve(flat[to], arrows[a].after(basis[from][j]).flatten());
            if (!coords) throw std::logic_error("hom_into_bimodule: action does not respect the idempotents");
            mat.set_block(0, j, *coords);
        }
        maps.push_back(std::move(mat));
    }
    Module out(c, side, dims, maps);
    out.check_relations();
    return out;
}

namespace {

// Action of the far algebra's arrows and idempotents on q as endomorphisms.
struct Bimodule {
    std::vector<ModuleMap> idempotents;
    std::vector<ModuleMap> arrows;
};

Bimodule action_from_presentation(const EndAlgebra& e, const BasicPresentation& p)
{
    Bimodule b;
    for (auto& v : p.vertex_images) b.idempotents.push_back(e.element(v));
    for (auto& a : p.arrow_images) b.arrows.push_back(e.element(a));
    return b;
}

// The acting algebra of q, expressed on the transported module t (coordinates
// related by t.change_of_basis).
Bimodule action_through_transport(const Module& q, const Transported& t)
{
    Bimodule b;
    Matrix cinv = *inverse(t.change_of_basis);
    const Field& k = q.field();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Matrix e(k, q.total_dim(), q.total_dim());
        e.set_block(q.offset(v), q.offset(v), Matrix::identity(k, q.dim(v)));
        b.idempotents.push_back(ModuleMap::from_total(t.module, t.module, cinv * e * t.change_of_basis));
    }
    const Quiver& quiver = q.quiver();
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a) {
        const auto& ar = quiver.arrows()[a];
        Matrix e(k, q.total_dim(), q.total_dim());
        e.set_block(q.offset(ar.target), q.offset(ar.source), q.arrow_map(a));
        b.arrows.push_back(ModuleMap::from_total(t.module, t.module, cinv * e * t.change_of_basis));
    }
    return b;
}

}  // namespace

TheoremBReport theorem_b_check(const Correspondence& c, const std::vector<Module>& candidates, std::size_t cap)
{
    if (!c.from_pair || !c.pair.is_pair || !c.pair.correspondence_hypothesis)
        throw HypothesisViolated("theorem_b_check needs a pair with n >= m + l + 2");
    TheoremBReport r;
    std::size_t n = *c.pair.n, m = c.pair.m.value;
    r.left_depth = m;
    r.right_depth = n - m - 2;
    const Module& q = c.other.module;  // over Lambda
    const Transported& back = c.back;  // A' = End_Lambda(q) with q over it
    AddCategory add(q);
    Bimodule a_on_q = action_from_presentation(c.back_end, back.presentation);
    Bimodule lambda_on_qa = action_through_transport(q, back);
    bool coincide = true;
    for (auto& x : candidates) {
        TheoremBCandidate t;
        t.module = x;
        t.window = perp_window_check(x, q, r.left_depth, r.right_depth);
        t.in_add_q = add.contains(x);
        if (t.window.inside) {
            Module image =
                hom_into_bimodule(x, q, back.algebra, back.module.side(), a_on_q.idempotents, a_on_q.arrows);
            t.image_cm = cm_check(image, back.algebra, cap);
            t.image_projective = is_projective(image);
            Module again = hom_into_bimodule(image, back.module, q.algebra(), q.side(), lambda_on_qa.idempotents,
                                             lambda_on_qa.arrows);
            t.double_dual_iso = is_isomorphic(again, x).verdict == Verdict::yes;
            t.image = std::move(image);
            r.pass = r.pass && t.image_cm->status == CmStatus::cm && t.double_dual_iso;
        }
        coincide = coincide && t.window.inside == t.in_add_q;
        r.candidates.push_back(std::move(t));
    }
    if (c.pair.auslander_pair) {
        r.window_equals_add = coincide;
        r.pass = r.pass && coincide;
    }
    return r;
}

}  // namespace relag
