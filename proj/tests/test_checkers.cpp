#include "doctest.h"
#include "relag/checkers.hpp"
#include "support.hpp"

using namespace relag;
using namespace relag::testing;

namespace {

bool iso(const Module& x, const Module& y) { return is_isomorphic(x, y).verdict == Verdict::yes; }

}  // namespace

TEST_CASE("self-orthogonality and Iwanaga-Gorenstein") {
    auto a = load_algebra("s24.alg");
    auto q = load_module("s24_q.mod", a);
    auto so = check_self_orthogonal(q);
    CHECK(so.holds);
    CHECK(so.complete);
    CHECK(so.checked_up_to == 1);
    CHECK(check_self_orthogonal(projective(a, "5")).holds);
    auto ig = check_iwanaga_gorenstein(a);
    CHECK(ig.ig);
    CHECK(ig.n == 4);
    auto two = load_algebra("twoloop.alg");
    auto ig2 = check_iwanaga_gorenstein(two);
    CHECK(ig2.ig);
    CHECK(ig2.n <= 1);
    auto lam = load_algebra("lambda.alg");
    // a simple with a self-extension
    for (auto v : {"1", "2"}) {
        auto s = simple(lam, v, Side::right);
        if (ext_dim(s, s, 1) != 0) {
            auto r = check_self_orthogonal(s);
            CHECK(!r.holds);
            CHECK(r.failing_degree == 1);
        }
    }
}

TEST_CASE("relative Auslander-Gorenstein pairs") {
    auto a = load_algebra("s24.alg");
    auto q = load_module("s24_q.mod", a);
    auto r = check_relative_ag_pair(a, q);
    CHECK(r.is_pair);
    REQUIRE(r.n);
    CHECK(*r.n == 4);
    CHECK(r.m.is_exact(1));
    CHECK(r.l.is_exact(1));
    CHECK(r.auslander_pair);
    CHECK(r.correspondence_hypothesis);

    auto two = load_algebra("twoloop.alg");
    auto r2 = check_relative_ag_pair(two, projective(two, "1"));
    CHECK(r2.is_pair);
    CHECK(r2.n == std::optional<std::size_t>(1));
    CHECK(!r2.correspondence_hypothesis);
}

TEST_CASE("quasi-precluster tilting module over the endomorphism algebra") {
    auto lam = load_algebra("lambda.alg");
    auto q = load_module("lambda_q.mod", lam);
    auto r = check_qpct(lam, q, 4, 1, 1);
    for (auto& c : r.conditions) CHECK_MESSAGE(c.pass, c.detail);
    CHECK(r.pass);
    CHECK(r.ext_table == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(check_qpct(lam, q, 3, 1, 1), HypothesisViolated);
}

TEST_CASE("correspondence for S(2,4)") {
    auto a = load_algebra("s24.alg");
    auto q = load_module("s24_q.mod", a);
    auto c = correspond_from_pair(a, q);
    CHECK(c.other.algebra.dim() == 6);
    CHECK(c.other.presentation.presentation.quiver.num_vertices() == 2);
    CHECK(c.other.presentation.presentation.quiver.num_arrows() == 3);
    CHECK(c.qpct.pass);
    CHECK(c.round_trip.holds);
    CHECK(c.back.algebra.dim() == 14);
    CHECK(*c.rederived.n == 4);
    auto back = correspond_from_qpct(c.other.algebra, c.other.module, 4, 1, 1);
    CHECK(back.pair.is_pair);
    CHECK(back.other.algebra.dim() == 14);
}

TEST_CASE("two-loop counterexample") {
    auto two = load_algebra("twoloop.alg");
    auto p1 = projective(two, "1");
    CHECK_THROWS_AS(correspond_from_pair(two, p1), HypothesisViolated);
    try {
        correspond_from_pair(two, p1, default_cap, true);
        FAIL("expected a round trip failure");
    } catch (const RoundTripFailure& e) {
        CHECK(e.expected() == 6);
        CHECK(e.actual() == 8);
    }
}

TEST_CASE("Cohen-Macaulay modules and windows") {
    auto a = load_algebra("s24.alg");
    CHECK(cm_check(projective(a, "3"), a).status == CmStatus::cm);
    auto n = load_module("s24_545.mod", a);
    CHECK(cm_check(n, a).status == CmStatus::not_cm);
    auto dn = load_algebra("dualnumbers.alg");
    auto s = simple(dn, "1");
    CHECK(cm_check(s, dn).status == CmStatus::cm);

    auto lam = load_algebra("lambda.alg");
    auto q = load_module("lambda_q.mod", lam);
    auto p2 = projective(lam, "2", Side::right);
    CHECK(perp_window_check(p2, q, 1, 0).inside);
    CHECK(!perp_window_check(p2, q, 1, 1).inside);
    CHECK(perp_window_check(q, q, 1, 1).inside);
}
