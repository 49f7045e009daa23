#include "doctest.h"
#include "support.hpp"

using namespace relag;
using namespace relag::testing;

namespace {

ParseError parse_error(const std::string& text)
{
    try {
        parse_algebra_file(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("S(2,4) file") {
    auto p = parse_algebra_file(read_fixture("s24.alg"));
    CHECK(p.quiver.num_vertices() == 3);
    CHECK(p.quiver.num_arrows() == 4);
    CHECK(p.relations.size() == 4);
    CHECK(build_algebra(p).dim() == 14);
    auto again = parse_algebra_file(format_algebra_file(p));
    CHECK(build_algebra(again).dim() == 14);
}

TEST_CASE("algebra parse errors carry locations") {
    auto e = parse_error("field GF(2)\nvertices\n");
    CHECK(e.line() == 2);
    e = parse_error("field GF(2)\nvertices 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrelation a*b + b*a\n");
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("NonUniformRelation") != std::string::npos);
    e = parse_error("field GF(2)\nvertices 1 2\narrow a : 1 -> 2\nrelation a*a\n");
    CHECK(std::string(e.what()).find("non-composable") != std::string::npos);
    e = parse_error("field GF(2)\nvertices 1\narrow a : 1 -> 3\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
    e = parse_error("field GF(4)\n");
    CHECK(e.line() == 1);
    e = parse_error("field QQ\nvertices 1\narrow x : 1 -> 1\nrelation x*y\n");
    CHECK(std::string(e.what()).find("unknown arrow 'y'") != std::string::npos);
    e = parse_error("field QQ\nvertices 1\nbogus\n");
    CHECK(e.line() == 3);
}

TEST_CASE("coefficients and comments") {
    auto p = parse_algebra_file(
        "# comment\nfield QQ\nvertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 2 -> 2\n"
        "relation 2 c*a - 1/2 c*b  # commutativity up to scalars\nrelation c*c\n");
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].terms[0].coeff.to_string() == "2");
    CHECK(p.relations[0].terms[1].coeff.to_string() == "-1/2");
    CHECK(build_algebra(p).dim() == 6);
}

TEST_CASE("module files") {
    auto a = load_algebra("s24.alg");
    auto q = load_module("s24_q.mod", a);
    CHECK(q.total_dim() == 8);
    CHECK(module_algebra_reference(read_fixture("s24_q.mod")) == "s24.alg");
    auto zero = parse_module_file("side left\n", a);
    CHECK(zero.total_dim() == 0);
    auto again = parse_module_file(format_module_file(q), a);
    CHECK(again == q);
    try {
        parse_module_file("space 3 = 1\nspace 5 = 2\nmap alpha = [[1,0]]\n", a);
        FAIL("expected shape error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("expected shape 2x1, got 1x2") != std::string::npos);
        CHECK(e.line() == 3);
    }
    try {
        // alpha1*alpha = 0 fails when both maps are identities
        parse_module_file("space 3 = 1\nspace 5 = 1\nmap alpha = [[1]]\nmap alpha1 = [[1]]\n", a);
        FAIL("expected relation error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("relation 1") != std::string::npos);
    }
    auto lam = load_algebra("lambda.alg");
    auto ql = load_module("lambda_q.mod", lam);
    CHECK(ql.side() == Side::right);
    CHECK(ql.total_dim() == 8);
    CHECK(parse_module_file(format_module_file(ql), lam) == ql);
}
