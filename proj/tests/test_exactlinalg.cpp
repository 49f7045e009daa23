#include "doctest.h"
#include "relag/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace relag;

namespace {

// Leibniz determinant mod p: independent of any elimination code.
std::int64_t det_mod(const std::vector<std::vector<std::int64_t>>& a, std::int64_t p) {
    std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        std::int64_t term = 1;
        for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]] % p;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        total = (total + (inversions % 2 ? p - term : term)) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

std::size_t rank_by_minors(const std::vector<std::vector<std::int64_t>>& a, std::int64_t p) {
    std::size_t rows = a.size(), cols = a[0].size();
    for (std::size_t k = std::min(rows, cols); k > 0; --k)
        for (auto& rs : subsets(rows, k))
            for (auto& cs : subsets(cols, k)) {
                std::vector<std::vector<std::int64_t>> minor(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
                if (det_mod(minor, p) != 0) return k;
            }
    return 0;
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<std::int64_t> e(r * c);
    for (auto& x : e) x = d(rng);
    return Matrix::from_ints(f, r, c, e);
}

}  // namespace

TEST_CASE("identity and zero") {
    auto f = Field::prime(7);
    auto r = rref(Matrix::identity(f, 4));
    CHECK(r.rank == 4);
    CHECK(r.matrix == Matrix::identity(f, 4));
    CHECK(rank(Matrix::zero(f, 3, 5)) == 0);
    CHECK(kernel_basis(Matrix::zero(f, 3, 5)).size() == 5);
}

TEST_CASE("rank agrees with nonvanishing minors over GF(5)") {
    auto f = Field::prime(5);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> d(0, 4);
        std::vector<std::vector<std::int64_t>> a(5, std::vector<std::int64_t>(7));
        std::vector<std::int64_t> flat;
        // Low-rank products appear often enough to exercise every rank.
        int target = trial % 6;
        for (auto& row : a)
            for (auto& x : row) x = 0;
        for (int t = 0; t < target; ++t) {
            std::vector<std::int64_t> u(5), v(7);
            for (auto& x : u) x = d(rng);
            for (auto& x : v) x = d(rng);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 7; ++j) a[i][j] = (a[i][j] + u[i] * v[j]) % 5;
        }
        for (auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
        auto m = Matrix::from_ints(f, 5, 7, flat);
        CHECK(rank(m) == rank_by_minors(a, 5));
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) + kernel_basis(m).size() == 7);
    }
}

TEST_CASE("kernel vectors are annihilated over GF(3)") {
    auto f = Field::prime(3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(f, 4, 6, rng, 0, 2);
        auto k = kernel_matrix(m);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("rref is idempotent and solve round-trips over QQ") {
    auto q = Field::rationals();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        auto m = random_matrix(q, 4, 5, rng, -3, 3);
        auto r = rref(m);
        CHECK(rref(r.matrix).matrix == r.matrix);
        auto x = random_matrix(q, 5, 2, rng, -2, 2);
        auto b = m * x;
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
    auto singular = Matrix::from_ints(q, 2, 2, {1, 2, 2, 4});
    CHECK_FALSE(solve(singular, Matrix::from_ints(q, 2, 1, {1, 0})).has_value());
    CHECK_FALSE(inverse(singular).has_value());
    auto inv = inverse(Matrix::from_ints(q, 2, 2, {2, 1, 1, 1}));
    REQUIRE(inv);
    CHECK(*inv == Matrix::from_ints(q, 2, 2, {1, -1, -1, 2}));
}

TEST_CASE("scalar parsing") {
    auto q = Field::rationals();
    CHECK(Scalar::parse(q, "6/4").to_string() == "3/2");
    CHECK(Scalar::parse(q, "+3").to_string() == "3");
    CHECK_THROWS(Scalar::parse(q, "1/0"));
    CHECK_THROWS(Scalar::parse(q, "abc"));
    auto f = Field::prime(7);
    CHECK(Scalar::parse(f, "-1").residue() == 6);
    CHECK((Scalar(f, 3) * Scalar(f, 5)).residue() == 1);
    CHECK_THROWS(Field::prime(9));
}

TEST_CASE("dimension mismatches are reported") {
    auto f = Field::prime(2);
    CHECK_THROWS_AS(Matrix::zero(f, 2, 3) * Matrix::zero(f, 2, 3), DimensionMismatch);
    CHECK_THROWS_AS(solve(Matrix::zero(f, 2, 3), Matrix::zero(f, 3, 1)), DimensionMismatch);
}

TEST_CASE("complement extends to a basis") {
    auto f = Field::prime(5);
    auto sub = Matrix::from_ints(f, 4, 2, {1, 0, 2, 0, 0, 1, 0, 3});
    auto c = complement_columns(sub, 4);
    CHECK(c.cols() == 2);
    CHECK(rank(Matrix::hstack({sub, c}, f, 4)) == 4);
}

TEST_CASE("minimal polynomial and roots") {
    auto f = Field::prime(7);
    // diag(2, 2, 3): minimal polynomial (t-2)(t-3) = t^2 - 5t + 6.
    auto d = Matrix::from_ints(f, 3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 3});
    auto mp = minimal_polynomial(d);
    REQUIRE(mp.size() == 3);
    CHECK(mp[0].residue() == 6);
    CHECK(mp[1].residue() == 2);
    auto r = roots_in_field(mp, f);
    CHECK(r.size() == 2);
    auto big = Field::prime(1000003);
    auto dd = Matrix::from_ints(big, 3, 3, {5, 0, 0, 0, 999999, 0, 0, 0, 17});
    auto rb = roots_in_field(minimal_polynomial(dd), big);
    REQUIRE(rb.size() == 3);
    CHECK(rb[0].residue() == 5);
    CHECK(rb[1].residue() == 17);
    CHECK(rb[2].residue() == 999999);
    auto q = Field::rationals();
    // 6t^2 - t - 1 = (3t+1)(2t-1)
    Poly pq{Scalar(q, -1), Scalar(q, -1), Scalar(q, 6)};
    auto rq = roots_in_field(pq, q);
    CHECK(rq.size() == 2);
    // t^2 + 1 has no roots over GF(3).
    CHECK(roots_in_field(Poly{Scalar(Field::prime(3), 1), Scalar(Field::prime(3), 0), Scalar(Field::prime(3), 1)},
                         Field::prime(3))
              .empty());
    CHECK(is_nilpotent(Matrix::from_ints(f, 3, 3, {0, 1, 4, 0, 0, 2, 0, 0, 0})));
    CHECK_FALSE(is_nilpotent(d));
}
