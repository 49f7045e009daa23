#include "relag/exactlinalg.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace relag {

namespace {

void trim(Poly& f)
{
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly sub(const Poly& a, const Poly& b, const Field& k)
{
    Poly out(std::max(a.size(), b.size()), Scalar::zero(k));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, const Field& k)
{
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Scalar::zero(k));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Remainder of a modulo nonzero b.
Poly rem(Poly a, const Poly& b)
{
    trim(a);
    Scalar lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

Poly quot(Poly a, const Poly& b, const Field& k)
{
    trim(a);
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1, Scalar::zero(k));
    Scalar lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return q;
}

Poly monic(Poly f)
{
    trim(f);
    if (f.empty()) return f;
    Scalar inv = f.back().inverse();
    for (auto& c : f) c *= inv;
    return f;
}

Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, const Field& k)
{
    Poly result{Scalar::one(k)};
    base = rem(base, m);
    while (e > 0) {
        if (e & 1) result = rem(mul(result, base, k), m);
        base = rem(mul(base, base, k), m);
        e >>= 1;
    }
    return result;
}

void split_linear(const Poly& g, const Field& k, std::mt19937_64& rng, std::vector<Scalar>& out)
{
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(-(g[0] / g[1]));
        return;
    }
    auto p = static_cast<std::uint64_t>(k.characteristic());
    std::uniform_int_distribution<std::int64_t> dist(0, k.characteristic() - 1);
    for (;;) {
        Poly shifted{Scalar(k, dist(rng)), Scalar::one(k)};
        Poly h = powmod(shifted, (p - 1) / 2, g, k);
        h = gcd(g, sub(h, Poly{Scalar::one(k)}, k));
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(h, k, rng, out);
            split_linear(monic(quot(g, h, k)), k, rng, out);
            return;
        }
    }
}

std::vector<mpz_class> divisors(mpz_class n)
{
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (auto& [q, e] : factors) {
        std::size_t base = out.size();
        mpz_class power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= q;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    return out;
}

std::vector<Scalar> rational_roots(Poly f, const Field& k)
{
    std::vector<Scalar> out;
    std::size_t low = 0;
    while (low < f.size() && f[low].is_zero()) ++low;
    if (low > 0) {
        out.push_back(Scalar::zero(k));
        f.erase(f.begin(), f.begin() + static_cast<long>(low));
    }
    if (f.size() <= 1) return out;
    mpz_class l = 1;
    for (auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (auto& c : f) ints.push_back(mpz_class(c.rational() * l));
    for (auto& num : divisors(ints.front()))
        for (auto& den : divisors(ints.back()))
            for (int sign : {1, -1}) {
                Scalar x(k, mpq_class(sign * num, den));
                if (evaluate(f, x).is_zero() &&
                    std::find(out.begin(), out.end(), x) == out.end())
                    out.push_back(x);
            }
    return out;
}

}  // namespace

Scalar evaluate(const Poly& f, const Scalar& x)
{
    Scalar acc = Scalar::zero(x.field());
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly minimal_polynomial(const Matrix& square)
{
    if (square.rows() != square.cols()) throw DimensionMismatch("minimal_polynomial: matrix is not square");
    const Field& k = square.field();
    std::size_t n = square.rows();
    std::vector<Matrix> powers{Matrix::identity(k, n).flatten()};
    Matrix current = Matrix::identity(k, n);
    for (std::size_t d = 1; d <= n; ++d) {
        current = current * square;
        Matrix v = current.flatten();
        Matrix span = Matrix::hstack(powers, k, n * n);
        if (auto c = solve(span, v)) {
            Poly out;
            for (std::size_t i = 0; i < d; ++i) out.push_back(-c->at(i, 0));
            out.push_back(Scalar::one(k));
            return out;
        }
        powers.push_back(v);
    }
    throw std::logic_error("minimal_polynomial: degree exceeded matrix size");
}

std::vector<Scalar> roots_in_field(const Poly& f_in, const Field& k)
{
    Poly f = monic(f_in);
    if (f.size() <= 1) return {};
    if (k.is_rational()) return rational_roots(f, k);
    std::int64_t p = k.characteristic();
    std::vector<Scalar> out;
    if (p <= 4096) {
        for (std::int64_t x = 0; x < p; ++x)
            if (evaluate(f, Scalar(k, x)).is_zero()) out.emplace_back(k, x);
        return out;
    }
    Poly x{Scalar::zero(k), Scalar::one(k)};
    Poly g = gcd(f, sub(powmod(x, static_cast<std::uint64_t>(p), f, k), x, k));
    std::mt19937_64 rng(0x5eed);
    split_linear(g, k, rng, out);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
    return out;
}

bool is_nilpotent(const Matrix& square)
{
    if (square.rows() != square.cols()) throw DimensionMismatch("is_nilpotent: matrix is not square");
    Matrix m = square;
    std::size_t reach = 1;
    while (reach < square.rows()) {
        m = m * m;
        reach *= 2;
    }
    return m.is_zero();
}

}  // namespace relag
