#include "relag/exactlinalg.hpp"

#include <sstream>

namespace relag {

namespace {

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("element is not invertible");
    return t < 0 ? t + p : t;
}

std::int64_t reduce(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

struct ModP {
    using E = std::int64_t;
    std::int64_t p;
    E zero() const { return 0; }
    bool is_zero(E a) const { return a == 0; }
    E add(E a, E b) const { E s = a + b; return s >= p ? s - p : s; }
    E sub(E a, E b) const { E s = a - b; return s < 0 ? s + p : s; }
    E mul(E a, E b) const { return (a * b) % p; }
    E inv(E a) const { return mod_inverse(a, p); }
    // a - f*b in place
    void axpy_neg(E& a, E f, E b) const { a = sub(a, mul(f, b)); }
};

struct Rat {
    using E = mpq_class;
    E zero() const { return 0; }
    bool is_zero(const E& a) const { return sgn(a) == 0; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E inv(const E& a) const { return 1 / a; }
    void axpy_neg(E& a, const E& f, const E& b) const { a -= f * b; }
};

template <class Ops>
void rref_inplace(const Ops& ops, std::vector<typename Ops::E>& a, std::size_t rows,
                  std::size_t cols, std::vector<std::size_t>& pivots)
{
    using E = typename Ops::E;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!ops.is_zero(a[i * cols + c])) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        E inv = ops.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            E f = a[i * cols + c];
            if (ops.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) {
                if (ops.is_zero(a[r * cols + j])) continue;
                ops.axpy_neg(a[i * cols + j], f, a[r * cols + j]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
}

}  // namespace

struct LinalgAccess {
    template <class F>
    static decltype(auto) visit(const Matrix& m, F&& f)
    {
        if (m.field_.is_rational())
            return f(Rat{}, std::get<std::vector<mpq_class>>(m.data_));
        return f(ModP{m.field_.characteristic()}, std::get<std::vector<std::int64_t>>(m.data_));
    }
    template <class F>
    static decltype(auto) visit_mut(Matrix& m, F&& f)
    {
        if (m.field_.is_rational())
            return f(Rat{}, std::get<std::vector<mpq_class>>(m.data_));
        return f(ModP{m.field_.characteristic()}, std::get<std::vector<std::int64_t>>(m.data_));
    }
    /// f(ops, out_data, in_data) with both matrices over the same field.
    template <class F>
    static void zip(Matrix& out, const Matrix& in, F&& f)
    {
        if (!(out.field_ == in.field_)) throw DimensionMismatch("field mismatch");
        if (out.field_.is_rational())
            f(Rat{}, std::get<std::vector<mpq_class>>(out.data_), std::get<std::vector<mpq_class>>(in.data_));
        else
            f(ModP{out.field_.characteristic()}, std::get<std::vector<std::int64_t>>(out.data_),
              std::get<std::vector<std::int64_t>>(in.data_));
    }
};

// ---------------------------------------------------------------- Field

Field Field::prime(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                    std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Field Field::parse(const std::string& text)
{
    if (text == "QQ") return rationals();
    if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
        std::string digits = text.substr(3, text.size() - 4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 12)
            throw std::invalid_argument("malformed field '" + text + "'");
        return prime(std::stoll(digits));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected GF(p) or QQ)");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f) : field_(f)
{
    if (f.is_rational()) value_ = mpq_class(0);
    else value_ = std::int64_t{0};
}

Scalar::Scalar(Field f, std::int64_t value) : field_(f)
{
    if (f.is_rational()) value_ = mpq_class(static_cast<long>(value));
    else value_ = reduce(value, f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f)
{
    if (f.is_rational()) {
        value_ = value;
        return;
    }
    std::int64_t p = f.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    std::int64_t n = reduce(num.get_si(), p);
    std::int64_t d = reduce(den.get_si(), p);
    if (d == 0) throw std::domain_error("denominator vanishes in " + f.name());
    value_ = (n * mod_inverse(d, p)) % p;
}

Scalar Scalar::parse(Field f, const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty scalar");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    auto slash = text.find('/');
    auto check_digits = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed scalar '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_digits(text.substr(start));
    }
    else {
        check_digits(text.substr(start, slash - start));
        check_digits(text.substr(slash + 1));
    }
    if (slash != std::string::npos &&
        text.find_first_not_of('0', slash + 1) == std::string::npos)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    mpq_class q(text[0] == '+' ? text.substr(1) : text, 10);
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const
{
    if (field_.is_rational()) return sgn(rational()) == 0;
    return residue() == 0;
}

bool Scalar::is_one() const
{
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1;
}

std::string Scalar::to_string() const
{
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (field_.is_rational()) return Scalar(field_, mpq_class(rational() + o.rational()));
    return Scalar(field_, ModP{field_.characteristic()}.add(residue(), o.residue()));
}

Scalar Scalar::operator-(const Scalar& o) const
{
    if (field_.is_rational()) return Scalar(field_, mpq_class(rational() - o.rational()));
    return Scalar(field_, ModP{field_.characteristic()}.sub(residue(), o.residue()));
}

Scalar Scalar::operator*(const Scalar& o) const
{
    if (field_.is_rational()) return Scalar(field_, mpq_class(rational() * o.rational()));
    return Scalar(field_, ModP{field_.characteristic()}.mul(residue(), o.residue()));
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
    return Scalar(field_, mod_inverse(residue(), field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_) - *this; }

bool Scalar::operator==(const Scalar& o) const
{
    return field_ == o.field_ && value_ == o.value_;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols)
{
    if (f.is_rational()) data_ = std::vector<mpq_class>(rows * cols);
    else data_ = std::vector<std::int64_t>(rows * cols, 0);
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries)
{
    if (entries.size() != rows * cols) throw DimensionMismatch("from_ints: entry count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, entries[i * cols + j]);
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Matrix>& columns)
{
    return hstack(columns, f, rows);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    if (field_.is_rational()) return Scalar(field_, std::get<std::vector<mpq_class>>(data_)[r * cols_ + c]);
    return Scalar(field_, std::get<std::vector<std::int64_t>>(data_)[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v)
{
    if (field_.is_rational()) std::get<std::vector<mpq_class>>(data_)[r * cols_ + c] = v.rational();
    else std::get<std::vector<std::int64_t>>(data_)[r * cols_ + c] = v.residue();
}

void Matrix::set_int(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, Scalar(field_, v)); }

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

bool Matrix::is_zero() const
{
    return LinalgAccess::visit(*this, [](const auto& ops, const auto& d) {
        for (const auto& e : d)
            if (!ops.is_zero(e)) return false;
        return true;
    });
}

bool Matrix::operator==(const Matrix& o) const
{
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    LinalgAccess::zip(t, *this, [&](const auto&, auto& o, const auto& d) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) o[j * rows_ + i] = d[i * cols_ + j];
    });
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    std::size_t n = o.cols_;
    if (field_.is_rational()) {
        const auto& a = std::get<std::vector<mpq_class>>(data_);
        const auto& b = std::get<std::vector<mpq_class>>(o.data_);
        auto& c = std::get<std::vector<mpq_class>>(out.data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpq_class& aik = a[i * cols_ + k];
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(b[k * n + j]) != 0) c[i * n + j] += aik * b[k * n + j];
            }
    }
    else {
        std::int64_t p = field_.characteristic();
        const auto& a = std::get<std::vector<std::int64_t>>(data_);
        const auto& b = std::get<std::vector<std::int64_t>>(o.data_);
        auto& c = std::get<std::vector<std::int64_t>>(out.data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::int64_t aik = a[i * cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
            }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out = *this;
    LinalgAccess::zip(out, o, [](const auto& ops, auto& d, const auto& e) {
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.add(d[i], e[i]);
    });
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out = *this;
    LinalgAccess::zip(out, o, [](const auto& ops, auto& d, const auto& e) {
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.sub(d[i], e[i]);
    });
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * s);
    return out;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.set(i, j, at(i, idx[j]));
    return out;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(idx[i], j));
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix out(field_, nr, nc);
    LinalgAccess::zip(out, *this, [&](const auto&, auto& o, const auto& d) {
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) o[i * nc + j] = d[(r0 + i) * cols_ + c0 + j];
    });
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
    LinalgAccess::zip(*this, b, [&](const auto&, auto& d, const auto& src) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = src[i * b.cols_ + j];
    });
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != rows) throw DimensionMismatch("hstack row mismatch");
        cols += p.cols_;
    }
    Matrix out(f, rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != cols) throw DimensionMismatch("vstack column mismatch");
        rows += p.rows_;
    }
    Matrix out(f, rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows_;
    }
    return out;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& parts, Field f)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows_;
        cols += p.cols_;
    }
    Matrix out(f, rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows_;
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::flatten() const
{
    Matrix out(field_, rows_ * cols_, 1);
    out.data_ = data_;
    return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const
{
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- algorithms

Rref rref(const Matrix& m)
{
    Rref out{m, {}, 0};
    LinalgAccess::visit_mut(out.matrix, [&](const auto& ops, auto& d) {
        rref_inplace(ops, d, m.rows(), m.cols(), out.pivots);
    });
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminating on the shorter side is cheaper.
    return m.rows() < m.cols() ? rref(m.transpose()).rank : rref(m).rank;
}

std::vector<Matrix> kernel_basis(const Matrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Matrix> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Matrix v(m.field(), m.cols(), 1);
        v.set_int(free, 0, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            Scalar e = r.matrix.at(i, free);
            if (!e.is_zero()) v.set(r.pivots[i], 0, -e);
        }
        out.push_back(std::move(v));
    }
    return out;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::hstack(kernel_basis(m), m.field(), m.cols()); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b)
{
    if (b.rows() != m.rows())
        throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.rows()) +
                                " rows, matrix has " + std::to_string(m.rows()));
    Matrix aug = Matrix::hstack({m, b}, m.field(), m.rows());
    Rref r = rref(aug);
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(r.pivots[i], j, r.matrix.at(i, m.cols() + j));
    }
    return x;
}

Matrix column_space(const Matrix& m)
{
    Rref r = rref(m);
    return m.columns(r.pivots);
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) return std::nullopt;
    return x;
}

Matrix complement_columns(const Matrix& sub, std::size_t n)
{
    Matrix aug = Matrix::hstack({sub, Matrix::identity(sub.field(), n)}, sub.field(), n);
    Rref r = rref(aug);
    std::vector<std::size_t> extra;
    for (auto p : r.pivots)
        if (p >= sub.cols()) extra.push_back(p - sub.cols());
    return Matrix::identity(sub.field(), n).columns(extra);
}

}  // namespace relag
