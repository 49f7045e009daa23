#pragma once

// Exact dense linear algebra over prime fields and the rationals.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relag {

class Field {
public:
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::int64_t p);
    static Field rationals() { return Field(0); }

    bool is_rational() const { return p_ == 0; }
    /// 0 for the rationals.
    std::int64_t characteristic() const { return p_; }
    std::string name() const;
    static Field parse(const std::string& text);

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

class Scalar {
public:
    explicit Scalar(Field f);
    Scalar(Field f, std::int64_t value);
    Scalar(Field f, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /// Accepts "n", "-n" and (over the rationals) "p/q".
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    /// Residue in [0, p) for prime fields.
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;

private:
    Field field_;
    std::variant<std::int64_t, mpq_class> value_;
};

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() : Matrix(Field::prime(2), 0, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    static Matrix identity(Field f, std::size_t n);
    /// Builds from integer entries (reduced into the field).
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                            const std::vector<std::int64_t>& entries);
    /// Columns side by side; all must share the row count.
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Matrix>& columns);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void set_int(std::size_t r, std::size_t c, std::int64_t v);
    /// Adds v to entry (r, c).
    void add_to(std::size_t r, std::size_t c, const Scalar& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;

    Matrix column(std::size_t c) const;
    Matrix row(std::size_t r) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix rows_subset(const std::vector<std::size_t>& idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    static Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows);
    static Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols);
    static Matrix block_diagonal(const std::vector<Matrix>& parts, Field f);

    /// Reshapes a matrix into a single column (row-major order).
    Matrix flatten() const;

    std::vector<std::vector<std::string>> to_strings() const;
    std::string to_string() const;

private:
    friend struct LinalgAccess;
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::variant<std::vector<std::int64_t>, std::vector<mpq_class>> data_;
};

struct Rref {
    Matrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, one column vector per element.
std::vector<Matrix> kernel_basis(const Matrix& m);
/// Same basis assembled as the columns of one matrix (cols x nullity).
Matrix kernel_matrix(const Matrix& m);
/// Some x with m * x = b, or nullopt if inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
/// Column-space basis drawn from the pivot columns of m.
Matrix column_space(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Columns extending the independent columns of `sub` to a basis of F^n.
Matrix complement_columns(const Matrix& sub, std::size_t n);

/// Polynomials are coefficient vectors, lowest degree first, over one Field.
using Poly = std::vector<Scalar>;

/// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const Matrix& square);
/// Distinct roots of f lying in the field. Over the rationals only roots whose
/// numerator and denominator can be factored by trial division are found.
std::vector<Scalar> roots_in_field(const Poly& f, const Field& field);
Scalar evaluate(const Poly& f, const Scalar& x);
bool is_nilpotent(const Matrix& square);

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace relag
