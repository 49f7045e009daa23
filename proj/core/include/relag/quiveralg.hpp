#pragma once

// Bound quiver algebras kQ/I: presentations, path bases, structure constants.
//
// Composition convention: p*q means "apply q first, then p", so a product is
// defined when target(q) == source(p). Paths are stored as arrow words in
// application order (the first arrow applied comes first).

#include "relag/exactlinalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace relag {

struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    std::optional<std::size_t> vertex_index(const std::string& label) const;
    std::optional<std::size_t> arrow_index(const std::string& label) const;
    /// Same labels, every arrow reversed.
    Quiver opposite() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    /// Arrow indices in application order.
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

/// "a3*a2*a1" in composition order, or "e_v" for a trivial path.
std::string path_to_string(const Quiver& q, const Path& p);

struct RelationTerm {
    Scalar coeff;
    Path path;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
    Field field = Field::prime(2);
    Quiver quiver;
    std::vector<Relation> relations;

    /// Throws MalformedRelation on non-uniform, short or non-composable relations.
    void validate() const;
    /// Reversed quiver; every relation path read backwards.
    AlgebraPresentation opposite() const;
};

class MalformedRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUniformRelation : public MalformedRelation {
public:
    using MalformedRelation::MalformedRelation;
};

class NotAdmissibleWithinBound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotBasic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BasisInfo {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t length = 0;
    std::vector<std::size_t> word;
};

namespace detail {
struct AlgebraCore;
}

struct BasicPresentation;

/// Finite-dimensional algebra given by a basis and structure constants.
///
/// Cheap to copy: a handle onto shared immutable data plus an orientation
/// flag, so `opposite()` costs nothing and `a.opposite().opposite() == a`.
/// Algebras built from a presentation carry a path basis (every basis element
/// is a path of the quiver, tagged with source, target and length); abstract
/// algebras such as endomorphism rings do not.
class Algebra {
public:
    Algebra() = default;

    /// Abstract algebra from left-multiplication matrices: column j of
    /// left_mult[i] holds the coordinates of b_i * b_j.
    static Algebra from_structure_constants(Field f, std::vector<std::string> labels,
                                            std::vector<Matrix> left_mult);

    const Field& field() const;
    std::size_t dim() const;
    const std::string& label(std::size_t i) const;
    /// Coordinates of b_i * b_j as a column.
    Matrix product(std::size_t i, std::size_t j) const;
    /// Matrix of x -> b_i * x.
    const Matrix& left_mult(std::size_t i) const;
    /// Matrix of x -> x * b_i.
    const Matrix& right_mult(std::size_t i) const;
    /// Coordinates of x * y for coordinate columns x, y.
    Matrix multiply(const Matrix& x, const Matrix& y) const;
    Matrix unit() const;

    Algebra opposite() const;
    bool is_opposite_handle() const { return flipped_; }
    bool same_as(const Algebra& o) const { return core_ == o.core_ && flipped_ == o.flipped_; }

    bool has_path_basis() const;
    const AlgebraPresentation& presentation() const;
    const Quiver& quiver() const { return presentation().quiver; }
    std::size_t num_vertices() const { return quiver().num_vertices(); }
    /// Path-basis tags; requires has_path_basis().
    BasisInfo basis_info(std::size_t i) const;
    std::size_t vertex_idempotent(std::size_t v) const;
    /// Bound L used in construction: every path of length >= L vanishes.
    std::size_t loewy_bound() const;

    /// Exhaustive associativity check on basis triples.
    bool is_associative() const;

private:
    std::shared_ptr<const detail::AlgebraCore> core_;
    bool flipped_ = false;
    friend Algebra build_algebra(const AlgebraPresentation&, std::size_t);
    friend BasicPresentation present_basic_algebra_with_images(const Algebra&);
};

Algebra build_algebra(const AlgebraPresentation& p, std::size_t max_len = 20);
Algebra opposite_algebra(const Algebra& a);

/// Complete set of primitive orthogonal idempotents and a radical basis.
struct WedderburnData {
    std::vector<Matrix> idempotents;
    Matrix radical;  // columns span rad(A)
};

/// Radical and primitive idempotents of a basic algebra whose semisimple
/// quotient is a product of copies of the ground field; throws NotBasic.
WedderburnData wedderburn_data(const Algebra& a);

struct BasicPresentation {
    /// Relations form a Groebner basis for the length-then-lex path order.
    AlgebraPresentation presentation;
    /// The presented algebra with the standard paths as its path basis.
    Algebra algebra;
    /// Coordinates in `a` of each vertex idempotent and each arrow.
    std::vector<Matrix> vertex_images;
    std::vector<Matrix> arrow_images;
};

BasicPresentation present_basic_algebra_with_images(const Algebra& a);
AlgebraPresentation present_basic_algebra(const Algebra& a);

/// Dimensions of rad^i / rad^{i+1} for i = 0, 1, ...
std::vector<std::size_t> radical_layers(const Algebra& a);

}  // namespace relag
