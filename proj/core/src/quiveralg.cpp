#include "relag/quiveralg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace relag {

// ------------------------------------------------------------------ quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen;
    for (auto& v : vertices_)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex '" + v + "'");
    std::set<std::string> seen_arrows;
    for (auto& a : arrows_) {
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw std::invalid_argument("arrow '" + a.label + "' has an unknown endpoint");
        if (!seen_arrows.insert(a.label).second)
            throw std::invalid_argument("duplicate arrow '" + a.label + "'");
    }
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& label) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label == label) return i;
    return std::nullopt;
}

Quiver Quiver::opposite() const
{
    std::vector<Arrow> rev;
    for (auto& a : arrows_) rev.push_back({a.label, a.target, a.source});
    return Quiver(vertices_, std::move(rev));
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.arrows.empty()) return "e_" + q.vertices()[p.source];
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += q.arrows()[*it].label;
    }
    return out;
}

// ------------------------------------------------------------ presentation

void AlgebraPresentation::validate() const
{
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        std::string where = "relation " + std::to_string(r + 1);
        if (rel.terms.empty()) throw MalformedRelation(where + " has no terms");
        for (const auto& t : rel.terms) {
            if (!(t.coeff.field() == field)) throw MalformedRelation(where + ": coefficient over the wrong field");
            const auto& path = t.path;
            if (path.length() < 2)
                throw MalformedRelation(where + ": term " + path_to_string(quiver, path) + " has length < 2");
            std::size_t at = path.source;
            for (auto a : path.arrows) {
                if (a >= quiver.num_arrows()) throw MalformedRelation(where + ": unknown arrow");
                if (quiver.arrows()[a].source != at)
                    throw MalformedRelation(where + ": arrows of " + path_to_string(quiver, path) +
                                            " do not compose");
                at = quiver.arrows()[a].target;
            }
            if (at != path.target) throw MalformedRelation(where + ": inconsistent path endpoints");
            const auto& first = rel.terms.front().path;
            if (path.source != first.source || path.target != first.target)
                throw NonUniformRelation(where + " is not uniform: terms start or end at different vertices");
        }
    }
}

AlgebraPresentation AlgebraPresentation::opposite() const
{
    AlgebraPresentation out{field, quiver.opposite(), {}};
    for (const auto& rel : relations) {
        Relation r;
        for (const auto& t : rel.terms) {
            Path p{t.path.target, t.path.source, {t.path.arrows.rbegin(), t.path.arrows.rend()}};
            r.terms.push_back({t.coeff, std::move(p)});
        }
        out.relations.push_back(std::move(r));
    }
    return out;
}

// ------------------------------------------------------------------ core

namespace detail {

struct AlgebraCore {
    Field field = Field::prime(2);
    std::vector<std::string> labels;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    Matrix unit;

    bool has_paths = false;
    AlgebraPresentation presentation;
    AlgebraPresentation presentation_op;
    std::vector<std::string> labels_op;
    std::vector<BasisInfo> info;
    std::vector<std::size_t> idempotent;
    std::size_t loewy = 0;
};

}  // namespace detail

namespace {

std::vector<Matrix> right_from_left(const Field& k, const std::vector<Matrix>& left)
{
    std::size_t n = left.size();
    std::vector<Matrix> right(n, Matrix(k, n, n));
    // column j of right[i] = b_j * b_i = column i of left[j]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) right[i].set_block(0, j, left[j].column(i));
    return right;
}

std::optional<Matrix> find_unit(const Field& k, const std::vector<Matrix>& left)
{
    std::size_t n = left.size();
    // sum_i u_i b_i b_j = b_j for all j, and sum_i u_i b_j b_i = b_j
    Matrix sys(k, 2 * n * n, n);
    Matrix rhs(k, 2 * n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys.set_block(j * n, i, left[i].column(j));
            sys.set_block(n * n + j * n, i, left[j].column(i));
        }
    for (std::size_t j = 0; j < n; ++j) {
        rhs.set_int(j * n + j, 0, 1);
        rhs.set_int(n * n + j * n + j, 0, 1);
    }
    return solve(sys, rhs);
}

}  // namespace

Algebra Algebra::from_structure_constants(Field f, std::vector<std::string> labels, std::vector<Matrix> left_mult)
{
    std::size_t n = left_mult.size();
    if (labels.size() != n) throw DimensionMismatch("from_structure_constants: label count");
    for (auto& m : left_mult)
        if (m.rows() != n || m.cols() != n || !(m.field() == f))
            throw DimensionMismatch("from_structure_constants: multiplication matrices must be n x n");
    auto core = std::make_shared<detail::AlgebraCore>();
    core->field = f;
    core->labels = std::move(labels);
    core->labels_op = core->labels;
    core->right = right_from_left(f, left_mult);
    core->left = std::move(left_mult);
    auto u = find_unit(f, core->left);
    if (!u) throw std::invalid_argument("from_structure_constants: algebra has no unit");
    core->unit = *u;
    Algebra a;
    a.core_ = std::move(core);
    if (!a.is_associative()) throw std::invalid_argument("from_structure_constants: product is not associative");
    return a;
}

const Field& Algebra::field() const { return core_->field; }
std::size_t Algebra::dim() const { return core_ ? core_->left.size() : 0; }
const std::string& Algebra::label(std::size_t i) const
{
    return flipped_ ? core_->labels_op.at(i) : core_->labels.at(i);
}
const Matrix& Algebra::left_mult(std::size_t i) const { return flipped_ ? core_->right.at(i) : core_->left.at(i); }
const Matrix& Algebra::right_mult(std::size_t i) const { return flipped_ ? core_->left.at(i) : core_->right.at(i); }
Matrix Algebra::product(std::size_t i, std::size_t j) const { return left_mult(i).column(j); }
Matrix Algebra::unit() const { return core_->unit; }

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const
{
    Matrix out(field(), dim(), 1);
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar c = x.at(i, 0);
        if (c.is_zero()) continue;
        out = out + (left_mult(i) * y).scaled(c);
    }
    return out;
}

Algebra Algebra::opposite() const
{
    Algebra a = *this;
    a.flipped_ = !flipped_;
    return a;
}

Algebra opposite_algebra(const Algebra& a) { return a.opposite(); }

bool Algebra::has_path_basis() const { return core_ && core_->has_paths; }

const AlgebraPresentation& Algebra::presentation() const
{
    if (!has_path_basis()) throw std::logic_error("algebra has no quiver presentation");
    return flipped_ ? core_->presentation_op : core_->presentation;
}

BasisInfo Algebra::basis_info(std::size_t i) const
{
    if (!has_path_basis()) throw std::logic_error("algebra has no path basis");
    BasisInfo b = core_->info.at(i);
    if (flipped_) {
        std::swap(b.source, b.target);
        std::reverse(b.word.begin(), b.word.end());
        b.label = core_->labels_op.at(i);
    }
    return b;
}

std::size_t Algebra::vertex_idempotent(std::size_t v) const
{
    if (!has_path_basis()) throw std::logic_error("algebra has no path basis");
    return core_->idempotent.at(v);
}

std::size_t Algebra::loewy_bound() const { return has_path_basis() ? core_->loewy : 0; }

bool Algebra::is_associative() const
{
    std::size_t n = dim();
    // (b_i b_j) b_k == b_i (b_j b_k)  <=>  L_{b_i b_j} == L_i L_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix ij = product(i, j);
            Matrix lhs(field(), n, n);
            for (std::size_t t = 0; t < n; ++t) {
                Scalar c = ij.at(t, 0);
                if (!c.is_zero()) lhs = lhs + left_mult(t).scaled(c);
            }
            if (!(lhs == left_mult(i) * left_mult(j))) return false;
        }
    return true;
}

// ------------------------------------------------------------ path basis

namespace {

struct PathKey {
    std::size_t source;
    std::vector<std::size_t> arrows;
    auto operator<=>(const PathKey&) const = default;
};

// All paths of length <= max_len, grouped by length.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len)
{
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) out.push_back({v, v, {}});
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows()[a].source != out[i].target) continue;
                Path p = out[i];
                p.arrows.push_back(a);
                p.target = q.arrows()[a].target;
                out.push_back(std::move(p));
            }
        begin = end;
    }
    return out;
}

struct TruncatedIdeal {
    std::vector<Path> paths;  // column order: longest first
    std::map<PathKey, std::size_t> column;
    Rref reduced;
};

std::size_t min_term_length(const Relation& r)
{
    std::size_t m = SIZE_MAX;
    for (auto& t : r.terms) m = std::min(m, t.path.length());
    return m;
}

// Row space spanned by u*r*w for relations r, computed in kQ / J^{L+1}.
TruncatedIdeal truncated_ideal(const AlgebraPresentation& p, std::size_t len)
{
    TruncatedIdeal out;
    auto paths = enumerate_paths(p.quiver, len);
    std::stable_sort(paths.begin(), paths.end(),
                     [](const Path& a, const Path& b) { return a.length() > b.length(); });
    out.paths = paths;
    for (std::size_t i = 0; i < paths.size(); ++i) out.column[{paths[i].source, paths[i].arrows}] = i;

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (const auto& rel : p.relations) {
        std::size_t s = rel.terms.front().path.source;
        std::size_t t = rel.terms.front().path.target;
        std::size_t m = min_term_length(rel);
        if (m > len) continue;
        for (const auto& w : paths) {
            if (w.target != s || w.length() + m > len) continue;
            for (const auto& u : paths) {
                if (u.source != t || w.length() + u.length() + m > len) continue;
                std::vector<std::pair<std::size_t, Scalar>> row;
                for (const auto& term : rel.terms) {
                    std::size_t total = w.length() + term.path.length() + u.length();
                    if (total > len || term.coeff.is_zero()) continue;
                    std::vector<std::size_t> word = w.arrows;
                    word.insert(word.end(), term.path.arrows.begin(), term.path.arrows.end());
                    word.insert(word.end(), u.arrows.begin(), u.arrows.end());
                    row.emplace_back(out.column.at({w.source, word}), term.coeff);
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }
    Matrix m(p.field, rows.size(), paths.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i]) m.add_to(i, c, v);
    out.reduced = rref(m);
    return out;
}

}  // namespace

Algebra build_algebra(const AlgebraPresentation& p, std::size_t max_len)
{
    p.validate();
    const Quiver& q = p.quiver;
    for (std::size_t len = 1; len <= max_len; ++len) {
        TruncatedIdeal ideal = truncated_ideal(p, len);
        const Rref& r = ideal.reduced;
        std::vector<long> pivot_row(ideal.paths.size(), -1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) pivot_row[r.pivots[i]] = static_cast<long>(i);

        // J^len must lie in I + J^{len+1}: every length-len path is itself in the row space.
        bool closed = true;
        for (std::size_t c = 0; c < ideal.paths.size() && closed; ++c) {
            if (ideal.paths[c].length() != len) continue;
            if (pivot_row[c] < 0) {
                closed = false;
                break;
            }
            for (std::size_t j = 0; j < ideal.paths.size(); ++j)
                if (j != c && !r.matrix.at(static_cast<std::size_t>(pivot_row[c]), j).is_zero()) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;

        // Basis: non-pivot paths, shortest first.
        std::vector<std::size_t> basis_cols;
        for (std::size_t c = ideal.paths.size(); c-- > 0;)
            if (pivot_row[c] < 0) basis_cols.push_back(c);
        std::stable_sort(basis_cols.begin(), basis_cols.end(), [&](std::size_t a, std::size_t b) {
            return ideal.paths[a].length() < ideal.paths[b].length();
        });
        std::size_t n = basis_cols.size();
        std::vector<long> basis_index(ideal.paths.size(), -1);
        for (std::size_t i = 0; i < n; ++i) basis_index[basis_cols[i]] = static_cast<long>(i);

        auto reduce_path = [&](std::size_t source, const std::vector<std::size_t>& word) {
            Matrix v(p.field, n, 1);
            if (word.size() > len) return v;
            std::size_t c = ideal.column.at({source, word});
            if (basis_index[c] >= 0) {
                v.set_int(static_cast<std::size_t>(basis_index[c]), 0, 1);
                return v;
            }
            auto row = static_cast<std::size_t>(pivot_row[c]);
            for (std::size_t i = 0; i < n; ++i) {
                Scalar e = r.matrix.at(row, basis_cols[i]);
                if (!e.is_zero()) v.set(i, 0, -e);
            }
            return v;
        };

        auto core = std::make_shared<detail::AlgebraCore>();
        core->field = p.field;
        core->has_paths = true;
        core->presentation = p;
        core->presentation_op = p.opposite();
        core->loewy = len;
        core->idempotent.assign(q.num_vertices(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const Path& path = ideal.paths[basis_cols[i]];
            core->info.push_back({path_to_string(q, path), path.source, path.target, path.length(), path.arrows});
            core->labels.push_back(core->info.back().label);
            Path rev{path.target, path.source, {path.arrows.rbegin(), path.arrows.rend()}};
            core->labels_op.push_back(path_to_string(core->presentation_op.quiver, rev));
            if (path.length() == 0) core->idempotent[path.source] = i;
        }
        core->left.assign(n, Matrix(p.field, n, n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& x = core->info[i];
                const auto& y = core->info[j];
                if (y.target != x.source) continue;
                std::vector<std::size_t> word = y.word;
                word.insert(word.end(), x.word.begin(), x.word.end());
                core->left[i].set_block(0, j, reduce_path(y.source, word));
            }
        core->right = right_from_left(p.field, core->left);
        core->unit = Matrix(p.field, n, 1);
        for (auto e : core->idempotent) core->unit.set_int(e, 0, 1);
        Algebra a;
        a.core_ = std::move(core);
        return a;
    }
    throw NotAdmissibleWithinBound("relations do not bound path lengths by " + std::to_string(max_len) +
                                   "; the ideal may not be admissible");
}

// --------------------------------------------------------- Wedderburn data

namespace {

Matrix span_of(const Field& k, std::size_t n, const std::vector<Matrix>& cols)
{
    if (cols.empty()) return Matrix(k, n, 0);
    return column_space(Matrix::hstack(cols, k, n));
}

Matrix ideal_closure(const Algebra& a, Matrix gens)
{
    Matrix cur = span_of(a.field(), a.dim(), {gens});
    for (;;) {
        std::vector<Matrix> cols{cur};
        for (std::size_t i = 0; i < a.dim(); ++i) {
            cols.push_back(a.left_mult(i) * cur);
            cols.push_back(a.right_mult(i) * cur);
        }
        Matrix next = span_of(a.field(), a.dim(), cols);
        if (next.cols() == cur.cols()) return next;
        cur = next;
    }
}

Matrix products_span(const Algebra& a, const Matrix& x, const Matrix& y)
{
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < x.cols(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) cols.push_back(a.multiply(x.column(i), y.column(j)));
    return span_of(a.field(), a.dim(), cols);
}

bool ideal_is_nilpotent(const Algebra& a, const Matrix& ideal)
{
    Matrix power = ideal;
    while (power.cols() > 0) {
        Matrix next = products_span(a, power, ideal);
        if (next.cols() == power.cols()) return false;
        power = next;
    }
    return true;
}

Matrix power_element(const Algebra& a, Matrix x, std::uint64_t e)
{
    Matrix result = a.unit();
    while (e > 0) {
        if (e & 1) result = a.multiply(result, x);
        x = a.multiply(x, x);
        e >>= 1;
    }
    return result;
}

// Coordinates of x modulo span(sub) in terms of the complement columns.
struct Quotient {
    Matrix sub;
    Matrix comp;
    Matrix basis;  // [sub | comp]
    Matrix project(const Matrix& x) const
    {
        auto c = solve(basis, x);
        return c->block(sub.cols(), 0, comp.cols(), x.cols());
    }
};

Quotient quotient_by(const Matrix& sub, std::size_t n)
{
    Matrix comp = complement_columns(sub, n);
    return {sub, comp, Matrix::hstack({sub, comp}, sub.field(), n)};
}

Matrix radical_of(const Algebra& a)
{
    const Field& k = a.field();
    std::size_t n = a.dim();
    std::vector<Matrix> comms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) comms.push_back(a.product(i, j) - a.product(j, i));
    Matrix c = ideal_closure(a, span_of(k, n, comms));
    if (!ideal_is_nilpotent(a, c))
        throw NotBasic("commutator ideal is not nilpotent: the algebra is not basic over " + k.name());
    Quotient qt = quotient_by(c, n);
    std::size_t d = qt.comp.cols();
    Matrix nil_coords;
    if (!k.is_rational()) {
        auto p = static_cast<std::uint64_t>(k.characteristic());
        std::uint64_t e = 1;
        while (e < d) e *= p;  // x -> x^e kills every nilpotent element of the quotient
        Matrix frob(k, d, d);
        for (std::size_t j = 0; j < d; ++j) frob.set_block(0, j, qt.project(power_element(a, qt.comp.column(j), e)));
        nil_coords = kernel_matrix(frob);
    } else {
        std::vector<Matrix> ops;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Matrix z = a.multiply(qt.comp.column(i), qt.comp.column(j));
                Matrix op(k, d, d);
                for (std::size_t t = 0; t < d; ++t) op.set_block(0, t, qt.project(a.multiply(z, qt.comp.column(t))));
                ops.push_back(op);
            }
        Matrix form(k, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Scalar tr = Scalar::zero(k);
                for (std::size_t t = 0; t < d; ++t) tr += ops[i * d + j].at(t, t);
                form.set(i, j, tr);
            }
        nil_coords = kernel_matrix(form);
    }
    Matrix lifted = qt.comp * nil_coords;
    Matrix rad = span_of(k, n, {c, lifted});
    if (!ideal_is_nilpotent(a, rad)) throw std::logic_error("radical computation produced a non-nilpotent ideal");
    return rad;
}

Matrix newton_idempotent(const Algebra& a, Matrix e)
{
    for (int iter = 0; iter < 64; ++iter) {
        Matrix e2 = a.multiply(e, e);
        if (e2 == e) return e;
        Matrix e3 = a.multiply(e2, e);
        e = e2.scaled(Scalar(a.field(), 3)) - e3.scaled(Scalar(a.field(), 2));
    }
    throw std::logic_error("idempotent lifting did not converge");
}

}  // namespace

WedderburnData wedderburn_data(const Algebra& a)
{
    const Field& k = a.field();
    std::size_t n = a.dim();
    WedderburnData out;
    if (a.has_path_basis()) {
        std::vector<Matrix> rad;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix e(k, n, 1);
            e.set_int(i, 0, 1);
            if (a.basis_info(i).length > 0) rad.push_back(e);
        }
        std::vector<Matrix> ordered(a.num_vertices());
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            ordered[v] = Matrix(k, n, 1);
            ordered[v].set_int(a.vertex_idempotent(v), 0, 1);
        }
        out.idempotents = ordered;
        out.radical = rad.empty() ? Matrix(k, n, 0) : Matrix::hstack(rad, k, n);
        return out;
    }

    out.radical = radical_of(a);
    Quotient qt = quotient_by(out.radical, n);
    std::size_t r = qt.comp.cols();
    // Semisimple quotient S = A / rad A, commutative here; multiplication by lifts.
    auto s_mult = [&](const Matrix& x) {
        Matrix lx = qt.comp * x;
        Matrix op(k, r, r);
        for (std::size_t t = 0; t < r; ++t) op.set_block(0, t, qt.project(a.multiply(lx, qt.comp.column(t))));
        return op;
    };
    std::vector<Matrix> idem{qt.project(a.unit())};
    for (std::size_t g = 0; g < r; ++g) {
        Matrix gen(k, r, 1);
        gen.set_int(g, 0, 1);
        Matrix lg = s_mult(gen);
        std::vector<Matrix> refined;
        for (auto& e : idem) {
            Matrix block = column_space(s_mult(e));
            Matrix restricted = *solve(block, lg * block);
            auto roots = roots_in_field(minimal_polynomial(restricted), k);
            std::vector<Matrix> spaces;
            std::size_t total = 0;
            for (auto& lambda : roots) {
                Matrix shifted = restricted - Matrix::identity(k, block.cols()).scaled(lambda);
                Matrix eig = block * kernel_matrix(shifted);
                total += eig.cols();
                spaces.push_back(eig);
            }
            if (total != block.cols())
                throw NotBasic("semisimple quotient does not split over " + k.name());
            if (spaces.size() == 1) {
                refined.push_back(e);
                continue;
            }
            Matrix coords = *solve(Matrix::hstack(spaces, k, r), e);
            std::size_t off = 0;
            for (auto& sp : spaces) {
                refined.push_back(sp * coords.block(off, 0, sp.cols(), 1));
                off += sp.cols();
            }
        }
        idem = refined;
    }
    for (auto& e : idem)
        if (rank(s_mult(e)) != 1) throw NotBasic("semisimple quotient is not a product of copies of " + k.name());

    Matrix used(k, n, 1);
    for (std::size_t i = 0; i < idem.size(); ++i) {
        Matrix u = a.unit() - used;
        Matrix lifted = (i + 1 == idem.size()) ? u
                                                : newton_idempotent(a, a.multiply(u, a.multiply(qt.comp * idem[i], u)));
        out.idempotents.push_back(lifted);
        used = used + lifted;
    }
    return out;
}

// ------------------------------------------------------ basic presentation

namespace {

Matrix corner(const Algebra& a, const Matrix& left, const Matrix& space, const Matrix& right)
{
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < space.cols(); ++i) cols.push_back(a.multiply(left, a.multiply(space.column(i), right)));
    return span_of(a.field(), a.dim(), cols);
}

}  // namespace

BasicPresentation present_basic_algebra_with_images(const Algebra& a)
{
    const Field& k = a.field();
    std::size_t n = a.dim();
    BasicPresentation out;
    if (a.has_path_basis()) {
        out.presentation = a.presentation();
        out.algebra = a;
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            Matrix e(k, n, 1);
            e.set_int(a.vertex_idempotent(v), 0, 1);
            out.vertex_images.push_back(e);
        }
        for (std::size_t ar = 0; ar < a.quiver().num_arrows(); ++ar) {
            Matrix x(k, n, 1);
            for (std::size_t i = 0; i < n; ++i) {
                auto info = a.basis_info(i);
                if (info.length == 1 && info.word[0] == ar) x.set_int(i, 0, 1);
            }
            out.arrow_images.push_back(x);
        }
        return out;
    }

    WedderburnData w = wedderburn_data(a);
    std::size_t r = w.idempotents.size();
    Matrix rad2 = products_span(a, w.radical, w.radical);

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < r; ++i) vertices.push_back(std::to_string(i + 1));
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix full = corner(a, w.idempotents[j], w.radical, w.idempotents[i]);
            Matrix sq = corner(a, w.idempotents[j], rad2, w.idempotents[i]);
            Matrix acc = sq;
            for (std::size_t c = 0; c < full.cols(); ++c) {
                Matrix trial = Matrix::hstack({acc, full.column(c)}, k, n);
                if (rank(trial) > acc.cols()) {
                    acc = trial;
                    arrows.push_back({"x" + std::to_string(arrows.size() + 1), i, j});
                    out.arrow_images.push_back(full.column(c));
                }
            }
        }
    out.vertex_images = w.idempotents;
    Quiver q(vertices, arrows);

    std::size_t nil = 0;
    for (Matrix power = Matrix::identity(k, n); power.cols() > 0; ++nil) power = products_span(a, power, w.radical);

    // Standard monomials for the length-then-lex order: a path is kept when its
    // image is independent of the images of smaller kept paths. Each minimal
    // rejected path yields a relation; together they form a Groebner basis.
    std::vector<Path> standard;
    std::vector<Matrix> images;
    // nonempty words determine their source, so they index the kept paths
    std::map<std::vector<std::size_t>, std::size_t> standard_index;
    AlgebraPresentation pres{k, q, {}};
    auto keep = [&](const Path& p, const Matrix& img) {
        if (!p.arrows.empty()) standard_index[p.arrows] = standard.size();
        standard.push_back(p);
        images.push_back(img);
    };
    for (std::size_t v = 0; v < r; ++v) keep({v, v, {}}, w.idempotents[v]);
    for (std::size_t ar = 0; ar < arrows.size(); ++ar) keep({arrows[ar].source, arrows[ar].target, {ar}}, out.arrow_images[ar]);
    if (rank(Matrix::hstack(images, k, n)) != images.size())
        throw std::logic_error("present_basic_algebra: vertices and arrows are not independent");
    std::size_t begin = r;
    for (std::size_t len = 2; begin < standard.size(); ++len) {
        std::size_t end = standard.size();
        std::vector<Path> candidates;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t ar = 0; ar < arrows.size(); ++ar) {
                if (arrows[ar].source != standard[i].target) continue;
                Path p{standard[i].source, arrows[ar].target, standard[i].arrows};
                p.arrows.push_back(ar);
                if (!standard_index.count({p.arrows.begin() + 1, p.arrows.end()})) continue;
                candidates.push_back(std::move(p));
            }
        std::sort(candidates.begin(), candidates.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
        for (auto& p : candidates) {
            std::size_t prefix = standard_index.at({p.arrows.begin(), p.arrows.end() - 1});
            Matrix img = a.multiply(out.arrow_images[p.arrows.back()], images[prefix]);
            Matrix span = Matrix::hstack(images, k, n);
            auto coords = solve(span, img);
            if (!coords) {
                keep(p, img);
                continue;
            }
            Relation rel;
            rel.terms.push_back({Scalar::one(k), p});
            for (std::size_t i = 0; i < standard.size(); ++i) {
                Scalar c = coords->at(i, 0);
                if (c.is_zero()) continue;
                if (standard[i].source != p.source || standard[i].target != p.target || standard[i].length() < 2)
                    throw std::logic_error("present_basic_algebra: relation is not admissible");
                rel.terms.push_back({-c, standard[i]});
            }
            pres.relations.push_back(std::move(rel));
        }
        begin = end;
        if (len > nil) throw std::logic_error("present_basic_algebra: standard paths exceed the Loewy length");
    }
    if (standard.size() != n) throw std::logic_error("present_basic_algebra: arrows do not generate the algebra");
    out.presentation = pres;

    // Path-basis algebra on the standard monomials, multiplied through a.
    Matrix basis = Matrix::hstack(images, k, n);
    Matrix basis_inv = *inverse(basis);
    auto core = std::make_shared<detail::AlgebraCore>();
    core->field = k;
    core->has_paths = true;
    core->presentation = pres;
    core->presentation_op = pres.opposite();
    core->loewy = nil;
    core->idempotent.assign(r, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Path& path = standard[i];
        core->info.push_back({path_to_string(q, path), path.source, path.target, path.length(), path.arrows});
        core->labels.push_back(core->info.back().label);
        Path rev{path.target, path.source, {path.arrows.rbegin(), path.arrows.rend()}};
        core->labels_op.push_back(path_to_string(core->presentation_op.quiver, rev));
        if (path.length() == 0) core->idempotent[path.source] = i;
        Matrix lm(k, n, n);
        for (std::size_t j = 0; j < n; ++j) lm = lm + a.left_mult(j).scaled(images[i].at(j, 0));
        core->left.push_back(basis_inv * lm * basis);
    }
    core->right = right_from_left(k, core->left);
    core->unit = Matrix(k, n, 1);
    for (auto e : core->idempotent) core->unit.set_int(e, 0, 1);
    out.algebra.core_ = std::move(core);
    return out;
}

AlgebraPresentation present_basic_algebra(const Algebra& a) { return present_basic_algebra_with_images(a).presentation; }

std::vector<std::size_t> radical_layers(const Algebra& a)
{
    Matrix rad = wedderburn_data(a).radical;
    std::vector<std::size_t> out;
    Matrix power = Matrix::identity(a.field(), a.dim());
    while (power.cols() > 0) {
        Matrix next = products_span(a, power, rad);
        out.push_back(power.cols() - next.cols());
        power = next;
    }
    return out;
}

}  // namespace relag
