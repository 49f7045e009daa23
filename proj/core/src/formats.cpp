#include "relag/formats.hpp"

#include "relag/repcat.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace relag {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

std::vector<Token> tokenize(const std::string& line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", i + 1});
            i += 2;
            continue;
        }
        if (std::string(":*+-=[],/()").find(c) != std::string::npos) {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), i + 1});
            i = j;
            continue;
        }
        throw ParseError(lineno, i + 1, std::string("unexpected character '") + c + "'");
    }
    return out;
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool is_number(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Cursor {
public:
    Cursor(const std::vector<Token>& toks, std::size_t line, std::size_t end_col)
        : toks_(toks), line_(line), end_col_(end_col)
    {
    }
    bool done() const { return pos_ >= toks_.size(); }
    const Token& peek() const { return toks_.at(pos_); }
    bool peek_is(const std::string& s) const { return !done() && toks_[pos_].text == s; }
    Token next(const std::string& what)
    {
        if (done()) fail(end_col_, "expected " + what);
        return toks_[pos_++];
    }
    void expect(const std::string& s)
    {
        Token t = next("'" + s + "'");
        if (t.text != s) fail(t.column, "expected '" + s + "', found '" + t.text + "'");
    }
    std::size_t column() const { return done() ? end_col_ : toks_[pos_].column; }
    [[noreturn]] void fail(std::size_t col, const std::string& msg) const { throw ParseError(line_, col, msg); }
    std::size_t line() const { return line_; }

private:
    const std::vector<Token>& toks_;
    std::size_t line_;
    std::size_t end_col_;
    std::size_t pos_ = 0;
};

Scalar parse_scalar(Cursor& c, const Field& k)
{
    std::size_t col = c.column();
    std::string text;
    if (c.peek_is("-")) {
        c.next("-");
        text = "-";
    } else if (c.peek_is("+")) {
        c.next("+");
    }
    Token num = c.next("a number");
    if (!is_number(num.text)) c.fail(num.column, "expected a number, found '" + num.text + "'");
    text += num.text;
    if (c.peek_is("/")) {
        c.next("/");
        Token den = c.next("a denominator");
        if (!is_number(den.text)) c.fail(den.column, "expected a denominator, found '" + den.text + "'");
        if (!k.is_rational()) {
            // p/q over GF(p) means p * q^{-1}
            Scalar n = Scalar::parse(k, text);
            Scalar d = Scalar::parse(k, den.text);
            if (d.is_zero()) c.fail(den.column, "zero denominator");
            return n / d;
        }
        text += "/" + den.text;
    }
    try {
        return Scalar::parse(k, text);
    } catch (const std::exception& e) {
        c.fail(col, e.what());
    }
}

}  // namespace

AlgebraPresentation parse_algebra_file(const std::string& text)
{
    std::optional<Field> field;
    std::vector<std::string> vertices;
    bool have_vertices = false;
    std::vector<Arrow> arrows;
    std::map<std::string, std::size_t> vertex_index, arrow_index;
    struct PendingRelation {
        std::size_t line;
        std::vector<std::tuple<Scalar, std::vector<std::size_t>, std::size_t>> terms;  // coeff, application order, column
    };
    std::vector<PendingRelation> relations;

    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::size_t lineno = ln + 1;
        auto toks = tokenize(lines[ln], lineno);
        if (toks.empty()) continue;
        Cursor c(toks, lineno, lines[ln].size() + 1);
        Token kw = c.next("a keyword");
        if (kw.text == "field") {
            if (field) c.fail(kw.column, "field declared twice");
            Token f = c.next("GF(p) or QQ");
            if (f.text == "QQ" || f.text == "Q") {
                field = Field::rationals();
            } else if (f.text == "GF" || f.text == "F") {
                c.expect("(");
                Token p = c.next("a prime");
                if (!is_number(p.text)) c.fail(p.column, "expected a prime, found '" + p.text + "'");
                c.expect(")");
                try {
                    field = Field::prime(std::stoll(p.text));
                } catch (const std::exception&) {
                    c.fail(p.column, "characteristic " + p.text + " is not a prime below 2^31");
                }
            } else {
                c.fail(f.column, "unknown field '" + f.text + "'; use GF(p) or QQ");
            }
        } else if (kw.text == "vertices") {
            if (have_vertices) c.fail(kw.column, "vertices declared twice");
            have_vertices = true;
            while (!c.done()) {
                Token v = c.next("a vertex");
                if (!ident_char(v.text[0])) c.fail(v.column, "invalid vertex name '" + v.text + "'");
                if (vertex_index.count(v.text)) c.fail(v.column, "duplicate vertex '" + v.text + "'");
                vertex_index[v.text] = vertices.size();
                vertices.push_back(v.text);
            }
            if (vertices.empty()) c.fail(kw.column + kw.text.size(), "vertices line declares no vertices");
        } else if (kw.text == "arrow") {
            if (!have_vertices) c.fail(kw.column, "arrow declared before the vertices line");
            Token name = c.next("an arrow name");
            if (!ident_char(name.text[0])) c.fail(name.column, "invalid arrow name '" + name.text + "'");
            if (arrow_index.count(name.text)) c.fail(name.column, "duplicate arrow '" + name.text + "'");
            if (vertex_index.count(name.text)) c.fail(name.column, "arrow name '" + name.text + "' is also a vertex");
            c.expect(":");
            Token s = c.next("a source vertex");
            if (!vertex_index.count(s.text)) c.fail(s.column, "unknown vertex '" + s.text + "'");
            c.expect("->");
            Token t = c.next("a target vertex");
            if (!vertex_index.count(t.text)) c.fail(t.column, "unknown vertex '" + t.text + "'");
            arrow_index[name.text] = arrows.size();
            arrows.push_back({name.text, vertex_index[s.text], vertex_index[t.text]});
        } else if (kw.text == "relation") {
            if (!field) c.fail(kw.column, "relation declared before the field line");
            PendingRelation rel{lineno, {}};
            bool first = true;
            while (!c.done() || first) {
                Scalar sign = Scalar::one(*field);
                if (!first) {
                    Token op = c.next("'+' or '-'");
                    if (op.text == "-")
                        sign = -sign;
                    else if (op.text != "+")
                        c.fail(op.column, "expected '+' or '-', found '" + op.text + "'");
                } else if (c.peek_is("-")) {
                    c.next("-");
                    sign = -sign;
                }
                first = false;
                Scalar coeff = Scalar::one(*field);
                if (!c.done() && is_number(c.peek().text) && !arrow_index.count(c.peek().text)) {
                    coeff = parse_scalar(c, *field);
                    if (c.peek_is("*")) c.next("*");
                }
                std::size_t col = c.column();
                std::vector<std::size_t> composition;
                for (;;) {
                    Token a = c.next("an arrow");
                    auto it = arrow_index.find(a.text);
                    if (it == arrow_index.end()) c.fail(a.column, "unknown arrow '" + a.text + "'");
                    composition.push_back(it->second);
                    if (!c.peek_is("*")) break;
                    c.next("*");
                }
                std::vector<std::size_t> applied(composition.rbegin(), composition.rend());
                for (std::size_t i = 0; i + 1 < applied.size(); ++i)
                    if (arrows[applied[i]].target != arrows[applied[i + 1]].source)
                        c.fail(col, "non-composable path: " + arrows[applied[i + 1]].label + " cannot follow " +
                                        arrows[applied[i]].label);
                rel.terms.emplace_back(sign * coeff, applied, col);
            }
            relations.push_back(std::move(rel));
        } else {
            c.fail(kw.column, "unknown declaration '" + kw.text + "'");
        }
    }
    if (!field) throw ParseError(lines.size() + 1, 1, "missing field line");
    if (!have_vertices) throw ParseError(lines.size() + 1, 1, "missing vertices line");

    AlgebraPresentation p{*field, Quiver(vertices, arrows), {}};
    for (auto& pending : relations) {
        Relation r;
        for (auto& [coeff, applied, col] : pending.terms) {
            if (applied.size() < 2)
                throw ParseError(pending.line, col, "relation terms must be paths of length at least 2");
            Path path{arrows[applied.front()].source, arrows[applied.back()].target, applied};
            if (!r.terms.empty() &&
                (r.terms.front().path.source != path.source || r.terms.front().path.target != path.target))
                throw ParseError(pending.line, col,
                                 "NonUniformRelation: term runs " + vertices[path.source] + " -> " +
                                     vertices[path.target] + " but the first term runs " +
                                     vertices[r.terms.front().path.source] + " -> " +
                                     vertices[r.terms.front().path.target]);
            if (!coeff.is_zero()) r.terms.push_back({coeff, path});
        }
        if (r.terms.empty()) throw ParseError(pending.line, 1, "relation has only zero coefficients");
        p.relations.push_back(std::move(r));
    }
    p.validate();
    return p;
}

std::string format_algebra_file(const AlgebraPresentation& p)
{
    std::ostringstream os;
    os << "field " << p.field.name() << "\n";
    os << "vertices";
    for (auto& v : p.quiver.vertices()) os << " " << v;
    os << "\n";
    for (auto& a : p.quiver.arrows())
        os << "arrow " << a.label << " : " << p.quiver.vertices()[a.source] << " -> " << p.quiver.vertices()[a.target]
           << "\n";
    for (auto& r : p.relations) {
        os << "relation";
        bool first = true;
        for (auto& t : r.terms) {
            os << (first ? " " : " + ");
            if (!t.coeff.is_one()) os << t.coeff.to_string() << " ";
            os << path_to_string(p.quiver, t.path);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------------ modules

std::string module_algebra_reference(const std::string& text)
{
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        auto toks = tokenize(lines[ln], ln + 1);
        if (toks.size() >= 2 && toks[0].text == "algebra") {
            // Paths may contain '/', which the tokenizer splits; take the raw remainder.
            std::string rest = lines[ln].substr(toks[1].column - 1);
            auto hash = rest.find('#');
            if (hash != std::string::npos) rest = rest.substr(0, hash);
            while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
            return rest;
        }
    }
    return {};
}

namespace {

struct MatrixLiteral {
    std::vector<std::vector<Scalar>> rows;
    std::size_t line;
    std::size_t column;
};

MatrixLiteral parse_matrix_literal(Cursor& c, const Field& k)
{
    MatrixLiteral m{{}, c.line(), c.column()};
    c.expect("[");
    if (c.peek_is("]")) {
        c.next("]");
        return m;
    }
    for (;;) {
        c.expect("[");
        std::vector<Scalar> row;
        if (!c.peek_is("]")) {
            for (;;) {
                row.push_back(parse_scalar(c, k));
                if (!c.peek_is(",")) break;
                c.next(",");
            }
        }
        c.expect("]");
        m.rows.push_back(std::move(row));
        if (!c.peek_is(",")) break;
        c.next(",");
    }
    c.expect("]");
    return m;
}

}  // namespace

Module parse_module_file(const std::string& text, const Algebra& algebra)
{
    const Field& k = algebra.field();
    const Quiver& declared = algebra.quiver();
    Side side = Side::left;
    bool have_side = false;
    std::vector<std::size_t> dims(declared.num_vertices(), 0);
    std::vector<bool> dim_set(declared.num_vertices(), false);
    std::map<std::size_t, MatrixLiteral> maps;

    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::size_t lineno = ln + 1;
        auto toks = tokenize(lines[ln], lineno);
        if (toks.empty()) continue;
        Cursor c(toks, lineno, lines[ln].size() + 1);
        Token kw = c.next("a keyword");
        if (kw.text == "algebra") {
            continue;
        } else if (kw.text == "side") {
            if (have_side) c.fail(kw.column, "side declared twice");
            Token s = c.next("left or right");
            if (s.text == "left")
                side = Side::left;
            else if (s.text == "right")
                side = Side::right;
            else
                c.fail(s.column, "side must be 'left' or 'right', found '" + s.text + "'");
            have_side = true;
        } else if (kw.text == "space") {
            Token v = c.next("a vertex");
            auto idx = declared.vertex_index(v.text);
            if (!idx) c.fail(v.column, "unknown vertex '" + v.text + "'");
            if (dim_set[*idx]) c.fail(v.column, "space " + v.text + " declared twice");
            c.expect("=");
            Token d = c.next("a dimension");
            if (!is_number(d.text)) c.fail(d.column, "expected a dimension, found '" + d.text + "'");
            dims[*idx] = std::stoul(d.text);
            dim_set[*idx] = true;
        } else if (kw.text == "map") {
            Token a = c.next("an arrow");
            auto idx = declared.arrow_index(a.text);
            if (!idx) c.fail(a.column, "unknown arrow '" + a.text + "'");
            if (maps.count(*idx)) c.fail(a.column, "map " + a.text + " declared twice");
            c.expect("=");
            maps[*idx] = parse_matrix_literal(c, k);
        } else {
            c.fail(kw.column, "unknown declaration '" + kw.text + "'");
        }
        if (!c.done()) c.fail(c.column(), "unexpected trailing input '" + c.peek().text + "'");
    }

    std::vector<Matrix> stored;
    for (std::size_t a = 0; a < declared.num_arrows(); ++a) {
        const auto& arrow = declared.arrows()[a];
        std::size_t rows = side == Side::left ? dims[arrow.target] : dims[arrow.source];
        std::size_t cols = side == Side::left ? dims[arrow.source] : dims[arrow.target];
        Matrix m(k, rows, cols);
        auto it = maps.find(a);
        if (it != maps.end()) {
            const auto& lit = it->second;
            std::size_t got_rows = lit.rows.size();
            std::size_t got_cols = got_rows ? lit.rows[0].size() : 0;
            bool ragged = false;
            for (auto& r : lit.rows) ragged = ragged || r.size() != got_cols;
            bool empty_ok = (rows == 0 || cols == 0) && got_rows * got_cols == 0 && (got_rows == 0 || got_rows == rows);
            if (ragged || (!empty_ok && (got_rows != rows || got_cols != cols)))
                throw ParseError(lit.line, lit.column,
                                 "map " + arrow.label + ": expected shape " + std::to_string(rows) + "x" +
                                     std::to_string(cols) + ", got " + std::to_string(got_rows) + "x" +
                                     (ragged ? "ragged" : std::to_string(got_cols)));
            for (std::size_t r = 0; r < got_rows && cols > 0; ++r)
                for (std::size_t col = 0; col < got_cols; ++col) m.set(r, col, lit.rows[r][col]);
        }
        stored.push_back(std::move(m));
    }
    Module module(algebra, side, dims, stored);
    try {
        module.check_relations();
    } catch (const RelationViolated& e) {
        throw ParseError(lines.size() + 1, 1, std::string("RelationViolated: ") + e.what());
    }
    return module;
}

std::string format_module_file(const Module& m)
{
    std::ostringstream os;
    const Quiver& declared = m.algebra().quiver();
    os << "side " << to_string(m.side()) << "\n";
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        if (m.dim(v)) os << "space " << declared.vertices()[v] << " = " << m.dim(v) << "\n";
    for (std::size_t a = 0; a < declared.num_arrows(); ++a) {
        const Matrix& x = m.arrow_map(a);
        if (x.empty() || x.is_zero()) continue;
        os << "map " << declared.arrows()[a].label << " = [";
        for (std::size_t r = 0; r < x.rows(); ++r) {
            os << (r ? "," : "") << "[";
            for (std::size_t c = 0; c < x.cols(); ++c) os << (c ? "," : "") << x.at(r, c).to_string();
            os << "]";
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace relag
