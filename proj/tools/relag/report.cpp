#include "report.hpp"

#include "relag/formats.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace relag::cli {

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

json matrix_json(const Matrix& m) { return m.to_strings(); }

json verdict_json(const DimensionVerdict& v)
{
    return {{"exact", v.exact}, {"value", v.value}, {"cap", v.cap}, {"text", v.to_string()}};
}

// ------------------------------------------------------------------ writer

std::string CertificateWriter::algebra(const Algebra& a)
{
    for (std::size_t i = 0; i < algebras_.size(); ++i)
        if (algebras_[i].same_as(a)) return "A" + std::to_string(i);
    std::string name = "A" + std::to_string(algebras_.size());
    algebras_.push_back(a);
    algebra_json_[name] = {{"presentation", format_algebra_file(a.presentation())}, {"dim", a.dim()}};
    return name;
}

std::string CertificateWriter::module(const Module& m)
{
    for (std::size_t i = 0; i < modules_.size(); ++i)
        if (modules_[i].compatible(m) && modules_[i] == m) return module_names_[i];
    std::string name = "M" + std::to_string(modules_.size());
    json maps = json::array();
    for (auto& mat : m.arrow_maps()) maps.push_back(matrix_json(mat));
    module_json_[name] = {
        {"algebra", algebra(m.algebra())}, {"side", to_string(m.side())}, {"dims", m.dims()}, {"maps", maps}};
    modules_.push_back(m);
    module_names_.push_back(name);
    return name;
}

std::string CertificateWriter::map(const ModuleMap& f)
{
    std::string name = "f" + std::to_string(maps_++);
    json blocks = json::array();
    for (auto& b : f.blocks()) blocks.push_back(matrix_json(b));
    map_json_[name] = {{"source", module(f.source())}, {"target", module(f.target())}, {"blocks", blocks}};
    return name;
}

std::vector<std::string> CertificateWriter::modules(const std::vector<Module>& ms)
{
    std::vector<std::string> out;
    for (auto& m : ms) out.push_back(module(m));
    return out;
}

std::vector<std::string> CertificateWriter::maps(const std::vector<ModuleMap>& fs)
{
    std::vector<std::string> out;
    for (auto& f : fs) out.push_back(map(f));
    return out;
}

namespace {

json resolution_body(CertificateWriter& w, const Resolution& r)
{
    return {{"direction", r.kind == ResolutionKind::projective ? "projective" : "injective"},
            {"target", w.module(r.target)},
            {"terms", w.modules(r.terms)},
            {"maps", w.maps(r.maps)},
            {"complete", r.complete()}};
}

}  // namespace

void CertificateWriter::resolution(const Resolution& r, std::optional<DimensionVerdict> claim)
{
    json c = resolution_body(*this, r);
    c["kind"] = "resolution";
    if (claim) c["claim"] = verdict_json(*claim);
    checks_.push_back(std::move(c));
}

void CertificateWriter::approximation(const ApproxSequence& s, const Module& q, const std::string& claim_kind,
                                      const DimensionVerdict& claim, std::size_t cap)
{
    bool co = s.direction == ApproxDirection::coresolution;
    json c{{"kind", "approximation"},
           {"direction", co ? "coresolution" : "resolution"},
           {"q", module(q)},
           {"anchor", module(s.anchor)},
           {"terms", modules(s.terms)},
           {"maps", maps(s.maps)},
           {"remainders", modules(s.remainders)},
           {"claim_kind", claim_kind},
           {"claim", verdict_json(claim)},
           {"cap", cap}};
    if (s.broken_at) {
        c["broken_at"] = *s.broken_at;
        const Module& x = s.remainders.empty() ? s.anchor : s.remainders.back();
        auto ap = minimal_approximation(x, q, co ? ApproxSide::left : ApproxSide::right);
        c["breaking"] = map(ap);
    }
    checks_.push_back(std::move(c));
}

void CertificateWriter::hom_basis(const Module& m, const Module& n, const std::vector<ModuleMap>& basis)
{
    checks_.push_back({{"kind", "hom_basis"}, {"source", module(m)}, {"target", module(n)}, {"maps", maps(basis)}});
}

void CertificateWriter::hom_dim(const Module& m, const Module& n, std::size_t dim)
{
    checks_.push_back({{"kind", "hom_dim"}, {"source", module(m)}, {"target", module(n)}, {"dim", dim}});
}

json CertificateWriter::syzygy_graph(const Module& anchor, std::size_t levels)
{
    std::vector<Module> reps;
    std::vector<json> classes;
    auto classify = [&](const Module& s) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (reps[i].dims() != s.dims()) continue;
            auto iso = is_isomorphic(reps[i], s, seed_);
            if (iso.verdict == Verdict::yes) return std::make_pair(i, *iso.witness);
        }
        reps.push_back(s);
        classes.push_back({{"rep", module(s)}});
        return std::make_pair(reps.size() - 1, ModuleMap::identity(s));
    };
    // x as a sum of class representatives, mapped into `into`'s target
    auto split = [&](const Module& x, const ModuleMap& into) {
        std::vector<std::size_t> idx;
        std::vector<ModuleMap> comps;
        if (!x.is_zero())
            for (auto& part : decompose(x, seed_)) {
                auto [c, w] = classify(part.module);
                idx.push_back(c);
                comps.push_back(part.inclusion.after(w));
            }
        std::vector<Module> parts;
        for (auto i : idx) parts.push_back(reps[i]);
        auto ds = direct_sum_with_maps(parts, x.algebra(), x.side());
        ModuleMap g = ModuleMap::zero(ds.sum, x);
        for (std::size_t j = 0; j < idx.size(); ++j) g = g + comps[j].after(ds.projections[j]);
        return std::make_pair(idx, into.after(g));
    };
    auto [start, iso] = split(anchor, ModuleMap::identity(anchor));
    json out{{"anchor", module(anchor)}, {"start", start}, {"start_iso", map(iso)}};
    std::vector<std::size_t> frontier = start;
    std::vector<bool> expanded;
    for (std::size_t level = 0; level < levels && !frontier.empty(); ++level) {
        std::vector<std::size_t> next;
        for (auto c : frontier) {
            expanded.resize(reps.size(), false);
            if (expanded[c]) continue;
            expanded[c] = true;
            Module rep = reps[c];
            auto cover = projective_cover(rep);
            auto k = kernel(cover);
            auto [omega, g] = split(k.module, k.inclusion);
            classes[c]["cover"] = map(cover);
            classes[c]["embedding"] = map(g);
            classes[c]["omega"] = omega;
            next.insert(next.end(), omega.begin(), omega.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = next;
    }
    out["classes"] = classes;
    return out;
}

void CertificateWriter::dimension(const Module& m, DimensionKind kind, const DimensionVerdict& claim)
{
    bool dual = kind == DimensionKind::id;
    std::size_t levels = claim.exact ? claim.value + 1 : claim.value;
    json c = syzygy_graph(dual ? dualize(m) : m, levels);
    c["kind"] = "syzygy_graph";
    c["module"] = module(m);
    c["dual"] = dual;
    c["claim"] = {{"dimension", kind == DimensionKind::pd ? "pd" : "id"}, {"value", verdict_json(claim)}};
    checks_.push_back(std::move(c));
}

void CertificateWriter::ext(const Module& m, const Module& n, const std::vector<std::size_t>& dims)
{
    json c = syzygy_graph(m, dims.size());
    c["kind"] = "syzygy_graph";
    c["module"] = module(m);
    c["dual"] = false;
    c["claim"] = {{"ext", {{"target", module(n)}, {"dims", dims}}}};
    checks_.push_back(std::move(c));
}

void CertificateWriter::decomposition(const Module& m, const std::vector<Summand>& summands)
{
    std::vector<std::string> parts, inc, proj;
    for (auto& s : summands) {
        parts.push_back(module(s.module));
        inc.push_back(map(s.inclusion));
        proj.push_back(map(s.projection));
    }
    checks_.push_back({{"kind", "decomposition"},
                       {"module", module(m)},
                       {"summands", parts},
                       {"inclusions", inc},
                       {"projections", proj}});
}

void CertificateWriter::translate(const Module& m, std::size_t n, bool inverse, const Module& result)
{
    checks_.push_back(
        {{"kind", "translate"}, {"module", module(m)}, {"n", n}, {"inverse", inverse}, {"result", module(result)}});
}

void CertificateWriter::isomorphism(const ModuleMap& f)
{
    checks_.push_back({{"kind", "isomorphism"}, {"map", map(f)}});
}

void CertificateWriter::not_in_add(const Module& x, const Module& q)
{
    checks_.push_back({{"kind", "not_in_add"}, {"module", module(x)}, {"q", module(q)}});
}

json CertificateWriter::to_json() const
{
    return {{"algebras", algebra_json_}, {"modules", module_json_}, {"maps", map_json_}, {"checks", checks_}};
}

// ------------------------------------------------------------------ reader

namespace {

class CertificateReader {
public:
    CertificateReader(const json& certs, std::size_t max_path_len) : certs_(certs), max_path_len_(max_path_len) {}

    const Algebra& algebra(const std::string& name)
    {
        auto it = algebras_.find(name);
        if (it != algebras_.end()) return it->second;
        auto p = parse_algebra_file(certs_.at("algebras").at(name).at("presentation").get<std::string>());
        return algebras_.emplace(name, build_algebra(p, max_path_len_)).first->second;
    }

    const Module& module(const std::string& name)
    {
        auto it = modules_.find(name);
        if (it != modules_.end()) return it->second;
        const json& j = certs_.at("modules").at(name);
        const Algebra& a = algebra(j.at("algebra").get<std::string>());
        Side side = j.at("side").get<std::string>() == "right" ? Side::right : Side::left;
        auto dims = j.at("dims").get<std::vector<std::size_t>>();
        Quiver q = side == Side::left ? a.quiver() : a.opposite().quiver();
        if (dims.size() != q.num_vertices()) throw std::runtime_error("module " + name + ": wrong vertex count");
        std::vector<Matrix> maps;
        const json& mj = j.at("maps");
        if (mj.size() != q.num_arrows()) throw std::runtime_error("module " + name + ": wrong arrow count");
        for (std::size_t i = 0; i < q.num_arrows(); ++i) {
            auto& arrow = q.arrows()[i];
            maps.push_back(matrix(mj[i], a.field(), dims[arrow.target], dims[arrow.source]));
        }
        return modules_.emplace(name, Module(a, side, dims, maps)).first->second;
    }

    ModuleMap map(const std::string& name)
    {
        const json& j = certs_.at("maps").at(name);
        const Module& s = module(j.at("source").get<std::string>());
        const Module& t = module(j.at("target").get<std::string>());
        if (!s.compatible(t)) throw std::runtime_error("map " + name + ": modules over different algebras");
        const json& bj = j.at("blocks");
        if (bj.size() != s.num_vertices()) throw std::runtime_error("map " + name + ": wrong block count");
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < s.num_vertices(); ++v) blocks.push_back(matrix(bj[v], s.field(), t.dim(v), s.dim(v)));
        return ModuleMap(s, t, blocks);
    }

    std::vector<Module> modules(const json& names)
    {
        std::vector<Module> out;
        for (auto& n : names) out.push_back(module(n.get<std::string>()));
        return out;
    }

    std::vector<ModuleMap> maps(const json& names)
    {
        std::vector<ModuleMap> out;
        for (auto& n : names) out.push_back(map(n.get<std::string>()));
        return out;
    }

    const std::map<std::string, Module>& loaded() const { return modules_; }

private:
    static Matrix matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols)
    {
        Matrix m(f, rows, cols);
        if (rows == 0 || cols == 0) return m;
        if (j.size() != rows) throw std::runtime_error("matrix: expected " + std::to_string(rows) + " rows");
        for (std::size_t r = 0; r < rows; ++r) {
            if (j[r].size() != cols) throw std::runtime_error("matrix: expected " + std::to_string(cols) + " columns");
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar::parse(f, j[r][c].get<std::string>()));
        }
        return m;
    }

    const json& certs_;
    std::size_t max_path_len_;
    std::map<std::string, Algebra> algebras_;
    std::map<std::string, Module> modules_;
};

std::size_t span_rank(const std::vector<Matrix>& cols, const Field& f)
{
    if (cols.empty()) return 0;
    return rank(Matrix::hstack(cols, f, cols.front().rows()));
}

// Rank of Hom(f, q) (contravariant) or Hom(q, f).
std::size_t induced_rank(const ModuleMap& f, const Module& q, bool contravariant)
{
    std::vector<Matrix> cols;
    if (contravariant)
        for (auto& h : hom_basis(f.target(), q)) cols.push_back(h.after(f).flatten());
    else
        for (auto& h : hom_basis(q, f.source())) cols.push_back(f.after(h).flatten());
    return span_rank(cols, f.source().field());
}

bool in_span(const Matrix& basis, const Matrix& v)
{
    if (v.cols() == 0 || v.rows() == 0) return true;
    if (basis.cols() == 0) return v.is_zero();
    return rank(Matrix::hstack({basis, v}, basis.field(), basis.rows())) == rank(basis);
}

class Verifier {
public:
    Verifier(CertificateReader& r, VerifyOutcome& out) : r_(r), out_(out) {}

    void expect(bool ok, const std::string& what)
    {
        ++out_.checks;
        if (!ok) {
            out_.ok = false;
            out_.failures.push_back(what);
        }
    }

    void resolution(const json& c, const std::string& tag)
    {
        bool proj = c.at("direction").get<std::string>() == "projective";
        const Module& target = r_.module(c.at("target").get<std::string>());
        auto terms = r_.modules(c.at("terms"));
        auto maps = r_.maps(c.at("maps"));
        bool complete = c.at("complete").get<bool>();
        expect(terms.size() == maps.size(), tag + ": one map per term");
        for (std::size_t i = 0; i < maps.size(); ++i) {
            expect(maps[i].commutes(), tag + ": map " + std::to_string(i) + " is a module map");
            expect(proj ? is_projective(terms[i]) : is_injective(terms[i]), tag + ": term " + std::to_string(i));
        }
        if (maps.empty()) {
            expect(target.is_zero() == complete, tag + ": empty resolution of a zero module");
        } else {
            expect(proj ? maps[0].is_surjective() : maps[0].is_injective(), tag + ": augmentation");
            for (std::size_t i = 1; i < maps.size(); ++i) {
                auto comp = proj ? maps[i - 1].after(maps[i]) : maps[i].after(maps[i - 1]);
                expect(comp.is_zero(), tag + ": consecutive maps compose to zero at " + std::to_string(i));
                expect(terms[i - 1].total_dim() - maps[i - 1].rank() == maps[i].rank(),
                       tag + ": exact at term " + std::to_string(i - 1));
                // minimality: differentials land in the radical (kill the socle)
                const Module& mid = terms[i - 1];
                if (proj) {
                    Subspace rad = radical_subspace(mid);
                    bool inside = true;
                    for (std::size_t v = 0; v < mid.num_vertices(); ++v)
                        inside = inside && in_span(rad[v], maps[i].block(v));
                    expect(inside, tag + ": minimal at term " + std::to_string(i));
                } else {
                    Subspace soc = socle_subspace(mid);
                    bool kills = true;
                    for (std::size_t v = 0; v < mid.num_vertices(); ++v)
                        if (soc[v].cols() > 0 && maps[i].block(v).rows() > 0)
                            kills = kills && (maps[i].block(v) * soc[v]).is_zero();
                    expect(kills, tag + ": minimal at term " + std::to_string(i));
                }
            }
            const ModuleMap& last = maps.back();
            bool closed = proj ? last.is_injective() : last.is_surjective();
            expect(closed == complete, tag + ": completeness flag");
        }
        if (c.contains("claim")) {
            const json& claim = c["claim"];
            std::size_t value = claim.at("value").get<std::size_t>();
            if (claim.at("exact").get<bool>()) {
                std::size_t len = maps.empty() ? 0 : maps.size() - 1;
                expect(complete && len == value, tag + ": length equals the claimed dimension");
            } else {
                expect(!complete && maps.size() >= value, tag + ": resolution reaches the cap without closing");
            }
        }
    }

    void approximation(const json& c, const std::string& tag)
    {
        ApproxSequence s;
        bool co = c.at("direction").get<std::string>() == "coresolution";
        s.direction = co ? ApproxDirection::coresolution : ApproxDirection::resolution;
        s.anchor = r_.module(c.at("anchor").get<std::string>());
        s.terms = r_.modules(c.at("terms"));
        s.maps = r_.maps(c.at("maps"));
        s.remainders = r_.modules(c.at("remainders"));
        const Module& q = r_.module(c.at("q").get<std::string>());
        for (auto& t : s.terms) expect(in_add(t, q), tag + ": term in add Q");
        expect(s.terms.size() == s.maps.size() && s.remainders.size() == s.maps.size(), tag + ": shapes");
        expect(verify_approx_sequence(s, q), tag + ": exact and functor-exact by rank counts");
        for (std::size_t i = 0; i < s.maps.size() && i < s.remainders.size(); ++i)
            expect(s.remainders[i].total_dim() == s.terms[i].total_dim() - s.maps[i].rank(),
                   tag + ": remainder dimension at stage " + std::to_string(i));
        bool closed = !s.remainders.empty() && s.remainders.back().is_zero();
        std::optional<std::size_t> broken;
        if (c.contains("broken_at")) broken = c["broken_at"].get<std::size_t>();
        if (broken) {
            expect(*broken == s.maps.size(), tag + ": break index");
            auto f = r_.map(c.at("breaking").get<std::string>());
            const Module& x = s.remainders.empty() ? s.anchor : s.remainders.back();
            const Module& end = co ? f.source() : f.target();
            expect(end == x, tag + ": breaking map starts at the last remainder");
            expect(f.commutes(), tag + ": breaking map is a module map");
            expect(in_add(co ? f.target() : f.source(), q), tag + ": breaking term in add Q");
            expect(co ? !f.is_injective() : !f.is_surjective(), tag + ": breaking approximation is not mono/epi");
            std::size_t want = co ? hom_dim(x, q) : hom_dim(q, x);
            expect(induced_rank(f, q, co) == want, tag + ": breaking map is an approximation");
        }
        const json& claim = c.at("claim");
        bool exact = claim.at("exact").get<bool>();
        std::size_t value = claim.at("value").get<std::size_t>();
        std::size_t cap = c.at("cap").get<std::size_t>();
        if (c.at("claim_kind").get<std::string>() == "dominant") {
            if (exact)
                expect(broken && *broken == value, tag + ": sequence breaks at the claimed stage");
            else
                expect(!broken && (closed || s.maps.size() >= cap + 1), tag + ": sequence unbroken up to the cap");
        } else {
            if (exact)
                expect((s.anchor.is_zero() && value == 0) || (closed && s.remainders.size() == value + 1),
                       tag + ": sequence closes at the claimed length");
            else
                expect(!closed, tag + ": sequence does not close");
        }
    }

    void hom_basis_check(const json& c, const std::string& tag)
    {
        const Module& m = r_.module(c.at("source").get<std::string>());
        const Module& n = r_.module(c.at("target").get<std::string>());
        auto maps = r_.maps(c.at("maps"));
        std::vector<Matrix> cols;
        for (auto& f : maps) {
            expect(f.commutes(), tag + ": basis element is a module map");
            cols.push_back(f.flatten());
        }
        expect(span_rank(cols, m.field()) == maps.size(), tag + ": basis is independent");
        expect(relag::hom_dim(m, n) == maps.size(), tag + ": basis spans Hom");
    }

    static std::size_t saturating(std::size_t a, std::size_t b)
    {
        return a > SIZE_MAX - b ? SIZE_MAX : a + b;
    }

    static std::size_t saturating_mul(std::size_t a, std::size_t b)
    {
        if (a == 0 || b == 0) return 0;
        return a > SIZE_MAX / b ? SIZE_MAX : a * b;
    }

    void syzygy_graph(const json& c, const std::string& tag)
    {
        const Module& m = r_.module(c.at("module").get<std::string>());
        const Module& anchor = r_.module(c.at("anchor").get<std::string>());
        if (c.at("dual").get<bool>())
            expect(anchor.compatible(dualize(m)) && anchor == dualize(m), tag + ": anchor is the dual module");
        else
            expect(anchor.compatible(m) && anchor == m, tag + ": anchor is the module");
        const json& cj = c.at("classes");
        std::vector<Module> reps;
        for (auto& k : cj) reps.push_back(r_.module(k.at("rep").get<std::string>()));
        auto sum_of = [&](const std::vector<std::size_t>& idx) {
            std::vector<Module> parts;
            for (auto i : idx) parts.push_back(reps.at(i));
            return direct_sum_with_maps(parts, anchor.algebra(), anchor.side()).sum;
        };
        for (std::size_t i = 0; i < reps.size(); ++i) {
            expect(reps[i].compatible(anchor) && !reps[i].is_zero(), tag + ": class " + std::to_string(i) + " is nonzero");
        }
        auto start = c.at("start").get<std::vector<std::size_t>>();
        auto iso = r_.map(c.at("start_iso").get<std::string>());
        expect(iso.source() == sum_of(start) && iso.target() == anchor && iso.commutes() && iso.is_isomorphism(),
               tag + ": module is the sum of its start classes");

        // Omega of each expanded class and Ext^1(rep, target) when asked for
        std::vector<std::optional<std::vector<std::size_t>>> omega(reps.size());
        std::vector<ModuleMap> embeddings(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const json& k = cj[i];
            if (!k.contains("cover")) continue;
            std::string t = tag + ": class " + std::to_string(i);
            auto f = r_.map(k.at("cover").get<std::string>());
            auto g = r_.map(k.at("embedding").get<std::string>());
            auto idx = k.at("omega").get<std::vector<std::size_t>>();
            const Module& p = f.source();
            expect(f.target() == reps[i] && f.commutes() && f.is_surjective() && is_projective(p),
                   t + ": projective cover");
            expect(g.target() == p && g.source() == sum_of(idx) && g.commutes() && g.is_injective(),
                   t + ": syzygy embedding");
            expect(f.after(g).is_zero() && g.source().total_dim() == p.total_dim() - f.rank(),
                   t + ": embedding onto the kernel");
            Subspace rad = radical_subspace(p);
            bool inside = true;
            for (std::size_t v = 0; v < p.num_vertices(); ++v) inside = inside && in_span(rad[v], g.block(v));
            expect(inside, t + ": cover is minimal");
            omega[i] = idx;
            embeddings[i] = g;
        }
        // multiplicity vectors of Omega^k
        std::vector<std::vector<std::size_t>> levels;
        std::vector<std::size_t> cur(reps.size(), 0);
        for (auto i : start) cur[i] = saturating(cur[i], 1);
        auto nonempty = [](const std::vector<std::size_t>& v) {
            for (auto x : v)
                if (x) return true;
            return false;
        };
        auto advance = [&](std::size_t depth) {
            while (levels.size() <= depth) {
                if (levels.empty()) {
                    levels.push_back(cur);
                    continue;
                }
                const auto& last = levels.back();
                std::vector<std::size_t> next(reps.size(), 0);
                bool ok = true;
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    if (!last[i]) continue;
                    if (!omega[i]) {
                        ok = false;
                        continue;
                    }
                    for (auto j : *omega[i]) next[j] = saturating(next[j], last[i]);
                }
                if (!ok) return false;
                levels.push_back(next);
            }
            return true;
        };
        const json& claim = c.at("claim");
        if (claim.contains("dimension")) {
            const json& v = claim.at("value");
            std::size_t value = v.at("value").get<std::size_t>();
            if (v.at("exact").get<bool>()) {
                bool ok = advance(value + 1);
                expect(ok && !nonempty(levels[value + 1]) && (value == 0 || nonempty(levels[value])),
                       tag + ": syzygies vanish exactly after the claimed degree");
            } else {
                bool ok = advance(value);
                expect(ok && nonempty(levels[value]), tag + ": syzygy at the claimed bound is nonzero");
            }
        } else {
            const json& e = claim.at("ext");
            const Module& n = r_.module(e.at("target").get<std::string>());
            auto dims = e.at("dims").get<std::vector<std::size_t>>();
            std::vector<std::optional<std::size_t>> ext1(reps.size());
            for (std::size_t k = 1; k <= dims.size(); ++k) {
                if (!advance(k - 1)) {
                    expect(false, tag + ": graph too shallow for Ext^" + std::to_string(k));
                    continue;
                }
                std::size_t total = 0;
                bool ok = true;
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    if (!levels[k - 1][i]) continue;
                    if (!omega[i]) {
                        ok = false;
                        continue;
                    }
                    // Ext^1(R, N) = coker(Hom(P, N) -> Hom(Omega R, N))
                    if (!ext1[i])
                        ext1[i] = relag::hom_dim(embeddings[i].source(), n) - induced_rank(embeddings[i], n, true);
                    total = saturating(total, saturating_mul(levels[k - 1][i], *ext1[i]));
                }
                expect(ok && total == dims[k - 1], tag + ": Ext^" + std::to_string(k) + " from the syzygy graph");
            }
        }
    }

    void decomposition(const json& c, const std::string& tag)
    {
        const Module& m = r_.module(c.at("module").get<std::string>());
        auto parts = r_.modules(c.at("summands"));
        auto inc = r_.maps(c.at("inclusions"));
        auto proj = r_.maps(c.at("projections"));
        expect(parts.size() == inc.size() && parts.size() == proj.size(), tag + ": shapes");
        std::size_t total = 0;
        ModuleMap sum = ModuleMap::zero(m, m);
        for (std::size_t i = 0; i < parts.size() && i < inc.size() && i < proj.size(); ++i) {
            total += parts[i].total_dim();
            expect(inc[i].commutes() && proj[i].commutes(), tag + ": split maps are module maps");
            for (std::size_t j = 0; j < parts.size() && j < inc.size(); ++j) {
                auto comp = proj[i].after(inc[j]);
                expect(i == j ? comp.is_isomorphism() && (comp - ModuleMap::identity(parts[i])).is_zero()
                              : comp.is_zero(),
                       tag + ": projection " + std::to_string(i) + " after inclusion " + std::to_string(j));
            }
            sum = sum + inc[i].after(proj[i]);
            expect(is_indecomposable(parts[i]), tag + ": summand " + std::to_string(i) + " is indecomposable");
        }
        expect(total == m.total_dim(), tag + ": dimensions add up");
        expect((sum - ModuleMap::identity(m)).is_zero(), tag + ": inclusions and projections split the identity");
    }

    void run(const json& c, std::size_t index)
    {
        std::string kind = c.at("kind").get<std::string>();
        std::string tag = "check " + std::to_string(index) + " (" + kind + ")";
        if (kind == "resolution") {
            resolution(c, tag);
        } else if (kind == "approximation") {
            approximation(c, tag);
        } else if (kind == "hom_basis") {
            hom_basis_check(c, tag);
        } else if (kind == "hom_dim") {
            const Module& m = r_.module(c.at("source").get<std::string>());
            const Module& n = r_.module(c.at("target").get<std::string>());
            expect(relag::hom_dim(m, n) == c.at("dim").get<std::size_t>(), tag + ": dimension of Hom");
        } else if (kind == "syzygy_graph") {
            syzygy_graph(c, tag);
        } else if (kind == "decomposition") {
            decomposition(c, tag);
        } else if (kind == "translate") {
            const Module& m = r_.module(c.at("module").get<std::string>());
            const Module& n = r_.module(c.at("result").get<std::string>());
            Module t = higher_translate(m, c.at("n").get<std::size_t>(), c.at("inverse").get<bool>());
            bool same = (t.is_zero() && n.is_zero()) ||
                        (t.compatible(n) && is_isomorphic(t, n).verdict == Verdict::yes);
            expect(same, tag + ": recomputed translate is isomorphic to the result");
        } else if (kind == "isomorphism") {
            auto f = r_.map(c.at("map").get<std::string>());
            expect(f.commutes() && f.is_isomorphism(), tag + ": witness is an isomorphism");
        } else if (kind == "not_in_add") {
            const Module& x = r_.module(c.at("module").get<std::string>());
            const Module& q = r_.module(c.at("q").get<std::string>());
            expect(!in_add(x, q), tag + ": module is not in add Q");
        } else {
            expect(false, tag + ": unknown certificate kind");
        }
    }

private:
    CertificateReader& r_;
    VerifyOutcome& out_;
};

// The headline result of single-verdict commands must be the certified claim.
void result_matches_certificates(const json& report, CertificateReader& r, Verifier& v)
{
    const std::string command = report.value("command", "");
    const json& result = report.at("result");
    const json& checks = report.at("certificates").at("checks");
    if (checks.empty()) return;
    const json& first = checks[0];
    auto claim_value = [&](const json& c) -> json {
        const json& claim = c.at("claim");
        return c.at("kind") == "syzygy_graph" ? claim.at("value") : claim;
    };
    if (command == "pd" || command == "id" || command == "domdim" || command == "addq-dim" ||
        command == "quasi-degree")
        v.expect(result.at("value") == claim_value(first), "result value is the certified claim");
    else if (command == "hom")
        v.expect(result.at("dim") == first.at("maps").size(), "result dimension is the size of the certified basis");
    else if (command == "ext")
        v.expect(result.at("dims") == first.at("claim").at("ext").at("dims"), "result dimensions are the certified ones");
    else if (command == "tau")
        v.expect(result.at("dims") == json(r.module(first.at("result").get<std::string>()).dims()),
                 "result dimensions are those of the certified translate");
    else if (command == "gldim") {
        std::size_t best = 0;
        bool exact = true;
        for (auto& c : checks) {
            const json& val = claim_value(c);
            best = std::max(best, val.at("value").get<std::size_t>());
            exact = exact && val.at("exact").get<bool>();
        }
        v.expect(result.at("value").at("value") == best && result.at("value").at("exact") == exact,
                 "global dimension is the largest certified pd of a simple");
    }
}

std::optional<std::string> read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

VerifyOutcome verify_report(const json& report, const std::string& base_dir, std::size_t max_path_len)
{
    VerifyOutcome out;
    auto fail = [&](const std::string& what) {
        ++out.checks;
        out.ok = false;
        out.failures.push_back(what);
    };
    if (!report.is_object() || report.value("schema", 0) != schema_version) {
        fail("not a schema " + std::to_string(schema_version) + " report");
        return out;
    }
    if (report.value("status", "") != "ok") {
        fail("report status is not ok");
        return out;
    }
    if (report.contains("inputs") && report["inputs"].contains("files"))
        for (auto& f : report["inputs"]["files"]) {
            std::filesystem::path p = f.at("path").get<std::string>();
            auto text = read_file(p);
            if (!text && p.is_relative()) text = read_file(std::filesystem::path(base_dir) / p);
            if (!text) continue;
            ++out.checks;
            if (fnv1a_hex(*text) != f.at("fnv1a64").get<std::string>()) fail("input " + p.string() + " has changed");
        }
    const json& certs = report.at("certificates");
    CertificateReader reader(certs, max_path_len);
    Verifier v(reader, out);
    for (auto& [name, _] : certs.at("modules").items()) {
        const Module& m = reader.module(name);
        v.expect(!m.violated_relation(), "module " + name + " satisfies the relations");
    }
    for (auto& [name, _] : certs.at("maps").items())
        v.expect(reader.map(name).commutes(), "map " + name + " is a module map");
    std::size_t i = 0;
    for (auto& c : certs.at("checks")) v.run(c, i++);
    result_matches_certificates(report, reader, v);
    return out;
}

}  // namespace relag::cli
