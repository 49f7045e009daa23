#include "commands.hpp"

#include "relag/formats.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#ifndef RELAG_VERSION
#define RELAG_VERSION "0.0.0"
#endif

namespace relag::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A "no" from the mathematics; the report is complete.
struct Negative {};

struct FileParseError {
    std::string path;
    ParseError error;
};

template <class F>
auto with_file(const std::string& path, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw FileParseError{path, e};
    }
}

class Inputs {
public:
    explicit Inputs(const Options& o) : o_(o) {}

    std::string read(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + path);
        std::ostringstream os;
        os << in.rdbuf();
        std::string text = os.str();
        if (!seen_.count(path)) {
            seen_[path] = true;
            files_.push_back({{"path", path}, {"fnv1a64", fnv1a_hex(text)}});
        }
        return text;
    }

    Algebra algebra(const std::string& path)
    {
        std::string key = fs::weakly_canonical(path).string();
        auto it = algebras_.find(key);
        if (it != algebras_.end()) return it->second;
        Algebra a = build_algebra(with_file(path, [&] { return parse_algebra_file(read(path)); }), o_.max_path_len);
        algebras_.emplace(key, a);
        return a;
    }

    Module module(const std::string& path, const std::optional<Algebra>& explicit_algebra)
    {
        std::string text = read(path);
        Algebra a;
        if (explicit_algebra) {
            a = *explicit_algebra;
        } else {
            std::string ref = with_file(path, [&] { return module_algebra_reference(text); });
            if (ref.empty()) throw UsageError(path + ": no `algebra` line and no algebra file given");
            fs::path p = ref;
            if (p.is_relative()) p = fs::path(path).parent_path() / p;
            a = algebra(p.string());
        }
        return with_file(path, [&] { return parse_module_file(text, a); });
    }

    const json& files() const { return files_; }

private:
    const Options& o_;
    std::map<std::string, bool> seen_;
    json files_ = json::array();
    std::map<std::string, Algebra> algebras_;
};

bool is_algebra_path(const std::string& p) { return fs::path(p).extension() == ".alg"; }

/// Positional files: at most one algebra file (used for every module), then modules.
struct Args {
    std::optional<Algebra> algebra;
    std::vector<Module> modules;
};

Args load(Inputs& in, const Options& o, std::size_t modules, bool algebra_only = false)
{
    Args a;
    std::vector<std::string> mods;
    for (auto& f : o.files) {
        if (is_algebra_path(f)) {
            if (a.algebra) throw UsageError("at most one algebra file");
            a.algebra = in.algebra(f);
        } else {
            mods.push_back(f);
        }
    }
    if (algebra_only && !a.algebra) throw UsageError(o.command + ": expects an algebra file (.alg)");
    if (mods.size() != modules)
        throw UsageError(o.command + ": expects " + std::to_string(modules) + " module file(s), got " +
                         std::to_string(mods.size()));
    for (auto& m : mods) a.modules.push_back(in.module(m, a.algebra));
    return a;
}

json dims_json(const Module& m) { return m.dims(); }

json summand_dims(const Module& m, std::uint64_t seed)
{
    json out = json::array();
    if (m.is_zero()) return out;
    for (auto& [s, k] : decompose_with_multiplicity(m, seed)) out.push_back({{"dims", s.dims()}, {"multiplicity", k}});
    return out;
}

json opt_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

struct Context {
    const Options& o;
    Inputs& in;
    CertificateWriter& w;
    json& result;
};

void require_same(const Module& x, const Module& y)
{
    if (!x.compatible(y)) throw UsageError("modules must be over the same algebra and on the same side");
}

// ----------------------------------------------------------------- commands

void cmd_hom(Context& c)
{
    auto a = load(c.in, c.o, 2);
    auto& m = a.modules[0];
    auto& n = a.modules[1];
    require_same(m, n);
    auto basis = hom_basis(m, n);
    c.result["dim"] = basis.size();
    c.w.hom_basis(m, n, basis);
}

void cmd_ext(Context& c)
{
    auto a = load(c.in, c.o, 2);
    auto& m = a.modules[0];
    auto& n = a.modules[1];
    require_same(m, n);
    auto dims = ext_dims(m, n, c.o.degree);
    json degrees = json::array();
    for (std::size_t i = 1; i <= c.o.degree; ++i) degrees.push_back(i);
    c.result["degrees"] = degrees;
    c.result["dims"] = dims;
    c.w.ext(m, n, dims);
}

void cmd_resolve(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& m = a.modules[0];
    auto r = c.o.injective ? min_inj_coresolution(m, c.o.length) : min_proj_resolution(m, c.o.length);
    json terms = json::array();
    for (auto& t : r.terms) terms.push_back(t.dims());
    c.result["kind"] = c.o.injective ? "injective" : "projective";
    c.result["terms"] = terms;
    c.result["complete"] = r.complete();
    c.w.resolution(r);
}

void cmd_dimension(Context& c, DimensionKind kind)
{
    auto a = load(c.in, c.o, 1);
    auto& m = a.modules[0];
    auto v = pd_id(m, kind, c.o.cap);
    c.result["value"] = verdict_json(v);
    c.w.dimension(m, kind, v);
}

void cmd_gldim(Context& c)
{
    auto a = load(c.in, c.o, 0, true);
    auto v = gldim(*a.algebra, c.o.cap);
    c.result["value"] = verdict_json(v);
    json simples = json::array();
    for (std::size_t i = 0; i < a.algebra->num_vertices(); ++i) {
        auto s = structural_module(*a.algebra, i, StructuralKind::simple, Side::left);
        auto p = projective_dimension(s, c.o.cap);
        simples.push_back({{"vertex", a.algebra->quiver().vertices()[i]}, {"pd", verdict_json(p)}});
        c.w.dimension(s, DimensionKind::pd, p);
    }
    c.result["simples"] = simples;
}

void cmd_tau(Context& c)
{
    if (c.o.n == 0) throw UsageError("tau: --n must be at least 1");
    auto a = load(c.in, c.o, 1);
    auto& m = a.modules[0];
    auto t = higher_translate(m, c.o.n, c.o.inverse);
    c.result["n"] = c.o.n;
    c.result["inverse"] = c.o.inverse;
    c.result["zero"] = t.is_zero();
    c.result["dims"] = dims_json(t);
    c.result["summands"] = summand_dims(t, c.o.seed);
    c.w.translate(m, c.o.n, c.o.inverse, t);
    if (!t.is_zero()) c.w.decomposition(t, decompose(t, c.o.seed));
}

/// X (a module, or the regular module when an algebra file comes first) and Q.
std::pair<Module, Module> anchor_and_q(Context& c)
{
    if (c.o.files.size() == 2 && is_algebra_path(c.o.files[0])) {
        auto a = load(c.in, c.o, 1);
        auto& q = a.modules[0];
        return {regular_module(*a.algebra, q.side()), q};
    }
    auto a = load(c.in, c.o, 2);
    require_same(a.modules[0], a.modules[1]);
    return {a.modules[0], a.modules[1]};
}

void cmd_domdim(Context& c)
{
    auto [x, q] = anchor_and_q(c);
    auto kind = c.o.codominant ? DominantKind::codominant : DominantKind::dominant;
    auto v = rel_dominant_dim(x, q, kind, c.o.cap);
    c.result["kind"] = c.o.codominant ? "codominant" : "dominant";
    c.result["value"] = verdict_json(v.value);
    c.w.approximation(v.witness, q, "dominant", v.value, c.o.cap);
}

void cmd_addq(Context& c)
{
    auto [x, q] = anchor_and_q(c);
    auto v = addq_dimension(x, q, c.o.codim ? AddqKind::codim : AddqKind::dim, c.o.cap);
    c.result["kind"] = c.o.codim ? "codim" : "dim";
    c.result["value"] = verdict_json(v.value);
    c.w.approximation(v.witness, q, "addq", v.value, c.o.cap);
}

void cmd_quasi_degree(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& q = a.modules[0];
    auto v = quasi_generation_degree(q, c.o.cogenerator ? GenerationKind::cogenerator : GenerationKind::generator,
                                     c.o.cap);
    c.result["kind"] = c.o.cogenerator ? "cogenerator" : "generator";
    c.result["value"] = verdict_json(v.value);
    c.w.approximation(v.witness, q, "addq", v.value, c.o.cap);
}

void ig_certificates(Context& c, const Algebra& a, const IgVerdict& ig)
{
    c.w.dimension(regular_module(a, Side::left), DimensionKind::id, ig.left);
    c.w.dimension(regular_module(a, Side::right), DimensionKind::id, ig.right);
}

json ig_json(const IgVerdict& ig)
{
    return {{"ig", ig.ig}, {"n", ig.n}, {"id_left", verdict_json(ig.left)}, {"id_right", verdict_json(ig.right)}};
}

void cmd_check_ig(Context& c)
{
    auto a = load(c.in, c.o, 0, true);
    auto ig = check_iwanaga_gorenstein(*a.algebra, c.o.cap);
    c.result = ig_json(ig);
    ig_certificates(c, *a.algebra, ig);
    if (!ig.ig) throw Negative{};
}

json pair_json(const PairReport& r)
{
    return {{"is_pair", r.is_pair},
            {"n", opt_size(r.n)},
            {"m", verdict_json(r.m)},
            {"l", verdict_json(r.l)},
            {"gldim", verdict_json(r.gldim)},
            {"domdim", verdict_json(r.domdim.value)},
            {"iwanaga_gorenstein", ig_json(r.ig)},
            {"self_orthogonal",
             {{"holds", r.self_orthogonal.holds},
              {"complete", r.self_orthogonal.complete},
              {"checked_up_to", r.self_orthogonal.checked_up_to},
              {"failing_degree", opt_size(r.self_orthogonal.failing_degree)}}},
            {"auslander_pair", r.auslander_pair},
            {"correspondence_hypothesis", r.correspondence_hypothesis},
            {"reason", r.reason}};
}

void pair_certificates(Context& c, const PairReport& r)
{
    c.w.approximation(r.domdim.witness, r.q, "dominant", r.domdim.value, c.o.cap);
    c.w.dimension(r.q, DimensionKind::pd, r.l);
    c.w.dimension(r.q, DimensionKind::id, r.m);
    std::size_t k = r.self_orthogonal.failing_degree.value_or(r.self_orthogonal.checked_up_to);
    if (k > 0) c.w.ext(r.q, r.q, ext_dims(r.q, r.q, k));
}

void cmd_check_pair(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& q = a.modules[0];
    auto r = check_relative_ag_pair(q.algebra(), q, c.o.cap);
    c.result = pair_json(r);
    pair_certificates(c, r);
    if (!r.is_pair) throw Negative{};
}

json qpct_json(const QpctReport& r, std::uint64_t seed)
{
    json conds = json::array();
    for (auto& cond : r.conditions) {
        json j{{"pass", cond.pass}, {"detail", cond.detail}};
        if (cond.witness) j["witness"] = verdict_json(cond.witness->value);
        conds.push_back(j);
    }
    return {{"pass", r.pass},
            {"n", r.n},
            {"m", r.m},
            {"l", r.l},
            {"forced", r.forced},
            {"ext_table", r.ext_table},
            {"conditions", conds},
            {"tau", {{"dims", r.tau.dims()}, {"summands", summand_dims(r.tau, seed)}}},
            {"tau_inverse", {{"dims", r.tau_inverse.dims()}, {"summands", summand_dims(r.tau_inverse, seed)}}}};
}

void qpct_certificates(Context& c, const QpctReport& r)
{
    if (!r.ext_table.empty()) c.w.ext(r.q, r.q, r.ext_table);
    for (auto& cond : r.conditions)
        if (cond.witness) {
            const auto& s = cond.witness->witness;
            c.w.approximation(s, r.q, "addq", cond.witness->value, c.o.cap);
        }
    if (r.n >= r.m + 2) c.w.translate(r.q, r.n - r.m - 1, false, r.tau);
    if (r.n >= r.l + 2) c.w.translate(r.q, r.n - r.l - 1, true, r.tau_inverse);
    for (const Module* t : {&r.tau, &r.tau_inverse}) {
        if (t->is_zero()) continue;
        auto parts = decompose(*t, c.o.seed);
        c.w.decomposition(*t, parts);
        for (auto& p : parts)
            if (!in_add(p.module, r.q)) c.w.not_in_add(p.module, r.q);
    }
}

void require_qpct_parameters(const Options& o)
{
    if (o.qn == 0) throw UsageError(o.command + ": --n is required");
}

void cmd_check_qpct(Context& c)
{
    require_qpct_parameters(c.o);
    auto a = load(c.in, c.o, 1);
    auto& q = a.modules[0];
    auto r = check_qpct(q.algebra(), q, c.o.qn, c.o.qm, c.o.ql, c.o.cap, c.o.force_below_bound);
    c.result = qpct_json(r, c.o.seed);
    qpct_certificates(c, r);
    if (!r.pass) throw Negative{};
}

Correspondence correspondence(Context& c, const Module& q)
{
    if (c.o.from_qpct) {
        require_qpct_parameters(c.o);
        return correspond_from_qpct(q.algebra(), q, c.o.qn, c.o.qm, c.o.ql, c.o.cap, c.o.force_below_bound);
    }
    return correspond_from_pair(q.algebra(), q, c.o.cap, c.o.force_below_bound);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void cmd_correspond(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& q = a.modules[0];
    auto corr = correspondence(c, q);
    const auto& other = corr.other;
    const auto& pres = other.presentation.presentation;
    c.result["direction"] = corr.from_pair ? "pair_to_qpct" : "qpct_to_pair";
    c.result["other_algebra"] = {{"dim", other.algebra.dim()},
                                 {"vertices", pres.quiver.num_vertices()},
                                 {"arrows", pres.quiver.num_arrows()},
                                 {"presentation", format_algebra_file(pres)}};
    c.result["other_module"] = {{"side", to_string(other.module.side())},
                                {"dims", other.module.dims()},
                                {"summands", summand_dims(other.module, c.o.seed)}};
    c.result["pair"] = pair_json(corr.pair);
    c.result["qpct"] = qpct_json(corr.qpct, c.o.seed);
    c.result["round_trip"] = {{"holds", corr.round_trip.holds},
                              {"faithful", corr.round_trip.faithful},
                              {"dim_algebra", corr.round_trip.dim_algebra},
                              {"dim_end", corr.round_trip.dim_end}};
    c.result["rederived"] = pair_json(corr.rederived);

    c.w.decomposition(other.module, decompose(other.module, c.o.seed));
    c.w.hom_dim(other.module, other.module, corr.round_trip.dim_end);
    if (corr.from_pair) {
        pair_certificates(c, corr.pair);
        qpct_certificates(c, corr.qpct);
    } else {
        qpct_certificates(c, corr.qpct);
        pair_certificates(c, corr.pair);
    }
    if (!c.o.write_prefix.empty()) {
        std::string alg = c.o.write_prefix + ".alg";
        write_text(alg, format_algebra_file(pres));
        write_text(c.o.write_prefix + "_q.mod",
                   "algebra " + fs::path(alg).filename().string() + "\n" + format_module_file(other.module));
        c.result["written"] = {alg, c.o.write_prefix + "_q.mod"};
    }
    if (!corr.qpct.pass || !corr.pair.is_pair || !corr.round_trip.holds) throw Negative{};
}

void cmd_cm_check(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& m = a.modules[0];
    const Algebra& alg = m.algebra();
    auto v = cm_check(m, alg, c.o.cap);
    c.result["status"] = to_string(v.status);
    c.result["failing_degree"] = opt_size(v.failing_degree);
    Module reg = regular_module(alg, m.side());
    if (v.failing_degree) {
        std::size_t k = *v.failing_degree;
        c.w.ext(m, reg, ext_dims(m, reg, k));
    } else if (v.status == CmStatus::cm) {
        auto ig = check_iwanaga_gorenstein(alg, c.o.cap);
        c.result["checked_up_to"] = ig.n;
        ig_certificates(c, alg, ig);
        if (ig.n > 0) c.w.ext(m, reg, ext_dims(m, reg, ig.n));
    }
    if (v.status == CmStatus::not_cm) throw Negative{};
}

void cmd_window(Context& c)
{
    auto a = load(c.in, c.o, 2);
    auto& x = a.modules[0];
    auto& q = a.modules[1];
    require_same(x, q);
    auto v = perp_window_check(x, q, c.o.left_depth, c.o.right_depth);
    c.result["inside"] = v.inside;
    c.result["left_depth"] = c.o.left_depth;
    c.result["right_depth"] = c.o.right_depth;
    c.result["left_failure"] = opt_size(v.left_failure);
    c.result["right_failure"] = opt_size(v.right_failure);
    if (c.o.left_depth > 0)
        c.w.ext(x, q, ext_dims(x, q, c.o.left_depth));
    if (c.o.right_depth > 0)
        c.w.ext(q, x, ext_dims(q, x, c.o.right_depth));
    if (!v.inside) throw Negative{};
}

void cmd_theorem_b(Context& c)
{
    auto a = load(c.in, c.o, 1);
    auto& q = a.modules[0];
    auto corr = correspond_from_pair(q.algebra(), q, c.o.cap, c.o.force_below_bound);
    const Algebra& lambda = corr.other.algebra;
    Side side = corr.other.module.side();
    std::vector<Module> cands;
    for (auto& f : c.o.candidates) {
        std::string text = c.in.read(f);
        cands.push_back(with_file(f, [&] { return parse_module_file(text, lambda); }));
    }
    if (c.o.candidates.empty()) {
        for (auto& s : decompose(corr.other.module, c.o.seed)) cands.push_back(s.module);
        for (auto kind : {StructuralKind::projective, StructuralKind::injective, StructuralKind::simple})
            for (std::size_t v = 0; v < lambda.num_vertices(); ++v)
                cands.push_back(structural_module(lambda, v, kind, side));
    }
    auto r = theorem_b_check(corr, cands, c.o.cap);
    json cj = json::array();
    for (auto& cand : r.candidates) {
        json j{{"dims", cand.module.dims()},
               {"inside", cand.window.inside},
               {"left_failure", opt_size(cand.window.left_failure)},
               {"right_failure", opt_size(cand.window.right_failure)},
               {"in_add_q", cand.in_add_q}};
        if (cand.image) {
            j["image_dims"] = cand.image->dims();
            j["image_projective"] = cand.image_projective;
            j["double_dual_iso"] = cand.double_dual_iso;
        }
        if (cand.image_cm) j["image_cm"] = to_string(cand.image_cm->status);
        cj.push_back(j);
        if (r.left_depth > 0)
            c.w.ext(cand.module, corr.other.module, ext_dims(cand.module, corr.other.module, r.left_depth));
        if (r.right_depth > 0)
            c.w.ext(corr.other.module, cand.module, ext_dims(corr.other.module, cand.module, r.right_depth));
    }
    c.result["left_depth"] = r.left_depth;
    c.result["right_depth"] = r.right_depth;
    c.result["window_equals_add"] = r.window_equals_add ? json(*r.window_equals_add) : json(nullptr);
    c.result["candidates"] = cj;
    c.result["pass"] = r.pass;
    if (!r.pass) throw Negative{};
}

void cmd_verify(Context& c)
{
    if (c.o.files.size() != 1) throw UsageError("verify: expects one report file");
    const std::string& path = c.o.files[0];
    json report;
    try {
        report = json::parse(c.in.read(path));
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": not valid JSON: " + e.what());
    }
    std::size_t max_len = c.o.max_path_len;
    if (report.contains("inputs") && report["inputs"].contains("flags"))
        max_len = report["inputs"]["flags"].value("max_path_len", max_len);
    auto v = verify_report(report, fs::path(path).parent_path().string(), max_len);
    c.result["ok"] = v.ok;
    c.result["checks"] = v.checks;
    c.result["failures"] = v.failures;
    c.result["verified_command"] = report.value("command", "");
    if (!v.ok) throw Negative{};
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h{
        {"hom", cmd_hom},
        {"ext", cmd_ext},
        {"resolve", cmd_resolve},
        {"pd", [](Context& c) { cmd_dimension(c, DimensionKind::pd); }},
        {"id", [](Context& c) { cmd_dimension(c, DimensionKind::id); }},
        {"gldim", cmd_gldim},
        {"tau", cmd_tau},
        {"domdim", cmd_domdim},
        {"addq-dim", cmd_addq},
        {"quasi-degree", cmd_quasi_degree},
        {"check-ig", cmd_check_ig},
        {"check-pair", cmd_check_pair},
        {"check-qpct", cmd_check_qpct},
        {"correspond", cmd_correspond},
        {"cm-check", cmd_cm_check},
        {"window", cmd_window},
        {"theorem-b", cmd_theorem_b},
        {"verify", cmd_verify},
    };
    return h;
}

json error_json(const std::string& type, const std::string& message)
{
    return {{"type", type}, {"message", message}};
}

}  // namespace

json options_json(const Options& o)
{
    return {{"cap", o.cap},
            {"seed", o.seed},
            {"force_below_bound", o.force_below_bound},
            {"max_path_len", o.max_path_len},
            {"degree", o.degree},
            {"injective", o.injective},
            {"length", o.length},
            {"n", o.n},
            {"inverse", o.inverse},
            {"codominant", o.codominant},
            {"codim", o.codim},
            {"cogenerator", o.cogenerator},
            {"qpct_n", o.qn},
            {"qpct_m", o.qm},
            {"qpct_l", o.ql},
            {"from_qpct", o.from_qpct},
            {"write", o.write_prefix},
            {"left_depth", o.left_depth},
            {"right_depth", o.right_depth},
            {"candidates", o.candidates}};
}

RunResult run(const Options& o)
{
    Inputs in(o);
    CertificateWriter w;
    w.set_seed(o.seed);
    json result = json::object();
    RunResult out;
    json error;
    try {
        auto it = handlers().find(o.command);
        if (it == handlers().end()) throw UsageError("unknown command " + o.command);
        Context c{o, in, w, result};
        it->second(c);
    } catch (const Negative&) {
        out.exit_code = 1;
    } catch (const HypothesisViolated& e) {
        result["hypothesis_violated"] = e.what();
        out.exit_code = 1;
    } catch (const RoundTripFailure& e) {
        result["round_trip_failure"] = {
            {"invariant", e.invariant()}, {"expected", e.expected()}, {"actual", e.actual()}, {"message", e.what()}};
        out.exit_code = 1;
    } catch (const FileParseError& e) {
        error = error_json("parse", e.path + ": " + e.error.what());
        error["file"] = e.path;
        error["line"] = e.error.line();
        error["column"] = e.error.column();
    } catch (const ParseError& e) {
        error = error_json("parse", e.what());
        error["line"] = e.line();
        error["column"] = e.column();
    } catch (const UsageError& e) {
        error = error_json("usage", e.what());
    } catch (const RelationViolated& e) {
        error = error_json("relation_violated", e.what());
    } catch (const NotBasic& e) {
        error = error_json("not_basic", e.what());
    } catch (const std::exception& e) {
        error = error_json("runtime", e.what());
    }
    json& r = out.report;
    r["schema"] = schema_version;
    r["tool_version"] = std::string("relag ") + RELAG_VERSION;
    r["command"] = o.command;
    r["inputs"] = {{"files", in.files()}, {"arguments", o.files}, {"flags", options_json(o)}};
    if (!error.is_null()) {
        out.exit_code = 2;
        r["status"] = "error";
        r["error"] = error;
        r["result"] = json::object();
        r["certificates"] = CertificateWriter().to_json();
    } else {
        r["status"] = "ok";
        r["result"] = result;
        r["certificates"] = w.to_json();
    }
    return out;
}

namespace {

void render(std::ostream& os, const std::string& key, const json& v, int indent)
{
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object() && !(v.contains("text") && v.contains("exact"))) {
        os << pad << key << ":\n";
        for (auto& [k, x] : v.items()) render(os, k, x, indent + 1);
        return;
    }
    if (v.is_array() && !v.empty() && v[0].is_object()) {
        os << pad << key << ":\n";
        for (std::size_t i = 0; i < v.size(); ++i) render(os, "[" + std::to_string(i) + "]", v[i], indent + 1);
        return;
    }
    if (v.is_object()) {
        os << pad << key << ": " << v["text"].get<std::string>() << "\n";
    } else if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find('\n') == std::string::npos) {
            os << pad << key << ": " << s << "\n";
        } else {
            os << pad << key << ":\n";
            std::istringstream lines(s);
            for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
        }
    } else {
        os << pad << key << ": " << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const json& report, int exit_code)
{
    static const char* verdicts[] = {"ok", "no", "error"};
    std::ostringstream os;
    os << report["command"].get<std::string>() << ": " << verdicts[exit_code] << "\n";
    if (report["status"] == "error") {
        os << "  error: " << report["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    for (auto& [k, v] : report["result"].items()) render(os, k, v, 1);
    os << "  certificates: " << report["certificates"]["checks"].size() << " checks\n";
    return os.str();
}

}  // namespace relag::cli
