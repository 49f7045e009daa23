#pragma once

// JSON reports: inputs with digests, a result payload and certificates that
// `verify` re-checks by rank counts.
//
// Certificates hold algebras (as presentation text), modules (dimension
// vectors and arrow matrices in the stored convention), maps (per-vertex
// blocks) and a list of checks that refer to them by name. Matrix entries are
// strings; rationals are written "p/q".

#include "relag/checkers.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace relag::cli {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

std::string fnv1a_hex(const std::string& bytes);

class CertificateWriter {
public:
    std::string algebra(const Algebra& a);
    std::string module(const Module& m);
    std::string map(const ModuleMap& f);
    std::vector<std::string> modules(const std::vector<Module>& ms);
    std::vector<std::string> maps(const std::vector<ModuleMap>& fs);

    void resolution(const Resolution& r, std::optional<DimensionVerdict> claim = std::nullopt);
    void approximation(const ApproxSequence& s, const Module& q, const std::string& claim_kind,
                       const DimensionVerdict& claim, std::size_t cap);
    void hom_basis(const Module& m, const Module& n, const std::vector<ModuleMap>& basis);
    void hom_dim(const Module& m, const Module& n, std::size_t dim);
    /// pd (or id, through the dual) claimed by a syzygy graph: one minimal
    /// projective cover per isomorphism class of indecomposable syzygy, with
    /// the kernel split into class representatives.
    void dimension(const Module& m, DimensionKind kind, const DimensionVerdict& claim);
    /// dim Ext^i(m, n), i = 1 .. dims.size(), through the syzygy graph of m.
    void ext(const Module& m, const Module& n, const std::vector<std::size_t>& dims);
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void decomposition(const Module& m, const std::vector<Summand>& summands);
    void translate(const Module& m, std::size_t n, bool inverse, const Module& result);
    void isomorphism(const ModuleMap& f);
    void not_in_add(const Module& x, const Module& q);
    void add(json check) { checks_.push_back(std::move(check)); }

    json to_json() const;

private:
    std::vector<Algebra> algebras_;
    std::vector<Module> modules_;
    std::vector<std::string> module_names_;
    json algebra_json_ = json::object();
    json module_json_ = json::object();
    json map_json_ = json::object();
    json checks_ = json::array();
    std::size_t maps_ = 0;
    std::uint64_t seed_ = 0;

    json syzygy_graph(const Module& anchor, std::size_t levels);
};

json matrix_json(const Matrix& m);
json verdict_json(const DimensionVerdict& v);

struct VerifyOutcome {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

/// Re-checks every certificate of a report; `base_dir` resolves input paths
/// for the digest comparison.
VerifyOutcome verify_report(const json& report, const std::string& base_dir, std::size_t max_path_len);

}  // namespace relag::cli
