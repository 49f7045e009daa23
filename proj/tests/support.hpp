#pragma once

#include "relag/formats.hpp"
#include "relag/repcat.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace relag::testing {

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(RELAG_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Algebra load_algebra(const std::string& name) { return build_algebra(parse_algebra_file(read_fixture(name))); }

inline Module load_module(const std::string& name, const Algebra& a) { return parse_module_file(read_fixture(name), a); }

inline std::size_t vertex(const Algebra& a, const std::string& label) { return *a.quiver().vertex_index(label); }

inline Module projective(const Algebra& a, const std::string& v, Side s = Side::left)
{
    return structural_module(a, vertex(a, v), StructuralKind::projective, s);
}

inline Module injective(const Algebra& a, const std::string& v, Side s = Side::left)
{
    return structural_module(a, vertex(a, v), StructuralKind::injective, s);
}

inline Module simple(const Algebra& a, const std::string& v, Side s = Side::left)
{
    return structural_module(a, vertex(a, v), StructuralKind::simple, s);
}

inline std::vector<std::size_t> dims_by_label(const Module& m, const std::vector<std::string>& labels)
{
    std::vector<std::size_t> out;
    for (auto& l : labels) out.push_back(m.dim(vertex(m.algebra(), l)));
    return out;
}

/// Cokernel of a random map between small sums of projectives: every module
/// arises this way, so these cover the category at small scale.
inline Module random_module(const Algebra& a, Side side, std::mt19937_64& rng, std::size_t max_summands = 2)
{
    std::uniform_int_distribution<std::size_t> count(1, max_summands);
    std::uniform_int_distribution<std::size_t> pick(0, a.num_vertices() - 1);
    std::vector<Module> p0, p1;
    for (std::size_t i = count(rng); i > 0; --i)
        p0.push_back(structural_module(a, pick(rng), StructuralKind::projective, side));
    for (std::size_t i = count(rng); i > 0; --i)
        p1.push_back(structural_module(a, pick(rng), StructuralKind::projective, side));
    auto s0 = direct_sum_with_maps(p0, a, side);
    auto s1 = direct_sum_with_maps(p1, a, side);
    std::vector<std::vector<ModuleMap>> parts(p0.size());
    for (std::size_t i = 0; i < p0.size(); ++i)
        for (std::size_t j = 0; j < p1.size(); ++j) {
            auto basis = hom_basis(p1[j], p0[i]);
            Matrix c(a.field(), basis.size(), 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                std::int64_t v = a.field().is_rational()
                                     ? std::uniform_int_distribution<std::int64_t>(-2, 2)(rng)
                                     : std::uniform_int_distribution<std::int64_t>(0, a.field().characteristic() - 1)(rng);
                c.set_int(k, 0, v);
            }
            parts[i].push_back(combine(basis, c, p1[j], p0[i]));
        }
    return cokernel(block_map(s1, s0, parts)).module;
}

}  // namespace relag::testing
