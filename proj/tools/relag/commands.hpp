#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relag::cli {

struct Options {
    std::string command;
    std::vector<std::string> files;

    std::size_t cap = default_cap;
    bool json = false;
    std::uint64_t seed = 0;
    bool force_below_bound = false;
    std::size_t max_path_len = 20;

    std::size_t degree = 3;
    bool injective = false;
    std::size_t length = 8;
    std::size_t n = 1;
    bool inverse = false;
    bool codominant = false;
    bool codim = false;
    bool cogenerator = false;
    std::size_t qn = 0, qm = 0, ql = 0;
    bool from_qpct = false;
    std::string write_prefix;
    std::size_t left_depth = 0, right_depth = 0;
    std::vector<std::string> candidates;
};

struct RunResult {
    json report;
    /// 0 ok, 1 mathematical no, 2 error
    int exit_code = 0;
};

RunResult run(const Options& o);
json options_json(const Options& o);
/// Human-readable summary; the first line reads ok, no or error.
std::string render_text(const json& report, int exit_code);

}  // namespace relag::cli
