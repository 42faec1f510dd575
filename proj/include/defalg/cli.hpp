#pragma once

#include "defalg/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace defalg::cli {

struct Options {
    std::string command;
    std::string action;
    std::string input;
    std::string format = "text";
    int truncate = 4;
    int max_arity = 0;   // 0: per-command default
    int dim = 0;         // 0: taken from the input
    std::uint64_t seed = 7;
    std::string mode = "free";
    std::string model = "derived";
    std::string inverse = "factorial";
    std::string op;
    std::vector<int> only;
    bool timing = false;
};

/// Report plus optional human-readable lines for text output.
struct Outcome {
    CheckReport report;
    std::vector<std::string> lines;
};

using Handler = Outcome (*)(const Options&);

struct Subcommand {
    std::string name;
    std::string summary;
    std::vector<std::string> operations;  // library operations reached by this command
    Handler handler;
};

const std::vector<Subcommand>& dispatch_table();
/// Every library operation that some subcommand must reach.
const std::vector<std::string>& module_operations();

/// Free generators a, b: the homogeneous parts of x written in right-nested brackets.
/// Each entry is (degree, coefficient, bracket text).
struct LieTerm {
    int degree;
    Scalar coeff;
    std::string bracket;
};
std::vector<LieTerm> lie_coordinates(const TensorSeries& x);

/// Unsuspended structure file for s, readable by parse_linfty.
Json linfty_json(const LInftyStructure& s);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace defalg::cli
