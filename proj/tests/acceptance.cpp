// One PASS/FAIL line per acceptance criterion. argv[1] is the defalg binary.

#include "defalg/suite.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

using namespace defalg;

namespace {

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = 7;
    int failed = 0;
    for (int id = 1; id <= library_criteria(); ++id) {
        CriterionResult r = run_criterion(id, seed);
        bool in_budget = r.ms <= criterion_budget_ms(id);
        bool ok = r.pass && r.violations.empty() && in_budget;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS " : "FAIL ") << id << " " << r.name << " (" << r.checks << " checks, "
                  << static_cast<long>(r.ms) << " ms)";
        if (!in_budget) std::cout << " over budget " << static_cast<long>(criterion_budget_ms(id)) << " ms";
        if (!r.note.empty()) std::cout << ": " << r.note;
        std::cout << "\n";
        for (std::size_t k = 0; k < r.violations.size() && k < 3; ++k)
            std::cout << "    " << r.violations[k].location << ": " << r.violations[k].message << "\n";
        if (r.violations.size() > 3) std::cout << "    ... " << r.violations.size() - 3 << " more\n";
    }

    const int id = 13;
    bool ok = false;
    std::string why = "no defalg binary given";
    if (argc > 1) {
        std::string cmd = std::string("\"") + argv[1] + "\" suite --seed 7 --format json";
        int s1 = 0, s2 = 0;
        std::string a = capture(cmd, s1), b = capture(cmd, s2);
        ok = !a.empty() && a == b && s1 == s2;
        why = ok ? std::to_string(a.size()) + " identical bytes" : "reports differ";
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << id << " " << criterion_name(id) << ": " << why << "\n";
    std::cout << failed << " of " << library_criteria() + 1 << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}
