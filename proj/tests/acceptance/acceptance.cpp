// One line per acceptance criterion; exit status 1 if any is red.
#include <cstdio>
#include <set>

#include <CLI11.hpp>

#include "bo/verify.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    bool props = false;
    app.add_option("--only", only, "run only these criterion ids");
    app.add_flag("--properties", props, "run the property checks instead");
    CLI11_PARSE(app, argc, argv);

    const std::set<int> wanted(only.begin(), only.end());
    int failed = 0;
    for (const auto& c : props ? bo::verify::properties() : bo::verify::criteria()) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        const auto o = bo::verify::run_timed(c);
        std::printf("[%s] %3d  %s (%.1fs)\n        %s\n", o.passed ? "PASS" : "FAIL", o.id, o.name.c_str(), o.seconds,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.passed;
    }
    return failed ? 1 : 0;
}
