// Builds GK(L) for a spec given on the command line (default L:9:5), prints
// its maximum cocliques and writes the DOT export to stdout.

#include <iostream>

#include "gk/primegraph.hpp"

int main(int argc, char** argv) {
    using namespace gk::primegraph;
    const auto L = gk::cgroups::GroupSpec::parse(argc > 1 ? argv[1] : "L:9:5");
    const auto g = build_graph(L);
    const auto rep = max_cocliques(g);
    std::cerr << L.name() << ": t = " << rep.t << ", " << rep.coclique_count << " maximum coclique(s)\n";
    for (const auto& rho : rep.max_cocliques) {
        std::cerr << " ";
        for (const auto& r : rho) std::cerr << ' ' << r;
        std::cerr << '\n';
    }
    std::cout << to_dot(g);
}
