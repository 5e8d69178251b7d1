// Runs the shipped claim catalogue, or the claims whose id starts with argv[1].

#include <iostream>

#include "gk/ledger.hpp"

int main(int argc, char** argv) {
    using namespace gk::ledger;
    const auto cat = load_catalogue();
    std::optional<std::string> filter;
    if (argc > 1) filter = argv[1];
    const auto rep = run_catalogue(cat, filter);
    for (const auto& r : rep.results) std::cout << to_string(r.status) << "  " << r.id << "  " << r.evidence << '\n';
    std::cout << rep.summary.pass << " pass, " << rep.summary.fail << " fail\n";
    return rep.exit_code();
}
