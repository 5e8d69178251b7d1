// quote_lint CATALOGUE SOURCE
//
// Checks that every claim quote occurs verbatim in SOURCE and that the
// free-text fields carry no section-style references. Exit 0 when clean,
// 1 on findings, 2 on bad arguments.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: quote_lint CATALOGUE SOURCE\n";
        return 2;
    }
    nlohmann::json cat;
    std::string source;
    try {
        cat = nlohmann::json::parse(slurp(argv[1]));
        source = slurp(argv[2]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const char* banned[] = {"Lemma", "Theorem", "Proposition", "Section", "Remark", "arXiv", "\\ref", "§"};
    long findings = 0, checked = 0;
    for (const auto& c : cat.at("claims")) {
        const std::string id = c.at("id").get<std::string>();
        const std::string quote = c.at("quote").get<std::string>();
        ++checked;
        if (quote.empty() || source.find(quote) == std::string::npos) {
            std::cout << id << ": quote not found verbatim: " << quote << '\n';
            ++findings;
        }
        for (const char* field : {"paper_ref", "note", "skip_reason"}) {
            if (!c.contains(field)) continue;
            const std::string text = c.at(field).get<std::string>();
            for (const char* b : banned)
                if (text.find(b) != std::string::npos) {
                    std::cout << id << ": " << field << " mentions \"" << b << "\"\n";
                    ++findings;
                }
        }
    }
    std::cout << checked << " quotes checked, " << findings << " finding(s)\n";
    return findings == 0 ? 0 : 1;
}
