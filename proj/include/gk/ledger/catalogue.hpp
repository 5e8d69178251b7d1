#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/ledger/checks.hpp"
#include "gk/ledger/claim.hpp"

#ifndef GK_DEFAULT_CATALOGUE
#define GK_DEFAULT_CATALOGUE "data/claims.json"
#endif

namespace gk::ledger {

inline constexpr const char* kDefaultCataloguePath = GK_DEFAULT_CATALOGUE;

struct Catalogue {
    std::vector<Claim> claims;

    const Claim* find(const std::string& id) const {
        for (const auto& c : claims)
            if (c.id == id) return &c;
        return nullptr;
    }
};

inline Catalogue parse_catalogue(const json& j) {
    Catalogue cat;
    std::set<std::string> ids;
    for (const auto& entry : j.at("claims")) {
        Claim c = Claim::from_json(entry);
        if (!ids.insert(c.id).second) throw InvalidArgument("duplicate claim id " + c.id);
        cat.claims.push_back(std::move(c));
    }
    return cat;
}

inline Catalogue load_catalogue(const std::string& path = kDefaultCataloguePath) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open catalogue " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidArgument("catalogue " + path + " is not valid JSON: " + e.what());
    }
    return parse_catalogue(j);
}

struct Summary {
    long pass = 0, fail = 0, skipped = 0, inconclusive = 0;
    long total() const { return pass + fail + skipped + inconclusive; }
};

struct Report {
    std::vector<ClaimResult> results;  // sorted by id
    Summary summary;

    int exit_code() const { return summary.fail == 0 ? 0 : 1; }
};

/// Runs one claim; checker errors are reported as FAIL so a malformed entry
/// cannot pass silently.
inline ClaimResult run_claim(const Claim& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ClaimResult r;
    r.id = c.id;
    r.kind = c.kind;
    try {
        auto out = check_claim(c);
        r.status = out.status;
        r.evidence = std::move(out.evidence);
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.evidence = std::string("error: ") + e.what();
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return r;
}

/// Runs every claim whose id starts with filter; an unmatched filter is an error.
inline Report run_catalogue(const Catalogue& cat, const std::optional<std::string>& filter = std::nullopt,
                            unsigned threads = 0) {
    std::vector<const Claim*> todo;
    for (const auto& c : cat.claims)
        if (!filter || c.id.rfind(*filter, 0) == 0) todo.push_back(&c);
    if (filter && todo.empty()) throw InvalidArgument("no claim id starts with \"" + *filter + "\"");

    Report rep;
    rep.results.resize(todo.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, todo.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) rep.results[i] = run_claim(*todo[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(rep.results.begin(), rep.results.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    for (const auto& r : rep.results) switch (r.status) {
            case Status::Pass: ++rep.summary.pass; break;
            case Status::Fail: ++rep.summary.fail; break;
            case Status::Skipped: ++rep.summary.skipped; break;
            case Status::Inconclusive: ++rep.summary.inconclusive; break;
        }
    return rep;
}

inline json to_json(const Report& rep, const Catalogue& cat, bool with_timing = true) {
    json claims = json::array();
    for (const auto& r : rep.results) {
        const Claim* c = cat.find(r.id);
        json j{{"id", r.id},
               {"kind", to_string(r.kind)},
               {"status", to_string(r.status)},
               {"paper_ref", c ? c->paper_ref : ""},
               {"quote", c ? c->quote : ""},
               {"evidence", r.evidence}};
        if (c && c->reconstructed) j["reconstructed"] = true;
        if (with_timing) j["ms"] = r.elapsed.count();
        claims.push_back(std::move(j));
    }
    return {{"claims", claims},
            {"summary",
             {{"pass", rep.summary.pass},
              {"fail", rep.summary.fail},
              {"skipped", rep.summary.skipped},
              {"inconclusive", rep.summary.inconclusive}}}};
}

}  // namespace gk::ledger
