#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/errors.hpp"

namespace gk::ledger {

using nlohmann::json;

enum class ClaimKind {
    ExactValue,
    OrderBound,
    BoundSearch,
    Divisibility,
    Enumeration,
    NotInOmega,
    InequalityGrid,
    MersenneScan,
};

inline const char* to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::ExactValue: return "ExactValue";
        case ClaimKind::OrderBound: return "OrderBound";
        case ClaimKind::BoundSearch: return "BoundSearch";
        case ClaimKind::Divisibility: return "Divisibility";
        case ClaimKind::Enumeration: return "Enumeration";
        case ClaimKind::NotInOmega: return "NotInOmega";
        case ClaimKind::InequalityGrid: return "InequalityGrid";
        case ClaimKind::MersenneScan: return "MersenneScan";
    }
    return "?";
}

inline ClaimKind parse_kind(const std::string& s) {
    for (auto k : {ClaimKind::ExactValue, ClaimKind::OrderBound, ClaimKind::BoundSearch, ClaimKind::Divisibility,
                   ClaimKind::Enumeration, ClaimKind::NotInOmega, ClaimKind::InequalityGrid,
                   ClaimKind::MersenneScan})
        if (s == to_string(k)) return k;
    throw InvalidArgument("unknown claim kind: " + s);
}

enum class Status { Pass, Fail, Skipped, Inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct Claim {
    std::string id;
    ClaimKind kind = ClaimKind::ExactValue;
    std::string paper_ref;  // neutral locator of the proof step
    std::string quote;      // verbatim math fragment of the source
    std::string note;
    bool reconstructed = false;
    std::optional<std::string> skip_reason;
    json payload;

    static Claim from_json(const json& j) {
        Claim c;
        try {
            c.id = j.at("id").get<std::string>();
            c.kind = parse_kind(j.at("kind").get<std::string>());
            c.paper_ref = j.at("paper_ref").get<std::string>();
            c.quote = j.at("quote").get<std::string>();
            c.note = j.value("note", "");
            c.reconstructed = j.value("reconstructed", false);
            if (j.contains("skip_reason")) c.skip_reason = j.at("skip_reason").get<std::string>();
            c.payload = j.at("payload");
            if (!c.payload.is_object()) throw InvalidArgument("malformed claim " + c.id + ": payload is not an object");
        } catch (const json::exception& e) {
            throw InvalidArgument("malformed claim " + (c.id.empty() ? std::string("<no id>") : c.id) + ": " +
                                  e.what());
        }
        if (c.id.empty()) throw InvalidArgument("claim with empty id");
        return c;
    }
};

struct ClaimResult {
    std::string id;
    ClaimKind kind = ClaimKind::ExactValue;
    Status status = Status::Fail;
    std::string evidence;
    std::chrono::milliseconds elapsed{0};
};

}  // namespace gk::ledger
