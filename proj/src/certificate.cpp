#include "liepm/certificate.hpp"

#include <sstream>

namespace liepm {

bool operator==(const Certificate& a, const Certificate& b) {
    return a.check == b.check && a.verdict == b.verdict && a.degree == b.degree && a.rank == b.rank &&
           a.target == b.target && a.witnesses == b.witnesses && a.seed == b.seed && a.details == b.details;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["check"] = c.check;
    j["verdict"] = c.verdict ? "pass" : "fail";
    j["degree"] = c.degree ? nlohmann::json(*c.degree) : nlohmann::json(nullptr);
    j["rank"] = c.rank ? nlohmann::json(*c.rank) : nlohmann::json(nullptr);
    j["target"] = c.target ? nlohmann::json(*c.target) : nlohmann::json(nullptr);
    j["witnesses"] = c.witnesses;
    j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
    j["elapsed_ms"] = c.elapsed_ms;
    j["details"] = c.details;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.check = j.value("check", std::string{});
    c.verdict = j.at("verdict").get<std::string>() == "pass";
    if (!j.at("degree").is_null()) {
        c.degree = j.at("degree").get<unsigned>();
    }
    if (!j.at("rank").is_null()) {
        c.rank = j.at("rank").get<std::size_t>();
    }
    if (!j.at("target").is_null()) {
        c.target = j.at("target").get<std::size_t>();
    }
    c.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    if (!j.at("seed").is_null()) {
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    c.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("details")) {
        c.details = j.at("details").get<std::map<std::string, std::string>>();
    }
    return c;
}

std::string to_text(const Certificate& c) {
    std::ostringstream out;
    out << "check: " << c.check << '\n';
    out << "verdict: " << (c.verdict ? "pass" : "fail") << '\n';
    if (c.degree) {
        out << "degree: " << *c.degree << '\n';
    }
    if (c.rank) {
        out << "rank: " << *c.rank << '\n';
    }
    if (c.target) {
        out << "target: " << *c.target << '\n';
    }
    for (const auto& w : c.witnesses) {
        out << "witness: " << w << '\n';
    }
    if (c.seed) {
        out << "seed: " << *c.seed << '\n';
    }
    for (const auto& [k, v] : c.details) {
        out << k << ": " << v << '\n';
    }
    out << "elapsed_ms: " << c.elapsed_ms << '\n';
    return out.str();
}

}  // namespace liepm
