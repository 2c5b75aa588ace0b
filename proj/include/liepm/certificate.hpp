#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace liepm {

/// Machine-readable pass/fail record of a finite check.
///
/// `degree` is the filtration bound a U(L) computation was run at; `rank` and
/// `target` are the achieved and required dimensions when the check is a
/// spanning test. A passing span certificate always has rank == target.
struct Certificate {
    std::string check;
    bool verdict = false;
    std::optional<unsigned> degree;
    std::optional<std::size_t> rank;
    std::optional<std::size_t> target;
    std::vector<std::string> witnesses;
    std::optional<std::uint64_t> seed;
    double elapsed_ms = 0.0;
    std::map<std::string, std::string> details;

    /// Equality ignores elapsed_ms.
    friend bool operator==(const Certificate& a, const Certificate& b);
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
/// Line-oriented `key: value` block.
std::string to_text(const Certificate& c);

/// Stopwatch that writes elapsed wall time into a certificate.
class ScopedTimer {
public:
    explicit ScopedTimer(Certificate& c) : cert_(c), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer() {
        const auto end = std::chrono::steady_clock::now();
        cert_.elapsed_ms = std::chrono::duration<double, std::milli>(end - start_).count();
    }
    ScopedTimer(const ScopedTimer&) = delete;
    ScopedTimer& operator=(const ScopedTimer&) = delete;

private:
    Certificate& cert_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace liepm
