#pragma once
#include <string>
#include <vector>

namespace binocobar {

struct CheckCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

/* Result of an axiom or identity suite: one case per checked instance. */
struct CheckReport {
    std::string suite;
    std::vector<CheckCase> cases;

    void add(std::string name, bool ok, std::string detail = "") {
        cases.push_back({std::move(name), ok, std::move(detail)});
    }
    bool pass() const {
        for (auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (auto& c : cases)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace binocobar
