#pragma once

// Structured verdicts. Every check_* operation returns a Report: the check
// passes iff the defect list is empty, and defects are sorted by location so
// reports (and their serialized form) are deterministic.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nhl/errors.hpp"

namespace nhl {

struct Defect {
    std::string location;
    std::string expected;
    std::string actual;

    friend bool operator==(const Defect& a, const Defect& b) {
        return a.location == b.location && a.expected == b.expected && a.actual == b.actual;
    }
};

struct Report {
    std::string check;
    std::vector<Defect> defects;
    std::map<std::string, std::string> metrics;

    bool pass() const { return defects.empty(); }

    void add_defect(std::string location, std::string expected, std::string actual) {
        defects.push_back(Defect{std::move(location), std::move(expected), std::move(actual)});
    }

    void sort_defects() {
        std::sort(defects.begin(), defects.end(), [](const Defect& a, const Defect& b) {
            if (a.location != b.location) return a.location < b.location;
            if (a.expected != b.expected) return a.expected < b.expected;
            return a.actual < b.actual;
        });
    }

    // precondition chaining: turn a failed prerequisite check into an input error
    void require_pass() const {
        if (pass()) return;
        throw input_error("precondition failed: " + check + " reports " +
                          std::to_string(defects.size()) + " defect(s), first at " +
                          defects.front().location);
    }

    void merge(const Report& o) {
        defects.insert(defects.end(), o.defects.begin(), o.defects.end());
        for (const auto& [k, v] : o.metrics) metrics.emplace(o.check + "." + k, v);
    }
};

} // namespace nhl
