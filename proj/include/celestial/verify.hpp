#pragma once
// The full verification suite: one group of exact checks per result.

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace celestial::verify {

struct Criterion {
    int number = 0;
    std::string id;   // group id accepted by --only
    std::string ref;  // result the group reproduces
    std::string title;
};
const std::vector<Criterion>& criteria();

struct Entry {
    std::string check_id;  // "<group>.<name>"
    std::string group;
    std::string paper_ref;
    bool pass = false;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 1;
    int threads = 1;
    std::string only;  // group id or check id; empty runs everything
};

struct Report {
    std::vector<Entry> entries;
    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0 && !entries.empty(); }
    // Per criterion: pass iff every entry of its group passed; groups without entries are omitted.
    std::vector<std::pair<Criterion, bool>> criteria_status() const;
};

// Throws std::invalid_argument when `only` matches no group or check.
Report run(const Options& opt);

void print_table(std::ostream& out, const Report& r);
nlohmann::json to_json(const Report& r);

}  // namespace celestial::verify
