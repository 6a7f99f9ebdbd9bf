#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dap {

/// One verified identity / property instance inside a check report.
struct CheckEntry {
    enum class Status { pass, fail, skipped };

    std::string identity;
    std::vector<std::string> inputs;
    Status status = Status::pass;
    std::string lhs;
    std::string rhs;
    std::string note; // optional commentary, e.g. recorded resolutions

    static CheckEntry passed(std::string identity, std::vector<std::string> inputs,
                             std::string lhs = "", std::string rhs = "");
    static CheckEntry failed(std::string identity, std::vector<std::string> inputs,
                             std::string lhs, std::string rhs);
    static CheckEntry skip(std::string identity, std::vector<std::string> inputs,
                           std::string note);
    static CheckEntry of(bool ok, std::string identity, std::vector<std::string> inputs,
                         std::string lhs = "", std::string rhs = "");
};

/// Plain list of check entries; a report "passes" when nothing failed
/// (skipped entries are hypothesis misses or deliberately unasserted
/// evaluations, not failures).
class Report {
public:
    void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
    void merge(const Report& other);

    std::span<const CheckEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t failures() const;
    std::size_t passes() const;
    std::size_t skips() const;
    bool all_passed() const { return failures() == 0; }

    /// First failing entry's identity, or empty.
    std::string first_failure() const;

    std::string to_json(int indent = -1) const;

private:
    std::vector<CheckEntry> entries_;
};

} // namespace dap
