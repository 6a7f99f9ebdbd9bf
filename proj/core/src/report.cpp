#include "dap/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace dap {

namespace {

const char* status_name(CheckEntry::Status s) {
    switch (s) {
        case CheckEntry::Status::pass: return "pass";
        case CheckEntry::Status::fail: return "fail";
        case CheckEntry::Status::skipped: return "skipped";
    }
    return "?";
}

} // namespace

CheckEntry CheckEntry::passed(std::string identity, std::vector<std::string> inputs,
                              std::string lhs, std::string rhs) {
    return CheckEntry{std::move(identity), std::move(inputs), Status::pass,
                      std::move(lhs), std::move(rhs), ""};
}

CheckEntry CheckEntry::failed(std::string identity, std::vector<std::string> inputs,
                              std::string lhs, std::string rhs) {
    return CheckEntry{std::move(identity), std::move(inputs), Status::fail,
                      std::move(lhs), std::move(rhs), ""};
}

CheckEntry CheckEntry::skip(std::string identity, std::vector<std::string> inputs,
                            std::string note) {
    return CheckEntry{std::move(identity), std::move(inputs), Status::skipped,
                      "", "", std::move(note)};
}

CheckEntry CheckEntry::of(bool ok, std::string identity, std::vector<std::string> inputs,
                          std::string lhs, std::string rhs) {
    return ok ? passed(std::move(identity), std::move(inputs), std::move(lhs), std::move(rhs))
              : failed(std::move(identity), std::move(inputs), std::move(lhs), std::move(rhs));
}

void Report::merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(),
        [](const CheckEntry& e) { return e.status == CheckEntry::Status::fail; }));
}

std::size_t Report::passes() const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(),
        [](const CheckEntry& e) { return e.status == CheckEntry::Status::pass; }));
}

std::size_t Report::skips() const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(),
        [](const CheckEntry& e) { return e.status == CheckEntry::Status::skipped; }));
}

std::string Report::first_failure() const {
    for (const auto& e : entries_) {
        if (e.status == CheckEntry::Status::fail) return e.identity;
    }
    return "";
}

std::string Report::to_json(int indent) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json je;
        je["identity"] = e.identity;
        je["inputs"] = e.inputs;
        je["status"] = status_name(e.status);
        je["lhs"] = e.lhs;
        je["rhs"] = e.rhs;
        if (!e.note.empty()) je["note"] = e.note;
        out.push_back(je);
    }
    return out.dump(indent);
}

} // namespace dap
