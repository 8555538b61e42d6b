#include "cls/report.hpp"

#include <ostream>

namespace cls {

namespace {
const char* status_name(Report::Status s) {
    switch (s) {
        case Report::Status::PASS: return "PASS";
        case Report::Status::FAIL: return "FAIL";
        case Report::Status::SKIPPED: return "SKIPPED";
    }
    return "?";
}
}  // namespace

void Report::add(const std::string& check_id, Status status, int count, const std::string& detail) {
    lines_.push_back({check_id, status, count, detail});
}

bool Report::all_pass() const {
    for (const auto& line : lines_)
        if (line.status == Status::FAIL) return false;
    return true;
}

void Report::print(std::ostream& os) const {
    os << "command: " << command_ << "\n";
    for (const auto& note : notes_) os << note << "\n";
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& line : lines_) {
        os << "#R " << line.id << " " << status_name(line.status) << " " << line.count << "\n";
        if (!line.detail.empty()) os << "   " << line.detail << "\n";
        switch (line.status) {
            case Status::PASS: ++pass; break;
            case Status::FAIL: ++fail; break;
            case Status::SKIPPED: ++skipped; break;
        }
    }
    os << "summary: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
    os << (all_pass() ? "result: PASS" : "result: FAIL") << "\n";
}

}  // namespace cls
