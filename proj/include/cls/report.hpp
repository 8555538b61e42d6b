#ifndef CLS_REPORT_HPP
#define CLS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cls {

/// One verification report. Human lines plus stable machine lines of the
/// form `#R <check-id> <PASS|FAIL|SKIPPED> <count>`; the count is the number
/// of residuals checked (PASS), failing (FAIL), or skipped (SKIPPED).
class Report {
public:
    enum class Status { PASS, FAIL, SKIPPED };

    explicit Report(std::string command_echo) : command_(std::move(command_echo)) {}

    void add(const std::string& check_id, Status status, int count, const std::string& detail = "");
    void note(const std::string& text) { notes_.push_back(text); }

    bool all_pass() const;
    /// 0 when every line passes, 1 otherwise.
    int exit_code() const { return all_pass() ? 0 : 1; }

    void print(std::ostream& os) const;

private:
    struct Line {
        std::string id;
        Status status;
        int count;
        std::string detail;
    };
    std::string command_;
    std::vector<Line> lines_;
    std::vector<std::string> notes_;
};

}  // namespace cls

#endif
