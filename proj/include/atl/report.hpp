#ifndef ATL_REPORT_HPP
#define ATL_REPORT_HPP

#include <string>
#include <vector>

#include "atl/rep.hpp"

namespace atl {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Line-oriented verification report: "PASS <name>" or "FAIL <name>: <detail>".
class Report {
public:
    void add(std::string name, bool pass, std::string detail = {});
    void append(const Report& other);
    bool all_pass() const;
    std::size_t failures() const;
    const std::vector<CheckLine>& lines() const { return lines_; }
    std::string text() const;

private:
    std::vector<CheckLine> lines_;
};

/// First differing entry of two maps, e.g. "at (+-, -+): 1/2 vs 0".
std::string describe_difference(const WeightMap& lhs, const WeightMap& rhs);

} // namespace atl

#endif // ATL_REPORT_HPP
