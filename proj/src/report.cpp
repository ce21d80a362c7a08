#include "atl/report.hpp"

#include <algorithm>

namespace atl {

void Report::add(std::string name, bool pass, std::string detail) {
    lines_.push_back({std::move(name), pass, std::move(detail)});
}

void Report::append(const Report& other) { lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end()); }

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(lines_.begin(), lines_.end(), [](const CheckLine& l) { return !l.pass; }));
}

std::string Report::text() const {
    std::string out;
    for (const auto& l : lines_) {
        out += l.pass ? "PASS " : "FAIL ";
        out += l.name;
        if (!l.detail.empty()) out += ": " + l.detail;
        out += '\n';
    }
    return out;
}

std::string describe_difference(const WeightMap& lhs, const WeightMap& rhs) {
    if (lhs.dom_len() != rhs.dom_len() || lhs.cod_len() != rhs.cod_len())
        return "arity " + std::to_string(lhs.dom_len()) + "->" + std::to_string(lhs.cod_len()) + " vs " +
               std::to_string(rhs.dom_len()) + "->" + std::to_string(rhs.cod_len());
    WeightMap diff = lhs - rhs;
    if (diff.is_zero()) return {};
    const auto& [key, value] = *diff.entries().begin();
    return "at (" + sign_string(key.first, lhs.cod_len()) + ", " + sign_string(key.second, lhs.dom_len()) +
           "): " + format_scalar(lhs.at(key.first, key.second)) + " vs " + format_scalar(rhs.at(key.first, key.second));
}

} // namespace atl
