#include "brst/report.hpp"

#include <algorithm>

namespace brst {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    case Status::not_attempted:
        return "not attempted";
    }
    return "unknown";
}

void ResidualTally::add_summary(const std::string& input, std::size_t nonzero, int max_degree,
                                const std::string& text)
{
    ++probes_;
    if (nonzero == 0)
        return;
    nonzero_ += nonzero;
    max_degree_ = std::max(max_degree_, max_degree);
    if (witnesses_.size() < max_witnesses_)
        witnesses_.push_back("input " + input + " -> residual " + truncate_text(text));
}

void ResidualTally::fail(const std::string& input, const std::string& what)
{
    ++probes_;
    forced_fail_ = true;
    if (witnesses_.size() < max_witnesses_)
        witnesses_.push_back("input " + input + " -> " + truncate_text(what));
}

void ResidualTally::finish(CheckRecord& rec) const
{
    rec.nonzero_coefficients = nonzero_;
    rec.max_residual_degree = max_degree_;
    rec.probes = probes_;
    rec.witnesses = witnesses_;
    rec.status = clean() ? Status::pass : Status::fail;
}

std::string ResidualTally::truncate_text(const std::string& s, std::size_t limit)
{
    if (s.size() <= limit)
        return s;
    return s.substr(0, limit) + " ...";
}

} // namespace brst
