#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace brst {

enum class Status { pass, fail, skipped, not_attempted };

std::string to_string(Status s);

// Outcome of one identity check. A failing record always carries at least
// one witness: the offending input and a nonzero residual coefficient.
struct CheckRecord {
    std::string id;
    std::string anchor;
    Status status = Status::pass;
    std::size_t nonzero_coefficients = 0;
    int max_residual_degree = -1;
    std::size_t probes = 0;
    double wall_ms = 0.0;
    std::vector<std::string> witnesses;
    std::string detail;

    bool passed() const { return status == Status::pass; }
};

inline CheckRecord make_record(std::string id, std::string anchor)
{
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    return r;
}

// Accumulates residuals of one check. Residual types provide
// term_count() and max_poly_degree(), plus str().
class ResidualTally {
public:
    explicit ResidualTally(std::size_t max_witnesses = 3) : max_witnesses_(max_witnesses) {}

    template <class R>
    void add(const std::string& input, const R& residual)
    {
        if (residual.is_zero())
            add_summary(input, 0, -1, {});
        else
            add_summary(input, residual.term_count(), residual.max_poly_degree(), residual.str());
    }

    // Untyped form of add(): a residual with `nonzero` nonzero coefficients.
    void add_summary(const std::string& input, std::size_t nonzero, int max_degree, const std::string& text);

    // Records a failure that has no algebraic residual (e.g. an exception).
    void fail(const std::string& input, const std::string& what);

    bool clean() const { return nonzero_ == 0 && !forced_fail_; }
    std::size_t probes() const { return probes_; }

    // Fills the residual fields and status of `rec`.
    void finish(CheckRecord& rec) const;

    static std::string truncate_text(const std::string& s, std::size_t limit = 240);

private:
    std::size_t max_witnesses_;
    std::size_t probes_ = 0;
    std::size_t nonzero_ = 0;
    int max_degree_ = -1;
    bool forced_fail_ = false;
    std::vector<std::string> witnesses_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace brst
