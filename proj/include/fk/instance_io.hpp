#ifndef FK_INSTANCE_IO_HPP
#define FK_INSTANCE_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fk/extraction.hpp"
#include "fk/interval.hpp"
#include "fk/reduction.hpp"

namespace fk {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Instance format: the first significant line is the ground set size n;
// each further significant line is "lo hi". '#' starts a comment, blank
// lines are skipped, CRLF is tolerated.
Family parse_instance(std::string_view text);

std::string serialize(const Family& family);

std::string format_interval(Interval f);  // "[lo..hi)"

// The two-line result block: the generating family ascending by (hi, lo),
// then the postorder extraction sequence as "x[lo..hi)" entries.
struct Solution {
    ReductionResult reduction;
    std::vector<TreeLabel> order;
};

Solution solve(const Family& family);
std::string format_solution(const Solution& solution);

}  // namespace fk

#endif
