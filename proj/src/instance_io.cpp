#include "fk/instance_io.hpp"

#include <charconv>

namespace fk {

namespace {

std::string_view strip_line(std::string_view line) {
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
    return line;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

int parse_int(std::string_view field, int line_number) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line_number, "expected an integer, got '" + std::string(field) + "'");
    return value;
}

}  // namespace

Family parse_instance(std::string_view text) {
    bool have_ground = false;
    int n = 0;
    std::vector<Interval> members;

    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_number;

        std::vector<std::string_view> fields = split_fields(strip_line(raw));
        if (fields.empty())
            continue;

        if (!have_ground) {
            if (fields.size() != 1)
                throw ParseError(line_number, "header must be a single integer (the ground set size)");
            n = parse_int(fields[0], line_number);
            if (n < 0)
                throw ParseError(line_number, "ground set size must be nonnegative");
            have_ground = true;
            continue;
        }

        if (fields.size() != 2)
            throw ParseError(line_number, "expected 'lo hi'");
        int lo = parse_int(fields[0], line_number);
        int hi = parse_int(fields[1], line_number);
        if (lo >= hi)
            throw ParseError(line_number, "empty interval: lo must be less than hi");
        if (lo < 0 || hi > n)
            throw ParseError(line_number, "endpoint out of range for ground set size " +
                                              std::to_string(n));
        members.emplace_back(lo, hi);
    }

    if (!have_ground)
        throw ParseError(line_number, "missing header line with the ground set size");
    return Family(n, std::move(members));
}

std::string serialize(const Family& family) {
    std::string out = std::to_string(family.ground_size());
    out.push_back('\n');
    for (const Interval& f : family.members()) {
        out += std::to_string(f.lo);
        out.push_back(' ');
        out += std::to_string(f.hi);
        out.push_back('\n');
    }
    return out;
}

std::string format_interval(Interval f) {
    return "[" + std::to_string(f.lo) + ".." + std::to_string(f.hi) + ")";
}

Solution solve(const Family& family) {
    Solution solution{fk_run(family), {}};
    if (!family.empty()) {
        std::unique_ptr<TreeNode> root =
            build_tree(family, solution.reduction.reduced, family.full_range());
        solution.order = postorder(root.get());
    }
    return solution;
}

std::string format_solution(const Solution& solution) {
    std::string out = "Minimum generating family:";
    for (const Interval& g : sorted_by_hi_lo(solution.reduction.generating.members()))
        out += " " + format_interval(g);
    out += "\nMaximum irredundant family:";
    for (const TreeLabel& label : solution.order)
        out += " " + std::to_string(label.x) + format_interval(label.interval);
    out += "\n";
    return out;
}

}  // namespace fk
