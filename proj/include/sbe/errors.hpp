#ifndef SBE_ERRORS_HPP
#define SBE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbe {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input text; the message names the offending 1-based line.
class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class argument_error : public error {
public:
    using error::error;
};

// Node budget exhausted; carries whatever the expansion had built so far.
class budget_error : public error {
public:
    budget_error(int depth_reached, std::uint64_t nodes_built,
                 std::uint64_t splits_done, std::vector<std::uint64_t> widths)
        : error("node budget exceeded at depth " + std::to_string(depth_reached)),
          depth_reached_(depth_reached),
          nodes_built_(nodes_built),
          splits_done_(splits_done),
          widths_(std::move(widths)) {}

    int depth_reached() const { return depth_reached_; }
    std::uint64_t nodes_built() const { return nodes_built_; }
    std::uint64_t splits_done() const { return splits_done_; }
    const std::vector<std::uint64_t>& layer_widths() const { return widths_; }

private:
    int depth_reached_;
    std::uint64_t nodes_built_;
    std::uint64_t splits_done_;
    std::vector<std::uint64_t> widths_;
};

} // namespace sbe

#endif
