#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohomog7 {

/// Malformed arguments to an operation (negative factor, non-square matrix, ...).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A lemma was invoked with one of its asserted hypotheses withdrawn.
struct hypotheses_not_met : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Parameter tuple violates one or more family restrictions.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(std::vector<std::string> issues)
        : std::invalid_argument(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out = "invalid parameters";
        for (const auto& s : issues) {
            out += "; ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

}  // namespace cohomog7
