#ifndef KPCA_LAB_COMMON_HPP
#define KPCA_LAB_COMMON_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace kpca_lab {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// N samples x D features, one sample per row.
using DataMatrix = Eigen::MatrixXd;

inline constexpr const char* version_string = "0.1.0";

/// Malformed numeric input (non-finite entries, broken invariants of an input type).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller passed an out-of-range size, index or mismatched dimension.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text/binary file could not be parsed. `line()` is 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedKernelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pre-image iteration left the region where the Gaussian weights are representable.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, int iteration, Vector iterate)
        : std::runtime_error(what), iteration_(iteration), iterate_(std::move(iterate)) {}

    int iteration() const noexcept { return iteration_; }
    const Vector& iterate() const noexcept { return iterate_; }

private:
    int iteration_;
    Vector iterate_;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ArgumentError(message);
}

inline Vector column_means(const DataMatrix& x) {
    return x.colwise().mean().transpose();
}

} // namespace kpca_lab

#endif
