#ifndef KPS_ERRORS_HPP
#define KPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kps {

struct NonIntegralParameters : std::runtime_error {
    explicit NonIntegralParameters(const std::string& what) : std::runtime_error(what) {}
};

struct UnequalBlockSizes : std::runtime_error {
    explicit UnequalBlockSizes(const std::string& what) : std::runtime_error(what) {}
};

struct UnequalReplication : std::runtime_error {
    int point;
    int count;
    UnequalReplication(int point_, int count_, const std::string& what)
        : std::runtime_error(what), point(point_), count(count_) {}
};

struct UnbalancedPair : std::runtime_error {
    int a, b;
    int count;
    UnbalancedPair(int a_, int b_, int count_, const std::string& what)
        : std::runtime_error(what), a(a_), b(b_), count(count_) {}
};

struct UnsupportedOrder : std::runtime_error {
    explicit UnsupportedOrder(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NotG2Design : std::runtime_error {
    explicit NotG2Design(const std::string& what) : std::runtime_error(what) {}
};

struct NotSteiner : std::runtime_error {
    explicit NotSteiner(const std::string& what) : std::runtime_error(what) {}
};

struct NotDecomposable : std::runtime_error {
    explicit NotDecomposable(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyEvaluationSet : std::runtime_error {
    explicit EmptyEvaluationSet(const std::string& what) : std::runtime_error(what) {}
};

struct ExactModeTooLarge : std::runtime_error {
    explicit ExactModeTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DesignGraphMismatch : std::runtime_error {
    explicit DesignGraphMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientBlocks : std::runtime_error {
    explicit InsufficientBlocks(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kps

#endif
