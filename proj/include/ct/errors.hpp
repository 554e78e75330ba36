#ifndef CT_ERRORS_HPP
#define CT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ct {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// tree construction
struct NotATree : Error {
    explicit NotATree(const std::string& msg) : Error(msg) {}
};
struct DegreeExceeded : Error {
    explicit DegreeExceeded(const std::string& msg) : Error(msg) {}
};
struct BadId : Error {
    explicit BadId(const std::string& msg) : Error(msg) {}
};

// closed-form queries
struct CongruenceViolation : Error {
    explicit CongruenceViolation(const std::string& msg) : Error(msg) {}
};
struct Infeasible : Error {
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};

// moves
struct NotApplicable : Error {
    explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

// enumeration
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

// persistence
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};
struct CorruptCache : Error {
    explicit CorruptCache(const std::string& msg) : Error(msg) {}
};
struct InvalidCode : Error {
    explicit InvalidCode(const std::string& msg) : Error(msg) {}
};

}  // namespace ct

#endif
