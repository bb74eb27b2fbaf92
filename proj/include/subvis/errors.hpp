#pragma once

#include <stdexcept>
#include <string>

namespace subvis {

/// Broad class of a failure, used by the command-line tool to pick an exit code.
enum class ErrorKind {
    usage,     ///< bad arguments, selectors or configuration
    data,      ///< input data or analysis domain problem
    invariant  ///< internal consistency check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what)
        , kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define SUBVIS_DECLARE_ERROR(Name, Kind)                                       \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(ErrorKind::Kind, std::string(#Name ": ") + what)           \
        {}                                                                     \
    };

// selectors and configuration
SUBVIS_DECLARE_ERROR(InvalidSelector, usage)
SUBVIS_DECLARE_ERROR(InvalidConfig, usage)
SUBVIS_DECLARE_ERROR(InsufficientGroups, usage)

// input files
SUBVIS_DECLARE_ERROR(IoError, data)
SUBVIS_DECLARE_ERROR(SchemaError, data)
SUBVIS_DECLARE_ERROR(StrictViolation, data)
SUBVIS_DECLARE_ERROR(DuplicateId, data)
SUBVIS_DECLARE_ERROR(MalformedPacs, data)
SUBVIS_DECLARE_ERROR(InvalidCorpus, data)

// analysis domain
SUBVIS_DECLARE_ERROR(EmptyGroup, data)
SUBVIS_DECLARE_ERROR(EmptyDistribution, data)
SUBVIS_DECLARE_ERROR(EmptyWindow, data)
SUBVIS_DECLARE_ERROR(UndefinedIF, data)
SUBVIS_DECLARE_ERROR(EmptyList, data)
SUBVIS_DECLARE_ERROR(UndefinedCV, data)
SUBVIS_DECLARE_ERROR(InvalidWeights, data)
SUBVIS_DECLARE_ERROR(NoRelevantSubfields, data)
SUBVIS_DECLARE_ERROR(NotRelevant, data)
SUBVIS_DECLARE_ERROR(DomainError, data)

SUBVIS_DECLARE_ERROR(InvariantError, invariant)

#undef SUBVIS_DECLARE_ERROR

} // namespace subvis
