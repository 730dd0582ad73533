#pragma once

#include <stdexcept>
#include <string>

namespace regionstat {

// Every failure the library reports, one code per contract violation.
enum class Errc {
    ZeroTotal,
    NegativeValue,
    DegenerateUnit,
    MalformedCurve,
    TooFewEntries,
    UnknownEntity,
    ConflictingEvents,
    MissingBaselineYear,
    EntitySetMismatch,
    HierarchyMismatch,
    UnknownUnit,
    MissingYear,
    MixedLevels,
    MixedYears,
    SizeTooLarge,
    ParseError,
    DuplicateRow,
    UnknownEventKind,
    EmptyResults,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace regionstat
