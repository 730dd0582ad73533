#include "regionstat/error.hpp"

namespace regionstat {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroTotal: return "ZeroTotal";
        case Errc::NegativeValue: return "NegativeValue";
        case Errc::DegenerateUnit: return "DegenerateUnit";
        case Errc::MalformedCurve: return "MalformedCurve";
        case Errc::TooFewEntries: return "TooFewEntries";
        case Errc::UnknownEntity: return "UnknownEntity";
        case Errc::ConflictingEvents: return "ConflictingEvents";
        case Errc::MissingBaselineYear: return "MissingBaselineYear";
        case Errc::EntitySetMismatch: return "EntitySetMismatch";
        case Errc::HierarchyMismatch: return "HierarchyMismatch";
        case Errc::UnknownUnit: return "UnknownUnit";
        case Errc::MissingYear: return "MissingYear";
        case Errc::MixedLevels: return "MixedLevels";
        case Errc::MixedYears: return "MixedYears";
        case Errc::SizeTooLarge: return "SizeTooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::DuplicateRow: return "DuplicateRow";
        case Errc::UnknownEventKind: return "UnknownEventKind";
        case Errc::EmptyResults: return "EmptyResults";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace regionstat
