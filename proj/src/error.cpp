#include "mta/error.hpp"

namespace mta {

const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::series_too_short: return "SeriesTooShort";
    case Errc::invalid_alphabet_size: return "InvalidAlphabetSize";
    case Errc::window_too_large: return "WindowTooLarge";
    case Errc::generation_too_long: return "GenerationTooLong";
    case Errc::generation_mismatch: return "GenerationMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_template: return "EmptyTemplate";
    case Errc::too_few_occurrences: return "TooFewOccurrences";
    case Errc::indivisible_length: return "IndivisibleLength";
    case Errc::series_too_long: return "SeriesTooLong";
    case Errc::placement_failed: return "PlacementFailed";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_after_slice: return "EmptyAfterSlice";
    case Errc::invalid_config: return "InvalidConfig";
    }
    return "UnknownError";
}

} // namespace mta
