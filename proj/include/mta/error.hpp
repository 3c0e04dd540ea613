#pragma once

#include <stdexcept>
#include <string>

namespace mta {

enum class Errc {
    series_too_short,
    invalid_alphabet_size,
    window_too_large,
    generation_too_long,
    generation_mismatch,
    length_mismatch,
    empty_template,
    too_few_occurrences,
    indivisible_length,
    series_too_long,
    placement_failed,
    file_not_found,
    parse_error,
    empty_after_slice,
    invalid_config,
};

const char* errc_name(Errc c) noexcept;

class MtaError : public std::runtime_error {
public:
    MtaError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw MtaError(code, what);
}

} // namespace mta
