#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dap {

// Machine-readable failure categories. The CLI serializes these names into
// error JSON, so the spellings are part of the tool's output contract.
enum class Errc {
    division_by_zero,
    field_mismatch,
    degenerate_input,
    same_line,
    hypothesis_violated,
    not_on_source,
    bad_direction,
    aux_on_line,
    degenerate_aux,
    undefined_ratio,
    infinite_input,
    unknown_vertex,
    basis_mismatch,
    replay_mismatch,
    parse_error,
    unsupported,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace dap
