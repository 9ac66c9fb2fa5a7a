#pragma once

#include <exception>
#include <string>

namespace tabkit {

// Every failure mode the library can report.  The names are stable and are
// what the C API and the CLI surface to callers.
enum class errc {
    ok = 0,
    parse,
    length_mismatch,
    not_weakly_decreasing,
    equal_label_not_increasing,
    letter_out_of_range,
    not_a_permutation,
    not_a_partition_shape,
    row_not_decreasing,
    column_not_decreasing,
    empty_cell,
    row_order_violation,
    column_order_violation,
    entry_exceeds_bound,
    not_removable,
    invalid_alpha,
    non_positive_value,
    duplicate_label_at_cell,
    shape_mismatch,
    cell_not_removable,
    not_reduced,
    not_semistandard,
    overflow,
    invalid_argument,
    verify_failed,
    internal,
};

const char* errc_name(errc code);

class Error : public std::exception {
public:
    Error(errc code, std::string detail);

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }
    const std::string& detail() const { return detail_; }
    const char* what() const noexcept override { return what_.c_str(); }

private:
    errc code_;
    std::string detail_;
    std::string what_;
};

[[noreturn]] void fail(errc code, std::string detail = "");

}  // namespace tabkit
