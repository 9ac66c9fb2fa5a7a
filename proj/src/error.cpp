#include "tabkit/error.hpp"

#include <utility>

namespace tabkit {

const char* errc_name(errc code) {
    switch (code) {
        case errc::ok: return "Ok";
        case errc::parse: return "ParseError";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
        case errc::equal_label_not_increasing: return "EqualLabelNotIncreasing";
        case errc::letter_out_of_range: return "LetterOutOfRange";
        case errc::not_a_permutation: return "NotAPermutation";
        case errc::not_a_partition_shape: return "NotAPartitionShape";
        case errc::row_not_decreasing: return "RowNotDecreasing";
        case errc::column_not_decreasing: return "ColumnNotDecreasing";
        case errc::empty_cell: return "EmptyCell";
        case errc::row_order_violation: return "RowOrderViolation";
        case errc::column_order_violation: return "ColumnOrderViolation";
        case errc::entry_exceeds_bound: return "EntryExceedsBound";
        case errc::not_removable: return "NotRemovable";
        case errc::invalid_alpha: return "InvalidAlpha";
        case errc::non_positive_value: return "NonPositiveValue";
        case errc::duplicate_label_at_cell: return "DuplicateLabelAtCell";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::cell_not_removable: return "CellNotRemovable";
        case errc::not_reduced: return "NotReduced";
        case errc::not_semistandard: return "NotSemistandard";
        case errc::overflow: return "Overflow";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::verify_failed: return "VerifyFailed";
        case errc::internal: return "InternalError";
    }
    return "InternalError";
}

Error::Error(errc code, std::string detail)
    : code_(code), detail_(std::move(detail)) {
    what_ = errc_name(code_);
    if (!detail_.empty()) {
        what_ += ": ";
        what_ += detail_;
    }
}

void fail(errc code, std::string detail) {
    throw Error(code, std::move(detail));
}

}  // namespace tabkit
