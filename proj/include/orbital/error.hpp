#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbital {

enum class errc {
  duplicate_entry,
  entry_out_of_range,
  row_not_increasing,
  column_not_increasing,
  ragged_shape,
  empty_tableau,
  bad_partition,
  bad_tau,
  size_mismatch,
  not_richardson,
  not_applicable,
  bad_permutation,
  bound_exceeded,
  too_small,
  bad_range,
  ambiguous_classification,
  missing_chain,
  missing_variable,
  not_square,
  not_homogeneous_weight,
  zero_polynomial,
  contains_t,
  bad_window,
  inconsistent_indexing,
  not_nilpotent,
  degenerate_sample,
  not_invertible,
  bad_json,
};

inline std::string_view errc_name(errc e) noexcept {
  switch (e) {
    case errc::duplicate_entry: return "DuplicateEntry";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::row_not_increasing: return "RowNotIncreasing";
    case errc::column_not_increasing: return "ColumnNotIncreasing";
    case errc::ragged_shape: return "RaggedShape";
    case errc::empty_tableau: return "EmptyTableau";
    case errc::bad_partition: return "BadPartition";
    case errc::bad_tau: return "BadTau";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_richardson: return "NotRichardson";
    case errc::not_applicable: return "NotApplicable";
    case errc::bad_permutation: return "BadPermutation";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::too_small: return "TooSmall";
    case errc::bad_range: return "BadRange";
    case errc::ambiguous_classification: return "AmbiguousClassification";
    case errc::missing_chain: return "MissingChain";
    case errc::missing_variable: return "MissingVariable";
    case errc::not_square: return "NotSquare";
    case errc::not_homogeneous_weight: return "NotHomogeneousWeight";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::contains_t: return "ContainsT";
    case errc::bad_window: return "BadWindow";
    case errc::inconsistent_indexing: return "InconsistentIndexing";
    case errc::not_nilpotent: return "NotNilpotent";
    case errc::degenerate_sample: return "DegenerateSample";
    case errc::not_invertible: return "NotInvertible";
    case errc::bad_json: return "BadJson";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error kind alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace orbital
