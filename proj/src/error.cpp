#include "derange/error.hpp"

namespace derange {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::missing_element: return "MissingElement";
    case Errc::multiple_marks: return "MultipleMarks";
    case Errc::empty_input: return "EmptyInput";
    case Errc::malformed_token: return "MalformedToken";
    case Errc::mark_out_of_range: return "MarkOutOfRange";
    case Errc::is_derangement: return "IsDerangement";
    case Errc::largest_fixed_point_is_one: return "LargestFixedPointIsOne";
    case Errc::size_too_large: return "SizeTooLarge";
    case Errc::size_too_small: return "SizeTooSmall";
    case Errc::range_error: return "RangeError";
    case Errc::not_derangement: return "NotDerangement";
    case Errc::too_few_fixed_points: return "TooFewFixedPoints";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::unknown_spec: return "UnknownSpec";
    case Errc::unknown_rng_algorithm: return "UnknownRngAlgorithm";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace derange
