#pragma once

#include <stdexcept>
#include <string>

namespace semamap {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A grid shape with zero rows or columns, or one too small for an operation.
struct invalid_shape_error : error {
    using error::error;
};

/// Vector length does not match the expected neuron count / grid size.
struct dimension_error : error {
    using error::error;
};

/// Input contains non-finite values or violates a documented precondition.
struct invalid_input_error : error {
    using error::error;
};

/// Parameter outside its documented range (sigma <= 0, theta out of (0,1], ...).
struct invalid_parameter_error : error {
    using error::error;
};

/// Learning-step index below 1.
struct invalid_step_error : error {
    using error::error;
};

/// An operation that requires a non-empty collection received an empty one.
struct empty_input_error : error {
    using error::error;
};

/// All image-sheet activations are <= 0; the network/input pairing is degenerate.
struct degenerate_activation_error : error {
    using error::error;
};

/// A referenced id (stimulus, label) does not exist.
struct not_found_error : error {
    using error::error;
};

/// Malformed file contents (CSV, JSON, network file).
struct parse_error : error {
    using error::error;
};

/// Inconsistent or incomplete run configuration.
struct config_error : error {
    using error::error;
};

/// Filesystem-level failure.
struct io_error : error {
    using error::error;
};

} // namespace semamap
