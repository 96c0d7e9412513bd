#pragma once

#include <stdexcept>
#include <string>

namespace readorder {

// Data-level failures. The CLI maps these to exit code 1; usage problems exit 2.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateIndexError : SchemaError {
    using SchemaError::SchemaError;
};

struct MissingPageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyRegionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySequenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPermutationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCorpusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleLayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace readorder
