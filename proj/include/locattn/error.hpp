// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace locattn {

// Dimension or shape mismatch between operands.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string &msg) : std::invalid_argument(msg) {}
};

// Invalid configuration, preset name, or CLI usage.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// A stored artifact (checkpoint, dataset) cannot be used as requested.
struct IncompatibleArtifact : std::runtime_error {
    explicit IncompatibleArtifact(const std::string &msg) : std::runtime_error(msg) {}
};

// Training aborted (non-finite loss).
struct TrainingDiverged : std::runtime_error {
    explicit TrainingDiverged(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace locattn
