#pragma once

// Model-document loading: JSON documents describing polynomial piecewise
// systems directly, or referencing zoo models by name with parameter
// overrides.

#include <string>

#include "pwsb/model.hpp"

namespace pwsb {

struct SchemaError : ModelError {
    explicit SchemaError(const std::string& what) : ModelError(what) {}
};

// Parse a model document (JSON text). Throws SchemaError on violations.
PWSystem load_model(const std::string& document);

// Convenience: read a file and load it.
PWSystem load_model_file(const std::string& path);

}  // namespace pwsb
