#pragma once

#include <stdexcept>
#include <string>

namespace deformlab {

struct ZeroMatrixError : std::domain_error {
    ZeroMatrixError() : std::domain_error("deformation coefficient undefined for the zero matrix") {}
};

struct ZeroColumnError : std::domain_error {
    ZeroColumnError() : std::domain_error("column-norm bound undefined when a column is zero") {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct ComplexRootsError : std::domain_error {
    explicit ComplexRootsError(const std::string& what) : std::domain_error(what) {}
};

struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace deformlab
