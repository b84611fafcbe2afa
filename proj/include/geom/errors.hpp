#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geom {

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "GeometryError"; }
};

#define GEOM_DEFINE_ERROR(Name)                                          \
    class Name : public GeometryError {                                  \
    public:                                                              \
        using GeometryError::GeometryError;                              \
        const char* kind() const noexcept override { return #Name; }     \
    }

GEOM_DEFINE_ERROR(InvalidLine);
GEOM_DEFINE_ERROR(InvalidPoint);
GEOM_DEFINE_ERROR(NotASubspace);
GEOM_DEFINE_ERROR(DependentInput);
GEOM_DEFINE_ERROR(NotGenerating);
GEOM_DEFINE_ERROR(EmptyChain);
GEOM_DEFINE_ERROR(InvalidChain);
GEOM_DEFINE_ERROR(UnsupportedParameter);
GEOM_DEFINE_ERROR(UnsupportedField);
GEOM_DEFINE_ERROR(DimensionMismatch);
GEOM_DEFINE_ERROR(InvalidForm);
GEOM_DEFINE_ERROR(NotDistinct);
GEOM_DEFINE_ERROR(NotNice);
GEOM_DEFINE_ERROR(FormatError);

#undef GEOM_DEFINE_ERROR

/// Raised when a search exhausts its span-call, lattice or wall-clock budget.
/// Carries whatever bounds were established before giving up.
class BudgetExceeded : public GeometryError {
public:
    BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper)
        : GeometryError(what), lower_(lower), upper_(upper) {}
    explicit BudgetExceeded(const std::string& what) : BudgetExceeded(what, 0, 0) {}

    const char* kind() const noexcept override { return "BudgetExceeded"; }
    std::size_t lower() const noexcept { return lower_; }
    std::size_t upper() const noexcept { return upper_; }

private:
    std::size_t lower_;
    std::size_t upper_;
};

}  // namespace geom
