#pragma once

#include <stdexcept>
#include <string>

namespace pkla {

/// Base class for schema/input-format problems (CLI exit code 1).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Base class for violated mathematical preconditions (CLI exit code 2).
struct PreconditionError : std::runtime_error {
    PreconditionError(std::string code, const std::string& what)
        : std::runtime_error(what), code(std::move(code)) {}
    std::string code;
};

struct NonGaussianSpectrum : PreconditionError {
    explicit NonGaussianSpectrum(const std::string& what = "characteristic polynomial has an irreducible factor of degree >= 2 over the Gaussian rationals")
        : PreconditionError("NonGaussianSpectrum", what) {}
};

struct NotAnEigenvalue : PreconditionError {
    explicit NotAnEigenvalue(const std::string& what = "given value is not an eigenvalue")
        : PreconditionError("NotAnEigenvalue", what) {}
};

struct NotSkewHermitian : PreconditionError {
    explicit NotSkewHermitian(const std::string& what = "endomorphism is not skew-Hermitian for the given form")
        : PreconditionError("NotSkewHermitian", what) {}
};

struct DegenerateForm : PreconditionError {
    explicit DegenerateForm(const std::string& what = "Hermitian form is degenerate")
        : PreconditionError("DegenerateForm", what) {}
};

struct InvalidAssignment : PreconditionError {
    explicit InvalidAssignment(const std::string& what = "invalid x-assignment for the given block type")
        : PreconditionError("InvalidAssignment", what) {}
};

struct InvalidFamilyParams : PreconditionError {
    explicit InvalidFamilyParams(const std::string& what = "invalid family parameters")
        : PreconditionError("InvalidFamilyParams", what) {}
};

struct NotStandardBasis : PreconditionError {
    explicit NotStandardBasis(const std::string& what = "structure (J, g) is not in the standard adapted-basis form")
        : PreconditionError("NotStandardBasis", what) {}
};

struct ShapeViolation : PreconditionError {
    explicit ShapeViolation(const std::string& what = "derivation entries fall outside the characterized pattern")
        : PreconditionError("ShapeViolation", what) {}
};

struct DegenerateMetric : PreconditionError {
    explicit DegenerateMetric(const std::string& what = "metric is degenerate")
        : PreconditionError("DegenerateMetric", what) {}
};

struct NotFlat : PreconditionError {
    explicit NotFlat(const std::string& what = "connection is not flat")
        : PreconditionError("NotFlat", what) {}
};

struct NotNilpotent : PreconditionError {
    explicit NotNilpotent(const std::string& what = "Lie algebra is not nilpotent")
        : PreconditionError("NotNilpotent", what) {}
};

struct NotFamilyInstance : PreconditionError {
    explicit NotFamilyInstance(const std::string& what = "structure was not produced by a family constructor")
        : PreconditionError("NotFamilyInstance", what) {}
};

struct InvalidDerivation : PreconditionError {
    explicit InvalidDerivation(const std::string& what = "extension derivation violates an invariant")
        : PreconditionError("InvalidDerivation", what) {}
};

struct NotCanonicalShape : PreconditionError {
    explicit NotCanonicalShape(const std::string& what = "derivation is not of one of the exact family shapes")
        : PreconditionError("NotCanonicalShape", what) {}
};

}  // namespace pkla
