#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fxf {

// Base for all library errors. `code()` is the stable machine-readable name
// that the CLI puts into {"error": ...}.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FXF_DEFINE_ERROR(Name)                         \
    class Name : public Error {                        \
    public:                                            \
        explicit Name(const std::string& msg)          \
            : Error(#Name, msg) {}                     \
    }

FXF_DEFINE_ERROR(ParseError);
FXF_DEFINE_ERROR(DivisionByZero);
FXF_DEFINE_ERROR(PoleEvaluation);
FXF_DEFINE_ERROR(InvalidParams);
FXF_DEFINE_ERROR(ZeroPotential);
FXF_DEFINE_ERROR(ZeroSlope);
FXF_DEFINE_ERROR(TrivialPotential);
FXF_DEFINE_ERROR(DegenerateSpec);
FXF_DEFINE_ERROR(NoSolution);
FXF_DEFINE_ERROR(IndeterminateSystem);
FXF_DEFINE_ERROR(LogarithmicCase);
FXF_DEFINE_ERROR(IrregularPoint);
FXF_DEFINE_ERROR(DegenerateC);
FXF_DEFINE_ERROR(AllPointsSkipped);
FXF_DEFINE_ERROR(DomainMismatch);

#undef FXF_DEFINE_ERROR

} // namespace fxf
