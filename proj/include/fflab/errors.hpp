#pragma once

#include <stdexcept>
#include <string>

namespace fflab {

// All library failures derive from Error; name() is the stable tag used in reports.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define FFLAB_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    };

FFLAB_DEFINE_ERROR(SizeOverflow)
FFLAB_DEFINE_ERROR(DegenerateForm)
FFLAB_DEFINE_ERROR(NotMaximalIsotropic)
FFLAB_DEFINE_ERROR(FullyDegenerate)
FFLAB_DEFINE_ERROR(NonComplementary)
FFLAB_DEFINE_ERROR(NotCongruent)
FFLAB_DEFINE_ERROR(NotOnSurface)
FFLAB_DEFINE_ERROR(OutOfValidityRange)
FFLAB_DEFINE_ERROR(NoRoot)
FFLAB_DEFINE_ERROR(NotIsotropicPair)
FFLAB_DEFINE_ERROR(UnknownScenario)
FFLAB_DEFINE_ERROR(ConfigError)

#undef FFLAB_DEFINE_ERROR

} // namespace fflab
