#pragma once

#include <stdexcept>
#include <string>

namespace gch {

struct Error : std::runtime_error {
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

#define GCH_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}  \
    }

GCH_DEFINE_ERROR(UnknownPreset);
GCH_DEFINE_ERROR(CorruptData);
GCH_DEFINE_ERROR(GridTooSmall);
GCH_DEFINE_ERROR(StateCorrupt);
GCH_DEFINE_ERROR(NumericalBlowup);
GCH_DEFINE_ERROR(EnergyBoundViolated);
GCH_DEFINE_ERROR(OutOfDomain);
GCH_DEFINE_ERROR(BreakingImminent);
GCH_DEFINE_ERROR(WindowTooSmall);
GCH_DEFINE_ERROR(WindowMismatch);
GCH_DEFINE_ERROR(MissingArtifacts);
GCH_DEFINE_ERROR(ConfigError);

#undef GCH_DEFINE_ERROR

}  // namespace gch
