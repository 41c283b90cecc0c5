#pragma once

#include <stdexcept>
#include <string>

namespace charn {

// Library errors carry a stable machine-readable category so the CLI can map
// them to exit codes without string matching on messages.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

#define CHARN_DEFINE_ERROR(Name, category_literal)                          \
    class Name : public Error {                                             \
    public:                                                                  \
        explicit Name(const std::string& message)                           \
            : Error(category_literal, message) {}                           \
    }

CHARN_DEFINE_ERROR(SingularDesign, "singular_design");
CHARN_DEFINE_ERROR(NoValidBandwidth, "no_valid_bandwidth");
CHARN_DEFINE_ERROR(DegenerateSample, "degenerate_sample");
CHARN_DEFINE_ERROR(EmptyRegion, "empty_region");
CHARN_DEFINE_ERROR(DomainError, "domain_error");
CHARN_DEFINE_ERROR(OutOfRange, "out_of_range");
CHARN_DEFINE_ERROR(NonConvergence, "non_convergence");
CHARN_DEFINE_ERROR(SingularGamma, "singular_gamma");
CHARN_DEFINE_ERROR(ParseError, "parse_error");
CHARN_DEFINE_ERROR(SchemaError, "schema_error");
CHARN_DEFINE_ERROR(NetworkError, "network_error");
CHARN_DEFINE_ERROR(FormatError, "format_error");
CHARN_DEFINE_ERROR(ConfigError, "config_error");

#undef CHARN_DEFINE_ERROR

}  // namespace charn
