#ifndef CTX_ERRORS_HPP
#define CTX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ctx {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ScenarioError : public Error {
public:
    using Error::Error;
};

class DistributionError : public Error {
public:
    using Error::Error;
};

class ModelError : public Error {
public:
    using Error::Error;
};

class AnalysisError : public Error {
public:
    using Error::Error;
};

class QuantumError : public Error {
public:
    using Error::Error;
};

class BundleError : public Error {
public:
    using Error::Error;
};

class CorpusError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (JSON, rationals, proposition syntax).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed input that fails semantic validation.
/// Carries the full list of issues so callers can report all of them.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> issues)
        : Error(what), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

}  // namespace ctx

#endif
