#pragma once

#include <stdexcept>
#include <string>

namespace probfrac {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unreadable or malformed input files, filesystem failures.
class LoadError : public Error {
public:
    using Error::Error;
};

// Dataset layout problems (too few classes, class smaller than K).
class ManifestError : public Error {
public:
    using Error::Error;
};

// Cell size or scale ladder incompatible with the image.
class ScaleError : public Error {
public:
    using Error::Error;
};

// Out-of-range parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Degenerate least-squares input.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace probfrac
