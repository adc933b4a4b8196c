#pragma once

#include <stdexcept>
#include <string>

namespace synpath {

// Process exit codes used by the CLI. Library code reports failures by
// throwing one of the exceptions below; exit_code() maps them.
enum class ExitCode : int { Ok = 0, Internal = 1, InvalidInput = 2, ResourceGuard = 3 };

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept { return ExitCode::Internal; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::InvalidInput; }
};

// Two increments (or two threshold crossings) coincide, so the path towards
// synchronization is not uniquely ordered.
class NotTypical : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::ResourceGuard; }
};

class Unsynchronized : public Error {
public:
    using Error::Error;
};

}  // namespace synpath
