// Copyright 2026 The Flagkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLAGKIT_ERROR_H
#define FLAGKIT_ERROR_H

#include <stdexcept>
#include <string>

namespace flagkit {

/// Error classes raised by the library. Each maps onto one C API status code.
enum class ErrorKind {
    Dimension,
    Parse,
    Resource,
    Classification,
    Compatibility,
    Argument,
    DegeneratePostselection,
    CapExhausted,
    Io,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

class DimensionError : public Error {
   public:
    explicit DimensionError(const std::string &m) : Error(ErrorKind::Dimension, m) {
    }
};

/// Circuit text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
   public:
    ParseError(size_t line, const std::string &m)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + m), line_(line) {
    }
    size_t line() const noexcept {
        return line_;
    }

   private:
    size_t line_;
};

class ResourceError : public Error {
   public:
    explicit ResourceError(const std::string &m) : Error(ErrorKind::Resource, m) {
    }
};

class ClassificationError : public Error {
   public:
    explicit ClassificationError(const std::string &m) : Error(ErrorKind::Classification, m) {
    }
};

class CompatibilityError : public Error {
   public:
    explicit CompatibilityError(const std::string &m) : Error(ErrorKind::Compatibility, m) {
    }
};

class ArgumentError : public Error {
   public:
    explicit ArgumentError(const std::string &m) : Error(ErrorKind::Argument, m) {
    }
};

class DegeneratePostselectionError : public Error {
   public:
    explicit DegeneratePostselectionError(const std::string &m) : Error(ErrorKind::DegeneratePostselection, m) {
    }
};

class CapExhaustedError : public Error {
   public:
    explicit CapExhaustedError(const std::string &m) : Error(ErrorKind::CapExhausted, m) {
    }
};

class IoError : public Error {
   public:
    explicit IoError(const std::string &m) : Error(ErrorKind::Io, m) {
    }
};

}  // namespace flagkit

#endif
