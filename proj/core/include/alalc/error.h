// Copyright 2026 The alalc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALALC_ERROR_H_
#define ALALC_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alalc {

// Base class for every error raised by the library. The `code()` string is a
// stable machine-readable identifier used by the CLI error line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A text file (rule table, TSV, annotation file) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : Error("parse", source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Malformed XML input; offset is the byte position reported by the parser.
class XmlError : public Error {
 public:
  XmlError(const std::string& source, std::size_t offset,
           const std::string& message)
      : Error("xml", source + ": byte " + std::to_string(offset) + ": " +
                         message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input parsed fine but violates a documented invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

// Token sequences that must line up do not.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& message)
      : Error("structure", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

}  // namespace alalc

#endif  // ALALC_ERROR_H_
