// Copyright 2026 The Loretag Authors
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

#ifndef LORETAG_ERROR_H_
#define LORETAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace loretag {

// Broad failure classes. The command-line tool maps these onto exit codes.
enum class ErrorKind {
  kUsage,  // bad arguments or configuration
  kData,   // malformed or inconsistent input data
  kIo,     // file system failures
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error UsageError(const std::string& message) {
  return Error(ErrorKind::kUsage, message);
}
inline Error DataError(const std::string& message) {
  return Error(ErrorKind::kData, message);
}
inline Error IoError(const std::string& message) {
  return Error(ErrorKind::kIo, message);
}

}  // namespace loretag

#endif  // LORETAG_ERROR_H_
