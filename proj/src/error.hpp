/*
 * Copyright (c) 2026 The ndnhns Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NDNHNS_ERROR_HPP
#define NDNHNS_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ndnhns {

enum class Errc {
  Ok = 0,
  InvalidComponent,
  SyntaxError,
  UnknownScheme,
  BadDigest,
  UnknownCode,
  DuplicateCode,
  InvalidCode,
  OutOfRange,
  MissingFlatComponent,
  TruncatedDigest,
  NotAnAction,
  UnknownFace,
  DisconnectedTopology,
  ConfigError,
  IoError,
};

const char* errcName(Errc code);

/// Exception carrying an error category and, for text parse failures,
/// the byte offset of the offending input.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
    : std::runtime_error(message), m_code(code)
  {
  }

  Error(Errc code, const std::string& message, size_t offset)
    : std::runtime_error(message), m_code(code), m_offset(offset)
  {
  }

  Errc code() const noexcept { return m_code; }
  std::optional<size_t> offset() const noexcept { return m_offset; }

private:
  Errc m_code;
  std::optional<size_t> m_offset;
};

} // namespace ndnhns

#endif // NDNHNS_ERROR_HPP
