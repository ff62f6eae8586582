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

#include "error.hpp"

namespace ndnhns {

const char*
errcName(Errc code)
{
  switch (code) {
    case Errc::Ok:
      return "ok";
    case Errc::InvalidComponent:
      return "invalid component";
    case Errc::SyntaxError:
      return "syntax error";
    case Errc::UnknownScheme:
      return "unknown scheme";
    case Errc::BadDigest:
      return "bad digest";
    case Errc::UnknownCode:
      return "unknown code";
    case Errc::DuplicateCode:
      return "duplicate code";
    case Errc::InvalidCode:
      return "invalid code";
    case Errc::OutOfRange:
      return "out of range";
    case Errc::MissingFlatComponent:
      return "missing flat component";
    case Errc::TruncatedDigest:
      return "truncated digest";
    case Errc::NotAnAction:
      return "not an action";
    case Errc::UnknownFace:
      return "unknown face";
    case Errc::DisconnectedTopology:
      return "disconnected topology";
    case Errc::ConfigError:
      return "config error";
    case Errc::IoError:
      return "io error";
  }
  return "unknown error";
}

} // namespace ndnhns
