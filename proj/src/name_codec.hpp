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

#ifndef NDNHNS_NAME_CODEC_HPP
#define NDNHNS_NAME_CODEC_HPP

#include "name_model.hpp"

#include <string>
#include <string_view>

namespace ndnhns {

// Canonical text grammar
// ----------------------
//   name      = "IoT://" app-code ":" hierarchy [":" attributes] [":" flat]
//   hierarchy = portion 6*6("/" portion)            ; exactly 7 portions
//   attributes= sub-part *(":/" sub-part)           ; pairs, freshness, popularity, task
//   flat      = digest ":/" digest ":/" digest
//
// Separators bind longest-match: ":/" always splits sub-parts inside one
// component; a lone ":" (not followed by "/") splits components; "/" splits
// portions. Inside portion values the bytes "/" ":" "%" and space are
// percent-encoded (%2F %3A %25 %20, uppercase hex), as are ASCII control
// bytes; everything else (including non-ASCII UTF-8) passes through raw.
//
// Attribute sub-parts appear in fixed order: key/value pairs, then
// freshness ("0", "1", or "ts/<integer>"), then popularity (bare integer,
// only after freshness), then task ("sense/<sub>" or "action/<sub>").
// The final component is a flat component when it consists of exactly
// three digest renderings; otherwise it is parsed as attributes.
//
// Trailing separator runs are tolerated on parse and never emitted.

struct ParseOptions {
  /// Accept truncated (8..63 nibble) hex digests in the flat component.
  /// Display compatibility only; truncated digests cannot be verified.
  bool lenientDigests = false;
};

std::string serializeName(const Name& name);
std::string serializePrefix(const NamePrefix& prefix);

/// Throws Error with code SyntaxError / UnknownScheme / BadDigest; the
/// error carries the byte offset of the offending input.
Name parseName(std::string_view text, const ParseOptions& options = {});

/// Parses `IoT://<code>:<p1>[/<p2>...]` with 1..7 portions and no
/// attribute or flat components.
NamePrefix parsePrefix(std::string_view text);

/// Structured field dump as a stable-key-order JSON document.
std::string nameToJson(const Name& name);

std::string escapePortion(std::string_view portion);

} // namespace ndnhns

#endif // NDNHNS_NAME_CODEC_HPP
