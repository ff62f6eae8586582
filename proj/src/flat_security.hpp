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

#ifndef NDNHNS_FLAT_SECURITY_HPP
#define NDNHNS_FLAT_SECURITY_HPP

#include "name_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ndnhns {

std::array<uint8_t, 32> sha256(std::string_view data);

std::string base64Encode(const uint8_t* data, size_t len);

/// Strict decode: standard alphabet, correct padding, zero spare bits.
/// Returns nullopt on any deviation so that renderings stay canonical.
std::optional<std::vector<uint8_t>> base64Decode(std::string_view text);

/// Text form of a digest as it appears inside a name (before escaping).
/// Hex renders as-is; Base64 requires a full-length digest.
std::string renderDigest(const Digest& digest, DigestEncoding encoding);

/// Recognizes a digest rendering: 64 lowercase hex nibbles or a 44-char
/// Base64 block. With lenient truncation, hex prefixes of 8..63 nibbles
/// are also accepted (display forms; they cannot be verified).
std::optional<std::pair<Digest, DigestEncoding>>
parseDigestRendering(const std::string& text, bool lenientTruncation);

/// Digests of the decoded originator id, content super-type and content
/// sub-type portions, each hashed independently as UTF-8 bytes.
FlatComponent computeFc(const HierarchicalComponent& hc,
                        DigestEncoding encoding = DigestEncoding::Hex);

enum class DigestCheck {
  Match,          // full-length, byte-identical
  Mismatch,       // full-length, differs
  PrefixMatch,    // truncated; consistent with the recomputed digest
  PrefixMismatch, // truncated; inconsistent
};

const char* digestCheckName(DigestCheck check);

struct FcVerification {
  DigestCheck originator = DigestCheck::Mismatch;
  DigestCheck superType = DigestCheck::Mismatch;
  DigestCheck subType = DigestCheck::Mismatch;
  bool truncated = false; // any stored digest shorter than 32 bytes
  bool overall = false;   // all three full-length matches

  /// Every digest is at least prefix-consistent with the recomputation.
  bool allConsistent() const
  {
    auto ok = [](DigestCheck c) {
      return c == DigestCheck::Match || c == DigestCheck::PrefixMatch;
    };
    return ok(originator) && ok(superType) && ok(subType);
  }
};

/// Recomputes the three digests from the hierarchical component and
/// compares them byte-wise against the stored flat component.
/// Throws MissingFlatComponent when the name has no flat component, and
/// TruncatedDigest when a stored digest is truncated and lenient is false
/// (lenient mode reports prefix consistency instead).
FcVerification verifyFc(const Name& name, bool lenient = false);

} // namespace ndnhns

#endif // NDNHNS_FLAT_SECURITY_HPP
