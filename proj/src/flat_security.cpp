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

#include "flat_security.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>

namespace ndnhns {

std::array<uint8_t, 32>
sha256(std::string_view data)
{
  std::array<uint8_t, 32> out{};
  unsigned int outLen = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr ||
      EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, out.data(), &outLen) != 1 || outLen != out.size()) {
    EVP_MD_CTX_free(ctx);
    throw Error(Errc::IoError, "SHA-256 computation failed");
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

namespace {

constexpr char kBase64Alphabet[] =
  "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int
base64Index(char c)
{
  const char* p = std::strchr(kBase64Alphabet, c);
  if (c == '\0' || p == nullptr) {
    return -1;
  }
  return static_cast<int>(p - kBase64Alphabet);
}

} // namespace

std::string
base64Encode(const uint8_t* data, size_t len)
{
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 3 <= len; i += 3) {
    uint32_t v = (uint32_t(data[i]) << 16) | (uint32_t(data[i + 1]) << 8) | data[i + 2];
    out.push_back(kBase64Alphabet[(v >> 18) & 0x3f]);
    out.push_back(kBase64Alphabet[(v >> 12) & 0x3f]);
    out.push_back(kBase64Alphabet[(v >> 6) & 0x3f]);
    out.push_back(kBase64Alphabet[v & 0x3f]);
  }
  size_t rem = len - i;
  if (rem == 1) {
    uint32_t v = uint32_t(data[i]) << 16;
    out.push_back(kBase64Alphabet[(v >> 18) & 0x3f]);
    out.push_back(kBase64Alphabet[(v >> 12) & 0x3f]);
    out.push_back('=');
    out.push_back('=');
  }
  else if (rem == 2) {
    uint32_t v = (uint32_t(data[i]) << 16) | (uint32_t(data[i + 1]) << 8);
    out.push_back(kBase64Alphabet[(v >> 18) & 0x3f]);
    out.push_back(kBase64Alphabet[(v >> 12) & 0x3f]);
    out.push_back(kBase64Alphabet[(v >> 6) & 0x3f]);
    out.push_back('=');
  }
  return out;
}

std::optional<std::vector<uint8_t>>
base64Decode(std::string_view text)
{
  if (text.empty() || text.size() % 4 != 0) {
    return std::nullopt;
  }
  size_t pad = 0;
  if (text.back() == '=') {
    pad = text[text.size() - 2] == '=' ? 2 : 1;
  }
  std::vector<uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    int idx[4];
    for (size_t j = 0; j < 4; ++j) {
      char c = text[i + j];
      bool isPadPos = (i + 4 == text.size()) && (4 - j <= pad);
      if (isPadPos) {
        if (c != '=') {
          return std::nullopt;
        }
        idx[j] = 0;
      }
      else {
        idx[j] = base64Index(c);
        if (idx[j] < 0) {
          return std::nullopt;
        }
      }
    }
    uint32_t v = (uint32_t(idx[0]) << 18) | (uint32_t(idx[1]) << 12) | (uint32_t(idx[2]) << 6) |
                 uint32_t(idx[3]);
    out.push_back(uint8_t(v >> 16));
    if (i + 4 != text.size() || pad < 2) {
      out.push_back(uint8_t(v >> 8));
    }
    if (i + 4 != text.size() || pad < 1) {
      out.push_back(uint8_t(v));
    }
    // spare bits below the padding boundary must be zero
    if (i + 4 == text.size()) {
      if (pad == 2 && (v & 0xffff) != 0) {
        return std::nullopt;
      }
      if (pad == 1 && (v & 0xff) != 0) {
        return std::nullopt;
      }
    }
  }
  return out;
}

std::string
renderDigest(const Digest& digest, DigestEncoding encoding)
{
  if (encoding == DigestEncoding::Hex) {
    return digest.hex;
  }
  auto bytes = digest.bytes();
  return base64Encode(bytes.data(), bytes.size());
}

std::optional<std::pair<Digest, DigestEncoding>>
parseDigestRendering(const std::string& text, bool lenientTruncation)
{
  auto isHex = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
  };
  if (text.size() == 64 && isHex(text)) {
    return std::make_pair(Digest{text}, DigestEncoding::Hex);
  }
  if (lenientTruncation && text.size() >= 8 && text.size() < 64 && isHex(text)) {
    return std::make_pair(Digest{text}, DigestEncoding::Hex);
  }
  if (text.size() == 44) {
    auto bytes = base64Decode(text);
    if (bytes && bytes->size() == 32) {
      return std::make_pair(Digest::fromBytes(bytes->data(), bytes->size()),
                            DigestEncoding::Base64);
    }
  }
  return std::nullopt;
}

FlatComponent
computeFc(const HierarchicalComponent& hc, DigestEncoding encoding)
{
  validateHierarchy(hc);
  auto digestOf = [](const std::string& portion) {
    auto bytes = sha256(portion);
    return Digest::fromBytes(bytes.data(), bytes.size());
  };
  FlatComponent fc;
  fc.originator = digestOf(hc.originatorId);
  fc.superType = digestOf(hc.contentSuperType);
  fc.subType = digestOf(hc.contentSubType);
  fc.encoding = encoding;
  return fc;
}

const char*
digestCheckName(DigestCheck check)
{
  switch (check) {
    case DigestCheck::Match:
      return "match";
    case DigestCheck::Mismatch:
      return "mismatch";
    case DigestCheck::PrefixMatch:
      return "prefix-match";
    case DigestCheck::PrefixMismatch:
      return "prefix-mismatch";
  }
  return "unknown";
}

FcVerification
verifyFc(const Name& name, bool lenient)
{
  if (!name.flat()) {
    throw Error(Errc::MissingFlatComponent, "name carries no flat component");
  }
  const FlatComponent& stored = *name.flat();
  const FlatComponent fresh = computeFc(name.hierarchy(), stored.encoding);

  FcVerification report;
  report.truncated = !stored.full();
  if (report.truncated && !lenient) {
    throw Error(Errc::TruncatedDigest,
                "flat component digest is truncated; full verification impossible");
  }

  auto check = [](const Digest& have, const Digest& want) {
    if (have.full()) {
      return have.hex == want.hex ? DigestCheck::Match : DigestCheck::Mismatch;
    }
    return want.hex.compare(0, have.hex.size(), have.hex) == 0 ? DigestCheck::PrefixMatch
                                                               : DigestCheck::PrefixMismatch;
  };
  report.originator = check(stored.originator, fresh.originator);
  report.superType = check(stored.superType, fresh.superType);
  report.subType = check(stored.subType, fresh.subType);
  report.overall = !report.truncated && report.originator == DigestCheck::Match &&
                   report.superType == DigestCheck::Match && report.subType == DigestCheck::Match;
  return report;
}

} // namespace ndnhns
