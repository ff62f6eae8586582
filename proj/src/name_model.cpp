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

#include "name_model.hpp"

#include "app_registry.hpp"

#include <algorithm>

namespace ndnhns {

const std::string&
HierarchicalComponent::portion(size_t i) const
{
  switch (i) {
    case 0:
      return campusName;
    case 1:
      return campusSubName;
    case 2:
      return campusLocation;
    case 3:
      return campusSubLocation;
    case 4:
      return originatorId;
    case 5:
      return contentSuperType;
    case 6:
      return contentSubType;
    default:
      throw Error(Errc::OutOfRange, "hierarchical portion index out of range");
  }
}

bool
isReservedAttributeKey(const std::string& key)
{
  return key == "ts" || key == "sense" || key == "action";
}

std::vector<uint8_t>
Digest::bytes() const
{
  if (hex.size() % 2 != 0) {
    throw Error(Errc::TruncatedDigest, "digest has an odd nibble count");
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9')
      return c - '0';
    if (c >= 'a' && c <= 'f')
      return c - 'a' + 10;
    throw Error(Errc::BadDigest, "digest contains a non-hex character");
  };
  std::vector<uint8_t> out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return out;
}

Digest
Digest::fromBytes(const uint8_t* data, size_t len)
{
  static const char* hexDigits = "0123456789abcdef";
  Digest d;
  d.hex.reserve(len * 2);
  for (size_t i = 0; i < len; ++i) {
    d.hex.push_back(hexDigits[data[i] >> 4]);
    d.hex.push_back(hexDigits[data[i] & 0x0f]);
  }
  return d;
}

void
validateRoot(const RootPrefix& root)
{
  if (!isValidAppCode(root.appCode)) {
    throw Error(Errc::InvalidComponent,
                "root prefix application code must be 1-8 uppercase ASCII letters: '" +
                  root.appCode + "'");
  }
}

void
validateHierarchy(const HierarchicalComponent& hc)
{
  static const char* fieldNames[] = {
    "campus_name",       "campus_sub_name",    "campus_location", "campus_sub_location",
    "originator_id",     "content_super_type", "content_sub_type",
  };
  for (size_t i = 0; i < HierarchicalComponent::kPortionCount; ++i) {
    if (hc.portion(i).empty()) {
      throw Error(Errc::InvalidComponent,
                  std::string("hierarchical portion '") + fieldNames[i] + "' must be non-empty");
    }
  }
}

void
validateAttributes(const Attributes& ac)
{
  for (const auto& [key, value] : ac.pairs) {
    if (key.empty()) {
      throw Error(Errc::InvalidComponent, "attribute key must be non-empty");
    }
    if (value.empty()) {
      throw Error(Errc::InvalidComponent, "attribute value must be non-empty");
    }
    if (isReservedAttributeKey(key)) {
      throw Error(Errc::InvalidComponent, "attribute key '" + key + "' is reserved by the grammar");
    }
    size_t uses = 0;
    for (const auto& other : ac.pairs) {
      if (other.first == key) {
        ++uses;
      }
    }
    if (uses > 1) {
      throw Error(Errc::InvalidComponent, "duplicate attribute key '" + key + "'");
    }
  }
  // A bare popularity token is only parseable after a freshness token, so
  // popularity without freshness has no canonical text form.
  if (ac.popularity && !ac.freshness) {
    throw Error(Errc::InvalidComponent, "popularity requires a freshness attribute");
  }
  if (ac.task && ac.task->subType.empty()) {
    throw Error(Errc::InvalidComponent, "task sub-type must be non-empty");
  }
}

namespace {

bool
isValidDigestHex(const std::string& hex)
{
  if (hex.empty() || hex.size() > 64) {
    return false;
  }
  return std::all_of(hex.begin(), hex.end(),
                     [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

} // namespace

void
validateFlat(const FlatComponent& fc)
{
  for (const Digest* d : {&fc.originator, &fc.superType, &fc.subType}) {
    if (!isValidDigestHex(d->hex)) {
      throw Error(Errc::InvalidComponent, "flat component digest must be 1-64 lowercase hex nibbles");
    }
  }
  // Truncated display forms are only representable in hex.
  if (fc.encoding == DigestEncoding::Base64 && !fc.full()) {
    throw Error(Errc::InvalidComponent, "Base64 flat components require full-length digests");
  }
}

Name
Name::make(RootPrefix root, HierarchicalComponent hc, std::optional<Attributes> ac,
           std::optional<FlatComponent> fc)
{
  validateRoot(root);
  validateHierarchy(hc);
  if (ac && ac->empty()) {
    ac.reset(); // canonical form cannot express an empty attributes component
  }
  if (ac) {
    validateAttributes(*ac);
  }
  if (fc) {
    validateFlat(*fc);
  }
  return Name(std::move(root), std::move(hc), std::move(ac), std::move(fc));
}

Name
Name::withFlat(FlatComponent fc) const
{
  return Name::make(m_root, m_hc, m_ac, std::move(fc));
}

Name
Name::withoutFlat() const
{
  return Name::make(m_root, m_hc, m_ac, std::nullopt);
}

Name
Name::withFreshness(Freshness f) const
{
  Attributes ac = m_ac.value_or(Attributes{});
  ac.freshness = f;
  return Name::make(m_root, m_hc, std::move(ac), m_fc);
}

NamePrefix
NamePrefix::make(RootPrefix root, std::vector<std::string> portions)
{
  validateRoot(root);
  if (portions.empty() || portions.size() > HierarchicalComponent::kPortionCount) {
    throw Error(Errc::OutOfRange, "name prefix must carry 1-7 hierarchical portions");
  }
  for (const auto& p : portions) {
    if (p.empty()) {
      throw Error(Errc::InvalidComponent, "name prefix portions must be non-empty");
    }
  }
  return NamePrefix(std::move(root), std::move(portions));
}

NamePrefix
NamePrefix::parent() const
{
  if (m_portions.size() < 2) {
    throw Error(Errc::OutOfRange, "one-portion prefix has no parent");
  }
  std::vector<std::string> p(m_portions.begin(), m_portions.end() - 1);
  return NamePrefix(m_root, std::move(p));
}

bool
operator<(const NamePrefix& a, const NamePrefix& b)
{
  if (a.m_root.appCode != b.m_root.appCode) {
    return a.m_root.appCode < b.m_root.appCode;
  }
  return a.m_portions < b.m_portions;
}

NamePrefix
hierarchicalPrefix(const Name& name, size_t k)
{
  if (k < 1 || k > HierarchicalComponent::kPortionCount) {
    throw Error(Errc::OutOfRange,
                "prefix length must be between 1 and 7, got " + std::to_string(k));
  }
  std::vector<std::string> portions;
  portions.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    portions.push_back(name.hierarchy().portion(i));
  }
  return NamePrefix::make(name.root(), std::move(portions));
}

bool
isPrefixOf(const NamePrefix& prefix, const Name& name)
{
  if (!(prefix.root() == name.root())) {
    return false;
  }
  const auto& portions = prefix.portions();
  for (size_t i = 0; i < portions.size(); ++i) {
    if (portions[i] != name.hierarchy().portion(i)) {
      return false;
    }
  }
  return true;
}

bool
isPrefixOf(const NamePrefix& prefix, const NamePrefix& other)
{
  if (!(prefix.root() == other.root())) {
    return false;
  }
  if (prefix.portionCount() > other.portionCount()) {
    return false;
  }
  const auto& a = prefix.portions();
  const auto& b = other.portions();
  return std::equal(a.begin(), a.end(), b.begin());
}

} // namespace ndnhns
