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

#ifndef NDNHNS_NAME_MODEL_HPP
#define NDNHNS_NAME_MODEL_HPP

#include "error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ndnhns {

// A "portion" is the decoded text of one path segment. Portions are stored
// unescaped; reserved characters are only percent-encoded by the codec.

/// Leading `IoT://<code>` application marker. The scheme is fixed.
struct RootPrefix {
  static constexpr const char* kScheme = "IoT";

  std::string appCode;

  friend bool operator==(const RootPrefix& a, const RootPrefix& b) = default;
};

/// The mandatory seven-portion hierarchy: campus identity, campus location,
/// content originator, and content typing.
struct HierarchicalComponent {
  static constexpr size_t kPortionCount = 7;

  std::string campusName;
  std::string campusSubName;
  std::string campusLocation;
  std::string campusSubLocation;
  std::string originatorId;
  std::string contentSuperType;
  std::string contentSubType;

  const std::string& portion(size_t i) const;

  friend bool operator==(const HierarchicalComponent& a, const HierarchicalComponent& b) = default;
};

/// Content freshness. Latest/Oldest are request-side selectors (rendered as
/// the bare tokens "0" and "1"); GeneratedAt is the data-side timestamp.
struct Freshness {
  enum class Kind { Latest, Oldest, GeneratedAt };

  Kind kind = Kind::Latest;
  uint64_t timestamp = 0; // meaningful only when kind == GeneratedAt

  static Freshness latest() { return {Kind::Latest, 0}; }
  static Freshness oldest() { return {Kind::Oldest, 0}; }
  static Freshness generatedAt(uint64_t t) { return {Kind::GeneratedAt, t}; }

  friend bool operator==(const Freshness& a, const Freshness& b)
  {
    return a.kind == b.kind && (a.kind != Kind::GeneratedAt || a.timestamp == b.timestamp);
  }
};

/// Communication intent: a sensing request or an actuation command.
struct Task {
  enum class Type { Sense, Action };

  Type type = Type::Sense;
  std::string subType;

  friend bool operator==(const Task& a, const Task& b) = default;
};

/// Attributes component: free-form key/value pairs plus the three
/// well-known attributes (freshness, popularity, task).
struct Attributes {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::optional<Freshness> freshness;
  std::optional<uint64_t> popularity;
  std::optional<Task> task;

  bool empty() const
  {
    return pairs.empty() && !freshness && !popularity && !task;
  }

  friend bool operator==(const Attributes& a, const Attributes& b) = default;
};

// Keys that the grammar reserves for the well-known attribute sub-parts;
// they cannot be used as attribute-pair keys.
bool isReservedAttributeKey(const std::string& key);

enum class DigestEncoding { Hex, Base64 };

/// One SHA-256 digest, stored as lowercase hex nibbles. 64 nibbles is the
/// full form; anything shorter is a display truncation that cannot be
/// verified (odd nibble counts occur in truncated renderings).
struct Digest {
  std::string hex;

  bool full() const { return hex.size() == 64; }
  std::vector<uint8_t> bytes() const; // full digests only

  static Digest fromBytes(const uint8_t* data, size_t len);

  friend bool operator==(const Digest& a, const Digest& b) = default;
};

/// Self-certifying flat component: digests of the originator id and the
/// content super/sub type portions. The encoding selects the text
/// rendering; the underlying bytes are the same either way.
struct FlatComponent {
  Digest originator;
  Digest superType;
  Digest subType;
  DigestEncoding encoding = DigestEncoding::Hex;

  bool full() const
  {
    return originator.full() && superType.full() && subType.full();
  }

  friend bool operator==(const FlatComponent& a, const FlatComponent& b) = default;
};

/// A complete NDN-HNS name. Root prefix and hierarchical component are
/// always present; attributes and flat component are independently
/// optional. Immutable after construction.
class Name {
public:
  /// Validates all parts and returns the composed name.
  /// Throws Error(InvalidComponent) naming the violated rule.
  /// An empty attributes component is normalized to "absent".
  static Name make(RootPrefix root, HierarchicalComponent hc,
                   std::optional<Attributes> ac = std::nullopt,
                   std::optional<FlatComponent> fc = std::nullopt);

  const RootPrefix& root() const noexcept { return m_root; }
  const HierarchicalComponent& hierarchy() const noexcept { return m_hc; }
  const std::optional<Attributes>& attributes() const noexcept { return m_ac; }
  const std::optional<FlatComponent>& flat() const noexcept { return m_fc; }

  Name withFlat(FlatComponent fc) const;
  Name withoutFlat() const;
  Name withFreshness(Freshness f) const;

  friend bool operator==(const Name& a, const Name& b) = default;

private:
  Name(RootPrefix root, HierarchicalComponent hc, std::optional<Attributes> ac,
       std::optional<FlatComponent> fc)
    : m_root(std::move(root)), m_hc(std::move(hc)), m_ac(std::move(ac)), m_fc(std::move(fc))
  {
  }

  RootPrefix m_root;
  HierarchicalComponent m_hc;
  std::optional<Attributes> m_ac;
  std::optional<FlatComponent> m_fc;
};

/// Root prefix plus the first 1..7 hierarchical portions; the value FIB
/// entries and producer registrations are keyed by.
class NamePrefix {
public:
  static NamePrefix make(RootPrefix root, std::vector<std::string> portions);

  const RootPrefix& root() const noexcept { return m_root; }
  const std::vector<std::string>& portions() const noexcept { return m_portions; }
  size_t portionCount() const noexcept { return m_portions.size(); }

  /// Parent prefix (one portion shorter); requires portionCount() >= 2.
  NamePrefix parent() const;

  friend bool operator==(const NamePrefix& a, const NamePrefix& b) = default;
  friend bool operator<(const NamePrefix& a, const NamePrefix& b);

private:
  NamePrefix(RootPrefix root, std::vector<std::string> portions)
    : m_root(std::move(root)), m_portions(std::move(portions))
  {
  }

  RootPrefix m_root;
  std::vector<std::string> m_portions;
};

/// Truncates a name to its root prefix plus the first k hierarchical
/// portions (1 <= k <= 7), dropping attributes and flat component.
NamePrefix hierarchicalPrefix(const Name& name, size_t k);

/// Exact, case-sensitive portion comparison against the leading portions.
bool isPrefixOf(const NamePrefix& prefix, const Name& name);
bool isPrefixOf(const NamePrefix& prefix, const NamePrefix& other);

// Validation helpers shared by the model and the codec.
void validateRoot(const RootPrefix& root);
void validateHierarchy(const HierarchicalComponent& hc);
void validateAttributes(const Attributes& ac);
void validateFlat(const FlatComponent& fc);

} // namespace ndnhns

#endif // NDNHNS_NAME_MODEL_HPP
