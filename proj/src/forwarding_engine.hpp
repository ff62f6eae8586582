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

#ifndef NDNHNS_FORWARDING_ENGINE_HPP
#define NDNHNS_FORWARDING_ENGINE_HPP

#include "name_model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ndnhns {

using FaceId = int;
using Tick = uint64_t;

struct InterestPacket {
  Name name;
  uint64_t nonce = 0;
  uint32_t hopCount = 0;
};

struct DataPacket {
  Name name;
  size_t payloadSize = 0;
  uint64_t payloadTag = 0;    // stands in for the payload bytes
  bool cacheable = true;
  uint32_t hopCount = 0;      // transport bookkeeping, not part of identity
};

/// Selector-aware match between a pending interest and arriving data:
/// root and hierarchy must be equal, every interest attribute pair must
/// appear on the data, a generated-at freshness must match the data's
/// timestamp exactly (latest/oldest pass through to content store
/// selection), and an interest flat component must equal the data's.
bool dataMatchesInterest(const Name& interestName, const Name& dataName);

struct Effect {
  enum class Kind {
    ForwardInterest,
    SendData,
    PitCreate,
    PitAddFace,
    PitRemove,
    CacheInsert,
    CacheEvict,
    Drop,
    DropNoRoute,
    DropDuplicate,
  };

  Kind kind = Kind::Drop;
  FaceId face = -1;           // meaningful for forward/send/pit-face effects
  std::string nameText;
  std::optional<InterestPacket> interest;
  std::optional<DataPacket> data;

  std::string describe() const;
};

enum class NodeRole {
  Consumer,
  Router,
  Producer,
  Actuator,
  CampusServer,
};

const char* nodeRoleName(NodeRole role);

struct EngineConfig {
  size_t csCapacity = 64;
  Tick pitLifetime = 4000;
  Tick nonceWindow = 1000;
  bool multipath = false;
};

/// One NDN forwarder: content store (cache-everything, LRU eviction),
/// pending interest table with aggregation, and longest-prefix-match FIB.
class Node {
public:
  Node(int id, NodeRole role, EngineConfig config);

  int id() const { return m_id; }
  NodeRole role() const { return m_role; }
  const EngineConfig& config() const { return m_config; }

  void addFace(FaceId face);
  bool hasFace(FaceId face) const;

  /// Throws Error(InvalidComponent) on a duplicate prefix or empty face list.
  void fibAdd(const NamePrefix& prefix, const std::vector<FaceId>& faces);
  const std::vector<FaceId>* fibLongestPrefixMatch(const Name& name) const;
  size_t fibSize() const { return m_fib.size(); }

  std::vector<Effect> onInterest(const InterestPacket& interest, FaceId inFace, Tick now);
  std::vector<Effect> onData(const DataPacket& data, FaceId inFace, Tick now);

  /// Content store probe honoring freshness selectors; counts a hit and
  /// bumps popularity and recency when it matches.
  std::optional<DataPacket> csLookup(const Name& interestName, Tick now);

  size_t csSize() const { return m_cs.size(); }
  size_t pitSize() const { return m_pit.size(); }
  uint64_t csHits() const { return m_csHits; }
  uint64_t popularityOf(const Name& dataName) const;

private:
  struct CsEntry {
    DataPacket data;
    uint64_t insertSeq = 0;
    uint64_t lastUsedSeq = 0;
    uint64_t hits = 0;
  };

  struct PitEntry {
    InterestPacket interest;
    std::set<FaceId> inFaces;
    Tick expiry = 0;
  };

  void csInsert(const DataPacket& data, std::vector<Effect>& effects);
  CsEntry* csSelect(const Name& interestName);

  int m_id;
  NodeRole m_role;
  EngineConfig m_config;
  std::set<FaceId> m_faces;
  std::map<NamePrefix, std::vector<FaceId>> m_fib;
  std::map<std::string, PitEntry> m_pit;   // keyed by canonical interest name
  std::map<std::string, CsEntry> m_cs;     // keyed by canonical data name
  std::map<uint64_t, Tick> m_recentNonces;
  uint64_t m_useSeq = 0;
  uint64_t m_csHits = 0;
};

/// Guards actuation: returns an interest carrying an action task, throws
/// Error(NotAnAction) when the name lacks one.
InterestPacket issueAction(const Name& name, uint64_t nonce);

} // namespace ndnhns

#endif // NDNHNS_FORWARDING_ENGINE_HPP
