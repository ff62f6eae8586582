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

#include "forwarding_engine.hpp"

#include "error.hpp"
#include "name_codec.hpp"

#include <algorithm>

namespace ndnhns {

bool
dataMatchesInterest(const Name& interestName, const Name& dataName)
{
  if (!(interestName.root() == dataName.root()))
    return false;
  if (!(interestName.hierarchy() == dataName.hierarchy()))
    return false;

  if (interestName.attributes()) {
    const Attributes& want = *interestName.attributes();
    for (const auto& [key, value] : want.pairs) {
      bool found = false;
      if (dataName.attributes()) {
        for (const auto& [dk, dv] : dataName.attributes()->pairs) {
          if (dk == key && dv == value) {
            found = true;
            break;
          }
        }
      }
      if (!found)
        return false;
    }
    if (want.freshness && want.freshness->kind == Freshness::Kind::GeneratedAt) {
      if (!dataName.attributes() || !dataName.attributes()->freshness ||
          dataName.attributes()->freshness->kind != Freshness::Kind::GeneratedAt ||
          dataName.attributes()->freshness->timestamp != want.freshness->timestamp) {
        return false;
      }
    }
    if (want.task) {
      if (!dataName.attributes() || !dataName.attributes()->task ||
          !(*dataName.attributes()->task == *want.task)) {
        return false;
      }
    }
  }

  if (interestName.flat()) {
    if (!dataName.flat())
      return false;
    const FlatComponent& a = *interestName.flat();
    const FlatComponent& b = *dataName.flat();
    if (a.originator.hex != b.originator.hex || a.superType.hex != b.superType.hex ||
        a.subType.hex != b.subType.hex) {
      return false;
    }
  }
  return true;
}

std::string
Effect::describe() const
{
  switch (kind) {
    case Kind::ForwardInterest:
      return "ForwardInterest(" + std::to_string(face) + ")";
    case Kind::SendData:
      return "SendData(" + std::to_string(face) + ")";
    case Kind::PitCreate:
      return "PitCreate(" + std::to_string(face) + ")";
    case Kind::PitAddFace:
      return "PitAddFace(" + std::to_string(face) + ")";
    case Kind::PitRemove:
      return "PitRemove";
    case Kind::CacheInsert:
      return "CacheInsert";
    case Kind::CacheEvict:
      return "CacheEvict";
    case Kind::Drop:
      return "Drop";
    case Kind::DropNoRoute:
      return "DropNoRoute";
    case Kind::DropDuplicate:
      return "DropDuplicate";
  }
  return "?";
}

const char*
nodeRoleName(NodeRole role)
{
  switch (role) {
    case NodeRole::Consumer:
      return "consumer";
    case NodeRole::Router:
      return "router";
    case NodeRole::Producer:
      return "producer";
    case NodeRole::Actuator:
      return "actuator";
    case NodeRole::CampusServer:
      return "campus-server";
  }
  return "?";
}

Node::Node(int id, NodeRole role, EngineConfig config)
  : m_id(id)
  , m_role(role)
  , m_config(std::move(config))
{
}

void
Node::addFace(FaceId face)
{
  m_faces.insert(face);
}

bool
Node::hasFace(FaceId face) const
{
  return m_faces.count(face) > 0;
}

void
Node::fibAdd(const NamePrefix& prefix, const std::vector<FaceId>& faces)
{
  if (faces.empty()) {
    throw Error(Errc::InvalidComponent, "FIB entry requires at least one face");
  }
  for (FaceId f : faces) {
    if (!hasFace(f)) {
      throw Error(Errc::UnknownFace,
                  "FIB entry references unknown face " + std::to_string(f));
    }
  }
  auto [it, inserted] = m_fib.emplace(prefix, faces);
  if (!inserted) {
    throw Error(Errc::InvalidComponent,
                "duplicate FIB prefix " + serializePrefix(prefix));
  }
}

const std::vector<FaceId>*
Node::fibLongestPrefixMatch(const Name& name) const
{
  for (size_t k = HierarchicalComponent::kPortionCount; k >= 1; --k) {
    NamePrefix candidate = hierarchicalPrefix(name, k);
    auto it = m_fib.find(candidate);
    if (it != m_fib.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

Node::CsEntry*
Node::csSelect(const Name& interestName)
{
  const Attributes* want = interestName.attributes() ? &*interestName.attributes() : nullptr;
  Freshness::Kind selector = Freshness::Kind::Latest;
  if (want && want->freshness) {
    selector = want->freshness->kind;
  }

  CsEntry* best = nullptr;
  uint64_t bestStamp = 0;
  for (auto& [key, entry] : m_cs) {
    if (!dataMatchesInterest(interestName, entry.data.name))
      continue;
    if (selector == Freshness::Kind::GeneratedAt) {
      // dataMatchesInterest already enforced timestamp equality
      if (!best || entry.insertSeq < best->insertSeq)
        best = &entry;
      continue;
    }
    uint64_t stamp = 0;
    if (entry.data.name.attributes() && entry.data.name.attributes()->freshness &&
        entry.data.name.attributes()->freshness->kind == Freshness::Kind::GeneratedAt) {
      stamp = entry.data.name.attributes()->freshness->timestamp;
    }
    bool better = false;
    if (!best) {
      better = true;
    }
    else if (selector == Freshness::Kind::Oldest) {
      better = stamp < bestStamp || (stamp == bestStamp && entry.insertSeq < best->insertSeq);
    }
    else {
      better = stamp > bestStamp || (stamp == bestStamp && entry.insertSeq < best->insertSeq);
    }
    if (better) {
      best = &entry;
      bestStamp = stamp;
    }
  }
  return best;
}

std::optional<DataPacket>
Node::csLookup(const Name& interestName, Tick now)
{
  (void)now;
  CsEntry* entry = csSelect(interestName);
  if (!entry)
    return std::nullopt;
  ++m_csHits;
  ++entry->hits;
  entry->lastUsedSeq = ++m_useSeq;
  return entry->data;
}

uint64_t
Node::popularityOf(const Name& dataName) const
{
  auto it = m_cs.find(serializeName(dataName));
  return it == m_cs.end() ? 0 : it->second.hits;
}

void
Node::csInsert(const DataPacket& data, std::vector<Effect>& effects)
{
  std::string key = serializeName(data.name);
  auto it = m_cs.find(key);
  if (it != m_cs.end()) {
    // same name seen again: refresh the payload, keep hit statistics
    it->second.data = data;
    it->second.lastUsedSeq = ++m_useSeq;
    return;
  }
  if (m_cs.size() >= m_config.csCapacity) {
    auto victim = m_cs.end();
    for (auto cand = m_cs.begin(); cand != m_cs.end(); ++cand) {
      if (victim == m_cs.end() || cand->second.lastUsedSeq < victim->second.lastUsedSeq) {
        victim = cand;
      }
    }
    Effect evict;
    evict.kind = Effect::Kind::CacheEvict;
    evict.nameText = victim->first;
    effects.push_back(std::move(evict));
    m_cs.erase(victim);
  }
  uint64_t seq = ++m_useSeq;
  m_cs.emplace(std::move(key), CsEntry{data, seq, seq, 0});

  Effect ins;
  ins.kind = Effect::Kind::CacheInsert;
  ins.nameText = serializeName(data.name);
  ins.data = data;
  effects.push_back(std::move(ins));
}

std::vector<Effect>
Node::onInterest(const InterestPacket& interest, FaceId inFace, Tick now)
{
  if (!hasFace(inFace)) {
    throw Error(Errc::UnknownFace,
                "interest arrived on unknown face " + std::to_string(inFace));
  }

  std::vector<Effect> effects;
  std::string nameKey = serializeName(interest.name);

  // loop suppression: a nonce seen within the window is a duplicate
  for (auto it = m_recentNonces.begin(); it != m_recentNonces.end();) {
    if (it->second + m_config.nonceWindow <= now) {
      it = m_recentNonces.erase(it);
    }
    else {
      ++it;
    }
  }
  auto nonceIt = m_recentNonces.find(interest.nonce);
  if (nonceIt != m_recentNonces.end()) {
    Effect e;
    e.kind = Effect::Kind::DropDuplicate;
    e.face = inFace;
    e.nameText = nameKey;
    effects.push_back(std::move(e));
    return effects;
  }
  m_recentNonces.emplace(interest.nonce, now);

  if (auto data = csLookup(interest.name, now)) {
    Effect e;
    e.kind = Effect::Kind::SendData;
    e.face = inFace;
    e.nameText = serializeName(data->name);
    e.data = std::move(data);
    effects.push_back(std::move(e));
    return effects;
  }

  auto pitIt = m_pit.find(nameKey);
  if (pitIt != m_pit.end()) {
    if (pitIt->second.expiry > now) {
      // aggregation: remember the face, do not forward again
      pitIt->second.inFaces.insert(inFace);
      Effect add;
      add.kind = Effect::Kind::PitAddFace;
      add.face = inFace;
      add.nameText = nameKey;
      effects.push_back(std::move(add));
      Effect drop;
      drop.kind = Effect::Kind::Drop;
      drop.face = inFace;
      drop.nameText = nameKey;
      effects.push_back(std::move(drop));
      return effects;
    }
    m_pit.erase(pitIt);
  }

  const std::vector<FaceId>* nextHops = fibLongestPrefixMatch(interest.name);
  if (!nextHops) {
    Effect e;
    e.kind = Effect::Kind::DropNoRoute;
    e.face = inFace;
    e.nameText = nameKey;
    effects.push_back(std::move(e));
    return effects;
  }

  m_pit.emplace(nameKey, PitEntry{interest, {inFace}, now + m_config.pitLifetime});

  Effect create;
  create.kind = Effect::Kind::PitCreate;
  create.face = inFace;
  create.nameText = nameKey;
  effects.push_back(std::move(create));

  size_t fanout = m_config.multipath ? nextHops->size() : 1;
  for (size_t i = 0; i < fanout; ++i) {
    InterestPacket out = interest;
    out.hopCount = interest.hopCount + 1;
    Effect fwd;
    fwd.kind = Effect::Kind::ForwardInterest;
    fwd.face = (*nextHops)[i];
    fwd.nameText = nameKey;
    fwd.interest = std::move(out);
    effects.push_back(std::move(fwd));
  }
  return effects;
}

std::vector<Effect>
Node::onData(const DataPacket& data, FaceId inFace, Tick now)
{
  if (!hasFace(inFace)) {
    throw Error(Errc::UnknownFace,
                "data arrived on unknown face " + std::to_string(inFace));
  }

  std::vector<Effect> effects;
  if (data.cacheable && m_config.csCapacity > 0) {
    csInsert(data, effects);
  }

  for (auto it = m_pit.begin(); it != m_pit.end();) {
    if (it->second.expiry <= now) {
      it = m_pit.erase(it);
      continue;
    }
    if (!dataMatchesInterest(it->second.interest.name, data.name)) {
      ++it;
      continue;
    }
    for (FaceId f : it->second.inFaces) {
      Effect send;
      send.kind = Effect::Kind::SendData;
      send.face = f;
      send.nameText = serializeName(data.name);
      send.data = data;
      effects.push_back(std::move(send));
    }
    Effect rem;
    rem.kind = Effect::Kind::PitRemove;
    rem.nameText = it->first;
    effects.push_back(std::move(rem));
    it = m_pit.erase(it);
  }
  return effects;
}

InterestPacket
issueAction(const Name& name, uint64_t nonce)
{
  if (!name.attributes() || !name.attributes()->task ||
      name.attributes()->task->type != Task::Type::Action) {
    throw Error(Errc::NotAnAction, "name does not carry an action task");
  }
  return InterestPacket{name, nonce, 0};
}

} // namespace ndnhns
