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

#include "campus_sim.hpp"

#include "error.hpp"
#include "flat_security.hpp"
#include "name_codec.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace ndnhns {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void
configError(const std::string& path, const std::string& what)
{
  throw Error(Errc::ConfigError, path + ": " + what);
}

const Json*
optField(const Json& j, const char* key)
{
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json&
requireField(const Json& j, const char* key, const std::string& path)
{
  const Json* v = optField(j, key);
  if (!v) {
    configError(path + "." + key, "missing required field");
  }
  return *v;
}

uint64_t
asUint(const Json& v, const std::string& path)
{
  if (!v.is_number_unsigned()) {
    configError(path, "expected a non-negative integer");
  }
  return v.get<uint64_t>();
}

int
asNodeId(const Json& v, const std::string& path)
{
  if (!v.is_number_integer()) {
    configError(path, "expected an integer node id");
  }
  int64_t id = v.get<int64_t>();
  if (id < 0 || id > 1000000) {
    configError(path, "node id out of range");
  }
  return static_cast<int>(id);
}

std::string
asString(const Json& v, const std::string& path)
{
  if (!v.is_string()) {
    configError(path, "expected a string");
  }
  return v.get<std::string>();
}

bool
asBool(const Json& v, const std::string& path)
{
  if (!v.is_boolean()) {
    configError(path, "expected a boolean");
  }
  return v.get<bool>();
}

NodeRole
parseRole(const std::string& text, const std::string& path)
{
  if (text == "consumer")
    return NodeRole::Consumer;
  if (text == "router")
    return NodeRole::Router;
  if (text == "producer")
    return NodeRole::Producer;
  if (text == "actuator")
    return NodeRole::Actuator;
  if (text == "campus-server")
    return NodeRole::CampusServer;
  configError(path, "unknown role '" + text +
                        "' (expected consumer, router, producer, actuator, or campus-server)");
}

Name
parseConfigName(const std::string& text, const std::string& path)
{
  try {
    return parseName(text);
  }
  catch (const Error& e) {
    configError(path, e.what());
  }
}

NamePrefix
parseConfigPrefix(const std::string& text, const std::string& path)
{
  try {
    return parsePrefix(text);
  }
  catch (const Error& e) {
    configError(path, e.what());
  }
}

constexpr Tick kMaxDuration = 1000000000000ULL;

} // namespace

ScenarioConfig
loadScenarioJson(const std::string& text)
{
  Json j;
  try {
    j = Json::parse(text);
  }
  catch (const Json::parse_error& e) {
    throw Error(Errc::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    configError("scenario", "top level must be an object");
  }

  ScenarioConfig cfg;
  cfg.duration = asUint(requireField(j, "duration", "scenario"), "duration");
  if (cfg.duration < 1 || cfg.duration > kMaxDuration) {
    configError("duration", "must be between 1 and 10^12 ticks");
  }
  if (const Json* v = optField(j, "seed"))
    cfg.seed = asUint(*v, "seed");
  if (const Json* v = optField(j, "pit_lifetime")) {
    cfg.pitLifetime = asUint(*v, "pit_lifetime");
    if (cfg.pitLifetime < 1)
      configError("pit_lifetime", "must be at least 1 tick");
  }
  if (const Json* v = optField(j, "nonce_window")) {
    cfg.nonceWindow = asUint(*v, "nonce_window");
    if (cfg.nonceWindow < 1)
      configError("nonce_window", "must be at least 1 tick");
  }
  if (const Json* v = optField(j, "interest_timeout")) {
    Tick t = asUint(*v, "interest_timeout");
    if (t < 1)
      configError("interest_timeout", "must be at least 1 tick");
    cfg.interestTimeout = t;
  }
  if (const Json* v = optField(j, "multipath"))
    cfg.multipath = asBool(*v, "multipath");

  const Json& nodes = requireField(j, "nodes", "scenario");
  if (!nodes.is_array() || nodes.empty()) {
    configError("nodes", "expected a non-empty array");
  }
  std::set<int> nodeIds;
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::string path = "nodes[" + std::to_string(i) + "]";
    const Json& nj = nodes[i];
    if (!nj.is_object())
      configError(path, "expected an object");
    NodeSpec spec;
    spec.id = asNodeId(requireField(nj, "id", path), path + ".id");
    if (!nodeIds.insert(spec.id).second)
      configError(path + ".id", "duplicate node id " + std::to_string(spec.id));
    spec.role = parseRole(asString(requireField(nj, "role", path), path + ".role"), path + ".role");
    if (const Json* v = optField(nj, "cs_capacity"))
      spec.csCapacity = static_cast<size_t>(asUint(*v, path + ".cs_capacity"));
    cfg.nodes.push_back(spec);
  }
  auto requireNode = [&](const Json& v, const std::string& path) {
    int id = asNodeId(v, path);
    if (!nodeIds.count(id))
      configError(path, "unknown node id " + std::to_string(id));
    return id;
  };
  auto roleOf = [&](int id) {
    for (const NodeSpec& n : cfg.nodes) {
      if (n.id == id)
        return n.role;
    }
    return NodeRole::Router;
  };

  if (const Json* links = optField(j, "links")) {
    if (!links->is_array())
      configError("links", "expected an array");
    for (size_t i = 0; i < links->size(); ++i) {
      std::string path = "links[" + std::to_string(i) + "]";
      const Json& lj = (*links)[i];
      if (!lj.is_object())
        configError(path, "expected an object");
      LinkSpec spec;
      spec.a = requireNode(requireField(lj, "a", path), path + ".a");
      spec.b = requireNode(requireField(lj, "b", path), path + ".b");
      if (spec.a == spec.b)
        configError(path, "link endpoints must differ");
      if (const Json* v = optField(lj, "latency")) {
        spec.latency = asUint(*v, path + ".latency");
        if (spec.latency < 1)
          configError(path + ".latency", "must be at least 1 tick");
      }
      cfg.links.push_back(spec);
    }
  }

  if (const Json* producers = optField(j, "producers")) {
    if (!producers->is_array())
      configError("producers", "expected an array");
    for (size_t i = 0; i < producers->size(); ++i) {
      std::string path = "producers[" + std::to_string(i) + "]";
      const Json& pj = (*producers)[i];
      if (!pj.is_object())
        configError(path, "expected an object");
      int node = requireNode(requireField(pj, "node", path), path + ".node");
      NodeRole role = roleOf(node);
      if (role != NodeRole::Producer && role != NodeRole::Actuator &&
          role != NodeRole::CampusServer) {
        configError(path + ".node",
                    "node " + std::to_string(node) + " has role " + nodeRoleName(role) +
                        " and cannot serve content");
      }
      NamePrefix prefix = parseConfigPrefix(
          asString(requireField(pj, "prefix", path), path + ".prefix"), path + ".prefix");
      ProducerSpec spec{node, prefix, 0, 64, false};
      if (const Json* v = optField(pj, "period"))
        spec.period = asUint(*v, path + ".period");
      if (const Json* v = optField(pj, "payload_size"))
        spec.payloadSize = static_cast<size_t>(asUint(*v, path + ".payload_size"));
      if (const Json* v = optField(pj, "attach_fc"))
        spec.attachFc = asBool(*v, path + ".attach_fc");
      cfg.producers.push_back(std::move(spec));
    }
  }

  if (const Json* consumers = optField(j, "consumers")) {
    if (!consumers->is_array())
      configError("consumers", "expected an array");
    for (size_t i = 0; i < consumers->size(); ++i) {
      std::string path = "consumers[" + std::to_string(i) + "]";
      const Json& cj = (*consumers)[i];
      if (!cj.is_object())
        configError(path, "expected an object");
      ConsumerSpec spec;
      spec.node = requireNode(requireField(cj, "node", path), path + ".node");
      if (const Json* interests = optField(cj, "interests")) {
        if (!interests->is_array())
          configError(path + ".interests", "expected an array");
        for (size_t k = 0; k < interests->size(); ++k) {
          std::string ipath = path + ".interests[" + std::to_string(k) + "]";
          const Json& ij = (*interests)[k];
          if (!ij.is_object())
            configError(ipath, "expected an object");
          Tick time = asUint(requireField(ij, "time", ipath), ipath + ".time");
          if (time > cfg.duration)
            configError(ipath + ".time", "beyond scenario duration");
          Name name = parseConfigName(
              asString(requireField(ij, "name", ipath), ipath + ".name"), ipath + ".name");
          spec.interests.push_back(TimedInterest{time, std::move(name)});
        }
      }
      if (const Json* rj = optField(cj, "random_interests")) {
        std::string rpath = path + ".random_interests";
        if (!rj->is_object())
          configError(rpath, "expected an object");
        RandomWorkload random;
        random.count = asUint(requireField(*rj, "count", rpath), rpath + ".count");
        random.timeMax = cfg.duration;
        if (const Json* v = optField(*rj, "time_min"))
          random.timeMin = asUint(*v, rpath + ".time_min");
        if (const Json* v = optField(*rj, "time_max"))
          random.timeMax = asUint(*v, rpath + ".time_max");
        if (random.timeMax > cfg.duration)
          configError(rpath + ".time_max", "beyond scenario duration");
        if (random.timeMin > random.timeMax)
          configError(rpath + ".time_min", "exceeds time_max");
        const Json& pool = requireField(*rj, "pool", rpath);
        if (!pool.is_array())
          configError(rpath + ".pool", "expected an array");
        for (size_t k = 0; k < pool.size(); ++k) {
          std::string npath = rpath + ".pool[" + std::to_string(k) + "]";
          random.pool.push_back(parseConfigName(asString(pool[k], npath), npath));
        }
        if (random.count > 0 && random.pool.empty())
          configError(rpath + ".pool", "must be non-empty when count > 0");
        spec.random = std::move(random);
      }
      cfg.consumers.push_back(std::move(spec));
    }
  }

  return cfg;
}

ScenarioConfig
loadScenarioFile(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::IoError, "cannot read scenario file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return loadScenarioJson(buf.str());
}

namespace {

struct Adjacency {
  int neighbor;
  FaceId face;
  Tick latency;
};

struct LinkEnd {
  int peer;
  FaceId peerFace;
  Tick latency;
};

using AdjacencyMap = std::map<int, std::vector<Adjacency>>;
using LinkTable = std::map<std::pair<int, FaceId>, LinkEnd>;

AdjacencyMap
buildAdjacency(const ScenarioConfig& cfg, LinkTable* table)
{
  AdjacencyMap adj;
  std::map<int, FaceId> nextFace;
  for (const NodeSpec& n : cfg.nodes) {
    adj[n.id];
    nextFace[n.id] = 1;   // face 0 is the local application
  }
  for (const LinkSpec& link : cfg.links) {
    FaceId fa = nextFace[link.a]++;
    FaceId fb = nextFace[link.b]++;
    adj[link.a].push_back(Adjacency{link.b, fa, link.latency});
    adj[link.b].push_back(Adjacency{link.a, fb, link.latency});
    if (table) {
      (*table)[{link.a, fa}] = LinkEnd{link.b, fb, link.latency};
      (*table)[{link.b, fb}] = LinkEnd{link.a, fa, link.latency};
    }
  }
  return adj;
}

std::map<int, Tick>
shortestFrom(int source, const AdjacencyMap& adj)
{
  std::map<int, Tick> dist;
  std::set<std::pair<Tick, int>> frontier;
  dist[source] = 0;
  frontier.insert({0, source});
  while (!frontier.empty()) {
    auto [d, n] = *frontier.begin();
    frontier.erase(frontier.begin());
    auto it = adj.find(n);
    if (it == adj.end())
      continue;
    for (const Adjacency& edge : it->second) {
      Tick cand = d + edge.latency;
      auto existing = dist.find(edge.neighbor);
      if (existing == dist.end() || cand < existing->second) {
        if (existing != dist.end())
          frontier.erase({existing->second, edge.neighbor});
        dist[edge.neighbor] = cand;
        frontier.insert({cand, edge.neighbor});
      }
    }
  }
  return dist;
}

void
checkConnected(const ScenarioConfig& cfg, const AdjacencyMap& adj)
{
  if (cfg.nodes.empty())
    return;
  std::map<int, Tick> dist = shortestFrom(cfg.nodes.front().id, adj);
  for (const NodeSpec& n : cfg.nodes) {
    if (!dist.count(n.id)) {
      throw Error(Errc::DisconnectedTopology,
                  "node " + std::to_string(n.id) + " is unreachable from node " +
                      std::to_string(cfg.nodes.front().id));
    }
  }
}

std::string
faceListKey(const std::vector<FaceId>& faces)
{
  std::string key;
  for (FaceId f : faces) {
    key += std::to_string(f);
    key += ',';
  }
  return key;
}

/// Folds sibling entries that share a parent and a face list; repeats
/// until no group collapses. Entry count strictly decreases each fold.
void
aggregateEntries(std::vector<RouteEntry>& entries)
{
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = HierarchicalComponent::kPortionCount; k >= 2 && !changed; --k) {
      std::map<std::pair<std::string, std::string>, std::vector<size_t>> groups;
      for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].prefix.portionCount() != k)
          continue;
        groups[{serializePrefix(entries[i].prefix.parent()), faceListKey(entries[i].faces)}]
            .push_back(i);
      }
      for (const auto& [key, members] : groups) {
        if (members.size() < 2)
          continue;
        NamePrefix parent = entries[members.front()].prefix.parent();
        const std::vector<FaceId>& faces = entries[members.front()].faces;
        const RouteEntry* existing = nullptr;
        for (const RouteEntry& e : entries) {
          if (e.prefix == parent) {
            existing = &e;
            break;
          }
        }
        if (existing && !(existing->faces == faces)) {
          // parent already routes elsewhere; folding would reroute it
          continue;
        }
        bool addParent = existing == nullptr;
        std::vector<RouteEntry> next;
        next.reserve(entries.size());
        std::set<size_t> drop(members.begin(), members.end());
        for (size_t i = 0; i < entries.size(); ++i) {
          if (!drop.count(i))
            next.push_back(std::move(entries[i]));
        }
        if (addParent)
          next.push_back(RouteEntry{parent, faces});
        entries = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

} // namespace

RoutePlan
buildRoutes(const ScenarioConfig& config)
{
  AdjacencyMap adj = buildAdjacency(config, nullptr);
  checkConnected(config, adj);

  RoutePlan plan;
  // candidates[(node, prefix text)] = (distance, producer order, face)
  std::map<std::pair<int, std::string>, std::vector<std::tuple<Tick, size_t, FaceId>>> candidates;
  std::map<std::string, const NamePrefix*> prefixByKey;

  for (size_t pi = 0; pi < config.producers.size(); ++pi) {
    const ProducerSpec& producer = config.producers[pi];
    std::string prefixKey = serializePrefix(producer.prefix);
    prefixByKey.emplace(prefixKey, &producer.prefix);
    std::map<int, Tick> dist = shortestFrom(producer.node, adj);

    for (const NodeSpec& n : config.nodes) {
      bool servesHere = false;
      for (const ProducerSpec& other : config.producers) {
        if (other.node == n.id && other.prefix == producer.prefix) {
          servesHere = true;
          break;
        }
      }
      if (servesHere)
        continue;

      std::optional<std::tuple<Tick, int, FaceId>> best;
      for (const Adjacency& edge : adj.at(n.id)) {
        auto dIt = dist.find(edge.neighbor);
        if (dIt == dist.end())
          continue;
        std::tuple<Tick, int, FaceId> cand{edge.latency + dIt->second, edge.neighbor, edge.face};
        if (!best || cand < *best)
          best = cand;
      }
      if (!best)
        continue;
      candidates[{n.id, prefixKey}].emplace_back(std::get<0>(*best), pi, std::get<2>(*best));
    }
  }

  for (auto& [key, cands] : candidates) {
    std::sort(cands.begin(), cands.end());
    std::vector<FaceId> faces;
    for (const auto& [d, pi, face] : cands) {
      if (std::find(faces.begin(), faces.end(), face) == faces.end())
        faces.push_back(face);
    }
    plan.byNode[key.first].push_back(RouteEntry{*prefixByKey.at(key.second), std::move(faces)});
  }

  for (const auto& [nodeId, entries] : plan.byNode) {
    plan.unaggregated += entries.size();
  }
  for (auto& [nodeId, entries] : plan.byNode) {
    aggregateEntries(entries);
    plan.aggregated += entries.size();
  }
  return plan;
}

namespace {

struct Issued {
  int node;
  Tick time;
  Name name;
  uint64_t nonce;
  Tick deadline;
  bool satisfied;
};

struct Event {
  Tick time;
  uint64_t seq;
  bool isInterest;
  int node;
  FaceId face;
  std::optional<InterestPacket> interest;
  std::optional<DataPacket> data;
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const
  {
    if (a.time != b.time)
      return a.time > b.time;
    return a.seq > b.seq;
  }
};

Tick
latencyDiameter(const ScenarioConfig& cfg, const AdjacencyMap& adj)
{
  Tick diameter = 0;
  for (const NodeSpec& n : cfg.nodes) {
    std::map<int, Tick> dist = shortestFrom(n.id, adj);
    for (const auto& [id, d] : dist) {
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

std::string
formatDouble(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

} // namespace

std::string
reportMetrics(const Metrics& metrics, ReportFormat format)
{
  if (format == ReportFormat::Csv) {
    std::string out =
        "interests_issued,interests_satisfied,satisfaction_rate,"
        "fib_entries_unaggregated,fib_entries_aggregated,aggregation_ratio,"
        "cache_hits,cache_hit_ratio,mean_hop_count\n";
    out += std::to_string(metrics.interestsIssued) + ',';
    out += std::to_string(metrics.interestsSatisfied) + ',';
    out += formatDouble(metrics.satisfactionRate) + ',';
    out += std::to_string(metrics.fibEntriesUnaggregated) + ',';
    out += std::to_string(metrics.fibEntriesAggregated) + ',';
    out += formatDouble(metrics.aggregationRatio) + ',';
    out += std::to_string(metrics.cacheHits) + ',';
    out += formatDouble(metrics.cacheHitRatio) + ',';
    out += formatDouble(metrics.meanHopCount) + '\n';
    return out;
  }

  Json j;
  j["interests_issued"] = metrics.interestsIssued;
  j["interests_satisfied"] = metrics.interestsSatisfied;
  j["satisfaction_rate"] = metrics.satisfactionRate;
  j["fib_entries_unaggregated"] = metrics.fibEntriesUnaggregated;
  j["fib_entries_aggregated"] = metrics.fibEntriesAggregated;
  j["aggregation_ratio"] = metrics.aggregationRatio;
  j["cache_hits"] = metrics.cacheHits;
  j["cache_hit_ratio"] = metrics.cacheHitRatio;
  j["mean_hop_count"] = metrics.meanHopCount;
  Json pop = Json::object();
  for (const auto& [name, hits] : metrics.popularity) {
    pop[name] = hits;
  }
  j["popularity"] = pop;
  return j.dump(2);
}

RunResult
runScenario(const ScenarioConfig& config)
{
  RoutePlan plan = buildRoutes(config);
  LinkTable linkTable;
  AdjacencyMap adj = buildAdjacency(config, &linkTable);

  std::map<int, NodeRole> roles;
  std::map<int, Node> engines;
  for (const NodeSpec& spec : config.nodes) {
    roles[spec.id] = spec.role;
    engines.emplace(spec.id,
                    Node(spec.id, spec.role,
                         EngineConfig{spec.csCapacity, config.pitLifetime, config.nonceWindow,
                                      config.multipath}));
    engines.at(spec.id).addFace(0);
  }
  for (const auto& [key, end] : linkTable) {
    engines.at(key.first).addFace(key.second);
  }

  // local application bindings override any remote route for the same prefix
  for (const ProducerSpec& producer : config.producers) {
    std::vector<RouteEntry>& entries = plan.byNode[producer.node];
    bool found = false;
    for (RouteEntry& e : entries) {
      if (e.prefix == producer.prefix) {
        e.faces = {0};
        found = true;
        break;
      }
    }
    if (!found) {
      entries.push_back(RouteEntry{producer.prefix, {0}});
    }
  }
  for (const auto& [nodeId, entries] : plan.byNode) {
    for (const RouteEntry& e : entries) {
      engines.at(nodeId).fibAdd(e.prefix, e.faces);
    }
  }

  std::map<int, std::vector<const ProducerSpec*>> registrations;
  for (const ProducerSpec& producer : config.producers) {
    registrations[producer.node].push_back(&producer);
  }

  std::mt19937_64 rng(config.seed);
  Tick timeout = config.interestTimeout
                     ? *config.interestTimeout
                     : std::max<Tick>(10, 20 * latencyDiameter(config, adj));

  std::vector<Issued> issued;
  std::map<int, std::vector<size_t>> issuedByNode;
  uint64_t nextNonce = 1;
  for (const ConsumerSpec& consumer : config.consumers) {
    for (const TimedInterest& ti : consumer.interests) {
      issuedByNode[consumer.node].push_back(issued.size());
      issued.push_back(Issued{consumer.node, ti.time, ti.name, nextNonce++,
                              ti.time + timeout, false});
    }
    if (consumer.random) {
      const RandomWorkload& rw = *consumer.random;
      Tick span = rw.timeMax - rw.timeMin;
      for (uint64_t i = 0; i < rw.count; ++i) {
        Tick time = rw.timeMin + (span == 0 ? 0 : rng() % (span + 1));
        const Name& name = rw.pool[rng() % rw.pool.size()];
        issuedByNode[consumer.node].push_back(issued.size());
        issued.push_back(Issued{consumer.node, time, name, nextNonce++, time + timeout, false});
      }
    }
  }

  std::priority_queue<Event, std::vector<Event>, EventAfter> queue;
  uint64_t nextSeq = 0;
  auto scheduleInterest = [&](Tick time, int node, FaceId face, InterestPacket pkt) {
    queue.push(Event{time, nextSeq++, true, node, face, std::move(pkt), std::nullopt});
  };
  auto scheduleData = [&](Tick time, int node, FaceId face, DataPacket pkt) {
    queue.push(Event{time, nextSeq++, false, node, face, std::nullopt, std::move(pkt)});
  };

  for (const Issued& is : issued) {
    scheduleInterest(is.time, is.node, 0, InterestPacket{is.name, is.nonce, 0});
  }

  RunResult result;
  result.metrics.fibEntriesUnaggregated = plan.unaggregated;
  result.metrics.fibEntriesAggregated = plan.aggregated;

  std::ostringstream trace;
  uint64_t hopSum = 0;
  uint64_t hopSamples = 0;

  auto satisfy = [&](int node, const DataPacket& data, Tick now) {
    auto it = issuedByNode.find(node);
    if (it == issuedByNode.end())
      return;
    for (size_t idx : it->second) {
      Issued& is = issued[idx];
      if (is.satisfied || is.time > now || is.deadline < now)
        continue;
      if (!dataMatchesInterest(is.name, data.name))
        continue;
      is.satisfied = true;
      ++result.metrics.interestsSatisfied;
      hopSum += data.hopCount;
      ++hopSamples;
    }
  };

  auto answerAtApp = [&](int node, const InterestPacket& interest, Tick now) {
    NodeRole role = roles.at(node);
    if (role == NodeRole::Actuator) {
      const auto& attrs = interest.name.attributes();
      if (!attrs || !attrs->task || attrs->task->type != Task::Type::Action) {
        return;   // actuators only execute action tasks
      }
      ActuatorState& st = result.actuators[node];
      st.lastCommand = attrs->task->subType;
      ++st.executions;
      Name ack = interest.name.withFreshness(Freshness::generatedAt(now));
      scheduleData(now, node, 0, DataPacket{std::move(ack), 3, rng(), false, 0});
      return;
    }

    auto regIt = registrations.find(node);
    if (regIt == registrations.end())
      return;
    const ProducerSpec* chosen = nullptr;
    for (const ProducerSpec* spec : regIt->second) {
      if (!isPrefixOf(spec->prefix, interest.name))
        continue;
      if (!chosen || spec->prefix.portionCount() > chosen->prefix.portionCount())
        chosen = spec;
    }
    if (!chosen)
      return;

    Tick stamp = chosen->period > 0 ? (now / chosen->period) * chosen->period : now;
    Attributes ac;
    if (interest.name.attributes()) {
      ac.pairs = interest.name.attributes()->pairs;
      ac.task = interest.name.attributes()->task;
    }
    ac.freshness = Freshness::generatedAt(stamp);
    std::optional<FlatComponent> fc;
    if (chosen->attachFc) {
      fc = computeFc(interest.name.hierarchy(), DigestEncoding::Hex);
    }
    Name dataName = Name::make(interest.name.root(), interest.name.hierarchy(),
                               std::move(ac), std::move(fc));
    scheduleData(now, node, 0,
                 DataPacket{std::move(dataName), chosen->payloadSize, rng(), true, 0});
  };

  while (!queue.empty()) {
    Event ev = queue.top();
    queue.pop();
    if (ev.time > config.duration)
      break;
    Node& engine = engines.at(ev.node);
    std::vector<Effect> effects = ev.isInterest
                                      ? engine.onInterest(*ev.interest, ev.face, ev.time)
                                      : engine.onData(*ev.data, ev.face, ev.time);
    for (Effect& effect : effects) {
      trace << ev.time << '\t' << ev.node << '\t' << effect.describe() << '\t'
            << effect.nameText << '\n';
      switch (effect.kind) {
        case Effect::Kind::ForwardInterest: {
          if (effect.face == 0) {
            answerAtApp(ev.node, *effect.interest, ev.time);
            break;
          }
          auto endIt = linkTable.find({ev.node, effect.face});
          if (endIt == linkTable.end())
            break;
          const LinkEnd& end = endIt->second;
          scheduleInterest(ev.time + end.latency, end.peer, end.peerFace,
                           std::move(*effect.interest));
          break;
        }
        case Effect::Kind::SendData: {
          DataPacket out = std::move(*effect.data);
          if (ev.isInterest) {
            // a SendData effect from interest processing is a cache hit
            ++result.metrics.cacheHits;
            ++result.metrics.popularity[serializeName(out.name)];
            out.hopCount = 0;
          }
          if (effect.face == 0) {
            satisfy(ev.node, out, ev.time);
            break;
          }
          auto endIt = linkTable.find({ev.node, effect.face});
          if (endIt == linkTable.end())
            break;
          const LinkEnd& end = endIt->second;
          out.hopCount += 1;
          scheduleData(ev.time + end.latency, end.peer, end.peerFace, std::move(out));
          break;
        }
        default:
          break;   // bookkeeping effects only appear in the trace
      }
    }
  }

  result.metrics.interestsIssued = issued.size();
  if (result.metrics.interestsIssued > 0) {
    result.metrics.satisfactionRate =
        static_cast<double>(result.metrics.interestsSatisfied) /
        static_cast<double>(result.metrics.interestsIssued);
    result.metrics.cacheHitRatio =
        static_cast<double>(result.metrics.cacheHits) /
        static_cast<double>(result.metrics.interestsIssued);
  }
  else {
    result.metrics.satisfactionRate = 1.0;
    result.metrics.cacheHitRatio = 0.0;
  }
  result.metrics.aggregationRatio =
      result.metrics.fibEntriesAggregated > 0
          ? static_cast<double>(result.metrics.fibEntriesUnaggregated) /
                static_cast<double>(result.metrics.fibEntriesAggregated)
          : 1.0;
  result.metrics.meanHopCount =
      hopSamples > 0 ? static_cast<double>(hopSum) / static_cast<double>(hopSamples) : 0.0;

  result.trace = trace.str();
  return result;
}

} // namespace ndnhns
