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

#ifndef NDNHNS_CAMPUS_SIM_HPP
#define NDNHNS_CAMPUS_SIM_HPP

#include "forwarding_engine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ndnhns {

// Deterministic discrete-event campus simulation: integer ticks, a
// (time, sequence) priority queue, and a seeded mt19937_64. Equal
// configurations and seeds produce byte-identical traces and reports.

struct NodeSpec {
  int id = 0;
  NodeRole role = NodeRole::Router;
  size_t csCapacity = 64;
};

struct LinkSpec {
  int a = 0;
  int b = 0;
  Tick latency = 1;
};

struct ProducerSpec {
  int node = 0;
  NamePrefix prefix;
  Tick period = 0;          // generated-at stamps snap to multiples; 0 = stamp per request
  size_t payloadSize = 64;
  bool attachFc = false;    // attach a computed flat component to responses
};

struct TimedInterest {
  Tick time = 0;
  Name name;
};

struct RandomWorkload {
  uint64_t count = 0;
  Tick timeMin = 0;
  Tick timeMax = 0;
  std::vector<Name> pool;   // names drawn uniformly
};

struct ConsumerSpec {
  int node = 0;
  std::vector<TimedInterest> interests;
  std::optional<RandomWorkload> random;
};

struct ScenarioConfig {
  Tick duration = 0;
  uint64_t seed = 1;
  Tick pitLifetime = 4000;
  Tick nonceWindow = 1000;
  std::optional<Tick> interestTimeout;   // default: max(10, 20 x latency diameter)
  bool multipath = false;
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  std::vector<ProducerSpec> producers;
  std::vector<ConsumerSpec> consumers;
};

/// Throws Error(ConfigError) naming the offending field with a dotted
/// path such as "producers[1].prefix", or Error(IoError) for an
/// unreadable file.
ScenarioConfig loadScenarioJson(const std::string& text);
ScenarioConfig loadScenarioFile(const std::string& path);

struct RouteEntry {
  NamePrefix prefix;
  std::vector<FaceId> faces;   // best face first
};

struct RoutePlan {
  std::map<int, std::vector<RouteEntry>> byNode;
  size_t unaggregated = 0;
  size_t aggregated = 0;
};

/// Shortest-path route installation toward every producer prefix (link
/// latency as cost, deterministic tie-breaks), followed by sibling
/// collapse: groups of two or more same-length prefixes that share a
/// parent and an identical face list fold into one parent entry.
/// Throws Error(DisconnectedTopology) when some node is unreachable.
RoutePlan buildRoutes(const ScenarioConfig& config);

struct ActuatorState {
  std::string lastCommand;
  uint64_t executions = 0;
};

struct Metrics {
  uint64_t interestsIssued = 0;
  uint64_t interestsSatisfied = 0;
  double satisfactionRate = 1.0;
  uint64_t fibEntriesUnaggregated = 0;
  uint64_t fibEntriesAggregated = 0;
  double aggregationRatio = 1.0;
  uint64_t cacheHits = 0;
  double cacheHitRatio = 0.0;
  double meanHopCount = 0.0;
  std::map<std::string, uint64_t> popularity;   // canonical data name -> cache hits
};

enum class ReportFormat {
  Json,
  Csv,
};

std::string reportMetrics(const Metrics& metrics, ReportFormat format);

struct RunResult {
  Metrics metrics;
  std::string trace;   // one line per forwarding effect: time, node, effect, name
  std::map<int, ActuatorState> actuators;
};

RunResult runScenario(const ScenarioConfig& config);

} // namespace ndnhns

#endif // NDNHNS_CAMPUS_SIM_HPP
