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

#include "name_codec.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>

using namespace ndnhns;

namespace {

std::string
scenarioPath(const char* file)
{
  return std::string(NDNHNS_SCENARIO_DIR) + "/" + file;
}

Errc
loadFailure(const std::string& json, std::string* message = nullptr)
{
  try {
    loadScenarioJson(json);
  }
  catch (const Error& e) {
    if (message) {
      *message = e.what();
    }
    return e.code();
  }
  return Errc::Ok;
}

// smallest complete scenario: one consumer, one router, one producer
const char* kChainJson = R"({
  "duration": 100,
  "nodes": [
    {"id": 0, "role": "consumer", "cs_capacity": 0},
    {"id": 1, "role": "router"},
    {"id": 2, "role": "producer"}
  ],
  "links": [
    {"a": 0, "b": 1},
    {"a": 1, "b": 2}
  ],
  "producers": [
    {"node": 2, "prefix": "IoT://SCT:Campus/Sub/PK/Taxila/SensorA/Env"}
  ],
  "consumers": [
    {"node": 0, "interests": [
      {"time": 10, "name": "IoT://SCT:Campus/Sub/PK/Taxila/SensorA/Env/Temp"}
    ]}
  ]
})";

} // namespace

TEST_CASE("scenario json loads every field")
{
  ScenarioConfig cfg = loadScenarioJson(kChainJson);
  CHECK(cfg.duration == 100);
  CHECK(cfg.seed == 1);
  REQUIRE(cfg.nodes.size() == 3);
  CHECK(cfg.nodes[0].role == NodeRole::Consumer);
  CHECK(cfg.nodes[0].csCapacity == 0);
  CHECK(cfg.nodes[1].csCapacity == 64); // default
  REQUIRE(cfg.links.size() == 2);
  CHECK(cfg.links[0].latency == 1);
  REQUIRE(cfg.producers.size() == 1);
  CHECK(cfg.producers[0].prefix.portionCount() == 6);
  CHECK(cfg.producers[0].period == 0);
  CHECK_FALSE(cfg.producers[0].attachFc);
  REQUIRE(cfg.consumers.size() == 1);
  REQUIRE(cfg.consumers[0].interests.size() == 1);
  CHECK(cfg.consumers[0].interests[0].time == 10);
}

TEST_CASE("scenario validation points at the offending field")
{
  std::string msg;

  CHECK(loadFailure("{not json", &msg) == Errc::ConfigError);
  CHECK(msg.find("invalid JSON") != std::string::npos);

  CHECK(loadFailure(R"({"nodes": []})", &msg) == Errc::ConfigError);
  CHECK(msg.find("scenario.duration") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10, "nodes": [
          {"id": 1, "role": "router"}, {"id": 1, "role": "router"}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("nodes[1].id") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10, "nodes": [{"id": 0, "role": "teapot"}]})", &msg) ==
        Errc::ConfigError);
  CHECK(msg.find("nodes[0].role") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "router"}],
          "links": [{"a": 0, "b": 7}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("links[0].b") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "router"}, {"id": 1, "role": "router"}],
          "links": [{"a": 0, "b": 1, "latency": 0}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("links[0].latency") != std::string::npos);

  // producers need a producer-capable role
  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "consumer"}],
          "producers": [{"node": 0, "prefix": "IoT://SCT:a"}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("producers[0].node") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "producer"}],
          "producers": [{"node": 0, "prefix": "not a name"}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("producers[0].prefix") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "consumer"}],
          "consumers": [{"node": 0, "interests": [
            {"time": 11, "name": "IoT://SCT:a/b/c/d/e/f/g"}]}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("interests[0].time") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "consumer"}],
          "consumers": [{"node": 0, "random_interests":
            {"count": 3, "pool": []}}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("pool") != std::string::npos);

  CHECK(loadFailure(R"({"duration": 10,
          "nodes": [{"id": 0, "role": "consumer"}],
          "consumers": [{"node": 0, "random_interests":
            {"count": 1, "time_min": 9, "time_max": 4,
             "pool": ["IoT://SCT:a/b/c/d/e/f/g"]}}]})",
                    &msg) == Errc::ConfigError);
  CHECK(msg.find("time_min") != std::string::npos);

  bool ioThrown = false;
  try {
    loadScenarioFile("/nonexistent/scenario.json");
  }
  catch (const Error& e) {
    ioThrown = e.code() == Errc::IoError;
  }
  CHECK(ioThrown);
}

TEST_CASE("route building follows shortest latency with deterministic ties")
{
  // diamond: equal-cost paths through nodes 1 and 2; the lower id wins
  const char* diamond = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "consumer"},
      {"id": 1, "role": "router"},
      {"id": 2, "role": "router"},
      {"id": 3, "role": "producer"}
    ],
    "links": [
      {"a": 0, "b": 1},
      {"a": 0, "b": 2},
      {"a": 1, "b": 3},
      {"a": 2, "b": 3}
    ],
    "producers": [{"node": 3, "prefix": "IoT://SCT:Campus/Sub/PK"}]
  })";
  RoutePlan plan = buildRoutes(loadScenarioJson(diamond));
  REQUIRE(plan.byNode.count(0) == 1);
  REQUIRE(plan.byNode.at(0).size() == 1);
  CHECK(plan.byNode.at(0)[0].faces == std::vector<FaceId>{1});
  CHECK(plan.byNode.at(1)[0].faces == std::vector<FaceId>{2}); // straight to 3
  CHECK(plan.byNode.count(3) == 0); // hosting node needs no route
  CHECK(plan.unaggregated == 3);
  CHECK(plan.aggregated == 3);

  // higher latency flips the choice
  const char* weighted = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "consumer"},
      {"id": 1, "role": "router"},
      {"id": 2, "role": "router"},
      {"id": 3, "role": "producer"}
    ],
    "links": [
      {"a": 0, "b": 1, "latency": 5},
      {"a": 0, "b": 2},
      {"a": 1, "b": 3},
      {"a": 2, "b": 3}
    ],
    "producers": [{"node": 3, "prefix": "IoT://SCT:Campus/Sub/PK"}]
  })";
  RoutePlan flipped = buildRoutes(loadScenarioJson(weighted));
  CHECK(flipped.byNode.at(0)[0].faces == std::vector<FaceId>{2});
}

TEST_CASE("the same prefix hosted twice yields a multi-face entry")
{
  const char* twins = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "consumer"},
      {"id": 1, "role": "producer"},
      {"id": 2, "role": "producer"}
    ],
    "links": [
      {"a": 0, "b": 1},
      {"a": 0, "b": 2}
    ],
    "producers": [
      {"node": 1, "prefix": "IoT://SCT:Campus/Sub"},
      {"node": 2, "prefix": "IoT://SCT:Campus/Sub"}
    ]
  })";
  RoutePlan plan = buildRoutes(loadScenarioJson(twins));
  REQUIRE(plan.byNode.at(0).size() == 1);
  CHECK(plan.byNode.at(0)[0].faces == std::vector<FaceId>{1, 2});
  CHECK(plan.unaggregated == 1);
}

TEST_CASE("disconnected topologies are refused")
{
  const char* island = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "consumer"},
      {"id": 1, "role": "producer"}
    ],
    "producers": [{"node": 1, "prefix": "IoT://SCT:Campus"}]
  })";
  bool thrown = false;
  try {
    buildRoutes(loadScenarioJson(island));
  }
  catch (const Error& e) {
    thrown = e.code() == Errc::DisconnectedTopology;
  }
  CHECK(thrown);
}

TEST_CASE("sibling prefixes collapse to their shared parent")
{
  RunResult result = runScenario(loadScenarioFile(scenarioPath("siblings.json")));
  CHECK(result.metrics.fibEntriesUnaggregated == 2);
  CHECK(result.metrics.fibEntriesAggregated == 1);
  CHECK(result.metrics.aggregationRatio == 2.0);
  CHECK(result.metrics.interestsIssued == 0);
  CHECK(result.metrics.satisfactionRate == 1.0); // vacuous but defined
}

TEST_CASE("sibling collapse cascades up the hierarchy")
{
  const char* deep = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "router"},
      {"id": 1, "role": "producer"}
    ],
    "links": [{"a": 0, "b": 1}],
    "producers": [
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/X/p"},
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/X/q"},
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/Y/p"},
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/Y/q"}
    ]
  })";
  RoutePlan plan = buildRoutes(loadScenarioJson(deep));
  CHECK(plan.unaggregated == 4);
  CHECK(plan.aggregated == 1);
  REQUIRE(plan.byNode.at(0).size() == 1);
  CHECK(serializePrefix(plan.byNode.at(0)[0].prefix) == "IoT://SCT:a/b/c/d/e");
}

TEST_CASE("a parent that already routes elsewhere blocks the collapse")
{
  const char* conflict = R"({
    "duration": 10,
    "nodes": [
      {"id": 0, "role": "router"},
      {"id": 1, "role": "producer"},
      {"id": 2, "role": "producer"}
    ],
    "links": [
      {"a": 0, "b": 1},
      {"a": 0, "b": 2}
    ],
    "producers": [
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/f/p"},
      {"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/f/q"},
      {"node": 2, "prefix": "IoT://SCT:a/b/c/d/e/f"}
    ]
  })";
  RoutePlan plan = buildRoutes(loadScenarioJson(conflict));
  // node 0 keeps all three entries: folding p and q into the parent would
  // reroute the parent prefix away from node 2
  CHECK(plan.byNode.at(0).size() == 3);
  // node 2 sees only the siblings and may fold them
  CHECK(plan.byNode.at(2).size() == 1);
  CHECK(plan.unaggregated == 6);
  CHECK(plan.aggregated == 5);
}

TEST_CASE("the three-node chain satisfies its interest end to end")
{
  RunResult result = runScenario(loadScenarioFile(scenarioPath("chain.json")));
  CHECK(result.metrics.interestsIssued == 1);
  CHECK(result.metrics.interestsSatisfied == 1);
  CHECK(result.metrics.satisfactionRate == 1.0);
  CHECK(result.metrics.cacheHits == 0);
  CHECK(result.metrics.meanHopCount == 2.0);
  CHECK(result.metrics.fibEntriesUnaggregated == 2);
  CHECK(result.metrics.fibEntriesAggregated == 2);
  CHECK(result.metrics.aggregationRatio == 1.0);

  const char* kName = "IoT://SBC:UET%20Taxila/CPED/Pakistan/Taxila/CR-LAB1/Environment/Temperature";
  const char* kData =
      "IoT://SBC:UET%20Taxila/CPED/Pakistan/Taxila/CR-LAB1/Environment/Temperature:ts/12";
  std::string expected;
  auto line = [&](const char* time, const char* node, const char* effect, const char* name) {
    expected += std::string(time) + "\t" + node + "\t" + effect + "\t" + name + "\n";
  };
  line("10", "0", "PitCreate(0)", kName);
  line("10", "0", "ForwardInterest(1)", kName);
  line("11", "1", "PitCreate(1)", kName);
  line("11", "1", "ForwardInterest(2)", kName);
  line("12", "2", "PitCreate(1)", kName);
  line("12", "2", "ForwardInterest(0)", kName);
  line("12", "2", "CacheInsert", kData);
  line("12", "2", "SendData(1)", kData);
  line("12", "2", "PitRemove", kName);
  line("13", "1", "CacheInsert", kData);
  line("13", "1", "SendData(1)", kData);
  line("13", "1", "PitRemove", kName);
  line("14", "0", "SendData(0)", kData);
  line("14", "0", "PitRemove", kName);
  CHECK(result.trace == expected);
}

TEST_CASE("a repeated interest is served from the router cache")
{
  RunResult result = runScenario(loadScenarioFile(scenarioPath("chain_repeat.json")));
  CHECK(result.metrics.interestsIssued == 2);
  CHECK(result.metrics.interestsSatisfied == 2);
  CHECK(result.metrics.cacheHits == 1);
  CHECK(result.metrics.cacheHitRatio == 0.5);
  // first answer crosses two links, the cached answer one: mean 1.5
  CHECK(result.metrics.meanHopCount == 1.5);
  CHECK(reportMetrics(result.metrics, ReportFormat::Csv) ==
        "interests_issued,interests_satisfied,satisfaction_rate,"
        "fib_entries_unaggregated,fib_entries_aggregated,aggregation_ratio,"
        "cache_hits,cache_hit_ratio,mean_hop_count\n"
        "2,2,1.000000,2,2,1.000000,1,0.500000,1.500000\n");

  // the cached copy earns a popularity point
  REQUIRE(result.metrics.popularity.size() == 1);
  CHECK(result.metrics.popularity.begin()->second == 1);

  RunResult uncached = runScenario(loadScenarioFile(scenarioPath("chain_repeat_nocache.json")));
  CHECK(uncached.metrics.interestsSatisfied == 2);
  CHECK(uncached.metrics.cacheHits == 0);
  CHECK(uncached.metrics.meanHopCount == 2.0);
  CHECK(uncached.metrics.popularity.empty());
}

TEST_CASE("actuation commands execute and acknowledge without caching")
{
  RunResult result = runScenario(loadScenarioFile(scenarioPath("lights.json")));
  CHECK(result.metrics.interestsIssued == 2);
  CHECK(result.metrics.interestsSatisfied == 2);
  CHECK(result.metrics.satisfactionRate == 1.0);
  CHECK(result.metrics.cacheHits == 0);
  CHECK(result.metrics.meanHopCount == 2.0);

  REQUIRE(result.actuators.count(2) == 1);
  CHECK(result.actuators.at(2).executions == 2);
  CHECK(result.actuators.at(2).lastCommand == "Turn-OFF");

  // acknowledgements echo the command name with a generation stamp
  CHECK(result.trace.find(":ts/7:/action/Turn-ON") != std::string::npos);
  CHECK(result.trace.find(":ts/52:/action/Turn-OFF") != std::string::npos);
}

TEST_CASE("sense interests do not trigger actuators")
{
  const char* probe = R"({
    "duration": 50,
    "nodes": [
      {"id": 0, "role": "consumer", "cs_capacity": 0},
      {"id": 1, "role": "actuator", "cs_capacity": 0}
    ],
    "links": [{"a": 0, "b": 1}],
    "producers": [{"node": 1, "prefix": "IoT://SBC:U/C/PK/T/Room/Lights"}],
    "consumers": [{"node": 0, "interests": [
      {"time": 1, "name": "IoT://SBC:U/C/PK/T/Room/Lights/State:sense/Level"}
    ]}]
  })";
  RunResult result = runScenario(loadScenarioJson(probe));
  CHECK(result.metrics.interestsIssued == 1);
  CHECK(result.metrics.interestsSatisfied == 0); // no data comes back
  CHECK(result.actuators.empty());
}

TEST_CASE("producer periods snap generation stamps")
{
  const char* periodic = R"({
    "duration": 1000,
    "nodes": [
      {"id": 0, "role": "consumer", "cs_capacity": 0},
      {"id": 1, "role": "producer", "cs_capacity": 0}
    ],
    "links": [{"a": 0, "b": 1}],
    "producers": [{"node": 1, "prefix": "IoT://SCT:a/b/c/d/e/f", "period": 100}],
    "consumers": [{"node": 0, "interests": [
      {"time": 130, "name": "IoT://SCT:a/b/c/d/e/f/g"},
      {"time": 290, "name": "IoT://SCT:a/b/c/d/e/f/g"}
    ]}]
  })";
  RunResult result = runScenario(loadScenarioJson(periodic));
  // interests reach the producer at t=131 and t=291
  CHECK(result.trace.find("IoT://SCT:a/b/c/d/e/f/g:ts/100") != std::string::npos);
  CHECK(result.trace.find("IoT://SCT:a/b/c/d/e/f/g:ts/200") != std::string::npos);
  CHECK(result.metrics.interestsSatisfied == 2);
}

TEST_CASE("events beyond the duration never run")
{
  const char* cutoff = R"({
    "duration": 12,
    "nodes": [
      {"id": 0, "role": "consumer", "cs_capacity": 0},
      {"id": 1, "role": "router"},
      {"id": 2, "role": "producer"}
    ],
    "links": [{"a": 0, "b": 1}, {"a": 1, "b": 2}],
    "producers": [{"node": 2, "prefix": "IoT://SCT:a/b/c/d/e/f"}],
    "consumers": [{"node": 0, "interests": [
      {"time": 12, "name": "IoT://SCT:a/b/c/d/e/f/g"}
    ]}]
  })";
  RunResult result = runScenario(loadScenarioJson(cutoff));
  CHECK(result.metrics.interestsIssued == 1);
  CHECK(result.metrics.interestsSatisfied == 0);
  CHECK(result.metrics.satisfactionRate == 0.0);
  // the interest itself still enters the network at t=12
  CHECK(result.trace.find("12\t0\tPitCreate(0)") != std::string::npos);
  CHECK(result.trace.find("SendData(0)") == std::string::npos);
}

TEST_CASE("expired deadlines leave interests unsatisfied")
{
  const char* strict = R"({
    "duration": 100,
    "interest_timeout": 1,
    "nodes": [
      {"id": 0, "role": "consumer", "cs_capacity": 0},
      {"id": 1, "role": "router"},
      {"id": 2, "role": "producer"}
    ],
    "links": [{"a": 0, "b": 1}, {"a": 1, "b": 2}],
    "producers": [{"node": 2, "prefix": "IoT://SCT:a/b/c/d/e/f"}],
    "consumers": [{"node": 0, "interests": [
      {"time": 10, "name": "IoT://SCT:a/b/c/d/e/f/g"}
    ]}]
  })";
  RunResult result = runScenario(loadScenarioJson(strict));
  // the data arrives at t=14, after the t=11 deadline
  CHECK(result.trace.find("SendData(0)") != std::string::npos);
  CHECK(result.metrics.interestsSatisfied == 0);
  CHECK(result.metrics.satisfactionRate == 0.0);
  CHECK(result.metrics.meanHopCount == 0.0);
}

TEST_CASE("multipath forwarding reaches twin producers")
{
  const char* twins = R"({
    "duration": 50,
    "multipath": true,
    "nodes": [
      {"id": 0, "role": "consumer", "cs_capacity": 4},
      {"id": 1, "role": "producer"},
      {"id": 2, "role": "producer"}
    ],
    "links": [
      {"a": 0, "b": 1},
      {"a": 0, "b": 2}
    ],
    "producers": [
      {"node": 1, "prefix": "IoT://SCT:Campus/Sub"},
      {"node": 2, "prefix": "IoT://SCT:Campus/Sub"}
    ],
    "consumers": [{"node": 0, "interests": [
      {"time": 1, "name": "IoT://SCT:Campus/Sub/PK/T/S/Env/Temp"}
    ]}]
  })";
  RunResult result = runScenario(loadScenarioJson(twins));
  CHECK(result.trace.find("1\t0\tForwardInterest(1)") != std::string::npos);
  CHECK(result.trace.find("1\t0\tForwardInterest(2)") != std::string::npos);
  CHECK(result.metrics.interestsIssued == 1);
  CHECK(result.metrics.interestsSatisfied == 1);
}

TEST_CASE("metrics reports carry the same numbers in both formats")
{
  Metrics m;
  m.interestsIssued = 8;
  m.interestsSatisfied = 6;
  m.satisfactionRate = 0.75;
  m.fibEntriesUnaggregated = 4;
  m.fibEntriesAggregated = 2;
  m.aggregationRatio = 2.0;
  m.cacheHits = 3;
  m.cacheHitRatio = 0.375;
  m.meanHopCount = 1.25;
  m.popularity["IoT://SCT:a/b/c/d/e/f/g"] = 3;

  std::string csv = reportMetrics(m, ReportFormat::Csv);
  CHECK(csv ==
        "interests_issued,interests_satisfied,satisfaction_rate,"
        "fib_entries_unaggregated,fib_entries_aggregated,aggregation_ratio,"
        "cache_hits,cache_hit_ratio,mean_hop_count\n"
        "8,6,0.750000,4,2,2.000000,3,0.375000,1.250000\n");

  nlohmann::json j = nlohmann::json::parse(reportMetrics(m, ReportFormat::Json));
  CHECK(j["interests_issued"] == 8);
  CHECK(j["satisfaction_rate"] == 0.75);
  CHECK(j["aggregation_ratio"] == 2.0);
  CHECK(j["popularity"]["IoT://SCT:a/b/c/d/e/f/g"] == 3);
}

TEST_CASE("equal seeds reproduce runs byte for byte and seeds matter")
{
  ScenarioConfig cfg = loadScenarioFile(scenarioPath("sweep.json"));
  RunResult a = runScenario(cfg);
  RunResult b = runScenario(cfg);
  CHECK(a.trace == b.trace);
  CHECK(reportMetrics(a.metrics, ReportFormat::Json) ==
        reportMetrics(b.metrics, ReportFormat::Json));

  ScenarioConfig other = cfg;
  other.seed = cfg.seed + 1;
  RunResult c = runScenario(other);
  CHECK(a.trace != c.trace);
}
