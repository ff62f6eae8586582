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

#include "flat_security.hpp"
#include "name_codec.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ndnhns;

namespace {

Name
makeName(const std::string& subType, std::optional<Attributes> ac = std::nullopt)
{
  HierarchicalComponent hc;
  hc.campusName = "Campus";
  hc.campusSubName = "Sub";
  hc.campusLocation = "PK";
  hc.campusSubLocation = "Taxila";
  hc.originatorId = "SensorA";
  hc.contentSuperType = "Env";
  hc.contentSubType = subType;
  return Name::make(RootPrefix{"SCT"}, hc, std::move(ac));
}

Attributes
freshnessAt(Tick t)
{
  Attributes ac;
  ac.freshness = Freshness::generatedAt(t);
  return ac;
}

Node
makeNode(size_t csCapacity = 8, Tick pitLifetime = 100, Tick nonceWindow = 50,
         bool multipath = false)
{
  Node node(1, NodeRole::Router, EngineConfig{csCapacity, pitLifetime, nonceWindow, multipath});
  node.addFace(1);
  node.addFace(2);
  node.addFace(3);
  return node;
}

std::vector<Effect::Kind>
kindsOf(const std::vector<Effect>& effects)
{
  std::vector<Effect::Kind> kinds;
  for (const Effect& e : effects) {
    kinds.push_back(e.kind);
  }
  return kinds;
}

} // namespace

TEST_CASE("data matches an interest by hierarchy and selectors")
{
  Name plain = makeName("Temp");
  CHECK(dataMatchesInterest(plain, plain));
  CHECK_FALSE(dataMatchesInterest(plain, makeName("Humid")));

  // data may carry extra attributes the interest did not ask for
  Name stamped = makeName("Temp", freshnessAt(100));
  CHECK(dataMatchesInterest(plain, stamped));

  // interest pairs must all appear on the data
  Attributes wantVer;
  wantVer.pairs = {{"ver", "1"}};
  Attributes hasVer;
  hasVer.pairs = {{"ver", "1"}, {"ext", "x"}};
  Attributes wrongVer;
  wrongVer.pairs = {{"ver", "2"}};
  CHECK(dataMatchesInterest(makeName("Temp", wantVer), makeName("Temp", hasVer)));
  CHECK_FALSE(dataMatchesInterest(makeName("Temp", wantVer), makeName("Temp", wrongVer)));
  CHECK_FALSE(dataMatchesInterest(makeName("Temp", wantVer), plain));

  // generated-at freshness demands an exact timestamp
  Name wantAt = makeName("Temp", freshnessAt(100));
  CHECK(dataMatchesInterest(wantAt, stamped));
  CHECK_FALSE(dataMatchesInterest(wantAt, makeName("Temp", freshnessAt(101))));
  CHECK_FALSE(dataMatchesInterest(wantAt, plain));

  // latest/oldest selectors do not constrain the match itself
  Attributes latest;
  latest.freshness = Freshness::latest();
  CHECK(dataMatchesInterest(makeName("Temp", latest), stamped));
  CHECK(dataMatchesInterest(makeName("Temp", latest), plain));

  // a requested task must be present and equal
  Attributes senseTask;
  senseTask.task = Task{Task::Type::Sense, "Temperature"};
  Attributes actionTask;
  actionTask.task = Task{Task::Type::Action, "Temperature"};
  CHECK(dataMatchesInterest(makeName("Temp", senseTask), makeName("Temp", senseTask)));
  CHECK_FALSE(dataMatchesInterest(makeName("Temp", senseTask), makeName("Temp", actionTask)));
  CHECK_FALSE(dataMatchesInterest(makeName("Temp", senseTask), plain));

  // a carried flat component must be byte-identical
  FlatComponent fc = computeFc(plain.hierarchy());
  Name certified = plain.withFlat(fc);
  CHECK(dataMatchesInterest(certified, certified));
  CHECK_FALSE(dataMatchesInterest(certified, plain));
  FlatComponent other = fc;
  other.subType.hex[0] = other.subType.hex[0] == 'f' ? 'e' : 'f';
  CHECK_FALSE(dataMatchesInterest(certified, plain.withFlat(other)));
  CHECK(dataMatchesInterest(plain, certified)); // data-side digests are fine
}

TEST_CASE("face bookkeeping guards packet entry points")
{
  Node node = makeNode();
  CHECK(node.hasFace(1));
  CHECK_FALSE(node.hasFace(9));

  InterestPacket interest{makeName("Temp"), 1, 0};
  CHECK_THROWS_AS(node.onInterest(interest, 9, 0), Error);
  DataPacket data{makeName("Temp"), 10, 0, true, 0};
  CHECK_THROWS_AS(node.onData(data, 9, 0), Error);
}

TEST_CASE("fib entries validate faces and reject duplicates")
{
  Node node = makeNode();
  NamePrefix p1 = hierarchicalPrefix(makeName("Temp"), 1);

  CHECK_THROWS_AS(node.fibAdd(p1, {}), Error);
  CHECK_THROWS_AS(node.fibAdd(p1, {42}), Error);
  node.fibAdd(p1, {2});
  CHECK(node.fibSize() == 1);
  CHECK_THROWS_AS(node.fibAdd(p1, {3}), Error);
}

TEST_CASE("longest prefix match prefers the most specific entry")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 1), {1});
  node.fibAdd(hierarchicalPrefix(temp, 4), {2});
  node.fibAdd(hierarchicalPrefix(temp, 7), {3});

  CHECK(*node.fibLongestPrefixMatch(temp) == std::vector<FaceId>{3});
  CHECK(*node.fibLongestPrefixMatch(makeName("Humid")) == std::vector<FaceId>{2});

  HierarchicalComponent elsewhere;
  elsewhere.campusName = "Campus";
  elsewhere.campusSubName = "Sub";
  elsewhere.campusLocation = "PK";
  elsewhere.campusSubLocation = "Islamabad";
  elsewhere.originatorId = "SensorB";
  elsewhere.contentSuperType = "Env";
  elsewhere.contentSubType = "Temp";
  CHECK(*node.fibLongestPrefixMatch(Name::make(RootPrefix{"SCT"}, elsewhere)) ==
        std::vector<FaceId>{1});

  CHECK(node.fibLongestPrefixMatch(Name::make(RootPrefix{"SWT"}, elsewhere)) == nullptr);

  HierarchicalComponent otherCampus = elsewhere;
  otherCampus.campusName = "Other";
  CHECK(node.fibLongestPrefixMatch(Name::make(RootPrefix{"SCT"}, otherCampus)) == nullptr);
}

TEST_CASE("a fresh interest creates pit state and forwards once")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2, 3});

  auto effects = node.onInterest(InterestPacket{temp, 100, 4}, 1, 0);
  REQUIRE(effects.size() == 2);
  CHECK(effects[0].kind == Effect::Kind::PitCreate);
  CHECK(effects[0].face == 1);
  CHECK(effects[1].kind == Effect::Kind::ForwardInterest);
  CHECK(effects[1].face == 2); // single path: first face only
  REQUIRE(effects[1].interest.has_value());
  CHECK(effects[1].interest->hopCount == 5);
  CHECK(effects[1].interest->nonce == 100);
  CHECK(node.pitSize() == 1);
}

TEST_CASE("multipath fans the interest out to every next hop")
{
  Node node = makeNode(8, 100, 50, true);
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2, 3});

  auto effects = node.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  REQUIRE(effects.size() == 3);
  CHECK(effects[1].kind == Effect::Kind::ForwardInterest);
  CHECK(effects[1].face == 2);
  CHECK(effects[2].kind == Effect::Kind::ForwardInterest);
  CHECK(effects[2].face == 3);
}

TEST_CASE("later interests for the same name aggregate in the pit")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2});

  node.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  auto effects = node.onInterest(InterestPacket{temp, 101, 0}, 3, 1);
  REQUIRE(effects.size() == 2);
  CHECK(effects[0].kind == Effect::Kind::PitAddFace);
  CHECK(effects[0].face == 3);
  CHECK(effects[1].kind == Effect::Kind::Drop);
  CHECK(node.pitSize() == 1);

  // the aggregated faces all receive the data
  auto delivery = node.onData(DataPacket{temp, 10, 7, true, 0}, 2, 2);
  std::vector<FaceId> sent;
  for (const Effect& e : delivery) {
    if (e.kind == Effect::Kind::SendData) {
      sent.push_back(e.face);
    }
  }
  CHECK(sent == std::vector<FaceId>{1, 3});
  CHECK(delivery.back().kind == Effect::Kind::PitRemove);
  CHECK(node.pitSize() == 0);
}

TEST_CASE("duplicate nonces are dropped inside the suppression window")
{
  Node node = makeNode(8, 100, 50);
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2});

  node.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  auto dup = node.onInterest(InterestPacket{temp, 100, 0}, 3, 10);
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].kind == Effect::Kind::DropDuplicate);

  // outside the window the nonce is forgotten; the pit entry has also
  // expired by then, so the interest forwards afresh
  auto later = node.onInterest(InterestPacket{temp, 100, 0}, 3, 200);
  CHECK(kindsOf(later) ==
        std::vector<Effect::Kind>{Effect::Kind::PitCreate, Effect::Kind::ForwardInterest});
}

TEST_CASE("an expired pit entry is replaced rather than aggregated")
{
  Node node = makeNode(8, 10, 1000);
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2});

  node.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  auto effects = node.onInterest(InterestPacket{temp, 101, 0}, 3, 50);
  CHECK(kindsOf(effects) ==
        std::vector<Effect::Kind>{Effect::Kind::PitCreate, Effect::Kind::ForwardInterest});
  CHECK(node.pitSize() == 1);

  // data arriving after expiry finds no live entry to satisfy
  Node idle = makeNode(8, 10, 1000);
  idle.fibAdd(hierarchicalPrefix(temp, 7), {2});
  idle.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  auto late = idle.onData(DataPacket{temp, 10, 7, true, 0}, 2, 60);
  CHECK(kindsOf(late) == std::vector<Effect::Kind>{Effect::Kind::CacheInsert});
  CHECK(idle.pitSize() == 0);
}

TEST_CASE("interests without a route are dropped")
{
  Node node = makeNode();
  auto effects = node.onInterest(InterestPacket{makeName("Temp"), 100, 0}, 1, 0);
  REQUIRE(effects.size() == 1);
  CHECK(effects[0].kind == Effect::Kind::DropNoRoute);
  CHECK(node.pitSize() == 0);
}

TEST_CASE("cached data answers a repeat interest from the store")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  node.fibAdd(hierarchicalPrefix(temp, 7), {2});

  node.onData(DataPacket{temp, 10, 7, true, 0}, 2, 0); // unsolicited, cached
  CHECK(node.csSize() == 1);

  auto effects = node.onInterest(InterestPacket{temp, 100, 0}, 1, 1);
  REQUIRE(effects.size() == 1);
  CHECK(effects[0].kind == Effect::Kind::SendData);
  CHECK(effects[0].face == 1);
  REQUIRE(effects[0].data.has_value());
  CHECK(effects[0].data->payloadTag == 7);
  CHECK(node.csHits() == 1);
  CHECK(node.pitSize() == 0);
}

TEST_CASE("non-cacheable data and zero capacity bypass the store")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  auto effects = node.onData(DataPacket{temp, 10, 7, false, 0}, 2, 0);
  CHECK(effects.empty());
  CHECK(node.csSize() == 0);

  Node tiny = makeNode(0);
  auto none = tiny.onData(DataPacket{temp, 10, 7, true, 0}, 2, 0);
  CHECK(none.empty());
  CHECK(tiny.csSize() == 0);
}

TEST_CASE("the content store evicts its least recently used entry")
{
  Node node = makeNode(2);
  Name a = makeName("A");
  Name b = makeName("B");
  Name c = makeName("C");

  node.onData(DataPacket{a, 1, 1, true, 0}, 2, 0);
  node.onData(DataPacket{b, 1, 2, true, 0}, 2, 1);
  CHECK(node.csSize() == 2);

  // touching A makes B the eviction victim
  CHECK(node.csLookup(a, 2).has_value());
  auto effects = node.onData(DataPacket{c, 1, 3, true, 0}, 2, 3);
  REQUIRE(effects.size() == 2);
  CHECK(effects[0].kind == Effect::Kind::CacheEvict);
  CHECK(effects[0].nameText == serializeName(b));
  CHECK(effects[1].kind == Effect::Kind::CacheInsert);
  CHECK(node.csSize() == 2);
  CHECK(node.csLookup(b, 4) == std::nullopt);
  CHECK(node.csLookup(a, 5).has_value());
  CHECK(node.csLookup(c, 6).has_value());
}

TEST_CASE("re-inserting a cached name refreshes the payload in place")
{
  Node node = makeNode(2);
  Name a = makeName("A");
  node.onData(DataPacket{a, 1, 1, true, 0}, 2, 0);
  CHECK(node.csLookup(a, 1).has_value());
  CHECK(node.popularityOf(a) == 1);

  auto effects = node.onData(DataPacket{a, 1, 9, true, 0}, 2, 2);
  CHECK(effects.empty()); // refresh is silent
  CHECK(node.csSize() == 1);
  CHECK(node.popularityOf(a) == 1); // hit statistics survive
  auto got = node.csLookup(a, 3);
  REQUIRE(got.has_value());
  CHECK(got->payloadTag == 9);
}

TEST_CASE("freshness selectors pick among cached versions")
{
  Node node = makeNode(8);
  Name v100 = makeName("Temp", freshnessAt(100));
  Name v200 = makeName("Temp", freshnessAt(200));
  node.onData(DataPacket{v100, 1, 100, true, 0}, 2, 0);
  node.onData(DataPacket{v200, 1, 200, true, 0}, 2, 1);

  Attributes latest;
  latest.freshness = Freshness::latest();
  auto newest = node.csLookup(makeName("Temp", latest), 2);
  REQUIRE(newest.has_value());
  CHECK(newest->payloadTag == 200);

  Attributes oldest;
  oldest.freshness = Freshness::oldest();
  auto eldest = node.csLookup(makeName("Temp", oldest), 3);
  REQUIRE(eldest.has_value());
  CHECK(eldest->payloadTag == 100);

  // no selector behaves like latest
  auto plain = node.csLookup(makeName("Temp"), 4);
  REQUIRE(plain.has_value());
  CHECK(plain->payloadTag == 200);

  auto pinned = node.csLookup(makeName("Temp", freshnessAt(100)), 5);
  REQUIRE(pinned.has_value());
  CHECK(pinned->payloadTag == 100);
  CHECK(node.csLookup(makeName("Temp", freshnessAt(150)), 6) == std::nullopt);
}

TEST_CASE("popularity counts content store hits per name")
{
  Node node = makeNode(8);
  Name temp = makeName("Temp");
  node.onData(DataPacket{temp, 1, 1, true, 0}, 2, 0);
  CHECK(node.popularityOf(temp) == 0);

  node.onInterest(InterestPacket{temp, 100, 0}, 1, 1);
  node.onInterest(InterestPacket{temp, 101, 0}, 1, 2);
  node.onInterest(InterestPacket{temp, 102, 0}, 3, 3);
  CHECK(node.popularityOf(temp) == 3);
  CHECK(node.csHits() == 3);
  CHECK(node.popularityOf(makeName("Humid")) == 0);
}

TEST_CASE("data satisfies only matching pit entries")
{
  Node node = makeNode();
  Name temp = makeName("Temp");
  Name humid = makeName("Humid");
  node.fibAdd(hierarchicalPrefix(temp, 1), {2});

  node.onInterest(InterestPacket{temp, 100, 0}, 1, 0);
  node.onInterest(InterestPacket{humid, 101, 0}, 3, 0);
  CHECK(node.pitSize() == 2);

  auto effects = node.onData(DataPacket{temp, 10, 7, true, 0}, 2, 1);
  std::vector<FaceId> sent;
  for (const Effect& e : effects) {
    if (e.kind == Effect::Kind::SendData) {
      sent.push_back(e.face);
    }
  }
  CHECK(sent == std::vector<FaceId>{1});
  CHECK(node.pitSize() == 1); // the humidity interest stays pending
}

TEST_CASE("issueAction only accepts action-task names")
{
  Attributes action;
  action.task = Task{Task::Type::Action, "Turn-ON"};
  InterestPacket pkt = issueAction(makeName("Lights", action), 42);
  CHECK(pkt.nonce == 42);
  CHECK(pkt.name.attributes()->task->subType == "Turn-ON");

  Attributes sense;
  sense.task = Task{Task::Type::Sense, "Temperature"};
  CHECK_THROWS_AS(issueAction(makeName("Lights", sense), 1), Error);
  CHECK_THROWS_AS(issueAction(makeName("Lights"), 1), Error);

  bool coded = false;
  try {
    issueAction(makeName("Lights"), 1);
  }
  catch (const Error& e) {
    coded = e.code() == Errc::NotAnAction;
  }
  CHECK(coded);
}

TEST_CASE("effect descriptions are stable")
{
  Effect e;
  e.kind = Effect::Kind::ForwardInterest;
  e.face = 3;
  CHECK(e.describe() == "ForwardInterest(3)");
  e.kind = Effect::Kind::PitRemove;
  CHECK(e.describe() == "PitRemove");
  e.kind = Effect::Kind::DropDuplicate;
  CHECK(e.describe() == "DropDuplicate");

  CHECK(std::string(nodeRoleName(NodeRole::Consumer)) == "consumer");
  CHECK(std::string(nodeRoleName(NodeRole::CampusServer)) == "campus-server");
}
