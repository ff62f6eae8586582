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

#include "name_codec.hpp"

#include "error.hpp"
#include "flat_security.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <vector>

namespace ndnhns {

namespace {

constexpr std::string_view kSchemePrefix = "IoT://";

bool
needsEscape(unsigned char c)
{
  return c == '/' || c == ':' || c == '%' || c == ' ' || c < 0x20 || c == 0x7F;
}

void
appendEscaped(std::string& out, unsigned char c)
{
  static const char* hex = "0123456789ABCDEF";
  out.push_back('%');
  out.push_back(hex[c >> 4]);
  out.push_back(hex[c & 0x0F]);
}

int
hexValue(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

/// One separator-free token plus the byte offset where it started.
struct Token {
  std::string text;
  size_t offset = 0;
};

using SubPart = std::vector<Token>;   // portions
using Component = std::vector<SubPart>;

std::string
decodePercent(std::string_view raw, size_t baseOffset)
{
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c != '%') {
      out.push_back(c);
      continue;
    }
    if (i + 2 >= raw.size()) {
      throw Error(Errc::SyntaxError, "incomplete percent escape", baseOffset + i);
    }
    int hi = hexValue(raw[i + 1]);
    int lo = hexValue(raw[i + 2]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::SyntaxError, "invalid percent escape", baseOffset + i);
    }
    out.push_back(static_cast<char>((hi << 4) | lo));
    i += 2;
  }
  return out;
}

/// Splits everything after "IoT://<code>:" into components, sub-parts and
/// percent-decoded portions, preserving byte offsets for error reporting.
std::vector<Component>
tokenize(std::string_view body, size_t baseOffset)
{
  std::vector<Component> components;
  components.emplace_back();
  components.back().emplace_back();

  size_t tokenStart = 0;
  auto flushToken = [&](size_t end) {
    std::string_view raw = body.substr(tokenStart, end - tokenStart);
    components.back().back().push_back(
        Token{decodePercent(raw, baseOffset + tokenStart), baseOffset + tokenStart});
  };

  size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (c == ':' && i + 1 < body.size() && body[i + 1] == '/') {
      flushToken(i);
      components.back().emplace_back();
      i += 2;
      tokenStart = i;
    }
    else if (c == ':') {
      flushToken(i);
      components.emplace_back();
      components.back().emplace_back();
      i += 1;
      tokenStart = i;
    }
    else if (c == '/') {
      flushToken(i);
      i += 1;
      tokenStart = i;
    }
    else {
      ++i;
    }
  }
  flushToken(body.size());
  return components;
}

bool
isAllDigits(const std::string& s)
{
  if (s.empty())
    return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

uint64_t
parseUint(const Token& tok, const char* what)
{
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw Error(Errc::SyntaxError, std::string("invalid ") + what, tok.offset);
  }
  return value;
}

/// True when the component looks like three digest renderings; fills fc.
bool
tryParseFlat(const Component& comp, const ParseOptions& options, FlatComponent& fc,
             bool& sawTruncated)
{
  if (comp.size() != 3)
    return false;
  Digest digests[3];
  DigestEncoding encodings[3];
  bool truncated = false;
  for (size_t i = 0; i < 3; ++i) {
    if (comp[i].size() != 1)
      return false;
    auto parsed = parseDigestRendering(comp[i][0].text, /*lenientTruncation=*/true);
    if (!parsed)
      return false;
    digests[i] = parsed->first;
    encodings[i] = parsed->second;
    truncated = truncated || !parsed->first.full();
  }
  if (encodings[0] != encodings[1] || encodings[1] != encodings[2])
    return false;
  if (truncated) {
    if (!options.lenientDigests) {
      throw Error(Errc::BadDigest, "truncated digest in flat component", comp[0][0].offset);
    }
    sawTruncated = true;
  }
  fc.originator = digests[0];
  fc.superType = digests[1];
  fc.subType = digests[2];
  fc.encoding = encodings[0];
  return true;
}

Attributes
parseAttributes(const Component& comp)
{
  Attributes ac;
  // 0 = pairs, 1 = freshness seen, 2 = popularity seen, 3 = task seen
  int stage = 0;
  for (const SubPart& sp : comp) {
    const Token& head = sp.front();
    if (sp.size() == 1 && (head.text == "0" || head.text == "1")) {
      if (stage >= 1) {
        if (stage >= 2) {
          throw Error(Errc::SyntaxError, "unexpected bare integer after popularity", head.offset);
        }
        // second bare integer after freshness: popularity
        ac.popularity = parseUint(head, "popularity");
        stage = 2;
        continue;
      }
      ac.freshness = head.text == "0" ? Freshness::latest() : Freshness::oldest();
      stage = 1;
      continue;
    }
    if (sp.size() == 1 && isAllDigits(head.text)) {
      if (stage != 1) {
        throw Error(Errc::SyntaxError,
                    stage == 0 ? "popularity requires a preceding freshness sub-part"
                               : "unexpected bare integer after popularity",
                    head.offset);
      }
      ac.popularity = parseUint(head, "popularity");
      stage = 2;
      continue;
    }
    if (sp.size() == 2 && head.text == "ts") {
      if (stage >= 1) {
        throw Error(Errc::SyntaxError, "freshness specified twice", head.offset);
      }
      ac.freshness = Freshness::generatedAt(parseUint(sp[1], "timestamp"));
      stage = 1;
      continue;
    }
    if (sp.size() == 2 && (head.text == "sense" || head.text == "action")) {
      if (stage >= 3) {
        throw Error(Errc::SyntaxError, "task specified twice", head.offset);
      }
      if (sp[1].text.empty()) {
        throw Error(Errc::SyntaxError, "empty task sub-type", sp[1].offset);
      }
      ac.task = Task{head.text == "sense" ? Task::Type::Sense : Task::Type::Action, sp[1].text};
      stage = 3;
      continue;
    }
    // plain key/value pair
    if (sp.size() != 2) {
      throw Error(Errc::SyntaxError, "attribute sub-part is not a key/value pair", head.offset);
    }
    if (stage != 0) {
      throw Error(Errc::SyntaxError, "key/value pair after freshness, popularity, or task",
                  head.offset);
    }
    if (head.text.empty()) {
      throw Error(Errc::SyntaxError, "empty attribute key", head.offset);
    }
    for (const auto& existing : ac.pairs) {
      if (existing.first == head.text) {
        throw Error(Errc::SyntaxError, "duplicate attribute key", head.offset);
      }
    }
    ac.pairs.emplace_back(head.text, sp[1].text);
  }
  return ac;
}

} // namespace

std::string
escapePortion(std::string_view portion)
{
  std::string out;
  out.reserve(portion.size());
  for (unsigned char c : portion) {
    if (needsEscape(c)) {
      appendEscaped(out, c);
    }
    else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

namespace {

void
appendAttributes(std::string& out, const Attributes& ac)
{
  bool first = true;
  auto sep = [&] {
    out += first ? ":" : ":/";
    first = false;
  };
  for (const auto& [key, value] : ac.pairs) {
    sep();
    out += escapePortion(key);
    out += '/';
    out += escapePortion(value);
  }
  if (ac.freshness) {
    sep();
    switch (ac.freshness->kind) {
      case Freshness::Kind::Latest:
        out += '0';
        break;
      case Freshness::Kind::Oldest:
        out += '1';
        break;
      case Freshness::Kind::GeneratedAt:
        out += "ts/";
        out += std::to_string(ac.freshness->timestamp);
        break;
    }
  }
  if (ac.popularity) {
    sep();
    out += std::to_string(*ac.popularity);
  }
  if (ac.task) {
    sep();
    out += ac.task->type == Task::Type::Sense ? "sense/" : "action/";
    out += escapePortion(ac.task->subType);
  }
}

} // namespace

std::string
serializeName(const Name& name)
{
  std::string out;
  out += kSchemePrefix;
  out += name.root().appCode;
  out += ':';
  const HierarchicalComponent& hc = name.hierarchy();
  for (size_t i = 0; i < HierarchicalComponent::kPortionCount; ++i) {
    if (i > 0)
      out += '/';
    out += escapePortion(hc.portion(i));
  }
  if (name.attributes()) {
    appendAttributes(out, *name.attributes());
  }
  if (name.flat()) {
    const FlatComponent& fc = *name.flat();
    out += ':';
    out += escapePortion(renderDigest(fc.originator, fc.encoding));
    out += ":/";
    out += escapePortion(renderDigest(fc.superType, fc.encoding));
    out += ":/";
    out += escapePortion(renderDigest(fc.subType, fc.encoding));
  }
  return out;
}

std::string
serializePrefix(const NamePrefix& prefix)
{
  std::string out;
  out += kSchemePrefix;
  out += prefix.root().appCode;
  out += ':';
  for (size_t i = 0; i < prefix.portions().size(); ++i) {
    if (i > 0)
      out += '/';
    out += escapePortion(prefix.portions()[i]);
  }
  return out;
}

namespace {

/// Validates "IoT://<code>" and returns the offset just past the code's
/// trailing ':' along with the code itself.
std::pair<std::string, size_t>
parseSchemeAndCode(std::string_view text)
{
  if (text.substr(0, kSchemePrefix.size()) != kSchemePrefix) {
    throw Error(Errc::UnknownScheme, "name does not start with IoT://", 0);
  }
  size_t i = kSchemePrefix.size();
  std::string code;
  while (i < text.size() && text[i] >= 'A' && text[i] <= 'Z') {
    code.push_back(text[i]);
    ++i;
  }
  if (code.empty() || code.size() > 8) {
    throw Error(Errc::SyntaxError, "application code must be 1..8 uppercase letters",
                kSchemePrefix.size());
  }
  if (i >= text.size() || text[i] != ':') {
    throw Error(Errc::SyntaxError, "expected ':' after application code", i);
  }
  return {code, i + 1};
}

std::string_view
stripTrailingSeparators(std::string_view text)
{
  size_t end = text.size();
  while (end > 0 && (text[end - 1] == ':' || text[end - 1] == '/'))
    --end;
  return text.substr(0, end);
}

} // namespace

Name
parseName(std::string_view text, const ParseOptions& options)
{
  text = stripTrailingSeparators(text);
  auto [code, bodyOffset] = parseSchemeAndCode(text);
  std::string_view body = text.substr(bodyOffset);
  if (body.empty()) {
    throw Error(Errc::SyntaxError, "missing hierarchical component", bodyOffset);
  }

  std::vector<Component> components = tokenize(body, bodyOffset);

  const Component& hcComp = components[0];
  if (hcComp.size() != 1) {
    throw Error(Errc::SyntaxError, "hierarchical component cannot contain sub-parts",
                hcComp[1].front().offset);
  }
  if (hcComp[0].size() != HierarchicalComponent::kPortionCount) {
    throw Error(Errc::SyntaxError,
                "hierarchical component requires exactly 7 portions, found " +
                    std::to_string(hcComp[0].size()),
                hcComp[0].front().offset);
  }
  HierarchicalComponent hc;
  hc.campusName = hcComp[0][0].text;
  hc.campusSubName = hcComp[0][1].text;
  hc.campusLocation = hcComp[0][2].text;
  hc.campusSubLocation = hcComp[0][3].text;
  hc.originatorId = hcComp[0][4].text;
  hc.contentSuperType = hcComp[0][5].text;
  hc.contentSubType = hcComp[0][6].text;

  std::optional<Attributes> ac;
  std::optional<FlatComponent> fc;
  bool sawTruncated = false;

  if (components.size() == 2) {
    FlatComponent candidate;
    if (tryParseFlat(components[1], options, candidate, sawTruncated)) {
      fc = candidate;
    }
    else {
      ac = parseAttributes(components[1]);
    }
  }
  else if (components.size() == 3) {
    ac = parseAttributes(components[1]);
    FlatComponent candidate;
    if (!tryParseFlat(components[2], options, candidate, sawTruncated)) {
      throw Error(Errc::BadDigest, "final component is not a valid flat component",
                  components[2][0].front().offset);
    }
    fc = candidate;
  }
  else if (components.size() > 3) {
    throw Error(Errc::SyntaxError, "too many components",
                components[3][0].front().offset);
  }

  RootPrefix root{code};
  try {
    return Name::make(root, hc, ac, fc);
  }
  catch (const Error& e) {
    // model-level validation failure: re-throw anchored at the body
    throw Error(e.code(), e.what(), bodyOffset);
  }
}

NamePrefix
parsePrefix(std::string_view text)
{
  text = stripTrailingSeparators(text);
  auto [code, bodyOffset] = parseSchemeAndCode(text);
  std::string_view body = text.substr(bodyOffset);
  if (body.empty()) {
    throw Error(Errc::SyntaxError, "missing hierarchical portions", bodyOffset);
  }
  std::vector<Component> components = tokenize(body, bodyOffset);
  if (components.size() != 1 || components[0].size() != 1) {
    throw Error(Errc::SyntaxError, "prefix cannot contain attribute or flat components",
                bodyOffset);
  }
  std::vector<std::string> portions;
  for (const Token& tok : components[0][0]) {
    portions.push_back(tok.text);
  }
  return NamePrefix::make(RootPrefix{code}, portions);
}

std::string
nameToJson(const Name& name)
{
  nlohmann::ordered_json j;
  j["scheme"] = RootPrefix::kScheme;
  j["app_code"] = name.root().appCode;

  nlohmann::ordered_json hcJson;
  const HierarchicalComponent& hc = name.hierarchy();
  hcJson["campus_name"] = hc.campusName;
  hcJson["campus_sub_name"] = hc.campusSubName;
  hcJson["location"] = hc.campusLocation;
  hcJson["sub_location"] = hc.campusSubLocation;
  hcJson["originator_id"] = hc.originatorId;
  hcJson["content_super_type"] = hc.contentSuperType;
  hcJson["content_sub_type"] = hc.contentSubType;
  j["hierarchical"] = hcJson;

  if (name.attributes()) {
    const Attributes& ac = *name.attributes();
    nlohmann::ordered_json acJson;
    if (!ac.pairs.empty()) {
      nlohmann::ordered_json pairs;
      for (const auto& [key, value] : ac.pairs) {
        pairs[key] = value;
      }
      acJson["pairs"] = pairs;
    }
    if (ac.freshness) {
      nlohmann::ordered_json fr;
      switch (ac.freshness->kind) {
        case Freshness::Kind::Latest:
          fr["kind"] = "latest";
          break;
        case Freshness::Kind::Oldest:
          fr["kind"] = "oldest";
          break;
        case Freshness::Kind::GeneratedAt:
          fr["kind"] = "generated_at";
          fr["timestamp"] = ac.freshness->timestamp;
          break;
      }
      acJson["freshness"] = fr;
    }
    if (ac.popularity) {
      acJson["popularity"] = *ac.popularity;
    }
    if (ac.task) {
      nlohmann::ordered_json task;
      task["type"] = ac.task->type == Task::Type::Sense ? "sense" : "action";
      task["sub_type"] = ac.task->subType;
      acJson["task"] = task;
    }
    j["attributes"] = acJson;
  }

  if (name.flat()) {
    const FlatComponent& fc = *name.flat();
    nlohmann::ordered_json fcJson;
    fcJson["encoding"] = fc.encoding == DigestEncoding::Hex ? "hex" : "base64";
    fcJson["originator"] = renderDigest(fc.originator, fc.encoding);
    fcJson["super_type"] = renderDigest(fc.superType, fc.encoding);
    fcJson["sub_type"] = renderDigest(fc.subType, fc.encoding);
    if (!fc.full()) {
      fcJson["truncated"] = true;
    }
    j["flat"] = fcJson;
  }

  j["canonical"] = serializeName(name);
  return j.dump(2);
}

} // namespace ndnhns
