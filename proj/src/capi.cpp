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

#include "ndnhns.h"

#include "app_registry.hpp"
#include "campus_sim.hpp"
#include "error.hpp"
#include "flat_security.hpp"
#include "name_codec.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <optional>
#include <string>

using namespace ndnhns;

struct ndnhns_registry {
  Registry impl;
};

struct ndnhns_name {
  Name value;
};

struct ndnhns_name_builder {
  std::string appCode;
  std::optional<HierarchicalComponent> hc;
  Attributes ac;
};

struct ndnhns_sim_result {
  std::string trace;
  std::string metricsJson;
  std::string metricsCsv;
};

namespace {

thread_local std::string t_lastError;
thread_local long t_lastOffset = -1;

void
clearError()
{
  t_lastError.clear();
  t_lastOffset = -1;
}

ndnhns_status
statusOf(Errc code)
{
  switch (code) {
    case Errc::Ok:
      return NDNHNS_OK;
    case Errc::InvalidComponent:
      return NDNHNS_ERR_INVALID_COMPONENT;
    case Errc::SyntaxError:
      return NDNHNS_ERR_SYNTAX;
    case Errc::UnknownScheme:
      return NDNHNS_ERR_UNKNOWN_SCHEME;
    case Errc::BadDigest:
      return NDNHNS_ERR_BAD_DIGEST;
    case Errc::UnknownCode:
      return NDNHNS_ERR_UNKNOWN_CODE;
    case Errc::DuplicateCode:
      return NDNHNS_ERR_DUPLICATE_CODE;
    case Errc::InvalidCode:
      return NDNHNS_ERR_INVALID_CODE;
    case Errc::OutOfRange:
      return NDNHNS_ERR_OUT_OF_RANGE;
    case Errc::MissingFlatComponent:
      return NDNHNS_ERR_MISSING_FLAT_COMPONENT;
    case Errc::TruncatedDigest:
      return NDNHNS_ERR_TRUNCATED_DIGEST;
    case Errc::NotAnAction:
      return NDNHNS_ERR_NOT_AN_ACTION;
    case Errc::UnknownFace:
      return NDNHNS_ERR_UNKNOWN_FACE;
    case Errc::DisconnectedTopology:
      return NDNHNS_ERR_DISCONNECTED_TOPOLOGY;
    case Errc::ConfigError:
      return NDNHNS_ERR_CONFIG;
    case Errc::IoError:
      return NDNHNS_ERR_IO;
  }
  return NDNHNS_ERR_INTERNAL;
}

template <typename Fn>
ndnhns_status
guarded(Fn&& fn)
{
  clearError();
  try {
    return fn();
  }
  catch (const Error& e) {
    t_lastError = e.what();
    t_lastOffset = e.offset() ? static_cast<long>(*e.offset()) : -1;
    return statusOf(e.code());
  }
  catch (const std::bad_alloc&) {
    t_lastError = "out of memory";
    return NDNHNS_ERR_INTERNAL;
  }
  catch (const std::exception& e) {
    t_lastError = e.what();
    return NDNHNS_ERR_INTERNAL;
  }
}

ndnhns_status
nullArgument(const char* what)
{
  t_lastError = std::string(what) + " must not be NULL";
  t_lastOffset = -1;
  return NDNHNS_ERR_NULL_ARGUMENT;
}

char*
copyString(const std::string& s)
{
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

const char*
ndnhns_version(void)
{
  return "1.0.0";
}

const char*
ndnhns_last_error(void)
{
  return t_lastError.c_str();
}

long
ndnhns_last_error_offset(void)
{
  return t_lastOffset;
}

void
ndnhns_string_free(char* s)
{
  delete[] s;
}

ndnhns_status
ndnhns_registry_default(ndnhns_registry** out)
{
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = new ndnhns_registry{Registry::defaults()};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_registry_load(const char* path, ndnhns_registry** out)
{
  if (!path)
    return nullArgument("path");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = new ndnhns_registry{Registry::loadFile(path)};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_registry_save(const ndnhns_registry* reg, const char* path)
{
  if (!reg)
    return nullArgument("reg");
  if (!path)
    return nullArgument("path");
  return guarded([&] {
    reg->impl.saveFile(path);
    return NDNHNS_OK;
  });
}

size_t
ndnhns_registry_size(const ndnhns_registry* reg)
{
  return reg ? reg->impl.size() : 0;
}

ndnhns_status
ndnhns_registry_entry(const ndnhns_registry* reg, size_t index, char** out_code,
                      char** out_title, char** out_description)
{
  if (!reg)
    return nullArgument("reg");
  return guarded([&] {
    if (index >= reg->impl.size()) {
      throw Error(Errc::OutOfRange, "registry index " + std::to_string(index) +
                                        " out of range (size " +
                                        std::to_string(reg->impl.size()) + ")");
    }
    const AppCategory& entry = reg->impl.entries()[index];
    if (out_code)
      *out_code = copyString(entry.code);
    if (out_title)
      *out_title = copyString(entry.title);
    if (out_description)
      *out_description = copyString(entry.description);
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_registry_lookup(const ndnhns_registry* reg, const char* code, char** out_title,
                       char** out_description)
{
  if (!reg)
    return nullArgument("reg");
  if (!code)
    return nullArgument("code");
  return guarded([&] {
    const AppCategory& entry = reg->impl.lookup(code);
    if (out_title)
      *out_title = copyString(entry.title);
    if (out_description)
      *out_description = copyString(entry.description);
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_registry_add(const ndnhns_registry* reg, const char* code, const char* title,
                    const char* description, ndnhns_registry** out)
{
  if (!reg)
    return nullArgument("reg");
  if (!code)
    return nullArgument("code");
  if (!title)
    return nullArgument("title");
  if (!description)
    return nullArgument("description");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = new ndnhns_registry{reg->impl.add(AppCategory{code, title, description})};
    return NDNHNS_OK;
  });
}

void
ndnhns_registry_free(ndnhns_registry* reg)
{
  delete reg;
}

ndnhns_status
ndnhns_name_builder_new(ndnhns_name_builder** out)
{
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = new ndnhns_name_builder{};
    return NDNHNS_OK;
  });
}

void
ndnhns_name_builder_free(ndnhns_name_builder* b)
{
  delete b;
}

ndnhns_status
ndnhns_builder_set_app_code(ndnhns_name_builder* b, const char* code)
{
  if (!b)
    return nullArgument("builder");
  if (!code)
    return nullArgument("code");
  return guarded([&] {
    b->appCode = code;
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_builder_set_hierarchy(ndnhns_name_builder* b, const char* campus_name,
                             const char* campus_sub_name, const char* location,
                             const char* sub_location, const char* originator_id,
                             const char* content_super_type, const char* content_sub_type)
{
  if (!b)
    return nullArgument("builder");
  const char* portions[] = {campus_name, campus_sub_name,    location,
                            sub_location, originator_id,      content_super_type,
                            content_sub_type};
  for (const char* p : portions) {
    if (!p)
      return nullArgument("hierarchy portion");
  }
  return guarded([&] {
    b->hc = HierarchicalComponent{campus_name,   campus_sub_name,    location,
                                  sub_location,  originator_id,      content_super_type,
                                  content_sub_type};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_builder_add_attribute(ndnhns_name_builder* b, const char* key, const char* value)
{
  if (!b)
    return nullArgument("builder");
  if (!key)
    return nullArgument("key");
  if (!value)
    return nullArgument("value");
  return guarded([&] {
    b->ac.pairs.emplace_back(key, value);
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_builder_set_freshness_latest(ndnhns_name_builder* b)
{
  if (!b)
    return nullArgument("builder");
  b->ac.freshness = Freshness::latest();
  return NDNHNS_OK;
}

ndnhns_status
ndnhns_builder_set_freshness_oldest(ndnhns_name_builder* b)
{
  if (!b)
    return nullArgument("builder");
  b->ac.freshness = Freshness::oldest();
  return NDNHNS_OK;
}

ndnhns_status
ndnhns_builder_set_freshness_generated_at(ndnhns_name_builder* b, uint64_t timestamp)
{
  if (!b)
    return nullArgument("builder");
  b->ac.freshness = Freshness::generatedAt(timestamp);
  return NDNHNS_OK;
}

ndnhns_status
ndnhns_builder_set_popularity(ndnhns_name_builder* b, uint64_t count)
{
  if (!b)
    return nullArgument("builder");
  b->ac.popularity = count;
  return NDNHNS_OK;
}

ndnhns_status
ndnhns_builder_set_task(ndnhns_name_builder* b, const char* task_type, const char* sub_type)
{
  if (!b)
    return nullArgument("builder");
  if (!task_type)
    return nullArgument("task_type");
  if (!sub_type)
    return nullArgument("sub_type");
  return guarded([&] {
    std::string type = task_type;
    if (type != "sense" && type != "action") {
      throw Error(Errc::InvalidComponent, "task type must be 'sense' or 'action'");
    }
    b->ac.task = Task{type == "sense" ? Task::Type::Sense : Task::Type::Action, sub_type};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_builder_build(const ndnhns_name_builder* b, ndnhns_name** out)
{
  if (!b)
    return nullArgument("builder");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    if (!b->hc) {
      throw Error(Errc::InvalidComponent, "hierarchy has not been set");
    }
    std::optional<Attributes> ac;
    if (!b->ac.empty()) {
      ac = b->ac;
    }
    Name name = Name::make(RootPrefix{b->appCode}, *b->hc, std::move(ac));
    *out = new ndnhns_name{std::move(name)};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_name_parse(const char* text, int lenient_digests, ndnhns_name** out)
{
  if (!text)
    return nullArgument("text");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    ParseOptions options;
    options.lenientDigests = lenient_digests != 0;
    *out = new ndnhns_name{parseName(text, options)};
    return NDNHNS_OK;
  });
}

void
ndnhns_name_free(ndnhns_name* name)
{
  delete name;
}

ndnhns_status
ndnhns_name_serialize(const ndnhns_name* name, char** out)
{
  if (!name)
    return nullArgument("name");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = copyString(serializeName(name->value));
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_name_to_json(const ndnhns_name* name, char** out)
{
  if (!name)
    return nullArgument("name");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = copyString(nameToJson(name->value));
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_name_with_fc(const ndnhns_name* name, int use_base64, ndnhns_name** out)
{
  if (!name)
    return nullArgument("name");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    DigestEncoding encoding = use_base64 ? DigestEncoding::Base64 : DigestEncoding::Hex;
    FlatComponent fc = computeFc(name->value.hierarchy(), encoding);
    *out = new ndnhns_name{name->value.withFlat(std::move(fc))};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_name_verify(const ndnhns_name* name, int lenient, int* out_match,
                   char** out_report_json)
{
  if (!name)
    return nullArgument("name");
  if (!out_match)
    return nullArgument("out_match");
  return guarded([&] {
    FcVerification v = verifyFc(name->value, lenient != 0);
    *out_match = v.allConsistent() ? 1 : 0;
    if (out_report_json) {
      nlohmann::ordered_json j;
      j["originator"] = digestCheckName(v.originator);
      j["super_type"] = digestCheckName(v.superType);
      j["sub_type"] = digestCheckName(v.subType);
      j["truncated"] = v.truncated;
      j["overall_match"] = v.overall;
      j["all_consistent"] = v.allConsistent();
      *out_report_json = copyString(j.dump(2));
    }
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_name_prefix(const ndnhns_name* name, size_t k, char** out)
{
  if (!name)
    return nullArgument("name");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    *out = copyString(serializePrefix(hierarchicalPrefix(name->value, k)));
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_prefix_matches(const char* prefix_text, const ndnhns_name* name, int* out_match)
{
  if (!prefix_text)
    return nullArgument("prefix_text");
  if (!name)
    return nullArgument("name");
  if (!out_match)
    return nullArgument("out_match");
  return guarded([&] {
    NamePrefix prefix = parsePrefix(prefix_text);
    *out_match = isPrefixOf(prefix, name->value) ? 1 : 0;
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_compute_fc(const char* originator_id, const char* content_super_type,
                  const char* content_sub_type, int use_base64, char** out_originator,
                  char** out_super_type, char** out_sub_type)
{
  if (!originator_id)
    return nullArgument("originator_id");
  if (!content_super_type)
    return nullArgument("content_super_type");
  if (!content_sub_type)
    return nullArgument("content_sub_type");
  return guarded([&] {
    DigestEncoding encoding = use_base64 ? DigestEncoding::Base64 : DigestEncoding::Hex;
    auto render = [&](const char* text) {
      auto digest = sha256(text);
      return renderDigest(Digest::fromBytes(digest.data(), digest.size()), encoding);
    };
    if (out_originator)
      *out_originator = copyString(render(originator_id));
    if (out_super_type)
      *out_super_type = copyString(render(content_super_type));
    if (out_sub_type)
      *out_sub_type = copyString(render(content_sub_type));
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_sim_run_file(const char* path, int has_seed, uint64_t seed_override,
                    ndnhns_sim_result** out)
{
  if (!path)
    return nullArgument("path");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    ScenarioConfig cfg = loadScenarioFile(path);
    if (has_seed)
      cfg.seed = seed_override;
    RunResult run = runScenario(cfg);
    *out = new ndnhns_sim_result{std::move(run.trace),
                                 reportMetrics(run.metrics, ReportFormat::Json),
                                 reportMetrics(run.metrics, ReportFormat::Csv)};
    return NDNHNS_OK;
  });
}

ndnhns_status
ndnhns_sim_run_json(const char* json_text, int has_seed, uint64_t seed_override,
                    ndnhns_sim_result** out)
{
  if (!json_text)
    return nullArgument("json_text");
  if (!out)
    return nullArgument("out");
  return guarded([&] {
    ScenarioConfig cfg = loadScenarioJson(json_text);
    if (has_seed)
      cfg.seed = seed_override;
    RunResult run = runScenario(cfg);
    *out = new ndnhns_sim_result{std::move(run.trace),
                                 reportMetrics(run.metrics, ReportFormat::Json),
                                 reportMetrics(run.metrics, ReportFormat::Csv)};
    return NDNHNS_OK;
  });
}

const char*
ndnhns_sim_trace(const ndnhns_sim_result* result)
{
  return result ? result->trace.c_str() : "";
}

const char*
ndnhns_sim_metrics_json(const ndnhns_sim_result* result)
{
  return result ? result->metricsJson.c_str() : "";
}

const char*
ndnhns_sim_metrics_csv(const ndnhns_sim_result* result)
{
  return result ? result->metricsCsv.c_str() : "";
}

void
ndnhns_sim_result_free(ndnhns_sim_result* result)
{
  delete result;
}

} // extern "C"
