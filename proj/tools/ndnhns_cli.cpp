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

// Command-line front end. Links only against the public C API so it
// doubles as a smoke test for the shared library surface.
//
// Exit codes: 0 success, 1 usage, 2 invalid input (parse/validation),
// 3 digest verification failure, 4 runtime error.

#include <ndnhns.h>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitRuntime = 4;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ndnhns_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

int
exitCodeFor(ndnhns_status status)
{
  switch (status) {
    case NDNHNS_OK:
      return 0;
    case NDNHNS_ERR_IO:
    case NDNHNS_ERR_INTERNAL:
    case NDNHNS_ERR_UNKNOWN_FACE:
    case NDNHNS_ERR_DISCONNECTED_TOPOLOGY:
      return kExitRuntime;
    default:
      return kExitInvalid;
  }
}

int
fail(ndnhns_status status)
{
  std::cerr << "error: " << ndnhns_last_error();
  long offset = ndnhns_last_error_offset();
  if (offset >= 0) {
    std::cerr << " (at byte " << offset << ")";
  }
  std::cerr << "\n";
  return exitCodeFor(status);
}

int
failUsage(const std::string& message)
{
  std::cerr << "error: " << message << "\n";
  return kExitInvalid;
}

using RegistryHandle = std::unique_ptr<ndnhns_registry, decltype(&ndnhns_registry_free)>;
using NameHandle = std::unique_ptr<ndnhns_name, decltype(&ndnhns_name_free)>;
using BuilderHandle = std::unique_ptr<ndnhns_name_builder, decltype(&ndnhns_name_builder_free)>;
using SimHandle = std::unique_ptr<ndnhns_sim_result, decltype(&ndnhns_sim_result_free)>;

struct BuildArgs {
  std::string appCode;
  std::string campusName, campusSubName, location, subLocation;
  std::string originator, superType, subType;
  std::vector<std::string> attrs;
  std::string freshness;
  std::int64_t popularity = -1;
  std::string task;
  bool withFc = false;
  std::string fcEncoding = "hex";
  bool json = false;
};

int
runNameBuild(const BuildArgs& args)
{
  if (args.appCode.empty())
    return failUsage("--app-code is required");
  struct Portion {
    const char* flag;
    const std::string& value;
  };
  const Portion portions[] = {
      {"--campus-name", args.campusName},   {"--campus-sub-name", args.campusSubName},
      {"--campus-location", args.location}, {"--campus-sub-location", args.subLocation},
      {"--originator", args.originator},    {"--super-type", args.superType},
      {"--sub-type", args.subType},
  };
  for (const Portion& p : portions) {
    if (p.value.empty())
      return failUsage(std::string(p.flag) + " is required (hierarchy has seven portions)");
  }
  if (args.fcEncoding != "hex" && args.fcEncoding != "base64")
    return failUsage("--fc-encoding must be hex or base64");

  BuilderHandle builder(nullptr, ndnhns_name_builder_free);
  {
    ndnhns_name_builder* raw = nullptr;
    if (ndnhns_status s = ndnhns_name_builder_new(&raw); s != NDNHNS_OK)
      return fail(s);
    builder.reset(raw);
  }
  if (ndnhns_status s = ndnhns_builder_set_app_code(builder.get(), args.appCode.c_str());
      s != NDNHNS_OK)
    return fail(s);
  if (ndnhns_status s = ndnhns_builder_set_hierarchy(
          builder.get(), args.campusName.c_str(), args.campusSubName.c_str(),
          args.location.c_str(), args.subLocation.c_str(), args.originator.c_str(),
          args.superType.c_str(), args.subType.c_str());
      s != NDNHNS_OK)
    return fail(s);

  for (const std::string& attr : args.attrs) {
    size_t eq = attr.find('=');
    if (eq == std::string::npos)
      return failUsage("--attr expects key=value, got '" + attr + "'");
    std::string key = attr.substr(0, eq);
    std::string value = attr.substr(eq + 1);
    if (ndnhns_status s = ndnhns_builder_add_attribute(builder.get(), key.c_str(), value.c_str());
        s != NDNHNS_OK)
      return fail(s);
  }

  if (!args.freshness.empty()) {
    ndnhns_status s = NDNHNS_OK;
    if (args.freshness == "latest") {
      s = ndnhns_builder_set_freshness_latest(builder.get());
    }
    else if (args.freshness == "oldest") {
      s = ndnhns_builder_set_freshness_oldest(builder.get());
    }
    else if (args.freshness.rfind("ts:", 0) == 0) {
      std::uint64_t ts = 0;
      try {
        ts = std::stoull(args.freshness.substr(3));
      }
      catch (const std::exception&) {
        return failUsage("--freshness ts:<n> expects an integer timestamp");
      }
      s = ndnhns_builder_set_freshness_generated_at(builder.get(), ts);
    }
    else {
      return failUsage("--freshness must be latest, oldest, or ts:<n>");
    }
    if (s != NDNHNS_OK)
      return fail(s);
  }

  if (args.popularity >= 0) {
    if (ndnhns_status s = ndnhns_builder_set_popularity(
            builder.get(), static_cast<std::uint64_t>(args.popularity));
        s != NDNHNS_OK)
      return fail(s);
  }

  if (!args.task.empty()) {
    size_t colon = args.task.find(':');
    if (colon == std::string::npos)
      return failUsage("--task expects sense:<sub-type> or action:<sub-type>");
    std::string type = args.task.substr(0, colon);
    std::string sub = args.task.substr(colon + 1);
    if (ndnhns_status s = ndnhns_builder_set_task(builder.get(), type.c_str(), sub.c_str());
        s != NDNHNS_OK)
      return fail(s);
  }

  NameHandle name(nullptr, ndnhns_name_free);
  {
    ndnhns_name* raw = nullptr;
    if (ndnhns_status s = ndnhns_builder_build(builder.get(), &raw); s != NDNHNS_OK)
      return fail(s);
    name.reset(raw);
  }

  if (args.withFc) {
    ndnhns_name* raw = nullptr;
    if (ndnhns_status s =
            ndnhns_name_with_fc(name.get(), args.fcEncoding == "base64" ? 1 : 0, &raw);
        s != NDNHNS_OK)
      return fail(s);
    name.reset(raw);
  }

  OwnedString text;
  if (ndnhns_status s = ndnhns_name_serialize(name.get(), &text.ptr); s != NDNHNS_OK)
    return fail(s);
  std::cout << text.str() << "\n";
  if (args.json) {
    OwnedString dump;
    if (ndnhns_status s = ndnhns_name_to_json(name.get(), &dump.ptr); s != NDNHNS_OK)
      return fail(s);
    std::cout << dump.str() << "\n";
  }
  return 0;
}

int
runNameParse(const std::string& text, bool lenient, bool json)
{
  NameHandle name(nullptr, ndnhns_name_free);
  {
    ndnhns_name* raw = nullptr;
    if (ndnhns_status s = ndnhns_name_parse(text.c_str(), lenient ? 1 : 0, &raw); s != NDNHNS_OK)
      return fail(s);
    name.reset(raw);
  }
  if (json) {
    OwnedString dump;
    if (ndnhns_status s = ndnhns_name_to_json(name.get(), &dump.ptr); s != NDNHNS_OK)
      return fail(s);
    std::cout << dump.str() << "\n";
  }
  else {
    OwnedString canonical;
    if (ndnhns_status s = ndnhns_name_serialize(name.get(), &canonical.ptr); s != NDNHNS_OK)
      return fail(s);
    std::cout << canonical.str() << "\n";
  }
  return 0;
}

int
runNameVerify(const std::string& text, bool lenient)
{
  NameHandle name(nullptr, ndnhns_name_free);
  {
    ndnhns_name* raw = nullptr;
    if (ndnhns_status s = ndnhns_name_parse(text.c_str(), lenient ? 1 : 0, &raw); s != NDNHNS_OK)
      return fail(s);
    name.reset(raw);
  }
  int match = 0;
  OwnedString report;
  if (ndnhns_status s = ndnhns_name_verify(name.get(), lenient ? 1 : 0, &match, &report.ptr);
      s != NDNHNS_OK)
    return fail(s);
  std::cout << report.str() << "\n";
  return match ? 0 : kExitVerifyFailed;
}

int
runNameHash(const std::string& originator, const std::string& superType,
            const std::string& subType, const std::string& encoding)
{
  if (originator.empty() || superType.empty() || subType.empty())
    return failUsage("--originator, --super-type, and --sub-type are all required");
  if (encoding != "hex" && encoding != "base64")
    return failUsage("--fc-encoding must be hex or base64");
  OwnedString o, s1, s2;
  if (ndnhns_status s = ndnhns_compute_fc(originator.c_str(), superType.c_str(),
                                          subType.c_str(), encoding == "base64" ? 1 : 0,
                                          &o.ptr, &s1.ptr, &s2.ptr);
      s != NDNHNS_OK)
    return fail(s);
  std::cout << "originator\t" << o.str() << "\n";
  std::cout << "super_type\t" << s1.str() << "\n";
  std::cout << "sub_type\t" << s2.str() << "\n";
  return 0;
}

int
runRegistryList(const std::string& file)
{
  RegistryHandle reg(nullptr, ndnhns_registry_free);
  {
    ndnhns_registry* raw = nullptr;
    ndnhns_status s = file.empty() ? ndnhns_registry_default(&raw)
                                   : ndnhns_registry_load(file.c_str(), &raw);
    if (s != NDNHNS_OK)
      return fail(s);
    reg.reset(raw);
  }
  size_t count = ndnhns_registry_size(reg.get());
  for (size_t i = 0; i < count; ++i) {
    OwnedString code, title, description;
    if (ndnhns_status s = ndnhns_registry_entry(reg.get(), i, &code.ptr, &title.ptr,
                                                &description.ptr);
        s != NDNHNS_OK)
      return fail(s);
    std::cout << code.str() << "\t" << title.str() << "\t" << description.str() << "\n";
  }
  return 0;
}

int
runSim(const std::string& scenario, bool hasSeed, std::uint64_t seed,
       const std::string& seedRange, bool showTrace, const std::string& format)
{
  if (format != "json" && format != "csv")
    return failUsage("--format must be json or csv");

  std::vector<std::uint64_t> seeds;
  if (!seedRange.empty()) {
    size_t dash = seedRange.find("..");
    std::uint64_t lo = 0, hi = 0;
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stoull(seedRange);
      }
      else {
        lo = std::stoull(seedRange.substr(0, dash));
        hi = std::stoull(seedRange.substr(dash + 2));
      }
    }
    catch (const std::exception&) {
      return failUsage("--seeds expects <n> or <lo>..<hi>");
    }
    if (hi < lo)
      return failUsage("--seeds range must not be empty");
    if (hi - lo > 10000)
      return failUsage("--seeds range is limited to 10001 seeds");
    for (std::uint64_t v = lo; v <= hi; ++v)
      seeds.push_back(v);
  }
  else if (hasSeed) {
    seeds.push_back(seed);
  }

  auto runOne = [&](int withSeed, std::uint64_t value, SimHandle& out) {
    ndnhns_sim_result* raw = nullptr;
    ndnhns_status s = ndnhns_sim_run_file(scenario.c_str(), withSeed, value, &raw);
    if (s != NDNHNS_OK)
      return s;
    out.reset(raw);
    return NDNHNS_OK;
  };

  if (seeds.size() <= 1) {
    SimHandle result(nullptr, ndnhns_sim_result_free);
    int withSeed = seeds.empty() ? 0 : 1;
    std::uint64_t value = seeds.empty() ? 0 : seeds.front();
    if (ndnhns_status s = runOne(withSeed, value, result); s != NDNHNS_OK)
      return fail(s);
    if (showTrace)
      std::cout << ndnhns_sim_trace(result.get());
    std::cout << (format == "json" ? ndnhns_sim_metrics_json(result.get())
                                   : ndnhns_sim_metrics_csv(result.get()));
    if (format == "json")
      std::cout << "\n";
    return 0;
  }

  // seed sweep: csv gains a leading seed column, json becomes an array
  bool first = true;
  if (format == "json")
    std::cout << "[\n";
  for (std::uint64_t value : seeds) {
    SimHandle result(nullptr, ndnhns_sim_result_free);
    if (ndnhns_status s = runOne(1, value, result); s != NDNHNS_OK)
      return fail(s);
    if (showTrace) {
      std::cout << "# seed " << value << "\n" << ndnhns_sim_trace(result.get());
    }
    if (format == "csv") {
      std::string csv = ndnhns_sim_metrics_csv(result.get());
      size_t newline = csv.find('\n');
      if (first)
        std::cout << "seed," << csv.substr(0, newline + 1);
      std::cout << value << "," << csv.substr(newline + 1);
    }
    else {
      if (!first)
        std::cout << ",\n";
      std::cout << "{\"seed\": " << value << ", \"metrics\": "
                << ndnhns_sim_metrics_json(result.get()) << "}";
    }
    first = false;
  }
  if (format == "json")
    std::cout << "\n]\n";
  return 0;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"hierarchical IoT content names and a deterministic campus simulator"};
  app.require_subcommand(1);

  // registry list
  CLI::App* registry = app.add_subcommand("registry", "application category registry");
  registry->require_subcommand(1);
  CLI::App* registryList = registry->add_subcommand("list", "print categories as TSV");
  std::string registryFile;
  registryList->add_option("--file", registryFile, "load categories from a TSV file");

  // name build | parse | verify | hash
  CLI::App* name = app.add_subcommand("name", "build, parse, verify, and hash names");
  name->require_subcommand(1);

  CLI::App* nameBuild = name->add_subcommand("build", "compose a name from parts");
  BuildArgs buildArgs;
  nameBuild->add_option("--app-code", buildArgs.appCode, "application category code, e.g. SBC");
  nameBuild->add_option("--campus-name", buildArgs.campusName, "hierarchy portion 1");
  nameBuild->add_option("--campus-sub-name", buildArgs.campusSubName, "hierarchy portion 2");
  nameBuild->add_option("--campus-location", buildArgs.location, "hierarchy portion 3");
  nameBuild->add_option("--campus-sub-location", buildArgs.subLocation, "hierarchy portion 4");
  nameBuild->add_option("--originator", buildArgs.originator, "hierarchy portion 5");
  nameBuild->add_option("--super-type", buildArgs.superType, "hierarchy portion 6");
  nameBuild->add_option("--sub-type", buildArgs.subType, "hierarchy portion 7");
  nameBuild->add_option("--attr", buildArgs.attrs, "attribute pair key=value (repeatable)");
  nameBuild->add_option("--freshness", buildArgs.freshness, "latest, oldest, or ts:<n>");
  nameBuild->add_option("--popularity", buildArgs.popularity, "popularity count");
  nameBuild->add_option("--task", buildArgs.task, "sense:<sub-type> or action:<sub-type>");
  nameBuild->add_flag("--with-fc", buildArgs.withFc, "attach computed digests");
  nameBuild->add_option("--fc-encoding", buildArgs.fcEncoding, "hex (default) or base64");
  nameBuild->add_flag("--json", buildArgs.json, "also print the structured JSON dump");

  CLI::App* nameParse = name->add_subcommand("parse", "parse canonical text");
  std::string parseText;
  bool parseLenient = false;
  bool parseJson = false;
  nameParse->add_option("text", parseText, "canonical name text")->required();
  nameParse->add_flag("--lenient", parseLenient, "accept truncated hex digests");
  nameParse->add_flag("--json", parseJson, "print the structured JSON dump");

  CLI::App* nameVerify = name->add_subcommand("verify", "check carried digests");
  std::string verifyText;
  bool verifyLenient = false;
  nameVerify->add_option("text", verifyText, "canonical name text")->required();
  nameVerify->add_flag("--lenient", verifyLenient, "accept truncated hex digests");

  CLI::App* nameHash = name->add_subcommand("hash", "digest the three identity fields");
  std::string hashOriginator, hashSuper, hashSub, hashEncoding = "hex";
  nameHash->add_option("--originator", hashOriginator, "originator id");
  nameHash->add_option("--super-type", hashSuper, "content super type");
  nameHash->add_option("--sub-type", hashSub, "content sub type");
  nameHash->add_option("--fc-encoding", hashEncoding, "hex (default) or base64");

  // sim run
  CLI::App* sim = app.add_subcommand("sim", "deterministic campus simulation");
  sim->require_subcommand(1);
  CLI::App* simRun = sim->add_subcommand("run", "run a scenario file");
  std::string scenario;
  std::uint64_t seed = 0;
  std::string seedRange;
  bool showTrace = false;
  std::string format = "json";
  simRun->add_option("--scenario", scenario, "scenario JSON file")->required();
  CLI::Option* seedOpt = simRun->add_option("--seed", seed, "override the scenario seed");
  simRun->add_option("--seeds", seedRange, "seed sweep <lo>..<hi>")->excludes(seedOpt);
  simRun->add_flag("--trace", showTrace, "print the forwarding trace");
  simRun->add_option("--format", format, "metrics format: json (default) or csv");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (registryList->parsed())
    return runRegistryList(registryFile);
  if (nameBuild->parsed())
    return runNameBuild(buildArgs);
  if (nameParse->parsed())
    return runNameParse(parseText, parseLenient, parseJson);
  if (nameVerify->parsed())
    return runNameVerify(verifyText, verifyLenient);
  if (nameHash->parsed())
    return runNameHash(hashOriginator, hashSuper, hashSub, hashEncoding);
  if (simRun->parsed())
    return runSim(scenario, seedOpt->count() > 0, seed, seedRange, showTrace, format);
  return kExitUsage;
}
