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

#include "app_registry.hpp"

#include <fstream>
#include <sstream>

namespace ndnhns {

bool
isValidAppCode(const std::string& code)
{
  if (code.empty() || code.size() > 8) {
    return false;
  }
  for (char c : code) {
    if (c < 'A' || c > 'Z') {
      return false;
    }
  }
  return true;
}

const Registry&
Registry::defaults()
{
  static const Registry reg = [] {
    Registry r;
    auto put = [&r](const char* code, const char* title, const char* desc) {
      r.m_entries.push_back(AppCategory{code, title, desc});
    };
    put("SCT", "Smart Cities",
        "Structure health, road lighting, traffic, parking, waste and noise management");
    put("SWT", "Smart Water",
        "Water pollution, flood level and chemical purity monitoring");
    put("SGR", "Smart Grid",
        "Smart metering, electricity usage control and automatic billing");
    put("SEN", "Smart Environment",
        "Earthquake, snow, landslide and fire detection and control");
    put("STR", "Smart Transportation",
        "Commodity transfer with tagged and located vehicles");
    put("SIN", "Smart Individual",
        "Wearables for calorie intake, health sharing and activity tracking");
    put("SBC", "Smart Buildings (Campus)",
        "Chillers, air handlers, parking, energy, temperature and humidity control");
    put("SLG", "Smart Logistics",
        "Route control, supply-chain item detection, shipment quality and storage");
    put("SHM", "Smart Home",
        "Entrance monitoring, door and window control, utility consumption, appliances");
    put("SRT", "Smart Retail",
        "Smart shopping, product store and payment management");
    put("SEH", "Smart E-Health",
        "Vitals monitoring, calorie measurement, elderly assistance and remote medication");
    put("SAF", "Smart Animal & Farming",
        "Offspring survival, ventilation, animal tracking and livestock conditions");
    put("SAG", "Smart Agriculture",
        "Soil moisture, humidity, temperature and wind control for produce quality");
    put("SEL", "Smart Education Learning",
        "Exam result notification, assignment evaluation, announcements and campus energy");
    return r;
  }();
  return reg;
}

const AppCategory*
Registry::find(const std::string& code) const noexcept
{
  for (const auto& e : m_entries) {
    if (e.code == code) {
      return &e;
    }
  }
  return nullptr;
}

const AppCategory&
Registry::lookup(const std::string& code) const
{
  if (const auto* e = find(code)) {
    return *e;
  }
  throw Error(Errc::UnknownCode, "unknown application code: " + code);
}

Registry
Registry::add(AppCategory category) const
{
  if (!isValidAppCode(category.code)) {
    throw Error(Errc::InvalidCode,
                "application code must be 1-8 uppercase ASCII letters: '" + category.code + "'");
  }
  if (category.title.empty()) {
    throw Error(Errc::InvalidCode, "category title must be non-empty");
  }
  if (find(category.code) != nullptr) {
    throw Error(Errc::DuplicateCode, "application code already registered: " + category.code);
  }
  Registry out = *this;
  out.m_entries.push_back(std::move(category));
  return out;
}

Registry
Registry::parseText(const std::string& text)
{
  Registry out;
  std::istringstream in(text);
  std::string line;
  size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos) {
      throw Error(Errc::IoError,
                  "registry line " + std::to_string(lineNo) + ": expected CODE<TAB>Title<TAB>Description");
    }
    AppCategory cat;
    cat.code = line.substr(0, t1);
    cat.title = line.substr(t1 + 1, t2 - t1 - 1);
    cat.description = line.substr(t2 + 1);
    out = out.add(std::move(cat));
  }
  return out;
}

Registry
Registry::loadFile(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::IoError, "cannot open registry file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseText(buf.str());
}

std::string
Registry::toText() const
{
  std::string out;
  for (const auto& e : m_entries) {
    out += e.code;
    out += '\t';
    out += e.title;
    out += '\t';
    out += e.description;
    out += '\n';
  }
  return out;
}

void
Registry::saveFile(const std::string& path) const
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::IoError, "cannot write registry file: " + path);
  }
  out << toText();
}

} // namespace ndnhns
