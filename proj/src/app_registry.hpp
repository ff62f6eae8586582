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

#ifndef NDNHNS_APP_REGISTRY_HPP
#define NDNHNS_APP_REGISTRY_HPP

#include "error.hpp"

#include <string>
#include <vector>

namespace ndnhns {

/// One IoT application category, identified by the short uppercase code
/// that appears in the root prefix of every name (e.g. "SBC").
struct AppCategory {
  std::string code;
  std::string title;
  std::string description;
};

bool isValidAppCode(const std::string& code);

/// Ordered, duplicate-free collection of application categories.
/// Immutable in practice: add() returns an extended copy.
class Registry {
public:
  Registry() = default;

  /// The built-in 14-category registry. The codes other than "SBC" are
  /// deployment configuration assigned by this project, not a standard.
  static const Registry& defaults();

  static Registry loadFile(const std::string& path);
  static Registry parseText(const std::string& text);

  const AppCategory& lookup(const std::string& code) const;
  const AppCategory* find(const std::string& code) const noexcept;

  /// Returns a copy extended with the category; the receiver is unchanged.
  Registry add(AppCategory category) const;

  const std::vector<AppCategory>& entries() const noexcept { return m_entries; }
  size_t size() const noexcept { return m_entries.size(); }

  /// One entry per line: CODE<TAB>Title<TAB>Description, UTF-8.
  std::string toText() const;
  void saveFile(const std::string& path) const;

private:
  std::vector<AppCategory> m_entries;
};

} // namespace ndnhns

#endif // NDNHNS_APP_REGISTRY_HPP
