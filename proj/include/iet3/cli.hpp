// Copyright 2026 The iet3 Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every command produces a CommandReport that is
// emitted as JSON lines (or a table with --pretty) and mapped to an exit code.

#ifndef IET3_CLI_HPP_
#define IET3_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iet3/verify.hpp"

namespace iet3::cli {

enum class Status { kOk, kPropertyFalse, kInvalidInput };

// 0, 1 and 2 respectively.
int exit_code(Status status);
// "ok", "property-false", "invalid-input".
std::string_view status_name(Status status);

struct CommandReport {
  std::string command;
  Status status = Status::kOk;
  std::vector<nlohmann::json> records;  // one per enumerated object
  nlohmann::json summary = nlohmann::json::object();
  std::string message;
  bool pretty = false;
};

// Parses `args` (without the program name) and runs the command. Never
// throws; bad input yields Status::kInvalidInput with a message.
CommandReport dispatch(const std::vector<std::string>& args,
                       const verify::Hooks& hooks = verify::Hooks::defaults());

// Rows carry "type":"row"; a final "type":"result" record carries the
// command, status, message and summary fields. Keys are sorted.
void emit(const CommandReport& report, std::ostream& out);

// dispatch + emit; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        const verify::Hooks& hooks = verify::Hooks::defaults());

}  // namespace iet3::cli

#endif  // IET3_CLI_HPP_
