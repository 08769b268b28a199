// Copyright 2026 The Market Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "market/naturals.hpp"
#include "market/operation.hpp"
#include "market/result.hpp"

// Operation scripts as YAML. A script is a block sequence of flat mappings:
//
//   - op: deposit
//     user: 0
//     amount: 100
//   - op: sell
//     item: 3
//     buyer: 1
//
// Fields per tag, in canonical order: deposit user/amount, assign item/user,
// price item/amount, sell item/buyer (`user` is accepted for `buyer` on
// input). Parsing runs in two layers: yaml-cpp for syntax, then a schema
// pass that builds Operation values and reports the first violation.

namespace market {

struct ScriptDocument {
  std::vector<Operation> operations;
  friend bool operator==(const ScriptDocument&, const ScriptDocument&) =
      default;
};

enum class ParseErrorKind {
  kSyntaxError,
  kUnknownOperation,
  kMissingField,
  kExtraField,
  kNonIntegerField,
  kNegativeField,
};

std::string_view to_string(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::kSyntaxError;
  // 1-based source line, 0 when unknown.
  Nat line = 0;
  std::optional<Nat> op_index;
  std::string field;
  std::string message;
};

// One-line human readable diagnostic.
std::string describe(const ParseError& error);

Result<ScriptDocument, ParseError> parse_script(std::string_view text);

// Canonical form: LF line endings, two-space indentation, fields in
// canonical order, a single trailing LF. The empty document is "[]\n".
std::string serialize_script(const ScriptDocument& doc);

}  // namespace market
