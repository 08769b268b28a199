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

#include "market/script_io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>

namespace market {

namespace {

struct Schema {
  std::string_view tag;
  std::array<std::string_view, 2> fields;
};

constexpr std::array<Schema, 4> kSchemas{{
    {"deposit", {"user", "amount"}},
    {"assign", {"item", "user"}},
    {"price", {"item", "amount"}},
    {"sell", {"item", "buyer"}},
}};

Nat line_of(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? static_cast<Nat>(mark.line) + 1 : 0;
}

ParseError make_error(ParseErrorKind kind, const YAML::Node& node,
                      std::optional<Nat> index, std::string field,
                      std::string message) {
  return ParseError{kind, line_of(node), index, std::move(field),
                    std::move(message)};
}

// Plain (unquoted, untagged) decimal scalar.
Result<Nat, ParseError> read_nat(const YAML::Node& value, Nat index,
                                 std::string_view field) {
  auto fail = [&](ParseErrorKind kind, std::string message) {
    return make_error(kind, value, index, std::string(field),
                      std::move(message));
  };
  if (!value.IsScalar() || value.Tag() != "?") {
    return fail(ParseErrorKind::kNonIntegerField, "expected an integer");
  }
  const std::string& text = value.Scalar();
  std::string_view digits = text;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return fail(ParseErrorKind::kNonIntegerField,
                "expected an integer, got '" + text + "'");
  }
  if (negative) {
    return fail(ParseErrorKind::kNegativeField,
                "negative value '" + text + "'");
  }
  Nat out = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    return fail(ParseErrorKind::kNonIntegerField,
                "integer out of range '" + text + "'");
  }
  return out;
}

Operation build(std::string_view tag, Nat a, Nat b) {
  if (tag == "deposit") return Deposit{a, b};
  if (tag == "assign") return Assign{a, b};
  if (tag == "price") return Price{a, b};
  return Sell{a, b};
}

Result<Operation, ParseError> read_operation(const YAML::Node& entry,
                                             Nat index) {
  if (!entry.IsMap()) {
    return make_error(ParseErrorKind::kSyntaxError, entry, index, "",
                      "operation entry is not a mapping");
  }
  const YAML::Node tag_node = entry["op"];
  if (!tag_node) {
    return make_error(ParseErrorKind::kMissingField, entry, index, "op",
                      "missing field 'op'");
  }
  const std::string tag = tag_node.IsScalar() ? tag_node.Scalar() : "";
  const auto schema =
      std::find_if(kSchemas.begin(), kSchemas.end(),
                   [&](const Schema& s) { return s.tag == tag; });
  if (schema == kSchemas.end()) {
    return make_error(ParseErrorKind::kUnknownOperation, tag_node, index, "op",
                      "unknown operation '" + tag + "'");
  }

  std::array<std::optional<YAML::Node>, 2> values;
  bool seen_op = false;
  for (const auto& pair : entry) {
    const YAML::Node& key = pair.first;
    std::string name = key.IsScalar() ? key.Scalar() : "";
    if (name == "op") {
      if (seen_op) {
        return make_error(ParseErrorKind::kExtraField, key, index, name,
                          "duplicate field 'op'");
      }
      seen_op = true;
      continue;
    }
    std::string_view canonical = name;
    if (schema->tag == "sell" && name == "user") canonical = "buyer";
    const auto slot = std::find(schema->fields.begin(), schema->fields.end(),
                                canonical);
    if (slot == schema->fields.end()) {
      return make_error(ParseErrorKind::kExtraField, key, index, name,
                        "unexpected field '" + name + "' for " + tag);
    }
    auto& value = values[slot - schema->fields.begin()];
    if (value) {
      return make_error(ParseErrorKind::kExtraField, key, index, name,
                        "duplicate field '" + std::string(canonical) + "'");
    }
    value = pair.second;
  }

  std::array<Nat, 2> fields{};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string field(schema->fields[i]);
    if (!values[i]) {
      return make_error(ParseErrorKind::kMissingField, entry, index, field,
                        "missing field '" + field + "' for " + tag);
    }
    auto number = read_nat(*values[i], index, field);
    if (!number) return number.error();
    fields[i] = *number;
  }
  return build(schema->tag, fields[0], fields[1]);
}

void emit_field(std::string& out, std::string_view name, Nat value) {
  out += "  ";
  out += name;
  out += ": ";
  out += std::to_string(value);
  out += '\n';
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kSyntaxError:
      return "SyntaxError";
    case ParseErrorKind::kUnknownOperation:
      return "UnknownOperation";
    case ParseErrorKind::kMissingField:
      return "MissingField";
    case ParseErrorKind::kExtraField:
      return "ExtraField";
    case ParseErrorKind::kNonIntegerField:
      return "NonIntegerField";
    case ParseErrorKind::kNegativeField:
      return "NegativeField";
  }
  return "?";
}

std::string describe(const ParseError& error) {
  std::string out(to_string(error.kind));
  if (error.line > 0) out += " at line " + std::to_string(error.line);
  if (error.op_index) out += ", operation " + std::to_string(*error.op_index);
  if (!error.field.empty()) out += ", field '" + error.field + "'";
  out += ": " + error.message;
  return out;
}

Result<ScriptDocument, ParseError> parse_script(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    const Nat line = e.mark.line >= 0 ? static_cast<Nat>(e.mark.line) + 1 : 0;
    return ParseError{ParseErrorKind::kSyntaxError, line, std::nullopt, "",
                      e.msg};
  }

  ScriptDocument doc;
  if (root.IsNull()) return doc;
  if (!root.IsSequence()) {
    return make_error(ParseErrorKind::kSyntaxError, root, std::nullopt, "",
                      "a script must be a sequence of operations");
  }
  doc.operations.reserve(root.size());
  Nat index = 0;
  for (const auto& entry : root) {
    auto op = read_operation(entry, index);
    if (!op) return op.error();
    doc.operations.push_back(*op);
    ++index;
  }
  return doc;
}

std::string serialize_script(const ScriptDocument& doc) {
  if (doc.operations.empty()) return "[]\n";
  std::string out;
  out.reserve(doc.operations.size() * 40);
  for (const Operation& op : doc.operations) {
    out += "- op: ";
    out += op_tag(op);
    out += '\n';
    std::visit(
        [&out](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, Deposit>) {
            emit_field(out, "user", o.user);
            emit_field(out, "amount", o.amount);
          } else if constexpr (std::is_same_v<T, Assign>) {
            emit_field(out, "item", o.item);
            emit_field(out, "user", o.user);
          } else if constexpr (std::is_same_v<T, Price>) {
            emit_field(out, "item", o.item);
            emit_field(out, "amount", o.amount);
          } else {
            emit_field(out, "item", o.item);
            emit_field(out, "buyer", o.buyer);
          }
        },
        op);
  }
  return out;
}

}  // namespace market
