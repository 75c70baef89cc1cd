// Copyright 2026 The MapForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mapforge/extract.h"

#include <cctype>
#include <vector>

namespace mapforge {
namespace {

std::string NormalizeNewlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      out += '\n';
      continue;
    }
    out += text[i];
  }
  return out;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view TrimLeft(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  return s;
}

std::string_view Trim(std::string_view s) {
  s = TrimLeft(s);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsFence(std::string_view line) {
  return TrimLeft(line).starts_with("```");
}

std::string RemoveThinkBlocks(std::string text) {
  constexpr std::string_view kOpen = "<think>";
  constexpr std::string_view kClose = "</think>";
  for (std::size_t open = text.find(kOpen); open != std::string::npos;
       open = text.find(kOpen, open)) {
    const std::size_t close = text.find(kClose, open);
    if (close == std::string::npos) {
      text.erase(open);
      break;
    }
    text.erase(open, close + kClose.size() - open);
  }
  // A reasoning trace whose opening tag was swallowed by the chat template.
  if (const std::size_t close = text.find(kClose);
      close != std::string::npos) {
    text.erase(0, close + kClose.size());
  }
  return text;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      return false;
    }
  }
  return true;
}

// Number of named parameters in a Python parameter list, or -1 if it uses
// *args / **kwargs or something that is not a parameter at all.
int CountParameters(std::string_view params) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= params.size(); ++i) {
    const char ch = i < params.size() ? params[i] : ',';
    if (ch == '[' || ch == '(' || ch == '{') ++depth;
    if (ch == ']' || ch == ')' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(Trim(params.substr(start, i - start)));
      start = i + 1;
    }
  }
  int named = 0;
  for (std::string_view p : parts) {
    if (p.empty() || p == "/") continue;
    if (p.starts_with("*")) return -1;
    std::string_view name = p.substr(0, p.find_first_of(":="));
    if (!IsIdentifier(Trim(name))) return -1;
    ++named;
  }
  return named;
}

enum class DefCheck { kNoDefinition, kWrongName, kWrongArity, kOk };

DefCheck CheckDefinitions(std::string_view source) {
  bool any_def = false;
  bool wrong_arity = false;
  for (std::size_t pos = 0; pos < source.size();) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    if (line.starts_with("def ") || line.starts_with("def\t")) {
      any_def = true;
      std::string_view rest = TrimLeft(line.substr(4));
      if (rest.starts_with(kCandidateFunctionName)) {
        rest.remove_prefix(kCandidateFunctionName.size());
        rest = TrimLeft(rest);
        if (rest.starts_with("(")) {
          // The parameter list may span lines.
          const std::size_t open = pos + (line.size() - rest.size());
          const std::size_t close = source.find(')', open);
          if (close != std::string_view::npos &&
              CountParameters(source.substr(open + 1, close - open - 1)) ==
                  1) {
            return DefCheck::kOk;
          }
          wrong_arity = true;
        }
      }
    }
    pos = eol + 1;
  }
  if (wrong_arity) return DefCheck::kWrongArity;
  return any_def ? DefCheck::kWrongName : DefCheck::kNoDefinition;
}

}  // namespace

bool DefinesCandidateFunction(std::string_view source) {
  return CheckDefinitions(NormalizeNewlines(source)) == DefCheck::kOk;
}

Extraction ExtractCode(std::string_view raw) {
  const std::string text = NormalizeNewlines(raw);
  const std::vector<std::string_view> lines = SplitLines(text);

  Extraction result;
  std::string source;
  std::size_t fences = 0;
  bool in_block = false;
  bool have_block = false;
  for (std::string_view line : lines) {
    if (IsFence(line)) {
      ++fences;
      if (!have_block) {
        if (in_block) {
          have_block = true;
        }
        in_block = !in_block;
      }
      continue;
    }
    if (in_block && !have_block) {
      source.append(line);
      source += '\n';
    }
  }
  if (in_block && !have_block) have_block = true;  // unterminated fence
  result.ignored_extra_fences = fences > 2;

  if (!have_block) source = RemoveThinkBlocks(text);
  if (!source.empty() && source.back() != '\n') source += '\n';

  switch (CheckDefinitions(source)) {
    case DefCheck::kOk:
      result.source = std::move(source);
      result.verdict = CandidateVerdict::Ok();
      break;
    case DefCheck::kNoDefinition:
      result.verdict = CandidateVerdict::Failure(VerdictStatus::kNonCompiling,
                                                 "no function definition");
      break;
    case DefCheck::kWrongName:
      result.verdict = CandidateVerdict::Failure(
          VerdictStatus::kNonCompiling, "map_to_coordinates not found");
      break;
    case DefCheck::kWrongArity:
      result.verdict = CandidateVerdict::Failure(
          VerdictStatus::kNonCompiling,
          "map_to_coordinates must take exactly one parameter");
      break;
  }
  return result;
}

}  // namespace mapforge
