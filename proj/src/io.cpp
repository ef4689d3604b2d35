// Copyright 2026 The seqideal Authors
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

#include "seqideal/io.hpp"

#include <cctype>

namespace seqideal {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else {
      Token tok{{}, line, col};
      const std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) {
        advance();
      }
      tok.text = text.substr(start, i - start);
      out.push_back(tok);
    }
  }
  return out;
}

void throw_at(const Token& tok, const std::string& what) {
  throw ParseError("line " + std::to_string(tok.line) + ", column " + std::to_string(tok.column) + ": " + what);
}

std::vector<bool> parse_gf2_token(const Token& tok) {
  std::string_view t = tok.text;
  std::vector<bool> out;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    for (std::size_t i = 2; i < t.size(); ++i) {
      const char c = t[i];
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        Token at{t, tok.line, tok.column + static_cast<int>(i)};
        throw_at(at, std::string("invalid hex digit '") + c + "'");
      }
      for (int b = 3; b >= 0; --b) out.push_back(((v >> b) & 1) != 0);
    }
    return out;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != '0' && t[i] != '1') {
      Token at{t, tok.line, tok.column + static_cast<int>(i)};
      throw_at(at, "expected 0 or 1 over gf2, got '" + std::string(t) + "'");
    }
    out.push_back(t[i] == '1');
  }
  return out;
}

}  // namespace seqideal
