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

// Sequence input.
//
// One field element per token; tokens are separated by whitespace or commas
// and '#' starts a comment running to the end of the line. Over GF(2) a token
// may also be a bitstring ("1101") or hex with a 0x prefix ("0xd"), read most
// significant bit first, so 0xd is s_0..s_3 = 1, 1, 0, 1.

#ifndef SEQIDEAL_IO_HPP_
#define SEQIDEAL_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "seqideal/field.hpp"

namespace seqideal {

struct Token {
  std::string_view text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view text);

// Throws ParseError with a "line L, column C: " prefix.
[[noreturn]] void throw_at(const Token& tok, const std::string& what);

// Expands a GF(2) token into bits; throws ParseError on anything else.
std::vector<bool> parse_gf2_token(const Token& tok);

template <FieldScalar S>
std::vector<S> parse_sequence(std::string_view text, const FieldSpec& spec) {
  if (!scalar_matches<S>(spec)) throw FieldMismatch("parse_sequence: scalar type does not match " + spec.to_string());
  std::vector<S> out;
  for (const Token& tok : tokenize(text)) {
    if constexpr (std::is_same_v<S, GF2>) {
      for (bool b : parse_gf2_token(tok)) out.emplace_back(b);
    } else {
      try {
        out.push_back(S::parse(tok.text, spec));
      } catch (const ParseError& e) {
        throw_at(tok, e.what());
      }
    }
  }
  return out;
}

}  // namespace seqideal

#endif  // SEQIDEAL_IO_HPP_
