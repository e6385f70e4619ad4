#pragma once

#include <string>
#include <vector>

#include "bfh/models.hpp"

namespace bfh {

// Line-based text format, '#' starts a comment:
//
//   [typeD] name            [typeA] name              [dd] name
//   gen a i0                gen a i0                  gen p i1 i0
//   arrow a r12 b           op a | r3 r2 -> a         arrow p r3 i0 q
//
//   [graphA] name
//   gen a i0
//   edge a | r3 r2 -> b
std::vector<Structure> parse_document(const std::string& text);
Structure parse_structure(const std::string& text);

std::string print_structure(const Structure& s);
std::string print_document(const std::vector<Structure>& doc);

std::string structure_kind(const Structure& s);
std::string structure_name(const Structure& s);

}  // namespace bfh
