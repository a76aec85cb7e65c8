#pragma once

// Bracketing notation <-> trees.
//
// Word bracketings (ordered, unlabeled):
//   Word := Item Item Item* | 'x'      -- the top level has no outer brackets
//   Item := 'x' | '(' Item Item Item* ')'
// A bracket always encloses at least two items; binary kinds additionally
// require exactly two children everywhere.
//
// Set bracketings (unordered, leaf-labeled), strict fully-braced grammar:
//   S := Label | '{' S (',' S)+ '}'    -- Label is a positive decimal integer
// The canonical serialization orders children by smallest leaf label and
// braces every internal node, including the root when n >= 2.  Whitespace is
// never permitted; round trips are bit-exact.

#include "schroder/tree.hpp"

#include <stdexcept>
#include <string>

namespace schroder {

enum class BracketingKind { WordBinary, WordGeneral, SetBinary, SetGeneral };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tree parseWord(const std::string& s, BracketingKind kind);
std::string serializeWord(const Tree& t, BracketingKind kind);

Tree parseSet(const std::string& s);
std::string serializeSet(const Tree& t);

// Degree constraints of the family: binary kinds need out-degree exactly 2,
// general kinds out-degree >= 2.  Throws std::invalid_argument on violation.
void validateForKind(const Tree& t, BracketingKind kind);

BracketingKind bracketingKindFromName(const std::string& name);
std::string bracketingKindName(BracketingKind kind);

}  // namespace schroder
