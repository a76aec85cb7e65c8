#pragma once

// Rooted ordered trees with optional leaf labels.
//
// One carrier type serves all four bracketing families: ordered trees are
// used as-is, unordered leaf-labeled trees are represented by their
// canonical form (children sorted by smallest leaf label) and equality in
// the labeled universe is canonical-form equality.  A vertex is a leaf iff
// it has no children; the root has depth 0 and edges have unit length.

#include "schroder/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace schroder {

struct Tree {
    std::vector<Tree> children;
    int label = 0;  // > 0 on labeled leaves, 0 otherwise

    bool isLeaf() const { return children.empty(); }
    bool hasLabel() const { return label > 0; }

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.label == b.label && a.children == b.children;
    }
};

Tree leaf();
Tree leaf(int label);
Tree node(std::vector<Tree> children);

struct TreeStats {
    std::uint64_t leaves = 0;
    std::uint64_t vertices = 0;
    std::uint64_t height = 0;
    std::uint64_t sumLeafHeights = 0;
    // Dense profiles indexed by height; absent (out of range) means 0.
    std::vector<std::uint64_t> leavesAtHeight;
    std::vector<std::uint64_t> nodesAtHeight;
};

TreeStats treeStatistics(const Tree& t);

std::uint64_t leafCount(const Tree& t);

// Checks structural invariants: labels only on leaves, and either no labels
// at all or the labels are exactly {1, ..., n}.  Throws std::invalid_argument.
void validateTree(const Tree& t);

// True when every leaf carries a label.
bool isLabeledTree(const Tree& t);

// Canonical representative of the unordered tree underlying t: children are
// sorted by smallest leaf label when labels are present, otherwise by a
// total order on canonical encodings.  Idempotent.
Tree canonicalize(const Tree& t);

// Stable textual encoding of the canonical form; equal strings iff equal
// canonical trees.  Handy as a hash/dedup key.
std::string canonicalKey(const Tree& t);

Tree forgetLabels(const Tree& t);

// Labels the n leaves of an unlabeled tree, left to right, by a uniformly
// random permutation of {1, ..., n}.  Throws if any leaf is already labeled.
Tree labelUniformly(const Tree& t, RngStream& rng);

// JSON schema (bit-exact): leaf = {"label": k} or {}; internal node =
// {"children": [...]} with a non-empty array.  No other keys permitted.
nlohmann::json treeToJson(const Tree& t);
Tree treeFromJson(const nlohmann::json& j);

}  // namespace schroder
