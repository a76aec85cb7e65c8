#include "schroder/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace schroder {

Tree leaf() { return Tree{}; }

Tree leaf(int label) {
    Tree t;
    t.label = label;
    return t;
}

Tree node(std::vector<Tree> children) {
    Tree t;
    t.children = std::move(children);
    return t;
}

TreeStats treeStatistics(const Tree& t) {
    TreeStats s;
    std::vector<std::pair<const Tree*, std::uint64_t>> stack{{&t, 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        ++s.vertices;
        if (depth >= s.nodesAtHeight.size()) s.nodesAtHeight.resize(depth + 1, 0);
        ++s.nodesAtHeight[depth];
        s.height = std::max(s.height, depth);
        if (v->isLeaf()) {
            ++s.leaves;
            if (depth >= s.leavesAtHeight.size()) s.leavesAtHeight.resize(depth + 1, 0);
            ++s.leavesAtHeight[depth];
            s.sumLeafHeights += depth;
        } else {
            for (const Tree& c : v->children) stack.emplace_back(&c, depth + 1);
        }
    }
    return s;
}

std::uint64_t leafCount(const Tree& t) {
    std::uint64_t n = 0;
    std::vector<const Tree*> stack{&t};
    while (!stack.empty()) {
        const Tree* v = stack.back();
        stack.pop_back();
        if (v->isLeaf()) {
            ++n;
        } else {
            for (const Tree& c : v->children) stack.push_back(&c);
        }
    }
    return n;
}

namespace {

void collectLabels(const Tree& t, std::vector<int>& out) {
    if (t.isLeaf()) {
        out.push_back(t.label);
        return;
    }
    if (t.label != 0) throw std::invalid_argument("tree: label on an internal vertex");
    for (const Tree& c : t.children) collectLabels(c, out);
}

struct CanonNode {
    Tree tree;
    int minLabel = 0;
    std::string key;
};

CanonNode canonRec(const Tree& t) {
    if (t.isLeaf()) {
        CanonNode n;
        n.tree = t;
        n.minLabel = t.label;
        n.key = t.hasLabel() ? "L" + std::to_string(t.label) : "x";
        return n;
    }
    std::vector<CanonNode> kids;
    kids.reserve(t.children.size());
    for (const Tree& c : t.children) kids.push_back(canonRec(c));
    std::sort(kids.begin(), kids.end(), [](const CanonNode& a, const CanonNode& b) {
        if (a.minLabel != b.minLabel) return a.minLabel < b.minLabel;
        return a.key < b.key;
    });
    CanonNode n;
    n.minLabel = kids.front().minLabel;
    n.key = "(";
    for (auto& k : kids) {
        n.key += k.key;
        n.tree.children.push_back(std::move(k.tree));
    }
    n.key += ")";
    return n;
}

}  // namespace

void validateTree(const Tree& t) {
    std::vector<int> labels;
    collectLabels(t, labels);
    const bool anyLabeled = std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0; });
    if (!anyLabeled) return;
    std::set<int> seen;
    for (int l : labels) {
        if (l <= 0) throw std::invalid_argument("tree: mixed labeled and unlabeled leaves");
        if (!seen.insert(l).second) throw std::invalid_argument("tree: duplicate leaf label");
    }
    const int n = static_cast<int>(labels.size());
    if (*seen.begin() != 1 || *seen.rbegin() != n) {
        throw std::invalid_argument("tree: leaf labels must be exactly {1..n}");
    }
}

bool isLabeledTree(const Tree& t) {
    if (t.isLeaf()) return t.hasLabel();
    for (const Tree& c : t.children) {
        if (!isLabeledTree(c)) return false;
    }
    return true;
}

Tree canonicalize(const Tree& t) { return canonRec(t).tree; }

std::string canonicalKey(const Tree& t) { return canonRec(t).key; }

Tree forgetLabels(const Tree& t) {
    Tree out;
    for (const Tree& c : t.children) out.children.push_back(forgetLabels(c));
    return out;
}

namespace {

void assignLabels(Tree& t, const std::vector<int>& perm, std::size_t& next) {
    if (t.isLeaf()) {
        if (t.label != 0) throw std::invalid_argument("labelUniformly: tree already labeled");
        t.label = perm[next++];
        return;
    }
    for (Tree& c : t.children) assignLabels(c, perm, next);
}

}  // namespace

Tree labelUniformly(const Tree& t, RngStream& rng) {
    const std::uint64_t n = leafCount(t);
    std::vector<int> perm(n);
    for (std::uint64_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i + 1);
    for (std::uint64_t i = n; i > 1; --i) {
        const std::uint64_t j = rng.below(i);
        std::swap(perm[i - 1], perm[j]);
    }
    Tree out = t;
    std::size_t next = 0;
    assignLabels(out, perm, next);
    return out;
}

nlohmann::json treeToJson(const Tree& t) {
    nlohmann::json j = nlohmann::json::object();
    if (t.isLeaf()) {
        if (t.hasLabel()) j["label"] = t.label;
        return j;
    }
    nlohmann::json kids = nlohmann::json::array();
    for (const Tree& c : t.children) kids.push_back(treeToJson(c));
    j["children"] = std::move(kids);
    return j;
}

Tree treeFromJson(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("tree json: node must be an object");
    if (j.contains("children")) {
        if (j.size() != 1) throw std::invalid_argument("tree json: internal node must have only 'children'");
        const auto& kids = j.at("children");
        if (!kids.is_array() || kids.empty()) {
            throw std::invalid_argument("tree json: 'children' must be a non-empty array");
        }
        Tree t;
        for (const auto& k : kids) t.children.push_back(treeFromJson(k));
        return t;
    }
    if (j.empty()) return leaf();
    if (j.size() == 1 && j.contains("label")) {
        if (!j.at("label").is_number_integer()) {
            throw std::invalid_argument("tree json: 'label' must be an integer");
        }
        const int l = j.at("label").get<int>();
        if (l <= 0) throw std::invalid_argument("tree json: 'label' must be positive");
        return leaf(l);
    }
    throw std::invalid_argument("tree json: unexpected keys");
}

}  // namespace schroder
