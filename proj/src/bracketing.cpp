#include "schroder/bracketing.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace schroder {

namespace {

bool isWordKind(BracketingKind k) {
    return k == BracketingKind::WordBinary || k == BracketingKind::WordGeneral;
}

bool isBinaryKind(BracketingKind k) {
    return k == BracketingKind::WordBinary || k == BracketingKind::SetBinary;
}

class WordParser {
public:
    explicit WordParser(const std::string& s) : s_(s) {}

    Tree parseTop() {
        std::vector<Tree> items = parseItems();
        if (pos_ != s_.size()) fail("unexpected character");
        if (items.empty()) fail("empty word");
        if (items.size() == 1) {
            if (!items.front().isLeaf()) {
                fail("top-level word must be a single letter or at least two items");
            }
            return items.front();
        }
        return node(std::move(items));
    }

private:
    std::vector<Tree> parseItems() {
        std::vector<Tree> items;
        while (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '(')) {
            items.push_back(parseItem());
        }
        return items;
    }

    Tree parseItem() {
        if (s_[pos_] == 'x') {
            ++pos_;
            return leaf();
        }
        ++pos_;  // '('
        std::vector<Tree> items = parseItems();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
        if (items.empty()) fail("empty brackets");
        if (items.size() == 1) fail("brackets around a single item");
        return node(std::move(items));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("word bracketing: " + what + " at position " + std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void checkDegrees(const Tree& t, bool binary, const char* context) {
    if (t.isLeaf()) return;
    if (t.children.size() == 1) {
        throw std::invalid_argument(std::string(context) + ": out-degree-1 vertex");
    }
    if (binary && t.children.size() != 2) {
        throw std::invalid_argument(std::string(context) + ": non-binary vertex");
    }
    for (const Tree& c : t.children) checkDegrees(c, binary, context);
}

class SetParser {
public:
    explicit SetParser(const std::string& s) : s_(s) {}

    Tree parseTop() {
        Tree t = parseS();
        if (pos_ != s_.size()) fail("unexpected character");
        return t;
    }

private:
    Tree parseS() {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return parseLabel();
        if (s_[pos_] != '{') fail("expected label or '{'");
        ++pos_;
        std::vector<Tree> kids;
        kids.push_back(parseS());
        while (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            kids.push_back(parseS());
        }
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
        ++pos_;
        if (kids.size() < 2) fail("singleton brace group");
        return node(std::move(kids));
    }

    Tree parseLabel() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 9) fail("label too large");
        const int value = std::stoi(digits);
        if (value <= 0) fail("labels must be positive");
        return leaf(value);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("set bracketing: " + what + " at position " + std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void checkLabelSet(const Tree& t) {
    std::vector<int> labels;
    std::vector<const Tree*> stack{&t};
    while (!stack.empty()) {
        const Tree* v = stack.back();
        stack.pop_back();
        if (v->isLeaf()) {
            labels.push_back(v->label);
        } else {
            for (const Tree& c : v->children) stack.push_back(&c);
        }
    }
    std::set<int> seen;
    for (int l : labels) {
        if (!seen.insert(l).second) throw ParseError("set bracketing: duplicate label " + std::to_string(l));
    }
    const int n = static_cast<int>(labels.size());
    if (*seen.begin() != 1 || *seen.rbegin() != n) {
        throw ParseError("set bracketing: labels must form {1..n}");
    }
}

void serializeSetRec(const Tree& t, std::string& out) {
    if (t.isLeaf()) {
        out += std::to_string(t.label);
        return;
    }
    out += '{';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) out += ',';
        serializeSetRec(t.children[i], out);
    }
    out += '}';
}

void serializeWordRec(const Tree& t, std::string& out) {
    for (const Tree& c : t.children) {
        if (c.isLeaf()) {
            out += 'x';
        } else {
            out += '(';
            serializeWordRec(c, out);
            out += ')';
        }
    }
}

}  // namespace

Tree parseWord(const std::string& s, BracketingKind kind) {
    if (!isWordKind(kind)) {
        throw std::invalid_argument("parseWord: kind must be WordBinary or WordGeneral");
    }
    Tree t = WordParser(s).parseTop();
    checkDegrees(t, isBinaryKind(kind), "parseWord");
    return t;
}

std::string serializeWord(const Tree& t, BracketingKind kind) {
    if (!isWordKind(kind)) {
        throw std::invalid_argument("serializeWord: kind must be WordBinary or WordGeneral");
    }
    std::vector<const Tree*> stack{&t};
    while (!stack.empty()) {
        const Tree* v = stack.back();
        stack.pop_back();
        if (v->label != 0) throw std::invalid_argument("serializeWord: tree must be unlabeled");
        for (const Tree& c : v->children) stack.push_back(&c);
    }
    checkDegrees(t, isBinaryKind(kind), "serializeWord");
    if (t.isLeaf()) return "x";
    std::string out;
    serializeWordRec(t, out);
    return out;
}

Tree parseSet(const std::string& s) {
    Tree t = SetParser(s).parseTop();
    checkDegrees(t, false, "parseSet");
    checkLabelSet(t);
    return canonicalize(t);
}

std::string serializeSet(const Tree& t) {
    validateTree(t);
    if (!isLabeledTree(t)) throw std::invalid_argument("serializeSet: tree must be leaf-labeled");
    checkDegrees(t, false, "serializeSet");
    std::string out;
    serializeSetRec(canonicalize(t), out);
    return out;
}

void validateForKind(const Tree& t, BracketingKind kind) {
    checkDegrees(t, isBinaryKind(kind), "validateForKind");
}

BracketingKind bracketingKindFromName(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == "word-binary") return BracketingKind::WordBinary;
    if (n == "word-general") return BracketingKind::WordGeneral;
    if (n == "set-binary") return BracketingKind::SetBinary;
    if (n == "set-general") return BracketingKind::SetGeneral;
    throw std::invalid_argument("unknown bracketing kind: " + name);
}

std::string bracketingKindName(BracketingKind kind) {
    switch (kind) {
        case BracketingKind::WordBinary: return "word-binary";
        case BracketingKind::WordGeneral: return "word-general";
        case BracketingKind::SetBinary: return "set-binary";
        case BracketingKind::SetGeneral: return "set-general";
    }
    return "?";
}

}  // namespace schroder
