#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

// Input files are rejected with a line-precise reason.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A caller violated an operation's contract (unknown id, wrong mode, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A consistency check (oracle sweep, dataset audit) failed.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range; never expected at this scale.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One step of a walk: an arrow traversed forwards or formally inverted.
struct Letter {
    int arrow = -1;
    bool inverted = false;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

    Letter flipped() const { return Letter{arrow, !inverted}; }
};

// A string word: either a signed trivial word at a vertex, or a nonempty
// letter sequence. The sign on trivial words only matters to the AR-theory
// operations; everything else treats 1_{v,+} and 1_{v,-} alike.
class StringWord {
public:
    StringWord() = default;

    static StringWord trivial(int vertex, int sign = +1) {
        StringWord w;
        w.vertex_ = vertex;
        w.sign_ = sign;
        return w;
    }

    static StringWord word(std::vector<Letter> letters) {
        if (letters.empty())
            throw PreconditionError("StringWord::word requires at least one letter");
        StringWord w;
        w.letters_ = std::move(letters);
        return w;
    }

    bool is_trivial() const { return letters_.empty(); }
    int trivial_vertex() const { return vertex_; }
    int trivial_sign() const { return sign_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const StringWord& a, const StringWord& b) {
        if (a.is_trivial() != b.is_trivial()) return false;
        if (a.is_trivial()) return a.vertex_ == b.vertex_ && a.sign_ == b.sign_;
        return a.letters_ == b.letters_;
    }

    // Total order: trivial words first (by vertex, then +1 before -1), then
    // letter words by length and lexicographic letter order. This is the
    // canonical order used for deduplication and deterministic output.
    friend bool operator<(const StringWord& a, const StringWord& b) {
        if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
        if (a.is_trivial()) {
            if (a.vertex_ != b.vertex_) return a.vertex_ < b.vertex_;
            return a.sign_ > b.sign_;  // +1 before -1
        }
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    std::vector<Letter> letters_;
    int vertex_ = -1;
    int sign_ = +1;
};

}  // namespace gentle
