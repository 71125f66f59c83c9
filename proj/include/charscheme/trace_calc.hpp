#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charscheme/trace_poly.hpp"

namespace charscheme {

enum class Gen : std::uint8_t { kH = 0, kC1 = 1, kC2 = 2 };

struct Syllable {
    Gen gen;
    long exp;
    bool operator==(const Syllable&) const = default;
};

/// A word in the free group on h, c1, c2, kept freely reduced (adjacent
/// syllables use distinct generators, no zero exponents).
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Syllable> syllables);

    static GroupWord generator(Gen g, long exp = 1);
    /// Parses words like "h c1^-2 c2 h^3".
    static GroupWord parse(const std::string& text);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    long letter_count() const;

    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord inverse() const;
    bool operator==(const GroupWord&) const = default;

    std::string str() const;

private:
    std::vector<Syllable> syl_;
};

/// Cyclically reduces w and rotates to the lexicographically least rotation
/// of its letter sequence under h < c1 < c2 < h^-1 < c1^-1 < c2^-1. Traces
/// are invariant under both operations.
GroupWord word_reduce(const GroupWord& w);

/// The defining relation F of the character ring of the rank-3 free group:
/// monic of degree 2 in y3, so normal forms have y3-degree <= 1.
const TracePoly& charring_relation();

/// Reduce modulo the relation F until the y3-degree is at most 1.
TracePoly reduce_mod_relation(const TracePoly& p);

/// Rewrites the trace of a word to its canonical polynomial in the seven
/// Fricke coordinates. A reducer owns its memo table, so distinct instances
/// can run concurrently; one instance is single-threaded.
class TraceReducer {
public:
    TracePoly reduce(const GroupWord& w);

private:
    TracePoly reduce_canonical(const GroupWord& w);
    std::map<std::vector<long>, TracePoly> memo_;
    std::map<std::vector<long>, bool> in_progress_;
};

/// One-shot convenience wrapper.
TracePoly trace_reduce(const GroupWord& w);

}  // namespace charscheme
