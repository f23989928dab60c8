#pragma once

// Braid words and the closure combinatorics consumed by the invariant
// formulas: component count, strand colouring, linking matrix, framings.

#include <string>
#include <vector>

namespace unilink {

/// A braid word in B_n: letters are nonzero integers g with |g| <= n-1,
/// sign = crossing sign, |g| = generator index.  Empty words are legal.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);

    int writhe() const;
    /// Parse "1 1 1" / "-1 2 -1 2"; whitespace-separated signed integers.
    static BraidWord parse(int strands, const std::string& text);
    std::string str() const;
};

/// Everything the invariant prefactors need about the closure.
struct LinkData {
    int components = 0;
    /// strand_to_component[k] for k = 0..n-1 (components are 1-based,
    /// numbered by smallest participating strand).
    std::vector<int> strand_to_component;
    /// Symmetric, zero diagonal, indexed 1..l (entry [i][j]).
    std::vector<std::vector<int>> lk;
    /// Framings f_1..f_l, index 1..l.  Defaults to blackboard framing.
    std::vector<int> framings;

    int colour_of_strand(int k1based) const { return strand_to_component[k1based - 1]; }
};

/// Components of the closure (cycles of the underlying permutation),
/// numbered by smallest strand index; no framings/linking filled in.
LinkData closure_components(const BraidWord& b);

/// lk_{ij} = half the signed count of crossings between strands of
/// components i and j.
std::vector<std::vector<int>> linking_matrix(const BraidWord& b, const LinkData& link);

/// f_i = sum of signs of self-crossings of component i.
std::vector<int> blackboard_framings(const BraidWord& b, const LinkData& link);

/// Closure data with blackboard framings (or the given override).
LinkData link_data(const BraidWord& b, const std::vector<int>* framings_override = nullptr);

/// Conjugates g b g^{-1} for every generator (both signs), freely reduced,
/// plus the positive and negative stabilizations into B_{n+1}.
std::vector<BraidWord> markov_moves(const BraidWord& b);

/// Cancel adjacent inverse letters until stable.
std::vector<int> free_reduce(std::vector<int> letters);

}  // namespace unilink
