#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chainorder {

/// A point of {0,1}^N truncated to a fixed length.
using BinaryWord = std::vector<bool>;
/// Flip indices; applied last element first.
using Composition = std::vector<std::uint64_t>;

enum class Parity { Even, Odd };
std::string to_string(Parity p);
Parity parse_parity(const std::string& text);

/// "0110" <-> {0,1,1,0}. Throws std::invalid_argument on other characters.
BinaryWord parse_word(const std::string& text);
std::string to_string(const BinaryWord& w);

/// s_n: keeps bits < n, complements bits >= n. Throws std::invalid_argument
/// when n >= |w|.
BinaryWord flip(std::uint64_t n, const BinaryWord& w);

/// A_0 is everything; for n >= 1, w_k = 0 for k <= n-2 and w_{n-1} = 1.
/// Throws std::invalid_argument when |w| < n.
bool in_A_n(std::uint64_t n, const BinaryWord& w);

BinaryWord apply_composition(const Composition& c, BinaryWord w);

/// Every word of length `depth` extending `prefix`.
std::vector<BinaryWord> cylinder(const BinaryWord& prefix, std::uint64_t depth);

/// Odd-length composition equal to s_n on the cylinder of s (|s| = n):
/// g, then s_n inside A_n, then g undone, where g moves the cylinder into A_n.
Composition decompose_on_cylinder(std::uint64_t n, const BinaryWord& s);

Parity composition_parity(const Composition& c);

struct ReachResult {
  Composition composition;
  BinaryWord source;  // sub-cylinder of the requested source
  BinaryWord image;   // composition maps B_source onto B_image exactly
};

/// Compositions of the requested parity carrying a sub-cylinder of B_s onto
/// B_target. When |target| < |s| the target is split into refinements of
/// length |s| and one result is returned per refinement, so the images
/// cover B_target. Breadth-first over index sets of size
/// <= 2 (|target| + 2). Throws std::invalid_argument when depth <
/// max(|s|, |target|) + 2 and std::runtime_error when the bound is exceeded.
std::vector<ReachResult> reach_with_parity(const BinaryWord& s, const BinaryWord& target,
                                           Parity parity, std::uint64_t depth);

/// Checks on all words of length depth that c maps B_source bijectively onto B_image.
bool maps_cylinder_onto(const Composition& c, const BinaryWord& source, const BinaryWord& image,
                        std::uint64_t depth);

/// Checks on all words of length depth extending s that c agrees with s_n.
bool agrees_with_flip(const Composition& c, std::uint64_t n, const BinaryWord& s,
                      std::uint64_t depth);

}  // namespace chainorder
