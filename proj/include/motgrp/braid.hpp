#ifndef MOTGRP_BRAID_HPP_
#define MOTGRP_BRAID_HPP_

// Artin braid groups B_n, presented by generators s_1 .. s_{n-1} and
//   s_i s_j = s_j s_i            (|i - j| >= 2)
//   s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
// The word problem is solved by the left-greedy (Garside) normal form.
//
// Composition convention: compose(w1, w2) is "w1 first, then w2", the same
// order as box composition of strand sets and star composition of flows.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace motgrp {

class BraidWord {
 public:
  // letters: +i for s_i, -i for s_i^{-1}, 1 <= i <= strands - 1.
  // Throws Error(InvalidValue) for out-of-range letters or strands < 1.
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  long exponent_sum() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Throws Error(StrandMismatch).
BraidWord compose(const BraidWord& first, const BraidWord& second);
BraidWord invert(const BraidWord& w);

// A permutation of {0..n-1}; image[k] is where k goes.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  bool is_identity() const;
  // (p * q)(k) = p(q(k))
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
  // Cycle notation on 1-based points, e.g. "(1 2 3)"; "()" for identity.
  std::string cycles() const;
};

// The homomorphism B_n -> S_n, s_i -> (i i+1), with words multiplied as
// functions: s_1 s_2 -> (1 2)(2 3) = (1 2 3). Read on a braid diagram,
// permutation_of(w)(r) is the starting rank of the strand that ends at
// rank r.
Permutation permutation_of(const BraidWord& w);

// Delta^power * factors[0] * ... * factors.back(), with each factor a
// proper permutation braid (neither trivial nor Delta), each adjacent pair
// left-weighted. Factors are stored by their strand maps: image[k] is the
// end position of the strand that starts at position k.
struct GarsideNormalForm {
  int strands = 1;
  long delta_power = 0;
  std::vector<Permutation> factors;

  bool is_trivial() const { return delta_power == 0 && factors.empty(); }
  bool operator==(const GarsideNormalForm&) const = default;

  // Canonical word: Delta^power spelled out, then each factor's
  // lexicographically first reduced positive word.
  BraidWord to_word() const;
  // e.g. "D^-1 . s1 s2 . s2"
  std::string to_string() const;
};

GarsideNormalForm normal_form(const BraidWord& w);
bool is_trivial(const BraidWord& w);
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Positive word of the half twist Delta on n strands.
BraidWord delta(int strands);

// Word text: "s1 s2^-1 s3", "e" for the empty word.
std::string format_letters(const BraidWord& w);
BraidWord parse_letters(std::string_view text, int strands);
// Two-line document "strands <n>\n<letters>\n".
std::string format_braid(const BraidWord& w);
BraidWord parse_braid(std::string_view document);

}  // namespace motgrp

#endif  // MOTGRP_BRAID_HPP_
