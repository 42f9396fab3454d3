#include "motgrp/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motgrp/error.hpp"

namespace motgrp {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) fail(ErrorKind::InvalidValue, "a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      fail(ErrorKind::InvalidValue, "generator index out of range for B_" + std::to_string(strands_));
    }
  }
}

long BraidWord::exponent_sum() const {
  long s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord compose(const BraidWord& first, const BraidWord& second) {
  if (first.strands() != second.strands()) {
    fail(ErrorKind::StrandMismatch, "B_" + std::to_string(first.strands()) + " vs B_" +
                                        std::to_string(second.strands()));
  }
  std::vector<int> letters = first.letters();
  letters.insert(letters.end(), second.letters().begin(), second.letters().end());
  return BraidWord(first.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p.image[static_cast<std::size_t>(k)] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] != static_cast<int>(k)) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& q) const {
  Permutation r;
  r.image.resize(q.image.size());
  for (std::size_t k = 0; k < q.image.size(); ++k) {
    r.image[k] = image[static_cast<std::size_t>(q.image[k])];
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) r.image[static_cast<std::size_t>(image[k])] = static_cast<int>(k);
  return r;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start] || image[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k + 1);
      first = false;
      k = static_cast<std::size_t>(image[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int l : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    // p <- p o (i i+1)
    std::swap(p.image[i], p.image[i + 1]);
  }
  return p;
}

namespace {

// Strand maps: perm[k] is the end position of the strand starting at k.
using Perm = std::vector<int>;

Perm identity_perm(int n) { return Permutation::identity(n).image; }

Perm delta_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = n - 1 - k;
  return p;
}

// Conjugation by Delta: s_i -> s_{n-i}.
Perm flip(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(p.size());
  for (int k = 0; k < n; ++k) {
    q[static_cast<std::size_t>(k)] = n - 1 - p[static_cast<std::size_t>(n - 1 - k)];
  }
  return q;
}

// i in S(p): the factor can begin with s_{i+1}.
bool starts_with(const Perm& p, std::size_t i) { return p[i] > p[i + 1]; }

// i in F(p): the factor can end with s_{i+1}.
bool ends_with(const Perm& p, std::size_t i) {
  const auto a = std::find(p.begin(), p.end(), static_cast<int>(i)) - p.begin();
  const auto b = std::find(p.begin(), p.end(), static_cast<int>(i + 1)) - p.begin();
  return a > b;
}

int swap_value(int v, int i) {
  if (v == i) return i + 1;
  if (v == i + 1) return i;
  return v;
}

// Moves crossings from the front of b to the back of a until S(b) is
// contained in F(a). Returns whether anything moved.
bool left_weight(Perm& a, Perm& b) {
  bool changed = false;
  for (std::size_t i = 0; i + 1 < b.size();) {
    if (starts_with(b, i) && !ends_with(a, i)) {
      for (int& v : a) v = swap_value(v, static_cast<int>(i));
      std::swap(b[i], b[i + 1]);
      changed = true;
      i = 0;
    } else {
      ++i;
    }
  }
  return changed;
}

struct NormalFormBuilder {
  int n;
  long power = 0;
  std::vector<Perm> factors;

  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = factors.size(); j-- > 1;) {
        changed = left_weight(factors[j - 1], factors[j]) || changed;
      }
    }
    const Perm d = delta_perm(n);
    const Perm e = identity_perm(n);
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead] == d) ++lead;
    if (lead > 0) {
      // Leading Delta factors are absorbed into the power.
      power += static_cast<long>(lead);
      factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!factors.empty() && factors.back() == e) factors.pop_back();
  }

  void push_generator(std::size_t i) {
    Perm s = identity_perm(n);
    std::swap(s[i], s[i + 1]);
    factors.push_back(std::move(s));
    normalize();
  }

  // s_i^{-1} = Delta^{-1} X with X = Delta s_i^{-1}; the Delta^{-1} moves
  // left past every factor, flipping each.
  void push_inverse(std::size_t i) {
    for (Perm& f : factors) f = flip(f);
    power -= 1;
    Perm x = delta_perm(n);
    for (int& v : x) v = swap_value(v, static_cast<int>(i));
    factors.push_back(std::move(x));
    normalize();
  }
};

// Lexicographically first reduced word of a permutation braid.
std::vector<int> positive_word(Perm p) {
  std::vector<int> letters;
  for (std::size_t i = 0; i + 1 < p.size();) {
    if (starts_with(p, i)) {
      letters.push_back(static_cast<int>(i) + 1);
      std::swap(p[i], p[i + 1]);
      i = 0;
    } else {
      ++i;
    }
  }
  return letters;
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& w) {
  NormalFormBuilder b{w.strands(), 0, {}};
  for (int l : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      b.push_generator(i);
    } else {
      b.push_inverse(i);
    }
  }
  GarsideNormalForm nf;
  nf.strands = w.strands();
  nf.delta_power = b.power;
  for (Perm& f : b.factors) nf.factors.push_back(Permutation{std::move(f)});
  return nf;
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<int> letters;
  const BraidWord d = delta(strands);
  const BraidWord step = delta_power >= 0 ? d : invert(d);
  for (long k = 0; k < std::abs(delta_power); ++k) {
    letters.insert(letters.end(), step.letters().begin(), step.letters().end());
  }
  for (const Permutation& f : factors) {
    const auto w = positive_word(f.image);
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return BraidWord(strands, std::move(letters));
}

std::string GarsideNormalForm::to_string() const {
  std::vector<std::string> parts;
  if (delta_power != 0) parts.push_back("D^" + std::to_string(delta_power));
  for (const Permutation& f : factors) {
    parts.push_back(format_letters(BraidWord(strands, positive_word(f.image))));
  }
  if (parts.empty()) return "e";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " . " + parts[i];
  return out;
}

bool is_trivial(const BraidWord& w) { return normal_form(w).is_trivial(); }

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) fail(ErrorKind::StrandMismatch, "comparing braids on different n");
  return normal_form(a) == normal_form(b);
}

BraidWord delta(int strands) { return BraidWord(strands, positive_word(delta_perm(strands))); }

std::string format_letters(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    const int l = w.letters()[k];
    if (k) out += ' ';
    out += 's' + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

BraidWord parse_letters(std::string_view text, int strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_e = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    int sign = 1;
    std::string_view body = tok;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body.remove_suffix(3);
    } else if (body.size() > 2 && body.substr(body.size() - 2) == "^1") {
      body.remove_suffix(2);
    }
    int idx = 0;
    if (body.size() < 2 || body.front() != 's' ||
        std::from_chars(body.data() + 1, body.data() + body.size(), idx).ptr !=
            body.data() + body.size()) {
      fail(ErrorKind::ParseError, "bad braid letter '" + tok + "'");
    }
    letters.push_back(sign * idx);
  }
  if (saw_e && !letters.empty()) fail(ErrorKind::ParseError, "'e' mixed with letters");
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  return "strands " + std::to_string(w.strands()) + "\n" + format_letters(w) + "\n";
}

BraidWord parse_braid(std::string_view document) {
  std::istringstream in{std::string(document)};
  std::string header;
  int n = 0;
  if (!(in >> header >> n) || header != "strands") {
    fail(ErrorKind::ParseError, "braid document must start with 'strands <n>'");
  }
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_letters(rest, n);
}

}  // namespace motgrp
