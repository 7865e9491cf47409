#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace holo {

/// A freely reduced word in a free group. Stored as run-length pairs
/// (generator, signed exponent); adjacent runs always have distinct
/// generators and nonzero exponents, so the representation is canonical.
/// Generators are 1-based throughout.
class Word {
 public:
  struct Run {
    int gen;
    long exp;
    auto operator<=>(const Run&) const = default;
  };

  Word() = default;

  static Word generator(int gen, long exp = 1) {
    Word w;
    w.append(gen, exp);
    return w;
  }

  bool is_identity() const { return runs_.empty(); }

  const std::vector<Run>& runs() const { return runs_; }

  /// Number of letters of the reduced word.
  long length() const {
    long n = 0;
    for (const Run& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
    return n;
  }

  int max_generator() const {
    int m = 0;
    for (const Run& r : runs_)
      if (r.gen > m) m = r.gen;
    return m;
  }

  /// Appends gen^exp, merging and cancelling against the tail.
  void append(int gen, long exp) {
    if (gen < 1) throw std::out_of_range("generator index must be >= 1");
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().gen == gen) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back({gen, exp});
  }

  Word& operator*=(const Word& o) {
    for (const Run& r : o.runs_) append(r.gen, r.exp);
    return *this;
  }

  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const {
    Word w;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      w.runs_.push_back({it->gen, -it->exp});
    return w;
  }

  Word pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Word w;
    for (long i = 0; i < e; ++i) w *= *this;
    return w;
  }

  /// Iterates single letters (gen, ±1) of the reduced word.
  template <typename F>
  void for_each_letter(F&& f) const {
    for (const Run& r : runs_) {
      int sign = r.exp < 0 ? -1 : 1;
      long count = r.exp < 0 ? -r.exp : r.exp;
      for (long i = 0; i < count; ++i) f(r.gen, sign);
    }
  }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Run> runs_;
};

inline Word commutator(const Word& a, const Word& b) {
  // [a,b] = a b a^-1 b^-1
  return a * b * a.inverse() * b.inverse();
}

/// Signed count of occurrences of generator `gen` in `w`.
inline long exponent_sum(const Word& w, int gen) {
  if (gen < 1) throw std::out_of_range("generator index must be >= 1");
  long s = 0;
  for (const Word::Run& r : w.runs())
    if (r.gen == gen) s += r.exp;
  return s;
}

/// A word or its formal inverse, for reducing products of relators.
struct WordFactor {
  Word word;
  bool inverted = false;
};

/// Freely reduced concatenation of a sequence of words and inverses.
inline Word free_reduce(const std::vector<WordFactor>& factors) {
  Word out;
  for (const WordFactor& f : factors) out *= f.inverted ? f.word.inverse() : f.word;
  return out;
}

}  // namespace holo
