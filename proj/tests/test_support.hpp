#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "rq/ncpoly.hpp"

namespace doctest {
template <>
struct StringMaker<rq::QRat> {
  static String convert(const rq::QRat& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<rq::NcPoly> {
  static String convert(const rq::NcPoly& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<rq::QPoly> {
  static String convert(const rq::QPoly& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<rq::Word> {
  static String convert(const rq::Word& x) { return x.to_string().c_str(); }
};
}  // namespace doctest

namespace rq::testing {

inline NcPoly word(const char* compact, QRat c = QRat(1)) { return NcPoly(Word::parse(compact), std::move(c)); }

inline QRat random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  switch (rng() % 4) {
    case 0: return QRat(small(rng));
    case 1: return QRat(QPoly{small(rng), small(rng)});
    case 2: return QRat(QPoly{small(rng) | 1}, QPoly{1, -1});
    default: return QRat::q_pow(static_cast<long>(rng() % 5) - 2);
  }
}

/// Random word of exactly the given weight over the listed letters.
inline Word random_word(std::mt19937& rng, unsigned weight, const std::string& letters = "ABCg") {
  std::string code;
  unsigned w = 0;
  while (w < weight) {
    char c = letters[rng() % letters.size()];
    unsigned lw = (c == 'A' || c == 'B') ? 1 : 2;
    if (w + lw > weight) continue;
    code += c;
    w += lw;
  }
  return Word::parse(code);
}

/// Random polynomial with up to `terms` words of weight <= max_weight.
inline NcPoly random_poly(std::mt19937& rng, unsigned max_weight, unsigned terms = 4,
                          const std::string& letters = "ABCg") {
  NcPoly p;
  for (unsigned i = 0; i < terms; ++i) {
    p.add_term(random_word(rng, static_cast<unsigned>(rng() % (max_weight + 1)), letters), random_coeff(rng));
  }
  return p;
}

}  // namespace rq::testing
