#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

using Rat = mpq_class;

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational string: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::vector<Rat> rat_parse_list(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(rat_parse(s));
  return out;
}

// Bit-length proxy used for pivot selection during elimination.
inline size_t rat_bits(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace liecoh
