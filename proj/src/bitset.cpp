#include "isolat/bitset.hpp"

#include <stdexcept>

namespace isolat {

std::string BitSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(words_.size() * 16);
  for (auto w : words_)
    for (int nib = 0; nib < 16; ++nib) out += kDigits[(w >> (4 * nib)) & 0xf];
  return out;
}

BitSet BitSet::from_hex(std::size_t width, const std::string& hex) {
  BitSet b(width);
  if (hex.size() != b.words_.size() * 16) throw std::invalid_argument("bitset hex has wrong length");
  for (std::size_t wi = 0; wi < b.words_.size(); ++wi) {
    std::uint64_t w = 0;
    for (int nib = 0; nib < 16; ++nib) {
      char c = hex[wi * 16 + static_cast<std::size_t>(nib)];
      std::uint64_t v;
      if (c >= '0' && c <= '9') v = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v = static_cast<std::uint64_t>(c - 'a' + 10);
      else throw std::invalid_argument("bad hex digit in bitset");
      w |= v << (4 * nib);
    }
    b.words_[wi] = w;
  }
  if (width % 64 && (b.words_.back() >> (width % 64)))
    throw std::invalid_argument("bitset hex sets bits beyond its width");
  return b;
}

}  // namespace isolat
