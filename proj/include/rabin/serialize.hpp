#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "rabin/schemes.hpp"

namespace rabin {

// Line-oriented text formats. Every file is a fixed header line followed by
// name=value fields, one per line, decimal, no padding, fixed order. Readers
// are strict and throw ParseError naming the offending line.
//
//   rabin private key        rabin public key        rabin ciphertext
//   p=...                    n=...                   scheme=<tag>
//   q=...                    [s=...]                 c=...
//                            [xi=...]                <scheme bit fields>
//                            [bigp=...]
//                            [g1=...]
//                            [g2=...]
//
// Scheme tags and their bit fields: williams (c1, c2), jacobi1 (b0, b1),
// jacobi2 (none), dedekind (b0, b1), giso (b0, d1, d2, p1, p2).

struct PublicBundle {
  Int n;
  std::optional<Int> s;      // williams
  std::optional<Int> xi;     // jacobi2
  std::optional<Int> big_p;  // giso
  std::optional<Int> g1;
  std::optional<Int> g2;
};

using AnyCiphertext =
    std::variant<WilliamsCiphertext, VariantICiphertext, VariantIICiphertext,
                 DedekindCiphertext, GisoCiphertext>;

// The tag stored in a ciphertext's scheme= line.
std::string scheme_tag(const AnyCiphertext& ct);

void write_private_key(std::ostream& os, const PrivateKey& sk);
PrivateKey read_private_key(std::istream& is);

void write_public_bundle(std::ostream& os, const PublicBundle& pb);
PublicBundle read_public_bundle(std::istream& is);

void write_ciphertext(std::ostream& os, const AnyCiphertext& ct);
AnyCiphertext read_ciphertext(std::istream& is);

}  // namespace rabin
