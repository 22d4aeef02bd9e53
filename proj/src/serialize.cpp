#include "rabin/serialize.hpp"

#include <array>
#include <cctype>
#include <istream>
#include <ostream>

namespace rabin {

namespace {

constexpr char kPrivateHeader[] = "rabin private key";
constexpr char kPublicHeader[] = "rabin public key";
constexpr char kCiphertextHeader[] = "rabin ciphertext";

struct LineReader {
  explicit LineReader(std::istream& is) : is(is) {}

  std::istream& is;
  int lineno = 0;

  bool next(std::string& out) {
    if (!std::getline(is, out)) return false;
    ++lineno;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  }

  void expect_header(const char* header) {
    std::string line;
    if (!next(line)) {
      ++lineno;
      fail(std::string("expected header \"") + header + "\"");
    }
    if (line != header)
      fail(std::string("expected header \"") + header + "\"");
  }

  void expect_end() {
    std::string line;
    if (next(line)) fail("unexpected trailing line");
  }

  // name=value with value a decimal integer, no sign, no leading zeros.
  Int field(const char* name) {
    std::string value = raw_field(name);
    return parse_decimal(value, name);
  }

  std::string raw_field(const char* name) {
    std::string line;
    if (!next(line)) {
      ++lineno;
      fail(std::string("missing field ") + name);
    }
    auto eq = line.find('=');
    if (eq == std::string::npos || line.substr(0, eq) != name)
      fail(std::string("expected ") + name + "=...");
    return line.substr(eq + 1);
  }

  Int parse_decimal(const std::string& value, const char* name) {
    bool ok = !value.empty();
    for (char ch : value) ok = ok && std::isdigit(static_cast<unsigned char>(ch));
    if (ok && value.size() > 1 && value[0] == '0') ok = false;
    if (!ok)
      fail(std::string("field ") + name +
           " is not an unsigned decimal integer");
    return Int(value);
  }

  int bit_field(const char* name) {
    Int v = field(name);
    if (v != 0 && v != 1) fail(std::string("field ") + name + " must be 0 or 1");
    return static_cast<int>(v.get_ui());
  }

  unsigned long pos_field(const char* name) {
    Int v = field(name);
    if (!v.fits_ulong_p())
      fail(std::string("field ") + name + " is out of range");
    return v.get_ui();
  }
};

}  // namespace

std::string scheme_tag(const AnyCiphertext& ct) {
  struct Tagger {
    std::string operator()(const WilliamsCiphertext&) { return "williams"; }
    std::string operator()(const VariantICiphertext&) { return "jacobi1"; }
    std::string operator()(const VariantIICiphertext&) { return "jacobi2"; }
    std::string operator()(const DedekindCiphertext&) { return "dedekind"; }
    std::string operator()(const GisoCiphertext&) { return "giso"; }
  };
  return std::visit(Tagger{}, ct);
}

void write_private_key(std::ostream& os, const PrivateKey& sk) {
  os << kPrivateHeader << "\np=" << sk.p() << "\nq=" << sk.q() << "\n";
}

PrivateKey read_private_key(std::istream& is) {
  LineReader lr(is);
  lr.expect_header(kPrivateHeader);
  Int p = lr.field("p");
  Int q = lr.field("q");
  lr.expect_end();
  return PrivateKey::from_primes(p, q);
}

void write_public_bundle(std::ostream& os, const PublicBundle& pb) {
  os << kPublicHeader << "\nn=" << pb.n << "\n";
  if (pb.s) os << "s=" << *pb.s << "\n";
  if (pb.xi) os << "xi=" << *pb.xi << "\n";
  if (pb.big_p) os << "bigp=" << *pb.big_p << "\n";
  if (pb.g1) os << "g1=" << *pb.g1 << "\n";
  if (pb.g2) os << "g2=" << *pb.g2 << "\n";
}

PublicBundle read_public_bundle(std::istream& is) {
  LineReader lr(is);
  lr.expect_header(kPublicHeader);
  PublicBundle pb;
  pb.n = lr.field("n");
  // Optional extras, fixed order, each at most once.
  constexpr std::array<const char*, 5> names = {"s", "xi", "bigp", "g1", "g2"};
  std::array<std::optional<Int>*, 5> slots = {&pb.s, &pb.xi, &pb.big_p,
                                              &pb.g1, &pb.g2};
  size_t from = 0;
  std::string line;
  while (lr.next(line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) lr.fail("expected name=value");
    std::string name = line.substr(0, eq);
    size_t at = from;
    while (at < names.size() && name != names[at]) ++at;
    if (at == names.size())
      lr.fail("unexpected field " + name);
    *slots[at] = lr.parse_decimal(line.substr(eq + 1), names[at]);
    from = at + 1;
  }
  return pb;
}

void write_ciphertext(std::ostream& os, const AnyCiphertext& ct) {
  os << kCiphertextHeader << "\nscheme=" << scheme_tag(ct) << "\n";
  struct Writer {
    std::ostream& os;
    void operator()(const WilliamsCiphertext& w) {
      os << "c=" << w.c << "\nc1=" << w.c1 << "\nc2=" << w.c2 << "\n";
    }
    void operator()(const VariantICiphertext& v) {
      os << "c=" << v.c << "\nb0=" << v.b0 << "\nb1=" << v.b1 << "\n";
    }
    void operator()(const VariantIICiphertext& v) { os << "c=" << v.c << "\n"; }
    void operator()(const DedekindCiphertext& d) {
      os << "c=" << d.c << "\nb0=" << d.b0 << "\nb1=" << d.b1 << "\n";
    }
    void operator()(const GisoCiphertext& g) {
      os << "c=" << g.c << "\nb0=" << g.b0 << "\nd1=" << g.d1
         << "\nd2=" << g.d2 << "\np1=" << g.p1 << "\np2=" << g.p2 << "\n";
    }
  };
  std::visit(Writer{os}, ct);
}

AnyCiphertext read_ciphertext(std::istream& is) {
  LineReader lr(is);
  lr.expect_header(kCiphertextHeader);
  std::string tag = lr.raw_field("scheme");
  AnyCiphertext ct;
  if (tag == "williams") {
    WilliamsCiphertext w;
    w.c = lr.field("c");
    w.c1 = lr.bit_field("c1");
    w.c2 = lr.bit_field("c2");
    ct = w;
  } else if (tag == "jacobi1") {
    VariantICiphertext v;
    v.c = lr.field("c");
    v.b0 = lr.bit_field("b0");
    v.b1 = lr.bit_field("b1");
    ct = v;
  } else if (tag == "jacobi2") {
    VariantIICiphertext v;
    v.c = lr.field("c");
    ct = v;
  } else if (tag == "dedekind") {
    DedekindCiphertext d;
    d.c = lr.field("c");
    d.b0 = lr.bit_field("b0");
    d.b1 = lr.bit_field("b1");
    ct = d;
  } else if (tag == "giso") {
    GisoCiphertext g;
    g.c = lr.field("c");
    g.b0 = lr.bit_field("b0");
    g.d1 = lr.bit_field("d1");
    g.d2 = lr.bit_field("d2");
    g.p1 = lr.pos_field("p1");
    g.p2 = lr.pos_field("p2");
    ct = g;
  } else {
    lr.fail("unknown scheme tag " + tag);
  }
  lr.expect_end();
  return ct;
}

}  // namespace rabin
