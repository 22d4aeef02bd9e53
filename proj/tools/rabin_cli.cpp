#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rabin/analysis.hpp"
#include "rabin/dedekind.hpp"
#include "rabin/serialize.hpp"
#include "rabin/signature.hpp"

namespace {

rabin::Int parse_int(const std::string& s) {
  rabin::Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw rabin::PreconditionError("not a decimal integer: " + s);
  return v;
}

rabin::Int text_to_int(const std::string& s) {
  rabin::Int v = 0;
  for (unsigned char ch : s) {
    v <<= 8;
    v += ch;
  }
  return v;
}

std::string int_to_text(rabin::Int v) {
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>(mpz_class(v & 0xff).get_ui()));
    v >>= 8;
  }
  return {out.rbegin(), out.rend()};
}

rabin::RandomSource make_rng(long long seed) {
  return seed >= 0 ? rabin::RandomSource(static_cast<unsigned long>(seed))
                   : rabin::RandomSource::from_entropy();
}

rabin::PrivateKey load_private(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw rabin::Error("cannot open " + path);
  return rabin::read_private_key(f);
}

rabin::PublicBundle load_public(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw rabin::Error("cannot open " + path);
  return rabin::read_public_bundle(f);
}

rabin::AnyCiphertext load_ciphertext(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw rabin::Error("cannot open " + path);
  return rabin::read_ciphertext(f);
}

template <typename WriteFn>
void save(const std::string& path, WriteFn write) {
  std::ofstream f(path);
  if (!f) throw rabin::Error("cannot open " + path + " for writing");
  write(f);
  if (!f) throw rabin::Error("write to " + path + " failed");
}

void require_blum_key(const rabin::PrivateKey& sk, const std::string& scheme) {
  if (!sk.is_blum())
    throw rabin::WrongKeyClassError(scheme + ": Blum key required");
}

rabin::PublicBundle make_bundle(const std::string& scheme,
                                const rabin::PrivateKey& sk,
                                rabin::RandomSource& rng) {
  rabin::PublicBundle pb;
  pb.n = sk.n();
  if (scheme == "williams") {
    pb.s = rabin::williams_setup(sk).s;
  } else if (scheme == "jacobi1") {
    require_blum_key(sk, scheme);
  } else if (scheme == "jacobi2") {
    pb.xi = rabin::v2_setup(sk).xi;
  } else if (scheme == "dedekind") {
    require_blum_key(sk, scheme);
  } else if (scheme == "giso") {
    rabin::GisoPublicKey gpk = rabin::giso_setup(sk, rng);
    pb.big_p = gpk.big_p;
    pb.g1 = gpk.g1;
    pb.g2 = gpk.g2;
  }
  return pb;
}

const rabin::Int& bundle_field(const std::optional<rabin::Int>& field,
                               const char* name) {
  if (!field)
    throw rabin::PreconditionError(std::string("public key file lacks ") +
                                   name);
  return *field;
}

rabin::AnyCiphertext encrypt_as(const std::string& scheme, const rabin::Int& m,
                                const rabin::PublicBundle& pb) {
  if (scheme == "williams")
    return rabin::williams_encrypt(
        m, rabin::WilliamsPublicKey{pb.n, bundle_field(pb.s, "s")});
  if (scheme == "jacobi1")
    return rabin::v1_encrypt(m, rabin::PublicKey{pb.n});
  if (scheme == "jacobi2")
    return rabin::v2_encrypt(
        m, rabin::VariantIIPublicKey{pb.n, bundle_field(pb.xi, "xi")});
  if (scheme == "dedekind")
    return rabin::dedekind_encrypt(m, rabin::PublicKey{pb.n});
  return rabin::giso_encrypt(
      m, rabin::GisoPublicKey{pb.n, bundle_field(pb.big_p, "bigp"),
                              bundle_field(pb.g1, "g1"),
                              bundle_field(pb.g2, "g2")});
}

// Williams, variant II and giso decryption need public parameters. They are
// re-derived from the private key (all setups are deterministic) unless a
// public key file was supplied.
struct Decryptor {
  const rabin::PrivateKey& sk;
  const std::optional<rabin::PublicBundle>& pb;
  rabin::RandomSource& rng;

  rabin::Int operator()(const rabin::WilliamsCiphertext& ct) const {
    rabin::WilliamsPublicKey pk =
        pb ? rabin::WilliamsPublicKey{pb->n, bundle_field(pb->s, "s")}
           : rabin::williams_setup(sk);
    return rabin::williams_decrypt(ct, sk, pk);
  }
  rabin::Int operator()(const rabin::VariantICiphertext& ct) const {
    return rabin::v1_decrypt(ct, sk);
  }
  rabin::Int operator()(const rabin::VariantIICiphertext& ct) const {
    rabin::VariantIIPublicKey pk =
        pb ? rabin::VariantIIPublicKey{pb->n, bundle_field(pb->xi, "xi")}
           : rabin::v2_setup(sk);
    return rabin::v2_decrypt(ct, sk, pk);
  }
  rabin::Int operator()(const rabin::DedekindCiphertext& ct) const {
    return rabin::dedekind_decrypt(ct, sk);
  }
  rabin::Int operator()(const rabin::GisoCiphertext& ct) const {
    rabin::GisoPublicKey pk =
        pb ? rabin::GisoPublicKey{pb->n, bundle_field(pb->big_p, "bigp"),
                                  bundle_field(pb->g1, "g1"),
                                  bundle_field(pb->g2, "g2")}
           : rabin::giso_setup(sk, rng);
    return rabin::giso_decrypt(ct, sk, pk, rng);
  }
};

constexpr const char* kSchemes[] = {"williams", "jacobi1", "jacobi2",
                                    "dedekind", "giso"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rabin public-key toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto scheme_values =
      CLI::IsMember(std::vector<std::string>(std::begin(kSchemes),
                                             std::end(kSchemes)));

  // keygen
  auto* kg = app.add_subcommand("keygen", "Generate a private/public key pair");
  unsigned long kg_bits = 0;
  bool kg_blum = false, kg_non_blum = false;
  std::string kg_priv, kg_pub;
  long long kg_seed = -1;
  kg->add_option("--bits", kg_bits, "Bits per prime")->required();
  auto* kg_blum_flag =
      kg->add_flag("--blum", kg_blum, "Both primes 3 mod 4 (default)");
  kg->add_flag("--non-blum", kg_non_blum, "At least one prime 1 mod 4")
      ->excludes(kg_blum_flag);
  kg->add_option("-o,--priv-out", kg_priv, "Private key file")->required();
  kg->add_option("-p,--pub-out", kg_pub, "Public key file")->required();
  kg->add_option("--seed", kg_seed, "Deterministic RNG seed");
  kg->callback([&] {
    rabin::RandomSource rng = make_rng(kg_seed);
    auto [sk, pk] = rabin::keygen(kg_bits, !kg_non_blum, rng);
    save(kg_priv, [&](std::ostream& os) { rabin::write_private_key(os, sk); });
    rabin::PublicBundle pb;
    pb.n = pk.n;
    save(kg_pub, [&](std::ostream& os) { rabin::write_public_bundle(os, pb); });
  });

  // setup
  auto* su = app.add_subcommand(
      "setup", "Derive a scheme's public parameters from a private key");
  std::string su_scheme, su_priv, su_out;
  long long su_seed = -1;
  su->add_option("--scheme", su_scheme, "Scheme name")
      ->required()
      ->check(scheme_values);
  su->add_option("--priv", su_priv, "Private key file")->required();
  su->add_option("-o,--out", su_out, "Public key file")->required();
  su->add_option("--seed", su_seed, "Deterministic RNG seed");
  su->callback([&] {
    rabin::RandomSource rng = make_rng(su_seed);
    rabin::PrivateKey sk = load_private(su_priv);
    rabin::PublicBundle pb = make_bundle(su_scheme, sk, rng);
    save(su_out, [&](std::ostream& os) { rabin::write_public_bundle(os, pb); });
  });

  // encrypt
  auto* en = app.add_subcommand("encrypt", "Encrypt a message");
  std::string en_scheme, en_pub, en_m, en_text, en_out;
  en->add_option("--scheme", en_scheme, "Scheme name")
      ->required()
      ->check(scheme_values);
  en->add_option("--pub", en_pub, "Public key file")->required();
  auto* en_m_opt = en->add_option("-m,--message", en_m, "Message integer");
  en->add_option("--text", en_text, "Message as UTF-8 text")
      ->excludes(en_m_opt);
  en->add_option("-o,--out", en_out, "Ciphertext file")->required();
  en->callback([&] {
    if (en_m.empty() && en_text.empty())
      throw rabin::PreconditionError("encrypt: need -m or --text");
    rabin::PublicBundle pb = load_public(en_pub);
    rabin::Int m = en_m.empty() ? text_to_int(en_text) : parse_int(en_m);
    rabin::AnyCiphertext ct = encrypt_as(en_scheme, m, pb);
    save(en_out, [&](std::ostream& os) { rabin::write_ciphertext(os, ct); });
  });

  // decrypt
  auto* de = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  std::string de_ct, de_priv, de_pub;
  bool de_text = false;
  long long de_seed = -1;
  de->add_option("--ct", de_ct, "Ciphertext file")->required();
  de->add_option("--priv", de_priv, "Private key file")->required();
  de->add_option("--pub", de_pub,
                 "Public key file (otherwise re-derived from the private key)");
  de->add_flag("--text", de_text, "Print the message as UTF-8 text");
  de->add_option("--seed", de_seed, "Deterministic RNG seed");
  de->callback([&] {
    rabin::RandomSource rng = make_rng(de_seed);
    rabin::AnyCiphertext ct = load_ciphertext(de_ct);
    rabin::PrivateKey sk = load_private(de_priv);
    std::optional<rabin::PublicBundle> pb;
    if (!de_pub.empty()) {
      pb = load_public(de_pub);
      if (pb->n != sk.n())
        throw rabin::PreconditionError(
            "decrypt: public key does not match the private key");
    }
    rabin::Int m = std::visit(Decryptor{sk, pb, rng}, ct);
    if (de_text)
      std::cout << int_to_text(m) << "\n";
    else
      std::cout << m << "\n";
  });

  // sign
  auto* sg = app.add_subcommand("sign", "Sign a message");
  std::string sg_priv, sg_m, sg_text;
  bool sg_blum_pad = false;
  long long sg_seed = -1;
  sg->add_option("--priv", sg_priv, "Private key file")->required();
  auto* sg_m_opt = sg->add_option("-m,--message", sg_m, "Message integer");
  sg->add_option("--text", sg_text,
                 "Message as UTF-8 text, reduced modulo N")
      ->excludes(sg_m_opt);
  sg->add_flag("--blum-pad", sg_blum_pad, "Use the Legendre-symbol padding");
  sg->add_option("--seed", sg_seed, "Deterministic RNG seed");
  sg->callback([&] {
    if (sg_m.empty() && sg_text.empty())
      throw rabin::PreconditionError("sign: need -m or --text");
    rabin::RandomSource rng = make_rng(sg_seed);
    rabin::PrivateKey sk = load_private(sg_priv);
    rabin::Int m =
        sg_m.empty() ? text_to_int(sg_text) % sk.n() : parse_int(sg_m);
    rabin::Signature sig = rabin::sign(m, sk, rng, sg_blum_pad);
    std::cout << "U=" << sig.u << "\nS=" << sig.s << "\n";
  });

  // verify
  auto* ve = app.add_subcommand("verify", "Verify a signature");
  std::string ve_pub, ve_m, ve_text, ve_u, ve_s;
  ve->add_option("--pub", ve_pub, "Public key file")->required();
  auto* ve_m_opt = ve->add_option("-m,--message", ve_m, "Message integer");
  ve->add_option("--text", ve_text,
                 "Message as UTF-8 text, reduced modulo N")
      ->excludes(ve_m_opt);
  ve->add_option("-U", ve_u, "Signature pad component")->required();
  ve->add_option("-S", ve_s, "Signature root component")->required();
  ve->callback([&] {
    if (ve_m.empty() && ve_text.empty())
      throw rabin::PreconditionError("verify: need -m or --text");
    rabin::PublicBundle pb = load_public(ve_pub);
    rabin::Int m =
        ve_m.empty() ? text_to_int(ve_text) % pb.n : parse_int(ve_m);
    rabin::Signature sig{parse_int(ve_u), parse_int(ve_s)};
    if (rabin::verify(m, sig, rabin::PublicKey{pb.n})) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid\n";
      exit_code = 1;
    }
  });

  // dedekind
  auto* dd = app.add_subcommand(
      "dedekind", "Evaluate the Dedekind sum s(H, K) (use -- before negative H)");
  std::string dd_h, dd_k;
  dd->add_option("H", dd_h, "Numerator argument")->required();
  dd->add_option("K", dd_k, "Denominator argument, K >= 1")->required();
  dd->callback([&] {
    rabin::Int h = parse_int(dd_h);
    rabin::Int k = parse_int(dd_k);
    rabin::Rational s = rabin::dedekind_sum(h, k);
    std::cout << s;
    if (k % 4 == 1) std::cout << " parity=" << rabin::dedekind_parity(h, k);
    std::cout << "\n";
  });

  // attack-demo
  auto* ad = app.add_subcommand("attack-demo", "Run one of the attack demos");
  ad->require_subcommand(1);

  auto* bf = ad->add_subcommand(
      "bitflip", "Factor N by flipping a variant I identification bit");
  std::string bf_priv;
  unsigned long bf_bits = 64;
  long long bf_seed = -1;
  bf->add_option("--priv", bf_priv,
                 "Victim key file (otherwise a fresh key is generated)");
  bf->add_option("--bits", bf_bits, "Bits per prime for a generated key");
  bf->add_option("--seed", bf_seed, "Deterministic RNG seed");
  bf->callback([&] {
    rabin::RandomSource rng = make_rng(bf_seed);
    rabin::PrivateKey sk = bf_priv.empty()
                               ? rabin::PrivateKey::generate(bf_bits, true, rng)
                               : load_private(bf_priv);
    rabin::FactorResult fr = rabin::bitflip_attack_demo(sk, rng);
    std::cout << "N=" << sk.n() << "\nfactor=" << fr.p
              << "\ncofactor=" << fr.q << "\n";
  });

  auto* ur = ad->add_subcommand(
      "unity-root", "Factor N from a nontrivial square root of unity");
  std::string ur_n, ur_k;
  ur->add_option("-n,--mod", ur_n, "Modulus N")->required();
  ur->add_option("-k", ur_k, "Square root of unity")->required();
  ur->callback([&] {
    rabin::FactorResult fr =
        rabin::factor_from_unity_root(parse_int(ur_k), parse_int(ur_n));
    std::cout << "factor=" << fr.p << "\ncofactor=" << fr.q << "\n";
  });

  auto* rp = ad->add_subcommand(
      "root-pair", "Factor N from two roots of the same square");
  std::string rp_n, rp_x, rp_z;
  rp->add_option("-n,--mod", rp_n, "Modulus N")->required();
  rp->add_option("-x", rp_x, "First root")->required();
  rp->add_option("-z", rp_z, "Second root")->required();
  rp->callback([&] {
    rabin::FactorResult fr = rabin::factor_from_roots(
        parse_int(rp_x), parse_int(rp_z), parse_int(rp_n));
    std::cout << "factor=" << fr.p << "\ncofactor=" << fr.q << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const rabin::IntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rabin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
