#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabin/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RABIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string field(const std::string& out, const std::string& name) {
  auto pos = out.find(name + "=");
  if (pos == std::string::npos)
    throw std::runtime_error("no field " + name + " in: " + out);
  pos += name.size() + 1;
  auto end = out.find('\n', pos);
  return out.substr(pos, end - pos);
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p);
  f << content;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct Env {
  fs::path dir;
  std::string bpriv, bpub;    // 40-bit Blum
  std::string nbpriv, nbpub;  // 40-bit non-Blum
  std::string tpriv, tpub;    // 48-bit Blum, for text messages
  std::string gpriv, gpub;    // 48-bit non-Blum, for giso text
  std::string toypriv;        // the (3, 7) fixture key

  std::string at(const char* name) const { return (dir / name).string(); }
};

const Env& env() {
  static Env e = [] {
    Env e;
    e.dir = fs::temp_directory_path() / "rabin_cli_tests";
    std::error_code ec;
    fs::remove_all(e.dir, ec);
    fs::create_directories(e.dir);
    e.bpriv = e.at("b.priv");
    e.bpub = e.at("b.pub");
    e.nbpriv = e.at("nb.priv");
    e.nbpub = e.at("nb.pub");
    e.tpriv = e.at("t.priv");
    e.tpub = e.at("t.pub");
    e.gpriv = e.at("g.priv");
    e.gpub = e.at("g.pub");
    e.toypriv = e.at("toy.priv");
    struct Job {
      const char* args;
      const std::string* priv;
      const std::string* pub;
      long seed;
    };
    Job jobs[] = {
        {"--bits 40 --blum", &e.bpriv, &e.bpub, 101},
        {"--bits 40 --non-blum", &e.nbpriv, &e.nbpub, 102},
        {"--bits 48 --blum", &e.tpriv, &e.tpub, 103},
        {"--bits 48 --non-blum", &e.gpriv, &e.gpub, 104},
    };
    for (const auto& j : jobs) {
      auto r = run("keygen " + std::string(j.args) + " -o " + *j.priv + " -p " +
                   *j.pub + " --seed " + std::to_string(j.seed));
      if (r.code != 0)
        throw std::runtime_error("keygen failed: " + r.out);
    }
    write_file(e.toypriv, "rabin private key\np=3\nq=7\n");
    return e;
  }();
  return e;
}

}  // namespace

TEST_CASE("keygen writes parseable key files") {
  const auto& e = env();
  std::ifstream pf(e.bpriv);
  auto sk = rabin::read_private_key(pf);
  CHECK(sk.is_blum());
  CHECK(mpz_sizeinbase(sk.p().get_mpz_t(), 2) == 40);
  CHECK(mpz_sizeinbase(sk.q().get_mpz_t(), 2) == 40);
  std::ifstream bf(e.bpub);
  auto pb = rabin::read_public_bundle(bf);
  CHECK(pb.n == sk.n());
  CHECK(!pb.s);

  std::ifstream nf(e.nbpriv);
  auto nsk = rabin::read_private_key(nf);
  CHECK(!nsk.is_blum());

  // same seed, same key
  auto again = run("keygen --bits 40 --blum -o " + e.at("b2.priv") + " -p " +
                   e.at("b2.pub") + " --seed 101");
  CHECK(again.code == 0);
  CHECK(slurp(e.at("b2.priv")) == slurp(e.bpriv));
}

TEST_CASE("every scheme round trips through the CLI") {
  const auto& e = env();
  struct Case {
    const char* scheme;
    const std::string* priv;
  };
  Case cases[] = {{"williams", &e.bpriv},
                  {"jacobi1", &e.bpriv},
                  {"jacobi2", &e.bpriv},
                  {"dedekind", &e.bpriv},
                  {"giso", &e.nbpriv}};
  for (const auto& c : cases) {
    CAPTURE(c.scheme);
    std::string pub = e.at((std::string(c.scheme) + ".pub").c_str());
    std::string ct = e.at((std::string(c.scheme) + ".ct").c_str());
    auto su = run("setup --scheme " + std::string(c.scheme) + " --priv " +
                  *c.priv + " -o " + pub + " --seed 7");
    CHECK(su.code == 0);
    CHECK(su.out.empty());
    auto en = run("encrypt --scheme " + std::string(c.scheme) + " --pub " +
                  pub + " -m 1234567 -o " + ct);
    CHECK(en.code == 0);
    auto de = run("decrypt --ct " + ct + " --priv " + *c.priv + " --seed 7");
    CHECK(de.code == 0);
    CHECK(de.out == "1234567\n");
    // decryption with the explicit public file agrees
    auto dp = run("decrypt --ct " + ct + " --priv " + *c.priv + " --pub " +
                  pub + " --seed 7");
    CHECK(dp.code == 0);
    CHECK(dp.out == "1234567\n");
  }
}

TEST_CASE("scheme public files carry their extras") {
  const auto& e = env();
  std::ifstream wf(e.at("williams.pub"));
  auto wpb = rabin::read_public_bundle(wf);
  CHECK(wpb.s);
  std::ifstream jf(e.at("jacobi2.pub"));
  auto jpb = rabin::read_public_bundle(jf);
  CHECK(jpb.xi);
  std::ifstream gf(e.at("giso.pub"));
  auto gpb = rabin::read_public_bundle(gf);
  CHECK(gpb.big_p);
  CHECK(gpb.g1);
  CHECK(gpb.g2);
}

TEST_CASE("text messages round trip") {
  const auto& e = env();
  auto su = run("setup --scheme jacobi1 --priv " + e.tpriv + " -o " +
                e.at("text.pub"));
  REQUIRE(su.code == 0);
  auto en = run("encrypt --scheme jacobi1 --pub " + e.at("text.pub") +
                " --text 'hello world' -o " + e.at("text.ct"));
  CHECK(en.code == 0);
  auto de = run("decrypt --ct " + e.at("text.ct") + " --priv " + e.tpriv +
                " --text");
  CHECK(de.code == 0);
  CHECK(de.out == "hello world\n");

  auto gsu = run("setup --scheme giso --priv " + e.gpriv + " -o " +
                 e.at("gtext.pub") + " --seed 7");
  REQUIRE(gsu.code == 0);
  auto gen = run("encrypt --scheme giso --pub " + e.at("gtext.pub") +
                 " --text 'hi giso' -o " + e.at("gtext.ct"));
  CHECK(gen.code == 0);
  auto gde = run("decrypt --ct " + e.at("gtext.ct") + " --priv " + e.gpriv +
                 " --text --seed 7");
  CHECK(gde.code == 0);
  CHECK(gde.out == "hi giso\n");
}

TEST_CASE("decrypt rejects a mismatched public file") {
  const auto& e = env();
  auto r = run("decrypt --ct " + e.at("jacobi2.ct") + " --priv " + e.bpriv +
               " --pub " + e.nbpub);
  CHECK(r.code == 1);
  CHECK(r.out.find("does not match") != std::string::npos);
}

TEST_CASE("sign and verify through the CLI") {
  const auto& e = env();
  auto sg = run("sign --priv " + e.bpriv + " -m 99 --seed 11");
  REQUIRE(sg.code == 0);
  std::string u = field(sg.out, "U");
  std::string s = field(sg.out, "S");
  auto ok = run("verify --pub " + e.bpub + " -m 99 -U " + u + " -S " + s);
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  auto bad = run("verify --pub " + e.bpub + " -m 98 -U " + u + " -S " + s);
  CHECK(bad.code == 1);
  CHECK(bad.out == "invalid\n");

  auto bp = run("sign --priv " + e.bpriv + " -m 99 --blum-pad --seed 12");
  REQUIRE(bp.code == 0);
  auto bok = run("verify --pub " + e.bpub + " -m 99 -U " +
                 field(bp.out, "U") + " -S " + field(bp.out, "S"));
  CHECK(bok.code == 0);

  auto ts = run("sign --priv " + e.tpriv + " --text 'sign me' --seed 13");
  REQUIRE(ts.code == 0);
  auto tok = run("verify --pub " + e.tpub + " --text 'sign me' -U " +
                 field(ts.out, "U") + " -S " + field(ts.out, "S"));
  CHECK(tok.code == 0);
  CHECK(tok.out == "valid\n");
}

TEST_CASE("dedekind subcommand output") {
  CHECK(run("dedekind 2 21").out == "40/63 parity=0\n");
  CHECK(run("dedekind 10 21").out == "-40/63 parity=0\n");
  CHECK(run("dedekind -- -10 21").out == "40/63 parity=0\n");
  CHECK(run("dedekind 3 13").out == "1/13 parity=1\n");
  CHECK(run("dedekind 1 7").out == "5/14\n");
  auto bad = run("dedekind 2 4");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("attack demos factor their targets") {
  const auto& e = env();
  auto rp = run("attack-demo root-pair -n 21 -x 11 -z 4");
  CHECK(rp.code == 0);
  CHECK(rp.out == "factor=7\ncofactor=3\n");
  auto ur = run("attack-demo unity-root -n 21 -k 13");
  CHECK(ur.code == 0);
  CHECK(ur.out == "factor=7\ncofactor=3\n");

  auto bf = run("attack-demo bitflip --bits 32 --seed 5");
  CHECK(bf.code == 0);
  rabin::Int n(field(bf.out, "N"));
  rabin::Int f(field(bf.out, "factor"));
  rabin::Int cf(field(bf.out, "cofactor"));
  CHECK(f * cf == n);
  CHECK(f != 1);
  CHECK(cf != 1);

  auto bfp = run("attack-demo bitflip --priv " + e.bpriv + " --seed 6");
  CHECK(bfp.code == 0);
  std::ifstream pf(e.bpriv);
  auto sk = rabin::read_private_key(pf);
  rabin::Int f2(field(bfp.out, "factor"));
  CHECK((f2 == sk.p() || f2 == sk.q()));

  auto trivial = run("attack-demo unity-root -n 21 -k 1");
  CHECK(trivial.code == 1);
}

TEST_CASE("corrupt ciphertexts exit with code 2") {
  const auto& e = env();
  write_file(e.at("zero.ct"), "rabin ciphertext\nscheme=jacobi2\nc=0\n");
  auto r = run("decrypt --ct " + e.at("zero.ct") + " --priv " + e.toypriv);
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);

  write_file(e.at("wbad.ct"),
             "rabin ciphertext\nscheme=williams\nc=2\nc1=0\nc2=0\n");
  auto w = run("decrypt --ct " + e.at("wbad.ct") + " --priv " + e.toypriv);
  CHECK(w.code == 2);

  write_file(e.at("j1bad.ct"),
             "rabin ciphertext\nscheme=jacobi1\nc=5\nb0=0\nb1=0\n");
  auto j = run("decrypt --ct " + e.at("j1bad.ct") + " --priv " + e.toypriv);
  CHECK(j.code == 2);
}

TEST_CASE("usage and input errors exit with code 1") {
  const auto& e = env();
  write_file(e.at("junk.ct"), "not a ciphertext\n");
  auto junk = run("decrypt --ct " + e.at("junk.ct") + " --priv " + e.bpriv);
  CHECK(junk.code == 1);
  CHECK(junk.out.find("line 1") != std::string::npos);

  auto missing = run("decrypt --ct " + e.at("nope.ct") + " --priv " + e.bpriv);
  CHECK(missing.code == 1);
  CHECK(missing.out.find("cannot open") != std::string::npos);

  auto noopt = run("encrypt --scheme williams -m 5 -o " + e.at("x.ct"));
  CHECK(noopt.code == 1);

  auto bogus = run("setup --scheme rsa --priv " + e.bpriv + " -o " +
                   e.at("x.pub"));
  CHECK(bogus.code == 1);

  auto wrongclass = run("setup --scheme jacobi1 --priv " + e.nbpriv + " -o " +
                        e.at("x.pub"));
  CHECK(wrongclass.code == 1);
  CHECK(wrongclass.out.find("Blum") != std::string::npos);

  auto zero = run("encrypt --scheme jacobi1 --pub " + e.bpub + " -m 0 -o " +
                  e.at("x.ct"));
  CHECK(zero.code == 1);

  // the plain keygen bundle lacks williams' S
  auto nos = run("encrypt --scheme williams --pub " + e.bpub + " -m 5 -o " +
                 e.at("x.ct"));
  CHECK(nos.code == 1);
  CHECK(nos.out.find("lacks s") != std::string::npos);

  auto tiny = run("keygen --bits 2 --blum -o " + e.at("x.priv") + " -p " +
                  e.at("x.pub"));
  CHECK(tiny.code == 1);
}
