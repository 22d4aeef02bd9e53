#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "rabin/analysis.hpp"
#include "rabin/dedekind.hpp"
#include "rabin/errors.hpp"
#include "rabin/keys.hpp"
#include "rabin/numtheory.hpp"
#include "rabin/schemes.hpp"
#include "rabin/signature.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> Python int, via decimal strings. Slow path but exact, and
// these values are a few hundred digits at most.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    PyObject* idx = PyNumber_Index(src.ptr());
    if (idx == nullptr) {
      PyErr_Clear();
      return false;
    }
    object as_int = reinterpret_steal<object>(idx);
    std::string digits = static_cast<std::string>(str(as_int));
    return value.set_str(digits, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
  }
};

// mpq_class <-> fractions.Fraction. Accepts anything with exact
// numerator/denominator attributes (int, Fraction), never float.
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (isinstance<float_>(src) || !hasattr(src, "numerator") ||
        !hasattr(src, "denominator")) {
      return false;
    }
    mpz_class num, den;
    std::string ns = static_cast<std::string>(str(src.attr("numerator")));
    std::string ds = static_cast<std::string>(str(src.attr("denominator")));
    if (num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0 || den == 0) {
      return false;
    }
    value = mpq_class(num, den);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(v.get_str(10)).release();
  }
};

}  // namespace pybind11::detail

PYBIND11_MODULE(_core, m) {
  using namespace rabin;

  m.doc() = "Rabin cryptosystem core: keys, root identification, signatures";

  auto base = py::register_exception<Error>(m, "RabinError");
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                               base.ptr());
  py::register_exception<NotInvertibleError>(m, "NotInvertibleError",
                                             base.ptr());
  py::register_exception<InvalidModulusError>(m, "InvalidModulusError",
                                              base.ptr());
  py::register_exception<NonResidueError>(m, "NonResidueError", base.ptr());
  py::register_exception<CoprimalityError>(m, "CoprimalityError", base.ptr());
  py::register_exception<WrongKeyClassError>(m, "WrongKeyClassError",
                                             base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            base.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());
  py::register_exception<ScaleLimitError>(m, "ScaleLimitError", base.ptr());
  py::register_exception<TrivialPairError>(m, "TrivialPairError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init([](std::optional<unsigned long> seed) {
             return std::make_unique<RandomSource>(seed ? *seed
                                                        : entropy_seed());
           }),
           py::arg("seed") = py::none())
      .def("bits", &RandomSource::bits)
      .def("below", &RandomSource::below)
      .def("in_range", &RandomSource::in_range);

  py::class_<PublicKey>(m, "PublicKey")
      .def(py::init([](Int n) { return PublicKey{std::move(n)}; }),
           py::arg("n"))
      .def_readonly("n", &PublicKey::n);

  py::class_<PrivateKey>(m, "PrivateKey")
      .def_static("from_primes", &PrivateKey::from_primes)
      .def_static("generate", &PrivateKey::generate)
      .def_property_readonly("p", &PrivateKey::p)
      .def_property_readonly("q", &PrivateKey::q)
      .def_property_readonly("n", &PrivateKey::n)
      .def_property_readonly("psi1", &PrivateKey::psi1)
      .def_property_readonly("psi2", &PrivateKey::psi2)
      .def_property_readonly("is_blum", &PrivateKey::is_blum)
      .def("public_key", &PrivateKey::public_key);

  m.def("keygen", &keygen);

  // numtheory
  m.def("ext_gcd", [](const Int& a, const Int& b) {
    ExtGcd r = ext_gcd(a, b);
    return py::make_tuple(r.g, r.u, r.v);
  });
  m.def("mod_pow", &mod_pow);
  m.def("mod_inverse", &mod_inverse);
  m.def("jacobi", &jacobi);
  m.def("is_probable_prime", &is_probable_prime);
  m.def("gen_prime", &gen_prime);
  m.def("sqrt_mod_blum", &sqrt_mod_blum);
  m.def("tonelli_shanks", &tonelli_shanks);
  m.def("crt_basis", [](const Int& p, const Int& q) {
    CrtBasis b = crt_basis(p, q);
    return py::make_tuple(b.psi1, b.psi2);
  });

  // dedekind
  m.def("sawtooth", &sawtooth);
  m.def("dedekind_sum_direct", &dedekind_sum_direct);
  m.def("dedekind_sum", &dedekind_sum);
  m.def("dedekind_parity", &dedekind_parity);

  // roots
  py::class_<RootQuad>(m, "RootQuad")
      .def_readonly("x1", &RootQuad::x1)
      .def_readonly("x2", &RootQuad::x2)
      .def_readonly("x3", &RootQuad::x3)
      .def_readonly("x4", &RootQuad::x4)
      .def_readonly("u1", &RootQuad::u1)
      .def_readonly("u2", &RootQuad::u2)
      .def_readonly("v1", &RootQuad::v1)
      .def_readonly("v2", &RootQuad::v2);

  py::class_<RootLabel>(m, "RootLabel")
      .def_readonly("b_p", &RootLabel::b_p)
      .def_readonly("b_q", &RootLabel::b_q);

  py::class_<UnitRoots>(m, "UnitRoots")
      .def_readonly("one", &UnitRoots::one)
      .def_readonly("a", &UnitRoots::a)
      .def_readonly("minus_a", &UnitRoots::minus_a)
      .def_readonly("minus_one", &UnitRoots::minus_one);

  m.def("square_roots",
        py::overload_cast<const Int&, const PrivateKey&, RandomSource&>(
            &square_roots));
  m.def("square_roots",
        py::overload_cast<const Int&, const PrivateKey&>(&square_roots));
  m.def("root_labels", &root_labels);
  m.def("unit_roots", &unit_roots);

  // schemes
  py::class_<WilliamsPublicKey>(m, "WilliamsPublicKey")
      .def(py::init([](Int n, Int s) {
             return WilliamsPublicKey{std::move(n), std::move(s)};
           }),
           py::arg("n"), py::arg("s"))
      .def_readonly("n", &WilliamsPublicKey::n)
      .def_readonly("s", &WilliamsPublicKey::s);

  py::class_<WilliamsCiphertext>(m, "WilliamsCiphertext")
      .def(py::init([](Int c, int c1, int c2) {
             return WilliamsCiphertext{std::move(c), c1, c2};
           }),
           py::arg("c"), py::arg("c1"), py::arg("c2"))
      .def_readwrite("c", &WilliamsCiphertext::c)
      .def_readwrite("c1", &WilliamsCiphertext::c1)
      .def_readwrite("c2", &WilliamsCiphertext::c2);

  m.def("williams_setup", &williams_setup);
  m.def("williams_encrypt", &williams_encrypt);
  m.def("williams_decrypt", &williams_decrypt);

  py::class_<VariantICiphertext>(m, "VariantICiphertext")
      .def(py::init([](Int c, int b0, int b1) {
             return VariantICiphertext{std::move(c), b0, b1};
           }),
           py::arg("c"), py::arg("b0"), py::arg("b1"))
      .def_readwrite("c", &VariantICiphertext::c)
      .def_readwrite("b0", &VariantICiphertext::b0)
      .def_readwrite("b1", &VariantICiphertext::b1);

  m.def("v1_encrypt", &v1_encrypt);
  m.def("v1_decrypt", &v1_decrypt);

  py::class_<VariantIIPublicKey>(m, "VariantIIPublicKey")
      .def(py::init([](Int n, Int xi) {
             return VariantIIPublicKey{std::move(n), std::move(xi)};
           }),
           py::arg("n"), py::arg("xi"))
      .def_readonly("n", &VariantIIPublicKey::n)
      .def_readonly("xi", &VariantIIPublicKey::xi);

  py::class_<VariantIICiphertext>(m, "VariantIICiphertext")
      .def(py::init([](Int c) { return VariantIICiphertext{std::move(c)}; }),
           py::arg("c"))
      .def_readwrite("c", &VariantIICiphertext::c);

  m.def("v2_setup", &v2_setup, py::arg("sk"), py::arg("alpha") = Int(1));
  m.def("v2_encrypt", &v2_encrypt);
  m.def("v2_decrypt", &v2_decrypt);

  py::class_<DedekindCiphertext>(m, "DedekindCiphertext")
      .def(py::init([](Int c, int b0, int b1) {
             return DedekindCiphertext{std::move(c), b0, b1};
           }),
           py::arg("c"), py::arg("b0"), py::arg("b1"))
      .def_readwrite("c", &DedekindCiphertext::c)
      .def_readwrite("b0", &DedekindCiphertext::b0)
      .def_readwrite("b1", &DedekindCiphertext::b1);

  m.def("dedekind_encrypt", &dedekind_encrypt);
  m.def("dedekind_decrypt", &dedekind_decrypt);

  py::class_<GisoPublicKey>(m, "GisoPublicKey")
      .def(py::init([](Int n, Int big_p, Int g1, Int g2) {
             return GisoPublicKey{std::move(n), std::move(big_p),
                                  std::move(g1), std::move(g2)};
           }),
           py::arg("n"), py::arg("big_p"), py::arg("g1"), py::arg("g2"))
      .def_readonly("n", &GisoPublicKey::n)
      .def_readonly("big_p", &GisoPublicKey::big_p)
      .def_readonly("g1", &GisoPublicKey::g1)
      .def_readonly("g2", &GisoPublicKey::g2);

  py::class_<GisoCiphertext>(m, "GisoCiphertext")
      .def(py::init([](Int c, int b0, int d1, int d2, unsigned long p1,
                       unsigned long p2) {
             return GisoCiphertext{std::move(c), b0, d1, d2, p1, p2};
           }),
           py::arg("c"), py::arg("b0"), py::arg("d1"), py::arg("d2"),
           py::arg("p1"), py::arg("p2"))
      .def_readwrite("c", &GisoCiphertext::c)
      .def_readwrite("b0", &GisoCiphertext::b0)
      .def_readwrite("d1", &GisoCiphertext::d1)
      .def_readwrite("d2", &GisoCiphertext::d2)
      .def_readwrite("p1", &GisoCiphertext::p1)
      .def_readwrite("p2", &GisoCiphertext::p2);

  m.def("giso_setup", &giso_setup);
  m.def("giso_encrypt", &giso_encrypt);
  m.def("giso_decrypt", &giso_decrypt);

  // signature
  py::class_<Signature>(m, "Signature")
      .def(py::init([](Int u, Int s) {
             return Signature{std::move(u), std::move(s)};
           }),
           py::arg("u"), py::arg("s"))
      .def_readwrite("u", &Signature::u)
      .def_readwrite("s", &Signature::s);

  m.def("pad_factor", &pad_factor);
  m.def("pad_factor_with_r", &pad_factor_with_r);
  m.def("blum_pad_factor", &blum_pad_factor);
  m.def("blum_pad_factor_with_r", &blum_pad_factor_with_r);
  m.def("sign", &sign, py::arg("m"), py::arg("sk"), py::arg("rng"),
        py::arg("blum_pad") = false);
  m.def("verify", &verify);

  // analysis
  py::class_<FactorResult>(m, "FactorResult")
      .def_readonly("p", &FactorResult::p)
      .def_readonly("q", &FactorResult::q);

  m.def("factor_from_roots", &factor_from_roots);
  m.def("factor_from_unity_root", &factor_from_unity_root);
  m.def("bitflip_attack_demo", &bitflip_attack_demo);
  m.def("toy_parity_list", &toy_parity_list);
  m.def("toy_parity_polynomial", &toy_parity_polynomial);
}
